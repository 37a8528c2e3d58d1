#include "setpoly/system_pet.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>

#include "setpoly/errors.hpp"
#include "setpoly/json_io.hpp"

namespace setpoly {

System::System(std::size_t D, std::vector<SetPolynomial> polys) : D_(D), polys_(std::move(polys)) {
  for (const auto& P : polys_) {
    if (P.dim() != D_) throw DimensionMismatch("system member of dimension " + std::to_string(P.dim()));
  }
  std::sort(polys_.begin(), polys_.end());
  polys_.erase(std::unique(polys_.begin(), polys_.end()), polys_.end());
}

void System::insert(const SetPolynomial& P) {
  if (P.dim() != D_) throw DimensionMismatch("system member of dimension " + std::to_string(P.dim()));
  auto it = std::lower_bound(polys_.begin(), polys_.end(), P);
  if (it == polys_.end() || !(*it == P)) polys_.insert(it, P);
}

FinSet system_support(const System& A) {
  FinSet s(1);
  for (const auto& P : A) s = set_union(s, poly_support(P));
  return s;
}

FinSet evaluate_union(const System& A, const FinSet& n) {
  FinSet out(A.dim());
  for (const auto& P : A) out = set_union(out, evaluate(P, n));
  return out;
}

WeightVector weight_vector(const System& A) {
  WeightVector w{std::vector<std::size_t>(A.dim(), 0)};
  std::vector<std::vector<SetPolynomial>> seen(A.dim() + 1);
  for (const auto& P : A) {
    const std::size_t d = degree(P);
    if (d == 0) continue;
    SetPolynomial lead = leading_term(P);
    auto& bucket = seen[d];
    if (std::find(bucket.begin(), bucket.end(), lead) == bucket.end()) {
      bucket.push_back(std::move(lead));
      ++w.w[d - 1];
    }
  }
  return w;
}

bool precedes(const WeightVector& w1, const WeightVector& w2) {
  if (w1.w.size() != w2.w.size()) {
    throw LengthMismatch("weight vectors of lengths " + std::to_string(w1.w.size()) + " and " +
                         std::to_string(w2.w.size()));
  }
  // Compare from the top degree down; the first difference decides.
  for (std::size_t k = w1.w.size(); k > 0; --k) {
    if (w1.w[k - 1] != w2.w[k - 1]) return w1.w[k - 1] < w2.w[k - 1];
  }
  return false;
}

SetPolynomial marker_polynomial(std::size_t D, const std::vector<Tuple>& markers) {
  SetPolynomial P(D);
  for (std::size_t j = 1; j <= markers.size(); ++j) {
    if (markers[j - 1].size() != D - j) throw ArityMismatch("marker of degree " + std::to_string(j) + " has wrong length");
    P.set_coeff(full_index(j), FinSet::singleton(markers[j - 1]));
  }
  return P;
}

NormalizationRecord normalize_terms(const System& A, SymbolAllocator& alloc, bool auto_embed) {
  NormalizationRecord rec;
  rec.original = A;
  alloc.reserve(system_support(A));

  bool too_high = false;
  for (const auto& P : A) {
    if (!constant_term(P).empty()) throw ConstantTermError("normalize_terms: member with a nonempty constant term");
    if (degree(P) >= A.dim()) too_high = true;
  }
  if (too_high) {
    if (!auto_embed) throw DegreeTooHigh("normalize_terms: a member reaches degree D");
    const Symbol r = alloc.mint();
    rec.pad = r;
    std::vector<SetPolynomial> lifted;
    for (const auto& P : A) lifted.push_back(embed(P, r));
    rec.source = System(A.dim() + 1, std::move(lifted));
  } else {
    rec.source = A;
  }

  const std::size_t D = rec.source.dim();
  rec.terms.assign(D, {});
  rec.markers.assign(D, {});
  for (std::size_t d = 1; d < D; ++d) {
    rec.terms[d].push_back(SetPolynomial(D));
    for (const auto& P : rec.source) {
      SetPolynomial t = term_of_degree(P, d);
      if (std::find(rec.terms[d].begin(), rec.terms[d].end(), t) == rec.terms[d].end()) {
        rec.terms[d].push_back(std::move(t));
      }
    }
    for (std::size_t i = 0; i < rec.terms[d].size(); ++i) rec.markers[d].push_back(alloc.mint_tuple(D - d));
  }

  std::vector<SetPolynomial> primes;
  for (const auto& P : rec.source) {
    const std::size_t deg = degree(P);
    std::vector<Tuple> chosen;
    for (std::size_t d = 1; d <= deg; ++d) {
      SetPolynomial t = term_of_degree(P, d);
      auto it = std::find(rec.terms[d].begin(), rec.terms[d].end(), t);
      chosen.push_back(rec.markers[d][static_cast<std::size_t>(it - rec.terms[d].begin())]);
    }
    primes.push_back(marker_polynomial(D, chosen));
  }
  rec.normalized = primes;
  rec.prime = System(D, std::move(primes));
  return rec;
}

FinSet psi_map(const NormalizationRecord& rec, const FinSet& a) {
  const std::size_t D = rec.dim();
  if (!a.empty() && a.arity() != D) throw ArityMismatch("psi_map: point set of the wrong arity");
  // Every marker ends in its own symbol, so the last coordinate identifies it.
  std::unordered_map<Symbol, std::pair<std::size_t, std::size_t>> by_last;
  for (std::size_t d = 1; d < D; ++d) {
    for (std::size_t i = 0; i < rec.markers[d].size(); ++i) by_last[rec.markers[d][i].back()] = {d, i};
  }
  std::vector<Symbol> out;
  for (auto s : a) {
    auto it = by_last.find(s.back());
    bool matched = false;
    if (it != by_last.end()) {
      const auto [d, i] = it->second;
      const Tuple& p = rec.markers[d][i];
      matched = std::equal(p.begin(), p.end(), s.begin() + static_cast<std::ptrdiff_t>(d));
      if (matched) {
        // Expand into ∪_{|α|=d} {t : t_α = (s_1..s_d), t_ᾱ ∈ (R_{d,i})_α}.
        for (const auto& [alpha, coef] : rec.terms[d][i].coeffs()) {
          const auto in_alpha = index_list(alpha);
          const auto rest = index_list(full_index(D) & ~alpha);
          Tuple t(D);
          for (std::size_t j = 0; j < d; ++j) t[in_alpha[j] - 1] = s[j];
          for (auto row : coef) {
            for (std::size_t j = 0; j < rest.size(); ++j) t[rest[j] - 1] = row[j];
            out.insert(out.end(), t.begin(), t.end());
          }
        }
      }
    }
    if (!matched) out.insert(out.end(), s.begin(), s.end());
  }
  return FinSet::from_flat(D, std::move(out));
}

MinimalAdjunction adjoin_minimal(const System& Aprime) {
  const SetPolynomial* best = nullptr;
  std::string best_key;
  for (const auto& P : Aprime) {
    if (P.is_empty()) continue;
    std::string key = to_json(P).dump();
    if (best == nullptr || degree(P) < degree(*best) || (degree(P) == degree(*best) && key < best_key)) {
      best = &P;
      best_key = std::move(key);
    }
  }
  if (best == nullptr) throw EmptySystem("adjoin_minimal: no nonempty member");
  MinimalAdjunction out{System(Aprime.dim()), *best};
  for (const auto& P : Aprime) out.system.insert(add(P, out.Q));
  return out;
}

std::vector<Tuple> marker_form(const SetPolynomial& Q) {
  const std::size_t e = degree(Q);
  if (Q.is_empty() || Q.coeffs().size() != e) throw MalformedQ("Q is not of the form n{q_1} + ... + n^e{q_e}");
  std::vector<Tuple> q;
  for (std::size_t j = 1; j <= e; ++j) {
    auto it = Q.coeffs().find(full_index(j));
    if (it == Q.coeffs().end() || it->second.size() != 1) {
      throw MalformedQ("Q is not of the form n{q_1} + ... + n^e{q_e}");
    }
    auto row = it->second[0];
    q.emplace_back(row.begin(), row.end());
  }
  return q;
}

FinSet psi_prime_map(const System& Aprime, const SetPolynomial& Q, const FinSet& b) {
  const std::size_t D = Q.dim();
  const auto q = marker_form(Q);
  if (!b.empty() && b.arity() != D) throw ArityMismatch("psi_prime_map: point set of the wrong arity");

  // markers_at[d]: degree-d markers of members of A′ other than q_d.
  std::vector<std::vector<Tuple>> markers_at(q.size() + 1);
  for (const auto& P : Aprime) {
    std::size_t deg = degree(P);
    for (std::size_t d = 1; d <= std::min(deg, q.size()); ++d) {
      auto it = P.coeffs().find(full_index(d));
      if (it == P.coeffs().end()) continue;
      for (auto row : it->second) {
        Tuple p(row.begin(), row.end());
        if (p != q[d - 1] && std::find(markers_at[d].begin(), markers_at[d].end(), p) == markers_at[d].end()) {
          markers_at[d].push_back(std::move(p));
        }
      }
    }
  }

  std::vector<Symbol> out;
  Tuple probe(D);
  for (auto s : b) {
    bool drop = false;
    for (std::size_t d = 1; d <= q.size() && !drop; ++d) {
      if (!std::equal(q[d - 1].begin(), q[d - 1].end(), s.begin() + static_cast<std::ptrdiff_t>(d))) continue;
      std::copy(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(d), probe.begin());
      for (const auto& p : markers_at[d]) {
        std::copy(p.begin(), p.end(), probe.begin() + static_cast<std::ptrdiff_t>(d));
        if (b.contains(probe)) {
          drop = true;
          break;
        }
      }
    }
    if (!drop) out.insert(out.end(), s.begin(), s.end());
  }
  return FinSet::from_flat(D, std::move(out));
}

System derived_system(const System& A, const SetPolynomial& Q, const FinSet& M) {
  if (M.size() > 20) throw TooLarge("derived_system: more than 2^20 shifts");
  const auto ms = M.empty() ? std::vector<Symbol>{} : M.symbol_list();
  System out(A.dim());
  for (const auto& P : A) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ms.size()); ++mask) {
      std::vector<Symbol> pick;
      for (std::size_t i = 0; i < ms.size(); ++i) {
        if (mask & (std::uint64_t{1} << i)) pick.push_back(ms[i]);
      }
      const FinSet m = FinSet::symbols(pick);
      const SetPolynomial removed = add(Q, SetPolynomial::constant(A.dim(), evaluate(P, m)));
      out.insert(subtract(shift(P, m), removed));
    }
  }
  return out;
}

}  // namespace setpoly
