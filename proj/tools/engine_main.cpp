#include "cli.hpp"

int main(int argc, char** argv) { return setpoly::cli::main_entry("engine", argc, argv); }
