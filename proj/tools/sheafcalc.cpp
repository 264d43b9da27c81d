#include "sheafcalc_cli.hpp"

#include <iostream>

int main(int argc, char **argv) { return sheafcalc::cli::run(argc, argv, std::cout, std::cerr); }
