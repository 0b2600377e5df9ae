#include <iostream>

#include "cli_app.hpp"

int main(int argc, char** argv) {
  return lex2vec::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
