#include <iostream>

#include "sidon/cli.hpp"

int main(int argc, char** argv) { return sidon::cli::dispatch(argc, argv, std::cout, std::cerr); }
