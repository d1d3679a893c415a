#include <iostream>

#include "asx/cli/app.hpp"

int main(int argc, char** argv) { return asx::cli::run(argc, argv, std::cout, std::cerr); }
