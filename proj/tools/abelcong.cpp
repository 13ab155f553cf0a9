#include <iostream>

#include "job.hpp"

int main(int argc, char** argv) { return abelcong::cli::main_entry(argc, argv, std::cout, std::cerr); }
