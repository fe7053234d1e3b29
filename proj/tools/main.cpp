#include "cli.hpp"

int main(int argc, char** argv) { return normexp::cli::run(argc, argv); }
