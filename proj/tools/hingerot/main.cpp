#include "commands.hpp"

int main(int argc, char** argv) { return hingerot::cli::run(argc, argv); }
