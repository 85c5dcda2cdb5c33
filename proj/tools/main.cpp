#include "elaa/cli.hpp"

int main(int argc, char** argv) { return elaa::run_cli(argc, argv); }
