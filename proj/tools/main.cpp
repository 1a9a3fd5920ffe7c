#include "esm2d/cli.hpp"

int main(int argc, char** argv) { return esm2d::run_cli(argc, argv); }
