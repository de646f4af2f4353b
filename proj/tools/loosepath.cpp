#include "loosepath/cli.hpp"

int main(int argc, char** argv) { return loosepath::run_cli(argc, argv); }
