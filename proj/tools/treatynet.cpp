#include "treatynet/cli.hpp"

int main(int argc, char** argv) { return treatynet::run_cli(argc, argv); }
