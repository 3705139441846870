#include "szw/cli.hpp"

int main(int argc, char** argv) { return szw::run_cli(argc, argv); }
