#include "discenv/cli.hpp"

int main(int argc, char** argv) { return discenv::run_cli(argc, argv); }
