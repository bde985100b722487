#include "clab/cli.hpp"

int main(int argc, char** argv) { return clab::parse_and_run(argc, argv); }
