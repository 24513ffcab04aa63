#include "remezrig/cli.hpp"

int main(int argc, char** argv) { return remezrig::cli_main(argc, argv); }
