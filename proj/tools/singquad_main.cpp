#include "singquad/cli.hpp"

int main(int argc, char** argv) { return singquad::cli_main(argc, argv); }
