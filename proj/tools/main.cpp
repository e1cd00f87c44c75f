#include "calabi/cli.hpp"

int main(int argc, char** argv) { return calabi::run_cli(argc, argv); }
