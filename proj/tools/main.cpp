#include "chroma/cli.hpp"

int main(int argc, char** argv) { return chroma::cli::run(argc, argv); }
