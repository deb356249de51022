#include <youngscd/cli.hpp>

int main(int argc, char** argv) { return youngscd::cli::run(argc, argv); }
