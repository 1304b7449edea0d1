#include "symprod/cli/app.hpp"

int main(int argc, char** argv) { return symprod::cli::run(argc, argv); }
