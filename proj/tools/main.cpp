#include "cli_app.hpp"

int main(int argc, char** argv) { return swapkit::cli::main_entry(argc, argv); }
