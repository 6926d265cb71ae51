#include "cli_app.hpp"

int main(int argc, char** argv) { return eclcs::cli::run_cli(argc, argv); }
