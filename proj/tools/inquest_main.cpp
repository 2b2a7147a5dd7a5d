#include "inquest/cli_app.hpp"

int main(int argc, char** argv) { return inquest::run_cli(argc, argv); }
