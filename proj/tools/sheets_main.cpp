#include "sheets/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    const std::vector<std::string> args(argv + 1, argv + argc);
    const auto response = sheets::cli::run_command_line(args);
    std::cout << response.out;
    std::cerr << response.err;
    return response.exit_code;
}
