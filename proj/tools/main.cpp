#include <iostream>

#include <macmahon/cli.hpp>

int main(int argc, char **argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    const auto result = macmahon::cli::run_command_line(args);
    (result.exit_code == macmahon::cli::exit_usage ? std::cerr : std::cout) << result.output;
    return result.exit_code;
}
