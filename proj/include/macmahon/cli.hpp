#ifndef MACMAHON_CLI_HPP
#define MACMAHON_CLI_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace macmahon::cli {

enum class OutputFormat { Text, Json };

struct CommandRequest
{
    std::string subcommand;
    // Positional argument of `verify`.
    std::string suite;
    // Flags given on the command line, keyed without leading dashes.
    std::map<std::string, std::string> params;
    OutputFormat format = OutputFormat::Text;
};

struct CommandResult
{
    int exit_code = 0;
    std::string output;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_mismatch = 1;
inline constexpr int exit_usage = 2;

// A bad flag value; `flag` names the offending option.
class UsageError : public std::runtime_error
{
public:
    UsageError(std::string flag, const std::string &message)
        : std::runtime_error(flag + ": " + message), m_flag(std::move(flag))
    {
    }
    const std::string &flag() const { return m_flag; }

private:
    std::string m_flag;
};

struct ParseOutcome
{
    std::optional<CommandRequest> request;
    // Set when parsing ends the run (help or usage error).
    CommandResult result;
};

ParseOutcome parse(const std::vector<std::string> &args);
CommandResult run(const CommandRequest &request);
// parse followed by run.
CommandResult run_command_line(const std::vector<std::string> &args);

std::vector<std::string> verify_suites();

} // namespace macmahon::cli

#endif
