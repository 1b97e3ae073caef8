#ifndef SHEETS_CLI_HPP
#define SHEETS_CLI_HPP

#include "sheets/involution.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sheets::cli {

enum class Subcommand { triple, epsilon, orbits, components, dims, verify };
enum class OutputFormat { text, json };

struct Request {
    Subcommand subcommand = Subcommand::triple;
    Partition lambda;
    std::optional<PairType> pair;
    std::optional<LabelSequence> phi;
    std::optional<Signature> signature;
    std::optional<std::vector<Rational>> t;
    OutputFormat output = OutputFormat::text;
    std::uint64_t seed = 0;
    std::size_t max_size = 5;
};

struct Response {
    int exit_code = 0;
    std::string out;
    std::string err;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_validation = 1;
inline constexpr int exit_internal = 2;

// Thrown by parse_request for --help; what() is the help text.
class HelpRequested : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Throws std::invalid_argument (or a subclass) on malformed flags.
Request parse_request(const std::vector<std::string>& args);

// Runs a parsed request. Validation failures give exit code 1, broken
// internal invariants exit code 2; the reason goes to err.
Response run(const Request& request);

// parse_request + run; args exclude the program name.
Response run_command_line(const std::vector<std::string>& args);

}  // namespace sheets::cli

#endif
