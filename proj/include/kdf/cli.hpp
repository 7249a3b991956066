#ifndef KDF_CLI_HPP
#define KDF_CLI_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <kdf/identities.hpp>

namespace kdf::cli {

enum class Command { expand, verify, fuzz, conclusions, eval, list, errata };
enum class Output { text, json };

struct RunConfig {
    Command command = Command::list;
    std::optional<std::string> input_path;
    std::uint64_t seed = 7;
    unsigned count = 50;
    /// nullopt: each command's own default (7 for fuzz/verify, 6 for
    /// conclusions and errata, 30 for eval).
    std::optional<unsigned> cap;
    Output output = Output::text;
    std::optional<Reading> reading;
    std::optional<std::string> id;
    std::vector<double> point;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// Exit status: 0 when no check failed, 1 on a failed check or internal
/// error, 2 when the input or arguments do not parse.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

/// Parses argv (CLI11) and runs; this is the whole `kdf` executable.
int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace kdf::cli

#endif
