#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace tempsub::cli {

/// One batch invocation: a subcommand plus its JSON config. Flag overrides
/// replace the corresponding config fields before validation.
struct Request {
    std::string command;
    std::string config_json = "{}";
    std::optional<std::uint64_t> seed_override;
    std::optional<std::string> out_override;
};

/// Exit codes (documented in the README):
///   0 success, 2 invalid config, 3 module error surfaced through the run,
///   4 I/O failure. Errors are reported to `err` as one machine-readable
///   JSON record per failure.
int run(const Request& req, std::ostream& err);

}  // namespace tempsub::cli
