#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace quadric::cli {

// Result of one CLI command. Text and JSON renderings are produced from the
// same structured payload; output is deterministic byte-for-byte for fixed
// flags. Flagged results always carry at least one citation.
enum class Status { Ok, Error, Flagged };

struct Citation {
    std::string ref;
    std::string quote;
    std::string status; // "pass", "fail", "flagged", "cited"
};

struct CommandResult {
    Status status = Status::Ok;
    std::string command;
    nlohmann::json inputs;
    nlohmann::json result;
    std::vector<Citation> citations;
    std::string text; // human-readable rendering

    nlohmann::json to_json() const;
};

// Parses args (excluding the program name) and runs one command.
CommandResult dispatch(const std::vector<std::string>& args);

// Full front end: renders text or --json, writes to out/err, returns the
// process exit code (0 for ok/flagged, 1 for errors or failed checks,
// 2 for usage errors).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Exact rationals serialize as {"num": ..., "den": ...}; never as floats.
nlohmann::json rat_to_json(long long num, long long den);

} // namespace quadric::cli
