#pragma once

#include "abmod/json_io.hpp"
#include "abmod/session.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace abmod {

struct RunOptions {
    int precision = kDefaultPrecision;
    int max_sat_iter = -1;
    std::uint64_t seed = 0;
    bool check = false;  // validation downgrades become errors
};

struct CommandResult {
    int line = 0;
    int column = 0;  // parse errors only
    std::string command;
    bool ok = true;
    Json result;
    std::string text;
    ErrorKind error_kind = ErrorKind::InvalidArgument;
    std::string error;
};

struct Report {
    std::vector<CommandResult> results;
    bool ok() const;
};

Report run_session(const Session& s, const RunOptions& opts = {});
// Parses leniently; bad lines become failed entries, the rest still runs.
Report run_text(const std::string& text, const RunOptions& opts = {});

std::string report_to_text(const Report& r);
Json report_to_json(const Report& r);

}  // namespace abmod
