#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "dicolor/digraph.hpp"
#include "dicolor/exact.hpp"
#include "dicolor/structure.hpp"

namespace dicolor::cli {

/// Flags shared by every subcommand, plus the two output streams.
struct CommandContext {
    std::ostream& out;
    std::ostream& err;
    bool json = false;
    uint64_t seed = 1;
    int samples = 1000;
    SolveLimits limits;
    bool timings = false;
};

std::string fmt_double(double x);
std::string fmt_fixed4(double x);
const char* bool_str(bool b);
const char* kind_name(BlockKind kind);
std::string join_ints(const std::vector<int>& values, char sep = ',');
/// Compact one-line arc encoding ("0>1;1>2"), used for inline witnesses.
std::string arcs_compact(const Digraph& d);

// Experiment subcommands (see cli.cpp for the wiring).
int run_verify_claims(const CommandContext& ctx);
int run_search_order7(const CommandContext& ctx);
int run_search_delta0(const CommandContext& ctx, int target, const std::string& mode);

}  // namespace dicolor::cli
