#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "burgess/arith.hpp"
#include "burgess/report_io.hpp"

namespace burgess {

inline constexpr u64 kDefaultSeed = 0xB00B5;

struct RunConfig {
    std::string subcommand;
    u64 seed = kDefaultSeed;
    int threads = 1;
    OutputFormat format = OutputFormat::Json;
    std::optional<std::string> out;

    // gauss / lvalue / charsum
    i64 q = 0;
    i64 M = 0;
    std::string chi = "all";
    std::string method = "hurwitz";
    double delta = 1.0;
    std::string q1 = "0,1,0";
    std::string q2 = "1,0,0";
    std::vector<i64> exclude;

    // kloosterman
    i64 a = 0;
    i64 b = 0;
    i64 c = 1;
    std::optional<i64> psi_mod;
    i64 psi = 0;

    // tau
    i64 n_max = 30;
    std::string width = "auto";

    // verify
    int tuples = 100;
    std::string suite = "all";

    // scan-weil
    i64 M_min = 11;
    i64 M_max = 499;
    int trials = 50;

    // scan-burgess
    int primes = 60;
    i64 M_lo = 100;
    i64 M_hi = 20000;
    int chars = 3;
    std::string coeff = "divisor";
    int per_octave = 2;

    // offdiag-tail
    i64 L = 4;
    std::optional<i64> N;
    std::optional<double> p;
    double p_scale = 1.0;
    i64 c_max = 1000;
    int k = 11;
};

/// Thrown for --help; carries the rendered help text.
struct HelpRequested {
    std::string text;
};

/// Throws UsageError on malformed input and HelpRequested for --help.
RunConfig parse_command_line(int argc, const char* const* argv);

/// Runs the subcommand and writes its records to `out`. Returns 0 when every
/// verification passed and 1 otherwise; throws UsageError (or another
/// burgess::Error for invalid parameters) before writing anything.
int dispatch(const RunConfig& config, std::ostream& out);

/// parse + dispatch + --out handling; returns the process exit status
/// (2 on usage errors, with nothing written to `out`).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace burgess
