#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace matint::cli {

/// One batch run. Commands: scalar-expand, matrix-expand, ribbon-enum,
/// penner-verify, penner-table, kp-verify, sl2-verify, oracle-crosscheck.
struct RunConfig {
    std::string command;
    int trunc = 8;
    int max_degree = 0;   // 0: derived from trunc
    std::string profile;  // "3:2,4:1"
    int g = -1;
    int s = -1;
    int max_euler = 2;    // penner-table: cap on 2g+s-2
    int n = 1;
    int k = 1;
    std::uint64_t seed = 1;
    std::string moments = "gaussian";  // gaussian | random:<seed> | soliton:<file> | file:<file>
    std::string a_values;              // sl2-verify: "a1,...,a2k" (empty: symbolic)
    std::string format = "json";       // json | csv
    int budget = 14;                   // half-edge cap
    int threads = 0;                   // 0: library default
    bool connected_only = false;
};

/// Executes one command, writing the structured report to `out`.
/// Returns 0 on success, 1 when a verification fails, 2 on invalid
/// configuration, 3 when the half-edge budget is exceeded.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace matint::cli
