#pragma once

#include <cstddef>
#include <iosfwd>

namespace bloommst {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIo = 2;

/// Entry point behind the bloommst executable. Subcommands: gen, mst, bench,
/// stats, segment. Results go to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Derived filter parameters and false-positive statistics for n insertions,
/// two decimals. `k_override` of 0 uses the k from the sizing rule.
void write_stats_report(std::size_t n, double epsilon, std::size_t k_override, std::ostream& out);

}  // namespace bloommst
