#pragma once

#include "caoli/attack.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace caoli {

struct TrialConfig {
    std::uint64_t trials = 1;
    std::size_t n = 2;
    Int d = 1;
    unsigned min_prime_bits = 64;
    std::uint64_t base_seed = 0;
    std::uint64_t max_cofactor = 1000;
};

/// Recovery outcomes for one block position, classified against the true
/// primes (available because the harness generated the keys).
struct IndexTally {
    std::uint64_t exact = 0;           // d_i = p_i
    std::uint64_t cofactor2 = 0;       // d_i = 2 p_i, prime still recovered
    std::uint64_t other_cofactor = 0;  // d_i = c p_i with c >= 3, recovered
    std::uint64_t failed = 0;          // prime not recovered

    std::uint64_t total() const { return exact + cofactor2 + other_cofactor + failed; }
};

struct TrialStats {
    TrialConfig config;
    std::vector<IndexTally> per_index;  // one entry per block position
    IndexTally aggregate;
    std::uint64_t messages_attempted = 0;
    std::uint64_t messages_recovered = 0;
    std::optional<double> heuristic_bound;  // 1/zeta(n-1); only for n >= 3
};

/// Runs `trials` independent keygen + full-break rounds. Trial t uses seed
/// base_seed XOR t, so any single trial can be re-run in isolation; identical
/// configs produce bitwise-identical stats.
TrialStats run_trials(const TrialConfig& cfg);

/// Riemann zeta at integer k >= 2, via partial series plus tail estimate;
/// absolute error below 1e-12.
double zeta(unsigned k);

/// Asymptotic probability that n-1 independent random integers are coprime:
/// 1/zeta(n-1). Requires n >= 3; the worst case over n is 1/zeta(2) =
/// 6/pi^2, about 0.6079.
double coprimality_lower_bound(std::size_t n);

/// Human-readable table with per-index breakdown, aggregate fractions, the
/// heuristic reference line and the message-recovery rate. Field order is
/// stable; fractions carry 4 decimal places.
std::string render_report(const TrialStats& stats);

/// Flat `name=value` block for downstream tooling; stable field order.
std::string render_stats_kv(const TrialStats& stats);

}  // namespace caoli
