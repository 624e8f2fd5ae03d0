#include "caoli/sim.hpp"

#include "caoli/errors.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace caoli {
namespace {

// Offsets the per-trial message stream away from the keygen stream.
constexpr std::uint64_t kMessageStream = 0xD6E8FEB86659FD93ULL;

void classify(const PrimeCandidate& cand, const Int& true_prime, IndexTally& tally) {
    if (cand.status == RecoveryStatus::Failed || cand.p_hat != true_prime) {
        ++tally.failed;
        return;
    }
    Int q, r;
    boost::multiprecision::divide_qr(cand.d, true_prime, q, r);
    if (r != 0) throw Error("internal: gcd candidate is not a multiple of the true prime");
    if (cand.cofactor != q) throw Error("internal: recorded cofactor disagrees with the oracle");
    if (q == 1) {
        ++tally.exact;
    } else if (q == 2) {
        ++tally.cofactor2;
    } else {
        ++tally.other_cofactor;
    }
}

std::string fixed4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

}  // namespace

TrialStats run_trials(const TrialConfig& cfg) {
    if (cfg.trials < 1) throw ParamError("trials must be >= 1");
    if (cfg.max_cofactor < 1) throw ParamError("max_cofactor must be >= 1");
    validate(SchemeParams{cfg.n, cfg.d, cfg.min_prime_bits, 0});

    TrialStats stats;
    stats.config = cfg;
    stats.per_index.resize(cfg.n);

    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        const std::uint64_t seed = cfg.base_seed ^ t;
        auto [sk, pk] = keygen({cfg.n, cfg.d, cfg.min_prime_bits, seed});

        Rng msg_rng(seed ^ kMessageStream);
        Vec x(cfg.n);
        for (auto& xi : x) xi = msg_rng.uniform(cfg.d);
        const Int y = encrypt(pk, x);

        auto [rk, outcomes] = full_break(pk, {y}, cfg.max_cofactor);
        for (std::size_t i = 0; i < cfg.n; ++i) {
            classify(rk.candidates[i], sk.primes[i], stats.per_index[i]);
        }
        ++stats.messages_attempted;
        if (outcomes[0].message && *outcomes[0].message == x) ++stats.messages_recovered;
    }

    for (const IndexTally& tally : stats.per_index) {
        stats.aggregate.exact += tally.exact;
        stats.aggregate.cofactor2 += tally.cofactor2;
        stats.aggregate.other_cofactor += tally.other_cofactor;
        stats.aggregate.failed += tally.failed;
    }
    if (cfg.n >= 3) stats.heuristic_bound = coprimality_lower_bound(cfg.n);
    return stats;
}

double zeta(unsigned k) {
    if (k < 2) throw ParamError("zeta: needs k >= 2");
    // Partial series summed small-terms-first, then an Euler-Maclaurin tail
    // estimate; the first dropped correction is of order N^-(k+3).
    constexpr unsigned N = 20000;
    long double sum = 0.0L;
    for (unsigned i = N - 1; i >= 1; --i) {
        sum += powl(static_cast<long double>(i), -static_cast<long double>(k));
    }
    const long double nd = N;
    sum += powl(nd, 1.0L - k) / (k - 1.0L);
    sum += 0.5L * powl(nd, -static_cast<long double>(k));
    sum += (k / 12.0L) * powl(nd, -static_cast<long double>(k) - 1.0L);
    return static_cast<double>(sum);
}

double coprimality_lower_bound(std::size_t n) {
    if (n < 3) throw ParamError("coprimality_lower_bound: needs n >= 3");
    return 1.0 / zeta(static_cast<unsigned>(n - 1));
}

std::string render_report(const TrialStats& stats) {
    const TrialConfig& cfg = stats.config;
    std::ostringstream out;
    out << "key-recovery simulation\n";
    out << "=======================\n";
    out << "trials          " << cfg.trials << "\n";
    out << "block length n  " << cfg.n << "\n";
    out << "message bound d " << cfg.d << "\n";
    out << "min prime bits  " << cfg.min_prime_bits << "\n";
    out << "max cofactor    " << cfg.max_cofactor << "\n";
    out << "base seed       " << cfg.base_seed << "\n";
    out << "\n";
    out << "per-index recovery counts (exact / 2p / other / failed)\n";
    for (std::size_t i = 0; i < stats.per_index.size(); ++i) {
        const IndexTally& t = stats.per_index[i];
        out << "  index " << (i + 1) << ": " << t.exact << " " << t.cofactor2 << " "
            << t.other_cofactor << " " << t.failed << "\n";
    }
    out << "\n";
    const double total = static_cast<double>(stats.aggregate.total());
    out << "aggregate over " << stats.aggregate.total() << " prime recoveries\n";
    out << "  exact           " << stats.aggregate.exact << " ("
        << fixed4(stats.aggregate.exact / total) << ")\n";
    out << "  cofactor 2      " << stats.aggregate.cofactor2 << " ("
        << fixed4(stats.aggregate.cofactor2 / total) << ")\n";
    out << "  other cofactor  " << stats.aggregate.other_cofactor << " ("
        << fixed4(stats.aggregate.other_cofactor / total) << ")\n";
    out << "  failed          " << stats.aggregate.failed << " ("
        << fixed4(stats.aggregate.failed / total) << ")\n";
    out << "\n";
    out << "messages recovered " << stats.messages_recovered << " / "
        << stats.messages_attempted << " ("
        << fixed4(static_cast<double>(stats.messages_recovered) /
                  static_cast<double>(stats.messages_attempted))
        << ")\n";
    if (stats.heuristic_bound) {
        out << "coprimality heuristic lower bound " << fixed4(*stats.heuristic_bound) << "\n";
    } else {
        out << "coprimality heuristic lower bound n/a (defined for n >= 3)\n";
    }
    out << "note: the heuristic is 1/zeta(n-1), the asymptotic probability that\n"
           "n-1 random integers share no common factor; its worst case over n is\n"
           "1/zeta(2) = 6/pi^2, about 0.6079.\n";
    return out.str();
}

std::string render_stats_kv(const TrialStats& stats) {
    const TrialConfig& cfg = stats.config;
    const double total = static_cast<double>(stats.aggregate.total());
    std::ostringstream out;
    out << "trials=" << cfg.trials << "\n";
    out << "n=" << cfg.n << "\n";
    out << "d=" << cfg.d << "\n";
    out << "min_prime_bits=" << cfg.min_prime_bits << "\n";
    out << "max_cofactor=" << cfg.max_cofactor << "\n";
    out << "base_seed=" << cfg.base_seed << "\n";
    out << "indices_total=" << stats.aggregate.total() << "\n";
    out << "exact_count=" << stats.aggregate.exact << "\n";
    out << "cofactor2_count=" << stats.aggregate.cofactor2 << "\n";
    out << "other_cofactor_count=" << stats.aggregate.other_cofactor << "\n";
    out << "failed_count=" << stats.aggregate.failed << "\n";
    out << "exact_fraction=" << fixed4(stats.aggregate.exact / total) << "\n";
    out << "messages_attempted=" << stats.messages_attempted << "\n";
    out << "messages_recovered=" << stats.messages_recovered << "\n";
    out << "message_fraction="
        << fixed4(static_cast<double>(stats.messages_recovered) /
                  static_cast<double>(stats.messages_attempted))
        << "\n";
    if (stats.heuristic_bound) {
        out << "heuristic_bound=" << fixed4(*stats.heuristic_bound) << "\n";
    } else {
        out << "heuristic_bound=n/a\n";
    }
    for (std::size_t i = 0; i < stats.per_index.size(); ++i) {
        const IndexTally& t = stats.per_index[i];
        out << "index_" << (i + 1) << "=" << t.exact << "," << t.cofactor2 << ","
            << t.other_cofactor << "," << t.failed << "\n";
    }
    return out.str();
}

}  // namespace caoli
