// Acceptance suite. Runs every criterion at its pinned threshold and prints
// one PASS/FAIL line each; exits nonzero if any criterion fails. All seeds
// are fixed, so the run is reproducible.

#include "caoli/attack.hpp"
#include "caoli/errors.hpp"
#include "caoli/sim.hpp"
#include "testutil.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using caoli::Int;
using caoli::Matrix;
using caoli::Vec;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

// ---- criterion 1: round-trip correctness over the (n, d) grid ----
// 67 fresh (key, message) pairs per combination: 15 x 67 = 1005 >= 1000.
Outcome round_trip_grid() {
    const std::size_t ns[] = {1, 2, 4, 8, 16};
    const int ds[] = {1, 5, 100};
    const int pairs_per_combo = 67;
    std::uint64_t total = 0, good = 0;
    for (std::size_t n : ns) {
        for (int d : ds) {
            for (int i = 0; i < pairs_per_combo; ++i) {
                const std::uint64_t seed =
                    0x9E3779B97F4A7C15ULL * (n * 1000 + d) + static_cast<std::uint64_t>(i);
                auto [sk, pk] = caoli::keygen({n, Int(d), 64, seed});
                caoli::Rng rng(seed ^ 0x5851F42D4C957F2DULL);
                Vec x = testutil::random_vec(n, Int(d), rng);
                ++total;
                if (caoli::decrypt(sk, caoli::encrypt(pk, x)) == x) ++good;
            }
        }
    }
    Outcome o;
    o.pass = total >= 1000 && good == total;
    o.detail = std::to_string(good) + "/" + std::to_string(total) +
               " pairs across n in {1,2,4,8,16} x d in {1,5,100}, 64-bit primes";
    return o;
}

// ---- criterion 2: the factorization reproduces the private key exactly ----
Outcome attack_exactness() {
    std::uint64_t total = 0, good = 0;
    for (std::size_t n : {2, 4, 8, 16}) {
        for (std::uint64_t i = 0; i < 100; ++i) {
            const std::uint64_t seed = 0xA24BAED4963EE407ULL * n + i;
            auto [sk, pk] = caoli::keygen({n, Int(1), 64, seed});
            auto [lambdas, p] = caoli::factor_public_matrix(pk.b);
            Matrix lam(n, n);
            for (std::size_t k = 0; k < n; ++k) lam.entry(k, k) = lambdas[k];
            const Matrix reconstructed =
                testutil::mul_oracle(testutil::mul_oracle(caoli::transpose(p), lam), p);
            ++total;
            if (lambdas == sk.lambdas && p == sk.p1 * sk.p2 && reconstructed == pk.b) ++good;
        }
    }
    Outcome o;
    o.pass = good == total;
    o.detail = std::to_string(good) + "/" + std::to_string(total) +
               " keys with lambda and P equal element-for-element and P^T diag(lambda) P = B";
    return o;
}

// ---- criterion 3: prime recovery rate at n = 8, 64-bit primes ----
Outcome prime_recovery_rate() {
    caoli::TrialConfig cfg;
    cfg.trials = 200;
    cfg.n = 8;
    cfg.d = 1;
    cfg.min_prime_bits = 64;
    cfg.base_seed = 20240817;
    auto stats = caoli::run_trials(cfg);

    const double fraction =
        static_cast<double>(stats.aggregate.exact) / static_cast<double>(stats.aggregate.total());
    const bool partition = stats.aggregate.total() == cfg.trials * cfg.n;
    // non-exact successes verified against the oracle inside run_trials;
    // what remains is the rate itself
    Outcome o;
    o.pass = partition && fraction >= 0.6079 && fraction >= 0.95;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "exact fraction %.4f over %llu indices (bound 0.6079, expected >= 0.95); "
                  "non-exact: %llu cofactor-2, %llu other, %llu failed",
                  fraction, static_cast<unsigned long long>(stats.aggregate.total()),
                  static_cast<unsigned long long>(stats.aggregate.cofactor2),
                  static_cast<unsigned long long>(stats.aggregate.other_cofactor),
                  static_cast<unsigned long long>(stats.aggregate.failed));
    o.detail = buf;
    return o;
}

// ---- criterion 4: end-to-end break success rate ----
Outcome end_to_end_break() {
    caoli::TrialConfig cfg;
    cfg.trials = 100;
    cfg.n = 8;
    cfg.d = 100;
    cfg.min_prime_bits = 64;
    cfg.base_seed = 777001;
    auto stats = caoli::run_trials(cfg);
    // run_trials only counts messages whose break output matched the original
    // message, and full_break itself only emits re-encryption-verified output
    Outcome o;
    o.pass = stats.messages_attempted == 100 && stats.messages_recovered >= 95;
    o.detail = std::to_string(stats.messages_recovered) + "/" +
               std::to_string(stats.messages_attempted) +
               " intercepted ciphertexts decrypted to the true message (need >= 95)";
    return o;
}

// ---- criterion 5: the worked instance, re-verified by brute force ----
Int gcd_oracle(const std::vector<Int>& values) {
    // exhaustive common-divisor search; fine for the tiny worked instance
    Int smallest = 0;
    for (const Int& v : values) {
        Int a = v < 0 ? Int(-v) : v;
        if (a != 0 && (smallest == 0 || a < smallest)) smallest = a;
    }
    if (smallest == 0) return 0;
    for (Int g = smallest; g >= 1; --g) {
        bool all = true;
        for (const Int& v : values) {
            if (v % g != 0) {
                all = false;
                break;
            }
        }
        if (all) return g;
    }
    return 1;
}

Outcome golden_instance() {
    std::ostringstream why;
    bool pass = true;
    auto expect = [&](bool cond, const std::string& what) {
        if (!cond) {
            pass = false;
            why << (why.str().empty() ? "" : "; ") << what;
        }
    };

    auto sk = testutil::golden_private();
    auto pk = caoli::derive_public(sk);

    // the public matrix, twice: library route and independent expansion
    expect(pk.b == Matrix{{22, 15}, {15, 15}}, "B != [[22,15],[15,15]]");
    expect(testutil::public_matrix_oracle(sk) == pk.b, "matrix oracle disagrees with B");

    // encryption of (1,1), against the direct double sum
    const Vec one_one{Int(1), Int(1)};
    expect(caoli::encrypt(pk, one_one) == 67, "encrypt((1,1)) != 67");
    expect(testutil::quad_oracle(one_one, pk.b) == 67, "quadratic-form oracle != 67");

    // factorization output
    auto [lambdas, p] = caoli::factor_public_matrix(pk.b);
    expect(lambdas == std::vector<Int>{Int(7), Int(15)}, "lambda != (7,15)");
    expect(p == Matrix{{1, 0}, {1, 1}}, "P != [[1,0],[1,1]]");

    // gcd candidates, against an exhaustive-divisor oracle
    auto ds = caoli::prime_candidates(lambdas);
    expect(ds == std::vector<Int>{Int(3), Int(7)}, "candidates != (3,7)");
    expect(gcd_oracle({Int(6), Int(15)}) == 3, "gcd oracle d_1 != 3");
    expect(gcd_oracle({Int(7), Int(14)}) == 7, "gcd oracle d_2 != 7");

    // root recovery, against exhaustive search mod 3 and mod 7
    const Vec z = caoli::recover_roots(Int(67), sk.primes);
    expect(z == Vec{Int(1), Int(2)}, "roots != (1,2)");
    for (std::size_t k = 0; k < 2; ++k) {
        const Int& pk_ = sk.primes[k];
        Int root = testutil::sqrt_search(Int(67) % pk_, pk_);
        expect(root >= 0, "exhaustive search found no root");
        if (root >= 0) {
            Int low = root;
            if (low != 0 && 2 * low > pk_) low = pk_ - low;
            expect(low == z[k], "exhaustive root disagrees at index " + std::to_string(k + 1));
        }
    }

    // the full pipeline on the intercepted ciphertext
    auto [rk, outcomes] = caoli::full_break(pk, {Int(67)});
    expect(rk.complete(), "refinement incomplete");
    expect(rk.candidates[0].status == caoli::RecoveryStatus::Exact &&
               rk.candidates[0].p_hat == 3,
           "index 1 not recovered exactly as 3");
    expect(rk.candidates[1].status == caoli::RecoveryStatus::Exact &&
               rk.candidates[1].p_hat == 7,
           "index 2 not recovered exactly as 7");
    expect(outcomes[0].message.has_value() && *outcomes[0].message == one_one,
           "attack did not decrypt 67 to (1,1)");

    Outcome o;
    o.pass = pass;
    o.detail = pass ? "B, ciphertext, factorization, candidates and break all match the "
                      "hand-traced values and the brute-force oracles"
                    : why.str();
    return o;
}

// ---- criterion 6: a full break at n = 50 with 256-bit primes is fast ----
Outcome break_speed() {
    auto [sk, pk] = caoli::keygen({50, Int(1), 256, 424242});
    caoli::Rng rng(31337);
    Vec x = testutil::random_vec(50, Int(1), rng);
    const Int y = caoli::encrypt(pk, x);

    const auto start = std::chrono::steady_clock::now();
    auto [rk, outcomes] = caoli::full_break(pk, {y});
    const auto stop = std::chrono::steady_clock::now();
    const double seconds = std::chrono::duration<double>(stop - start).count();

    const bool recovered = outcomes[0].message && *outcomes[0].message == x;
    Outcome o;
    o.pass = seconds < 60.0 && rk.complete() && recovered;
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "full break took %.2f s (limit 60 s); key recovered %s, message %s",
                  seconds, rk.complete() ? "completely" : "partially",
                  recovered ? "recovered" : "NOT recovered");
    o.detail = buf;
    return o;
}

// ---- criterion 7: the heuristic matches 6/pi^2 ----
Outcome heuristic_value() {
    const double got = caoli::coprimality_lower_bound(3);
    const double err = std::abs(got - 0.6079);
    Outcome o;
    o.pass = err <= 1e-4;
    char buf[96];
    std::snprintf(buf, sizeof buf, "coprimality_lower_bound(3) = %.6f, |err vs 0.6079| = %.2e",
                  got, err);
    o.detail = buf;
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"round-trip correctness", round_trip_grid},
        {"attack exactness (oracle equivalence)", attack_exactness},
        {"prime recovery rate", prime_recovery_rate},
        {"end-to-end break", end_to_end_break},
        {"worked golden instance", golden_instance},
        {"efficiency of the full break", break_speed},
        {"heuristic computation", heuristic_value},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        if (!o.pass) ++failures;
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << (i + 1) << ". " << criteria[i].name
                  << " -- " << o.detail << "\n"
                  << std::flush;
    }
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
