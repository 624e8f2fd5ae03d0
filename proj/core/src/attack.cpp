#include "caoli/attack.hpp"

#include "caoli/errors.hpp"

#include <string>
#include <utility>

namespace caoli {
namespace {

// lambda_j = (j == index ? 1 : 0)  (mod q), for all j. Any divisor of the
// gcd candidate satisfies this automatically; checking it anyway hardens the
// pipeline against inputs that did not come from an honest key generator.
bool crt_pattern_holds(const std::vector<Int>& lambdas, std::size_t index, const Int& q) {
    for (std::size_t j = 0; j < lambdas.size(); ++j) {
        const Int want = (j == index) ? 1 : 0;
        if (lambdas[j] % q != want) return false;
    }
    return true;
}

}  // namespace

bool RecoveredKey::complete() const {
    for (const auto& c : candidates) {
        if (c.status == RecoveryStatus::Failed) return false;
    }
    return true;
}

std::vector<std::size_t> RecoveredKey::failed_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (candidates[i].status == RecoveryStatus::Failed) out.push_back(i);
    }
    return out;
}

std::pair<std::vector<Int>, Matrix> factor_public_matrix(const Matrix& b) {
    if (b.rows() != b.cols() || b.rows() == 0) {
        throw DimensionError("public matrix must be square and non-empty");
    }
    if (!is_symmetric(b)) throw MalformedKeyError("public matrix is not symmetric");

    const std::size_t n = b.rows();
    Matrix w = b;

    // Eliminate bottom-up: once the rows below row i are fully reduced, row j
    // holds lambda_j times the j-th mixing row, so w(j,i)/w(j,j) is the
    // integer mixing entry and the subtraction clears row i's dependence on
    // row j. The inner loop descends from the last row to i+1; row i is the
    // only row written, so the order does not change the result.
    for (std::size_t i = n - 1; i-- > 0;) {
        for (std::size_t j = n - 1; j > i; --j) {
            const Int& pivot = w.entry(j, j);
            if (pivot == 0) {
                throw MalformedKeyError("zero pivot in row " + std::to_string(j + 1) +
                                        ": not a well-formed public key");
            }
            Int q, r;
            boost::multiprecision::divide_qr(w.entry(j, i), pivot, q, r);
            if (r != 0) {
                throw InexactDivisionError(
                    "inexact division at entry (" + std::to_string(j + 1) + "," +
                    std::to_string(i + 1) + "): not a well-formed public key");
            }
            if (q == 0) continue;
            for (std::size_t k = 0; k < n; ++k) w.entry(i, k) -= q * w.entry(j, k);
        }
    }

    std::vector<Int> lambdas(n);
    for (std::size_t i = 0; i < n; ++i) {
        lambdas[i] = w.entry(i, i);
        if (lambdas[i] <= 0) {
            throw MalformedKeyError("non-positive pivot in row " + std::to_string(i + 1) +
                                    ": not a well-formed public key");
        }
        Vec row(n);
        for (std::size_t k = 0; k < n; ++k) row[k] = w.entry(i, k);
        row = exact_div(row, lambdas[i]);
        for (std::size_t k = 0; k < n; ++k) w.entry(i, k) = std::move(row[k]);
    }

    if (!is_unit_lower_triangular(w) || !all_non_negative(w)) {
        throw MalformedKeyError("reduction did not yield a unit lower-triangular "
                                "non-negative matrix: not a well-formed public key");
    }
    return {std::move(lambdas), std::move(w)};
}

std::vector<Int> prime_candidates(const std::vector<Int>& lambdas) {
    const std::size_t n = lambdas.size();
    std::vector<Int> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        Int g = 0;
        for (std::size_t j = 0; j < n; ++j) {
            g = boost::multiprecision::gcd(g, j == i ? Int(lambdas[j] - 1) : lambdas[j]);
        }
        out[i] = std::move(g);
    }
    return out;
}

PrimeCandidate refine_candidate(const Int& d, const std::vector<Int>& lambdas,
                                std::size_t index, std::uint64_t max_cofactor) {
    PrimeCandidate result{d, 0, 0, RecoveryStatus::Failed};
    if (d < 2) return result;
    for (std::uint64_t c = 1; c <= max_cofactor; ++c) {
        if (d % c != 0) continue;
        Int q = d / c;
        if (q < 3) break;  // quotients only shrink from here
        if (q % 4 != 3) continue;
        if (!is_probable_prime(q)) continue;
        if (!crt_pattern_holds(lambdas, index, q)) continue;
        result.p_hat = std::move(q);
        result.cofactor = c;
        result.status = (c == 1) ? RecoveryStatus::Exact : RecoveryStatus::Cofactor;
        return result;
    }
    return result;
}

RecoveredKey recover_key(const PublicKey& pk, std::uint64_t max_cofactor) {
    auto [lambdas, p] = factor_public_matrix(pk.b);
    std::vector<Int> ds = prime_candidates(lambdas);
    std::vector<PrimeCandidate> candidates;
    candidates.reserve(ds.size());
    for (std::size_t i = 0; i < ds.size(); ++i) {
        candidates.push_back(refine_candidate(ds[i], lambdas, i, max_cofactor));
    }
    return {std::move(lambdas), std::move(p), std::move(candidates)};
}

std::pair<RecoveredKey, std::vector<BreakResult>> full_break(
    const PublicKey& pk, const std::vector<Int>& ciphertexts, std::uint64_t max_cofactor) {
    RecoveredKey rk = recover_key(pk, max_cofactor);
    const std::vector<std::size_t> missing = rk.failed_indices();

    std::vector<Int> moduli;
    if (missing.empty()) {
        moduli.reserve(rk.candidates.size());
        // decryption uses the refined primes, never the raw gcd candidates:
        // the square roots need prime moduli
        for (const auto& c : rk.candidates) moduli.push_back(c.p_hat);
    }

    const Matrix pt = transpose(rk.p);
    std::vector<BreakResult> results;
    results.reserve(ciphertexts.size());
    for (const Int& y : ciphertexts) {
        BreakResult res;
        res.missing_indices = missing;
        if (!missing.empty()) {
            results.push_back(std::move(res));
            continue;
        }
        if (y < 0) {
            res.verify_failed = true;
            results.push_back(std::move(res));
            continue;
        }
        try {
            Vec z = recover_roots(y, moduli);
            Vec x = solve_unit_upper(pt, z);
            bool in_range = true;
            for (const Int& xi : x) {
                if (xi < 0 || xi > pk.d) {
                    in_range = false;
                    break;
                }
            }
            // success is verifiable with public material alone
            if (in_range && quadratic_form(x, pk.b) == y) {
                res.message = std::move(x);
            } else {
                res.verify_failed = true;
            }
        } catch (const NonResidueError&) {
            res.verify_failed = true;
        }
        results.push_back(std::move(res));
    }
    return {std::move(rk), std::move(results)};
}

}  // namespace caoli
