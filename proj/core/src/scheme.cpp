#include "caoli/scheme.hpp"

#include "caoli/errors.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

namespace caoli {
namespace {

// i(i+1)d for 1-based index i.
Int index_weight(std::size_t i, const Int& d) {
    return Int(i) * Int(i + 1) * d;
}

}  // namespace

void validate(const SchemeParams& params) {
    if (params.n < 1) throw ParamError("n must be >= 1");
    if (params.d < 1) throw ParamError("d must be >= 1");
    if (params.min_prime_bits < 8) throw ParamError("min_prime_bits must be >= 8");
    // Generated primes have their top bit set, so 2^(bits-1) > n(n+1)d makes
    // every p_i exceed i(i+1)d and keeps the entry bound above 1.
    const Int smallest_prime = Int(1) << (params.min_prime_bits - 1);
    if (smallest_prime <= index_weight(params.n, params.d)) {
        throw ParamError("min_prime_bits too small for n and d: need 2^(bits-1) > n(n+1)d; "
                         "raise min_prime_bits");
    }
}

void validate_primes(const std::vector<Int>& primes, const Int& d) {
    if (primes.empty()) throw ParamError("prime sequence is empty");
    if (d < 1) throw ParamError("d must be >= 1");
    for (std::size_t k = 0; k < primes.size(); ++k) {
        const Int& p = primes[k];
        const std::string pos = std::to_string(k + 1);
        if (k > 0 && primes[k - 1] >= p) {
            throw ParamError("primes must be strictly ascending at position " + pos);
        }
        if (p % 4 != 3) {
            throw ParamError("prime " + pos + " is not congruent to 3 (mod 4)");
        }
        if (!is_probable_prime(p)) {
            throw ParamError("entry " + pos + " failed the primality test");
        }
        if (p <= index_weight(k + 1, d)) {
            throw ParamError("prime " + pos + " does not exceed i(i+1)d; "
                             "parameters leave no room for the entry bound");
        }
    }
}

std::vector<Int> generate_primes(const SchemeParams& params, Rng& rng) {
    validate(params);
    std::vector<Int> primes;
    primes.reserve(params.n);
    while (primes.size() < params.n) {
        Int candidate = rng.exact_bits(params.min_prime_bits);
        candidate |= 3;  // forces candidate = 3 (mod 4)
        if (!is_probable_prime(candidate)) continue;
        if (std::find(primes.begin(), primes.end(), candidate) != primes.end()) continue;
        primes.push_back(std::move(candidate));
    }
    std::sort(primes.begin(), primes.end());
    // construction already guarantees the validate_primes contract: sorted
    // distinct probable primes = 3 (mod 4), each above i(i+1)d via the
    // 2^(bits-1) precheck
    return primes;
}

std::vector<Int> compute_lambdas(const std::vector<Int>& primes) {
    Int product = 1;
    for (const Int& p : primes) product *= p;
    std::vector<Int> lambdas;
    lambdas.reserve(primes.size());
    for (const Int& p : primes) {
        Int m = product / p;  // exact: p divides the product
        auto inv = mod_inverse(m % p, p);
        if (!inv) throw ParamError("primes are not pairwise distinct");
        lambdas.push_back(*inv * m);
    }
    return lambdas;
}

EntryBound entry_bound(const std::vector<Int>& primes, const Int& d) {
    if (primes.empty() || d < 1) throw ParamError("entry_bound: need primes and d >= 1");
    Int cap = 0;
    double beta_log2 = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < primes.size(); ++k) {
        const Int weight = index_weight(k + 1, d);
        // largest m with m^2 * weight < p, via exact integer square root
        const Int quotient = (primes[k] - 1) / weight;
        Int m = boost::multiprecision::sqrt(quotient);
        if (k == 0 || m < cap) cap = m;
        beta_log2 = std::min(beta_log2,
                             (approx_log2(primes[k]) - approx_log2(weight)) / 2.0);
    }
    if (cap < 1) throw ParamError("entry bound is below 1; off-diagonal entries impossible");
    // cap must satisfy the strict inequality everywhere and be the largest
    // integer that does so at some index
    bool tight = false;
    for (std::size_t k = 0; k < primes.size(); ++k) {
        const Int weight = index_weight(k + 1, d);
        if (cap * cap * weight >= primes[k]) {
            throw Error("internal: entry cap violates its defining inequality");
        }
        if ((cap + 1) * (cap + 1) * weight >= primes[k]) tight = true;
    }
    if (!tight) throw Error("internal: entry cap is not maximal");
    return {std::move(cap), beta_log2};
}

Matrix random_unit_lower(std::size_t n, const Int& cap, Rng& rng) {
    if (cap < 1) throw ParamError("entry cap must be >= 1");
    Matrix m = Matrix::identity(n);
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) m.entry(i, j) = rng.uniform(cap);
    }
    return m;
}

PrivateKey PrivateKey::from_parts(std::vector<Int> primes, Matrix p1, Matrix p2, Int d) {
    validate_primes(primes, d);
    const std::size_t n = primes.size();
    const Int cap = entry_bound(primes, d).cap;
    for (const auto* m : {&p1, &p2}) {
        if (m->rows() != n || m->cols() != n) {
            throw ParamError("secret matrix dimensions do not match the prime count");
        }
        if (!is_unit_lower_triangular(*m)) {
            throw ParamError("secret matrix is not unit lower-triangular");
        }
        for (std::size_t i = 1; i < n; ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                const Int& e = m->entry(i, j);
                if (e < 0 || e > cap) {
                    throw ParamError("secret matrix entry (" + std::to_string(i + 1) + "," +
                                     std::to_string(j + 1) + ") is outside [0, " + cap.str() + "]");
                }
            }
        }
    }
    PrivateKey sk;
    sk.lambdas = compute_lambdas(primes);
    sk.primes = std::move(primes);
    sk.p1 = std::move(p1);
    sk.p2 = std::move(p2);
    sk.d = std::move(d);
    return sk;
}

PublicKey derive_public(const PrivateKey& sk) {
    Matrix t = sk.p1 * sk.p2;
    Matrix scaled = t;  // diag(lambda) * t: row i scaled by lambda_i
    for (std::size_t i = 0; i < t.rows(); ++i) {
        for (std::size_t j = 0; j < t.cols(); ++j) scaled.entry(i, j) *= sk.lambdas[i];
    }
    Matrix b = transpose(t) * scaled;
    if (!is_symmetric(b) || !all_non_negative(b)) {
        throw Error("internal: derived public matrix is not symmetric non-negative");
    }
    return {std::move(b), sk.d};
}

std::pair<PrivateKey, PublicKey> keygen(const SchemeParams& params) {
    validate(params);
    Rng rng(params.seed);
    std::vector<Int> primes = generate_primes(params, rng);
    const Int cap = entry_bound(primes, params.d).cap;
    Matrix p1 = random_unit_lower(params.n, cap, rng);
    Matrix p2 = random_unit_lower(params.n, cap, rng);
    PrivateKey sk = PrivateKey::from_parts(std::move(primes), std::move(p1), std::move(p2),
                                           params.d);
    PublicKey pk = derive_public(sk);
    return {std::move(sk), std::move(pk)};
}

void validate_message(const Vec& x, const Int& d, std::size_t n) {
    if (x.size() != n) {
        throw DimensionError("message length " + std::to_string(x.size()) +
                             " does not match block length " + std::to_string(n));
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < 0 || x[i] > d) {
            throw RangeError("message entry " + std::to_string(i + 1) + " is " + x[i].str() +
                             ", outside [0, " + d.str() + "]");
        }
    }
}

Int encrypt(const PublicKey& pk, const Vec& x) {
    validate_message(x, pk.d, pk.n());
    return quadratic_form(x, pk.b);
}

Vec recover_roots(const Int& y, const std::vector<Int>& primes) {
    if (y < 0) throw ParamError("ciphertext must be non-negative");
    Vec z;
    z.reserve(primes.size());
    for (const Int& p : primes) {
        Int r = sqrt_mod_p(y % p, p);
        // exactly one of r, p - r lies below p/2 when r != 0 (p is odd)
        if (r != 0 && 2 * r > p) r = p - r;
        z.push_back(std::move(r));
    }
    return z;
}

Vec decrypt(const PrivateKey& sk, const Int& y) {
    if (y < 0) throw InvalidCiphertextError("ciphertext must be non-negative");
    Vec z;
    try {
        z = recover_roots(y, sk.primes);
    } catch (const NonResidueError&) {
        throw InvalidCiphertextError("invalid ciphertext: no root pattern modulo the key primes");
    }
    Vec x = solve_unit_upper(transpose(sk.p1 * sk.p2), z);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < 0 || x[i] > sk.d) {
            throw InvalidCiphertextError("invalid ciphertext: recovered entry " +
                                         std::to_string(i + 1) + " is out of range");
        }
    }
    // re-encryption self-check; x B x^T equals sum(lambda_k z_k^2) exactly
    Int check = 0;
    for (std::size_t k = 0; k < z.size(); ++k) check += sk.lambdas[k] * z[k] * z[k];
    if (check != y) {
        throw InvalidCiphertextError("invalid ciphertext: re-encryption mismatch");
    }
    return x;
}

}  // namespace caoli
