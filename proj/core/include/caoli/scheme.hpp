#pragma once

#include "caoli/matrix.hpp"
#include "caoli/ntheory.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace caoli {

/// Key-generation parameters.
///
/// The scheme works over n distinct primes p_1 < ... < p_n, each congruent
/// to 3 (mod 4), a message bound d >= 1, and two secret unit lower-triangular
/// mixing matrices whose off-diagonal entries stay below the bound
/// beta = min_i sqrt(p_i / (i(i+1)d)). Parameters must leave room for at
/// least one nonzero off-diagonal value, i.e. beta > 1.
///
/// Keys are immutable once built and every operation here is a pure function
/// (key generation owns its Rng exclusively), so keys can be shared across
/// threads and encrypt/decrypt called concurrently without coordination.
struct SchemeParams {
    std::size_t n = 0;             // block length (number of primes)
    Int d = 1;                     // message bound, >= 1
    unsigned min_prime_bits = 64;  // exact bit length of generated primes
    std::uint64_t seed = 0;        // feeds all randomness of keygen
};

/// Throws ParamError unless n >= 1, d >= 1, min_prime_bits >= 8 and
/// 2^(min_prime_bits - 1) > n(n+1)d (which guarantees beta > 1).
void validate(const SchemeParams& params);

struct PrivateKey {
    std::vector<Int> primes;   // strictly ascending, each = 3 (mod 4)
    Matrix p1, p2;             // unit lower-triangular mixing matrices
    std::vector<Int> lambdas;  // CRT basis: lambdas[i] mod primes[j] = (i==j)
    Int d;

    std::size_t n() const { return primes.size(); }

    /// Builds a key from explicit components, validating all invariants and
    /// deriving the lambdas. The entry cap for p1/p2 is recomputed from the
    /// primes and d.
    static PrivateKey from_parts(std::vector<Int> primes, Matrix p1, Matrix p2, Int d);
};

struct PublicKey {
    Matrix b;  // symmetric with non-negative entries
    Int d;

    std::size_t n() const { return b.rows(); }
};

/// The secret-matrix entry bound.
struct EntryBound {
    Int cap;          // largest M with M^2 * i(i+1) * d < p_i for every i
    double beta_log2; // log2 of the real bound, for display only
};

/// Validates a prime sequence: non-empty, strictly ascending, every element
/// a probable prime congruent to 3 (mod 4) with p_i > i(i+1)d (1-based i).
void validate_primes(const std::vector<Int>& primes, const Int& d);

/// n distinct probable primes of exactly min_prime_bits bits, each = 3
/// (mod 4), sorted ascending. Since every candidate has its top bit set,
/// the validated precondition 2^(min_prime_bits-1) > n(n+1)d already forces
/// p_i > i(i+1)d for all i.
std::vector<Int> generate_primes(const SchemeParams& params, Rng& rng);

/// CRT basis elements: with m_i the product of the other primes and m_i' its
/// inverse mod p_i in (0, p_i), lambda_i = m_i' * m_i. Then lambda_i is 1 mod
/// p_i and 0 mod every other prime.
std::vector<Int> compute_lambdas(const std::vector<Int>& primes);

/// Largest integer cap M with M^2 * i(i+1) * d < p_i for all i, found by
/// exact integer arithmetic (no floating point), plus the real bound's log2
/// for reporting. Expects primes already validated; throws ParamError when
/// no M >= 1 exists.
EntryBound entry_bound(const std::vector<Int>& primes, const Int& d);

/// Unit lower-triangular matrix with strict-lower entries uniform in
/// {0, ..., cap}. The diagonal is forced to 1: an integer-invertible
/// triangular matrix with non-negative entries has determinant 1.
Matrix random_unit_lower(std::size_t n, const Int& cap, Rng& rng);

/// Public matrix B = P2^T P1^T Lambda P1 P2, computed exactly.
PublicKey derive_public(const PrivateKey& sk);

std::pair<PrivateKey, PublicKey> keygen(const SchemeParams& params);

/// Throws RangeError (naming index and bound) or DimensionError.
void validate_message(const Vec& x, const Int& d, std::size_t n);

/// y = x B x^T.
Int encrypt(const PublicKey& pk, const Vec& x);

/// For each prime p_k, the unique square root z_k of y mod p_k with
/// 2 z_k < p_k (z_k = 0 when y = 0 mod p_k). For a ciphertext of an
/// in-range message this equals x P2^T P1^T exactly.
Vec recover_roots(const Int& y, const std::vector<Int>& primes);

/// Inverts encryption: per-prime roots, then substitution against the
/// transposed mixing product. Always re-checks that the result lies in
/// [0, d]^n and re-encrypts to y; failures raise InvalidCiphertextError.
Vec decrypt(const PrivateKey& sk, const Int& y);

}  // namespace caoli
