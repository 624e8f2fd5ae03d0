#pragma once

#include "caoli/scheme.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace caoli {

// Everything in this header is a pure function over immutable inputs; results
// are index-aligned with their inputs regardless of evaluation order.

enum class RecoveryStatus { Exact, Cofactor, Failed };

/// One per block position: the gcd candidate d_i and, when refinement
/// succeeded, the prime recovered from it.
struct PrimeCandidate {
    Int d;         // gcd of the lambdas with the i-th replaced by lambda_i - 1
    Int p_hat;     // recovered prime; 0 when status == Failed
    Int cofactor;  // d / p_hat; 0 when status == Failed
    RecoveryStatus status = RecoveryStatus::Failed;
};

/// Everything the attacker reconstructs from the public matrix alone.
struct RecoveredKey {
    std::vector<Int> lambdas;
    Matrix p;  // unit lower-triangular mixing product
    std::vector<PrimeCandidate> candidates;

    bool complete() const;
    std::vector<std::size_t> failed_indices() const;  // 0-based
};

/// Factors a public matrix as B = P^T diag(lambda) P by eliminating rows
/// bottom-up. Every quotient is an exact integer for well-formed public
/// keys; a remainder, zero pivot, or non-triangular result means the input
/// did not come from this scheme and raises InexactDivisionError /
/// MalformedKeyError.
std::pair<std::vector<Int>, Matrix> factor_public_matrix(const Matrix& b);

/// d_i = gcd(lambda_1, ..., lambda_{i-1}, lambda_i - 1, lambda_{i+1}, ...,
/// lambda_n). The true p_i always divides d_i. For n = 1 this degenerates to
/// lambda_1 - 1 = 0 and refinement reports failure honestly.
std::vector<Int> prime_candidates(const std::vector<Int>& lambdas);

/// Trial-divides d by cofactors c = 1, 2, ... up to max_cofactor and returns
/// the first quotient that is a probable prime congruent to 3 (mod 4) and
/// matches the CRT pattern of the lambdas. Failure is a status, not an error.
PrimeCandidate refine_candidate(const Int& d, const std::vector<Int>& lambdas,
                                std::size_t index, std::uint64_t max_cofactor);

/// factor_public_matrix + prime_candidates + per-index refinement.
RecoveredKey recover_key(const PublicKey& pk, std::uint64_t max_cofactor = 1000);

/// Outcome of breaking one ciphertext. `message` is present only when the
/// decryption was verified by re-encrypting under the public key; nothing
/// here ever consults a private key.
struct BreakResult {
    std::optional<Vec> message;
    std::vector<std::size_t> missing_indices;  // refinement failures, 0-based
    bool verify_failed = false;                // roots/solve ran but did not verify

    bool ok() const { return message.has_value(); }
};

/// Recovers the key from pk and decrypts each ciphertext with the recovered
/// material only. Results are index-aligned with the input.
std::pair<RecoveredKey, std::vector<BreakResult>> full_break(
    const PublicKey& pk, const std::vector<Int>& ciphertexts,
    std::uint64_t max_cofactor = 1000);

}  // namespace caoli
