#pragma once

#include "caoli/bigint.hpp"

#include <optional>

namespace caoli {

struct Egcd {
    Int g;  // gcd(a, b), non-negative
    Int x;  // Bezout coefficients: a*x + b*y == g
    Int y;
};

Egcd extended_gcd(Int a, Int b);

/// Inverse of a modulo m (m >= 2), normalized into (0, m).
/// Empty when gcd(a, m) != 1.
std::optional<Int> mod_inverse(const Int& a, const Int& m);

/// Miller-Rabin with witnesses drawn from `rng`.
bool miller_rabin(const Int& n, int rounds, Rng& rng);

/// Probable-prime test: trial division by every prime below 8192, then
/// `rounds` Miller-Rabin rounds whose witnesses are seeded from the candidate
/// itself. The verdict is therefore a pure function of n.
bool is_probable_prime(const Int& n, int rounds = 64);

/// Square root of a modulo a prime p congruent to 3 (mod 4), computed as
/// a^((p+1)/4) mod p. The result is verified by squaring; a failed check
/// raises NonResidueError. Requires 0 <= a < p.
Int sqrt_mod_p(const Int& a, const Int& p);

}  // namespace caoli
