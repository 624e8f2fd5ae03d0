#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <random>
#include <string>

namespace caoli {

/// Arbitrary-precision signed integer. Everything in this library computes
/// exactly over these; there is no floating point on any data path.
using Int = boost::multiprecision::mpz_int;

/// Number of significant bits of x (0 for x == 0). x must be non-negative.
unsigned bit_length(const Int& x);

/// log2(x) as a double, for display purposes only. x must be positive.
double approx_log2(const Int& x);

/// Strict decimal parser: optional '-', then digits, nothing else.
/// Returns false without touching `out` on malformed input.
bool parse_int(const std::string& token, Int& out);

/// Deterministic random source backed by std::mt19937_64, so identical seeds
/// produce identical streams on every platform. No global state anywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t word() { return eng_(); }

    /// Uniform integer with exactly `bits` bits, i.e. the top bit is set.
    Int exact_bits(unsigned bits);

    /// Uniform integer in [0, bound], by rejection sampling.
    Int uniform(const Int& bound);

private:
    Int raw_bits(unsigned bits);

    std::mt19937_64 eng_;
};

}  // namespace caoli
