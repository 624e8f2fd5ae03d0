#include "caoli/bigint.hpp"

#include "caoli/errors.hpp"

#include <cmath>

namespace caoli {

unsigned bit_length(const Int& x) {
    if (x == 0) return 0;
    return static_cast<unsigned>(boost::multiprecision::msb(x)) + 1;
}

double approx_log2(const Int& x) {
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, x.backend().data());
    return std::log2(mant) + static_cast<double>(exp2);
}

bool parse_int(const std::string& token, Int& out) {
    if (token.empty()) return false;
    const std::size_t start = token[0] == '-' ? 1 : 0;
    if (start == token.size()) return false;
    for (std::size_t i = start; i < token.size(); ++i) {
        if (token[i] < '0' || token[i] > '9') return false;
    }
    out = Int(token);
    return true;
}

Int Rng::raw_bits(unsigned bits) {
    Int r = 0;
    for (unsigned filled = 0; filled < bits; filled += 64) {
        r <<= 64;
        r |= Int(word());
    }
    r &= (Int(1) << bits) - 1;
    return r;
}

Int Rng::exact_bits(unsigned bits) {
    if (bits == 0) throw ParamError("exact_bits: bit count must be >= 1");
    Int r = raw_bits(bits);
    r |= Int(1) << (bits - 1);
    return r;
}

Int Rng::uniform(const Int& bound) {
    if (bound < 0) throw ParamError("uniform: bound must be non-negative");
    if (bound == 0) return Int(0);
    const unsigned bits = bit_length(bound);
    // acceptance probability is at least 1/2 per draw
    for (;;) {
        Int r = raw_bits(bits);
        if (r <= bound) return r;
    }
}

}  // namespace caoli
