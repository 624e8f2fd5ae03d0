#include "caoli/ntheory.hpp"

#include "caoli/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace caoli {
namespace {

constexpr std::uint32_t kSieveLimit = 8192;

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> table = [] {
        std::vector<bool> composite(kSieveLimit, false);
        std::vector<std::uint32_t> primes;
        for (std::uint32_t i = 2; i < kSieveLimit; ++i) {
            if (composite[i]) continue;
            primes.push_back(i);
            for (std::uint32_t j = i * i; j < kSieveLimit; j += i) composite[j] = true;
        }
        return primes;
    }();
    return table;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace

Egcd extended_gcd(Int a, Int b) {
    Int x0 = 1, y0 = 0;
    Int x1 = 0, y1 = 1;
    while (b != 0) {
        Int q, r;
        boost::multiprecision::divide_qr(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
        Int x2 = x0 - q * x1;
        Int y2 = y0 - q * y1;
        x0 = std::move(x1);
        y0 = std::move(y1);
        x1 = std::move(x2);
        y1 = std::move(y2);
    }
    if (a < 0) {
        a = -a;
        x0 = -x0;
        y0 = -y0;
    }
    return {std::move(a), std::move(x0), std::move(y0)};
}

std::optional<Int> mod_inverse(const Int& a, const Int& m) {
    if (m < 2) throw ParamError("mod_inverse: modulus must be >= 2");
    Int reduced = a % m;
    if (reduced < 0) reduced += m;
    Egcd e = extended_gcd(reduced, m);
    if (e.g != 1) return std::nullopt;
    Int inv = e.x % m;
    if (inv < 0) inv += m;
    return inv;
}

bool miller_rabin(const Int& n, int rounds, Rng& rng) {
    if (n < 2) return false;
    if (n == 2 || n == 3) return true;
    if (n % 2 == 0) return false;
    Int d = n - 1;
    unsigned s = 0;
    while (d % 2 == 0) {
        d >>= 1;
        ++s;
    }
    const Int n_minus_1 = n - 1;
    for (int round = 0; round < rounds; ++round) {
        Int a = 2 + rng.uniform(n - 4);  // witness in [2, n-2]
        Int x = boost::multiprecision::powm(a, d, n);
        if (x == 1 || x == n_minus_1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = (x * x) % n;
            if (x == n_minus_1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool is_probable_prime(const Int& n, int rounds) {
    if (n < 2) return false;
    const auto& table = small_primes();
    if (n < kSieveLimit) {
        return std::binary_search(table.begin(), table.end(),
                                  n.convert_to<std::uint32_t>());
    }
    for (std::uint32_t p : table) {
        if (mpz_divisible_ui_p(n.backend().data(), p)) return false;
    }
    // Witness stream seeded from the candidate, making the verdict a pure
    // function of n and reproducible across runs and threads.
    Rng witness_rng(fnv1a(n.str()));
    return miller_rabin(n, rounds, witness_rng);
}

Int sqrt_mod_p(const Int& a, const Int& p) {
    if (p < 3 || p % 4 != 3) {
        throw ParamError("sqrt_mod_p: modulus must be a prime congruent to 3 (mod 4)");
    }
    if (a < 0 || a >= p) throw ParamError("sqrt_mod_p: argument must lie in [0, p)");
    Int r = boost::multiprecision::powm(a, (p + 1) / 4, p);
    if ((r * r) % p != a) {
        throw NonResidueError(
            "sqrt_mod_p: value is not a quadratic residue; "
            "corrupt ciphertext or wrong modulus");
    }
    return r;
}

}  // namespace caoli
