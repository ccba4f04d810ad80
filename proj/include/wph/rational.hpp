#ifndef WPH_RATIONAL_HPP
#define WPH_RATIONAL_HPP

#include <cstdint>
#include <random>
#include <string>

#include <gmpxx.h>

namespace wph {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical rendering: reduced fraction, "p/q" or plain "p" for integers.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Deterministic RNG with a bias-free bounded draw. std::mt19937_64 output is
/// fixed by the standard, so results are stable across platforms; the bounded
/// draw avoids std::uniform_int_distribution, which is not.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform draw from [lo, hi], inclusive.
    long uniform(long lo, long hi) {
        const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = range * (UINT64_MAX / range);
        std::uint64_t v = eng_();
        while (v >= limit) v = eng_();
        return lo + static_cast<long>(v % range);
    }

    /// Uniform draw from [lo, hi] \ {0}.
    long uniform_nonzero(long lo, long hi) {
        long v = uniform(lo, hi);
        while (v == 0) v = uniform(lo, hi);
        return v;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace wph

#endif
