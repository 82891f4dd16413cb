#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace webdimer {

// Exact rational scalar. mpq_class keeps values canonical (reduced,
// positive denominator) as long as arithmetic goes through its operators.
using Rational = mpq_class;

inline Rational from_ll(long long v) { return Rational(static_cast<long>(v)); }

inline Rational rat(long p, long q = 1) {
    if (q == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

// "p/q", or "p" when q = 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    r.canonicalize();
    if (r.get_den() == 0) throw std::invalid_argument("rational with zero denominator");
    return r;
}

inline Rational rat_pow(const Rational& base, unsigned e) {
    Rational out(1), b = base;
    while (e) {
        if (e & 1) out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

// Deterministic splitmix64 stream; same sequence on every platform.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [lo, hi]
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    // positive rational p/q with p in [1,100], q in [1,10]
    Rational rational() { return rat(range(1, 100), range(1, 10)); }
};

}  // namespace webdimer
