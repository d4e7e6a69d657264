#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "orbitstar/errors.hpp"

namespace orbitstar {

using Int = mpz_class;
using Rat = mpq_class;

/** Parses "p" or "p/q" into a reduced exact rational; rejects q = 0. */
inline Rat rat_parse(const std::string& s) {
    Rat q;
    try {
        q = Rat(s);
    } catch (const std::invalid_argument&) {
        throw ConfigError("not a rational: '" + s + "'");
    }
    if (q.get_den() == 0) throw ConfigError("zero denominator in rational: '" + s + "'");
    q.canonicalize();
    return q;
}

/** Canonical text form, "p" or "p/q" with q > 0 and gcd(p, q) = 1. */
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

/** Gaussian rational a + b*i with exact rational parts. */
struct GaussRat {
    Rat re, im;

    GaussRat() : re(0), im(0) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    friend GaussRat operator+(const GaussRat& x, const GaussRat& y) {
        return {Rat(x.re + y.re), Rat(x.im + y.im)};
    }
    friend GaussRat operator-(const GaussRat& x, const GaussRat& y) {
        return {Rat(x.re - y.re), Rat(x.im - y.im)};
    }
    friend GaussRat operator*(const GaussRat& x, const GaussRat& y) {
        return {Rat(x.re * y.re - x.im * y.im), Rat(x.re * y.im + x.im * y.re)};
    }
    friend GaussRat operator*(const Rat& c, const GaussRat& y) {
        return {Rat(c * y.re), Rat(c * y.im)};
    }
    friend bool operator==(const GaussRat& x, const GaussRat& y) {
        return x.re == y.re && x.im == y.im;
    }

    /** Canonical "a+bi" / "a-bi" form; both parts always printed. */
    std::string str() const {
        std::string out = rat_str(re);
        if (sgn(im) >= 0)
            out += "+" + rat_str(im) + "i";
        else
            out += "-" + rat_str(Rat(-im)) + "i";
        return out;
    }
};

/** Multiplies i into a real vector: used for first-Chern-style classes. */
inline std::vector<GaussRat> times_i(const std::vector<Rat>& v) {
    std::vector<GaussRat> out;
    out.reserve(v.size());
    for (const Rat& x : v) out.emplace_back(Rat(0), x);
    return out;
}

/** splitmix64: the deterministic generator behind every seeded sample in the
 *  test suites and verification reports. Fixed algorithm, platform-independent. */
struct SeededRng {
    std::uint64_t state;

    explicit SeededRng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /** Uniform-ish integer in [lo, hi]; bias is irrelevant for test sampling. */
    long pick(long lo, long hi) {
        if (hi <= lo) return lo;
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /** Small nonzero rational with denominator in {1, 2, 3}. */
    Rat small_rat() {
        long p = pick(-4, 4);
        if (p == 0) p = 1;
        long q = pick(1, 3);
        Rat r(p, q);
        r.canonicalize();
        return r;
    }
};

/** FNV-1a, 64-bit: stable content hash for cache filenames and fingerprints. */
inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

}  // namespace orbitstar
