#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "orbitstar/rational.hpp"

namespace orbitstar {

/** Dense univariate polynomial over Rat.
 *  Invariant: no trailing zero coefficients; zero polynomial has empty storage. */
class Poly {
    std::vector<Rat> c_;  // c_[k] multiplies x^k

    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }

public:
    Poly() = default;
    Poly(const Rat& constant) {  // NOLINT: implicit by design, scalars embed
        if (!is_zero(constant)) c_.push_back(constant);
    }
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly variable() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }

    bool is_zero_poly() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero

    Rat coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
        return c_[static_cast<size_t>(k)];
    }

    const std::vector<Rat>& coeffs() const { return c_; }

    /** Order of vanishing at 0; degree()+1 convention would be fragile, so the
     *  zero polynomial reports a large sentinel. */
    int order_at_zero() const {
        if (c_.empty()) return 1 << 20;
        for (size_t k = 0; k < c_.size(); ++k)
            if (!is_zero(c_[k])) return static_cast<int>(k);
        return 1 << 20;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rat> out(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (size_t k = 0; k < a.c_.size(); ++k) out[k] += a.c_[k];
        for (size_t k = 0; k < b.c_.size(); ++k) out[k] += b.c_[k];
        return Poly(std::move(out));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Rat> out(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (size_t k = 0; k < a.c_.size(); ++k) out[k] += a.c_[k];
        for (size_t k = 0; k < b.c_.size(); ++k) out[k] -= b.c_[k];
        return Poly(std::move(out));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.c_.empty() || b.c_.empty()) return Poly();
        std::vector<Rat> out(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(out));
    }
    Poly operator-() const {
        std::vector<Rat> out(c_);
        for (Rat& x : out) x = -x;
        return Poly(std::move(out));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    friend Poly operator*(const Rat& s, const Poly& a) {
        if (is_zero(s)) return Poly();
        std::vector<Rat> out(a.c_);
        for (Rat& x : out) x *= s;
        return Poly(std::move(out));
    }

    Poly mul_power(int k) const {  // multiply by x^k
        if (c_.empty()) return Poly();
        std::vector<Rat> out(c_.size() + static_cast<size_t>(k), Rat(0));
        for (size_t i = 0; i < c_.size(); ++i) out[i + static_cast<size_t>(k)] = c_[i];
        return Poly(std::move(out));
    }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
        return acc;
    }

    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

    Poly monic() const {
        if (c_.empty()) return Poly();
        Rat inv = Rat(1) / leading();
        return inv * *this;
    }

    /** Euclidean division; requires b nonzero. */
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
        if (b.c_.empty()) throw InternalError("Poly::divmod by zero");
        std::vector<Rat> rem(a.c_);
        std::vector<Rat> quo;
        int db = b.degree();
        Rat lb = b.leading();
        int da = static_cast<int>(rem.size()) - 1;
        if (da >= db) quo.assign(static_cast<size_t>(da - db + 1), Rat(0));
        while (true) {
            while (!rem.empty() && is_zero(rem.back())) rem.pop_back();
            int dr = static_cast<int>(rem.size()) - 1;
            if (dr < db) break;
            Rat f = rem.back() / lb;
            quo[static_cast<size_t>(dr - db)] = f;
            for (int k = 0; k <= db; ++k)
                rem[static_cast<size_t>(dr - db + k)] -= f * b.c_[static_cast<size_t>(k)];
        }
        q = Poly(std::move(quo));
        r = Poly(std::move(rem));
    }

    /** Monic gcd over the rationals. */
    static Poly gcd(Poly a, Poly b) {
        while (!b.c_.empty()) {
            Poly q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    /** Canonical text: descending powers of the given variable name. */
    std::string str(const std::string& var = "t") const {
        if (c_.empty()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            const Rat& ck = c_[static_cast<size_t>(k)];
            if (is_zero(ck)) continue;
            if (!out.empty()) out += sgn(ck) > 0 ? " + " : " - ";
            Rat mag = out.empty() ? ck : Rat(abs(ck));
            std::string coeff = rat_str(mag);
            if (k == 0) {
                out += coeff;
            } else {
                if (coeff == "1")
                    out += "";
                else if (coeff == "-1")
                    out += "-";
                else
                    out += coeff + "*";
                out += var;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }
};

/** Rational function in one variable over Rat.
 *  Invariant: denominator nonzero and monic, gcd(num, den) = 1; this makes the
 *  representation canonical so equality and serialization are structural. */
class RatFunc {
    Poly num_, den_;

    void reduce() {
        if (den_.is_zero_poly()) throw InternalError("RatFunc with zero denominator");
        if (num_.is_zero_poly()) {
            den_ = Poly(Rat(1));
            return;
        }
        Poly g = Poly::gcd(num_, den_);
        if (g.degree() > 0) {
            Poly q, r;
            Poly::divmod(num_, g, q, r);
            num_ = q;
            Poly::divmod(den_, g, q, r);
            den_ = q;
        }
        Rat lead = den_.leading();
        if (lead != Rat(1)) {
            Rat inv = Rat(1) / lead;
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }

public:
    RatFunc() : num_(), den_(Rat(1)) {}
    RatFunc(const Rat& c) : num_(c), den_(Rat(1)) {}  // NOLINT: scalars embed
    RatFunc(Poly n) : num_(std::move(n)), den_(Rat(1)) {}
    RatFunc(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    static RatFunc t() { return RatFunc(Poly::variable()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero_fn() const { return num_.is_zero_poly(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero_fn()) throw DegeneracyError("division by zero rational function");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc operator-() const {
        RatFunc out;
        out.num_ = -num_;
        out.den_ = den_;
        return out;
    }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;  // canonical forms
    }

    RatFunc inverse() const {
        if (is_zero_fn()) throw DegeneracyError("inverse of zero rational function");
        return RatFunc(den_, num_);
    }

    /** ord_0: order of vanishing at 0 (negative = pole). Zero reports sentinel. */
    int order_at_zero() const {
        if (is_zero_fn()) return 1 << 20;
        return num_.order_at_zero() - den_.order_at_zero();
    }

    /** Power-series coefficients at 0, orders 0..order inclusive.
     *  Throws DegeneracyError when the function has a pole at 0. */
    std::vector<Rat> series(int order) const {
        std::vector<Rat> out(static_cast<size_t>(order) + 1, Rat(0));
        if (is_zero_fn()) return out;
        int a = num_.order_at_zero();
        int b = den_.order_at_zero();
        if (a - b < 0)
            throw DegeneracyError("pole at t = 0 of order " + std::to_string(b - a));
        // strip t^b from both, then divide unit power series
        std::vector<Rat> n(static_cast<size_t>(order) + 1, Rat(0));
        std::vector<Rat> d(static_cast<size_t>(order) + 1, Rat(0));
        for (int k = 0; k <= order; ++k) {
            n[static_cast<size_t>(k)] = num_.coeff(k + b);
            d[static_cast<size_t>(k)] = den_.coeff(k + b);
        }
        Rat d0inv = Rat(1) / d[0];
        for (int k = 0; k <= order; ++k) {
            Rat acc = n[static_cast<size_t>(k)];
            for (int j = 0; j < k; ++j) acc -= out[static_cast<size_t>(j)] * d[static_cast<size_t>(k - j)];
            out[static_cast<size_t>(k)] = acc * d0inv;
        }
        return out;
    }

    std::string str(const std::string& var = "t") const {
        if (den_.degree() == 0) return num_.str(var);
        return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
    }
};

/** Scalar field of the deformed pairing: exact rational functions in t. */
using ScalarQt = RatFunc;

/** Sparse multivariate polynomial over Rat with a fixed variable count.
 *  Used for symbolic pairing determinants in the weight coordinates. */
class MultiPoly {
    int nvars_;
    std::map<std::vector<int>, Rat> terms_;  // exponent vector -> coefficient

    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (is_zero(it->second))
                it = terms_.erase(it);
            else
                ++it;
        }
    }

public:
    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, const Rat& c) {
        MultiPoly p(nvars);
        if (!is_zero(c)) p.terms_[std::vector<int>(static_cast<size_t>(nvars), 0)] = c;
        return p;
    }
    static MultiPoly variable(int nvars, int i) {
        MultiPoly p(nvars);
        std::vector<int> e(static_cast<size_t>(nvars), 0);
        e[static_cast<size_t>(i)] = 1;
        p.terms_[e] = Rat(1);
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero_poly() const { return terms_.empty(); }
    const std::map<std::vector<int>, Rat>& terms() const { return terms_; }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly out(a);
        for (const auto& [e, c] : b.terms_) out.terms_[e] += c;
        out.prune();
        return out;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly out(a);
        for (const auto& [e, c] : b.terms_) out.terms_[e] -= c;
        out.prune();
        return out;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly out(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                std::vector<int> e(ea);
                for (size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
                out.terms_[e] += ca * cb;
            }
        out.prune();
        return out;
    }
    friend MultiPoly operator*(const Rat& s, const MultiPoly& a) {
        MultiPoly out(a);
        for (auto& [e, c] : out.terms_) c *= s;
        out.prune();
        return out;
    }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    Rat eval(const std::vector<Rat>& x) const {
        Rat acc(0);
        for (const auto& [e, c] : terms_) {
            Rat term = c;
            for (size_t k = 0; k < e.size(); ++k)
                for (int p = 0; p < e[k]; ++p) term *= x[k];
            acc += term;
        }
        return acc;
    }

    std::string str(const std::string& stem = "v") const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += rat_str(c);
            for (size_t k = 0; k < e.size(); ++k) {
                if (e[k] == 0) continue;
                out += "*" + stem + std::to_string(k + 1);
                if (e[k] > 1) out += "^" + std::to_string(e[k]);
            }
        }
        return out;
    }
};

/** Cofactor-expansion determinant: division-free, fine for the small symbolic
 *  blocks where this is used. */
inline MultiPoly det_cofactor(const std::vector<std::vector<MultiPoly>>& m) {
    size_t n = m.size();
    if (n == 0) throw InternalError("determinant of empty matrix");
    if (n == 1) return m[0][0];
    MultiPoly acc(m[0][0].nvars());
    std::vector<std::vector<MultiPoly>> minor_mat;
    for (size_t j = 0; j < n; ++j) {
        minor_mat.clear();
        for (size_t r = 1; r < n; ++r) {
            std::vector<MultiPoly> row;
            for (size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor_mat.push_back(std::move(row));
        }
        MultiPoly contrib = m[0][j] * det_cofactor(minor_mat);
        if (j % 2 == 0)
            acc = acc + contrib;
        else
            acc = acc - contrib;
    }
    return acc;
}

}  // namespace orbitstar
