#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "orbitstar/split.hpp"

namespace orbitstar {

/** PBW monomial: slot letters in weakly increasing order. */
using Word = std::vector<int>;

/** Element of the enveloping algebra: normal-ordered monomial -> coefficient. */
using UeaElement = std::map<Word, Rat>;

inline UeaElement uea_one() { return UeaElement{{Word{}, Rat(1)}}; }

inline void uea_add_into(UeaElement& acc, const Word& w, const Rat& c) {
    if (is_zero(c)) return;
    auto it = acc.find(w);
    if (it == acc.end()) {
        acc.emplace(w, c);
        return;
    }
    it->second += c;
    if (is_zero(it->second)) acc.erase(it);
}

inline UeaElement uea_add(const UeaElement& a, const UeaElement& b) {
    UeaElement out(a);
    for (const auto& [w, c] : b) uea_add_into(out, w, c);
    return out;
}

inline UeaElement uea_scale(const Rat& c, const UeaElement& a) {
    UeaElement out;
    if (is_zero(c)) return out;
    for (const auto& [w, x] : a) out.emplace(w, Rat(c * x));
    return out;
}

/** Rewriting context for U(g) over a split's slot alphabet.
 *
 *  normal_form rewrites an arbitrary word to the PBW basis by resolving one
 *  adjacent inversion at a time: x_a x_b = x_b x_a + [x_a, x_b] for a > b.
 *  Strategy picks which inversion (leftmost or rightmost) is resolved first;
 *  both must agree (tested), the default is leftmost. Results are memoized
 *  per word; the cache is insert-only. */
class Uea {
public:
    enum Strategy { kLeftmost = 0, kRightmost = 1 };

    explicit Uea(const LeviSplit* sp) : sp_(sp) {}

    const LeviSplit& split() const { return *sp_; }

    const UeaElement& normal_form(const Word& w, Strategy strat = kLeftmost) {
        auto& cache = cache_[strat];
        auto it = cache.find(w);
        if (it != cache.end()) return it->second;
        UeaElement out;
        int pos = -1;
        if (strat == kLeftmost) {
            for (size_t i = 0; i + 1 < w.size(); ++i)
                if (w[i] > w[i + 1]) {
                    pos = static_cast<int>(i);
                    break;
                }
        } else {
            for (size_t i = w.size(); i >= 2; --i)
                if (w[i - 2] > w[i - 1]) {
                    pos = static_cast<int>(i - 2);
                    break;
                }
        }
        if (pos < 0) {
            out.emplace(w, Rat(1));
        } else {
            size_t i = static_cast<size_t>(pos);
            Word swapped(w);
            std::swap(swapped[i], swapped[i + 1]);
            out = normal_form(swapped, strat);
            const std::map<int, Rat>& br = sp_->slot_bracket(w[i], w[i + 1]);
            if (!br.empty()) {
                Word contracted;
                contracted.reserve(w.size() - 1);
                contracted.insert(contracted.end(), w.begin(), w.begin() + static_cast<long>(i));
                contracted.push_back(0);  // placeholder for the bracket letter
                contracted.insert(contracted.end(), w.begin() + static_cast<long>(i) + 2, w.end());
                for (const auto& [slot, c] : br) {
                    contracted[i] = slot;
                    for (const auto& [wo, co] : normal_form(contracted, strat)) uea_add_into(out, wo, Rat(c * co));
                }
            }
        }
        auto [ins, _] = cache.emplace(w, std::move(out));
        return ins->second;
    }

    UeaElement from_word(const Word& w, const Rat& c = Rat(1), Strategy strat = kLeftmost) {
        return uea_scale(c, normal_form(w, strat));
    }

    UeaElement mul(const UeaElement& a, const UeaElement& b, Strategy strat = kLeftmost) {
        UeaElement out;
        for (const auto& [wa, ca] : a)
            for (const auto& [wb, cb] : b) {
                Word w(wa);
                w.insert(w.end(), wb.begin(), wb.end());
                for (const auto& [wo, co] : normal_form(w, strat)) uea_add_into(out, wo, Rat(ca * cb * co));
            }
        return out;
    }

    /** phi: the U(h)-component of a normal-ordered element (kills every
     *  monomial containing an n_- or n_+ letter). */
    UeaElement hc_project(const UeaElement& u) const {
        UeaElement out;
        for (const auto& [w, c] : u) {
            bool pure = true;
            for (int s : w) pure = pure && sp_->block[static_cast<size_t>(s)] == LeviSplit::kLev;
            if (pure) out.emplace(w, c);
        }
        return out;
    }

    /** Antipode: S = -1 on letters, anti-homomorphism, re-normal-ordered. */
    UeaElement antipode(const UeaElement& u, Strategy strat = kLeftmost) {
        UeaElement out;
        for (const auto& [w, c] : u) {
            Word rev(w.rbegin(), w.rend());
            Rat sign = (w.size() % 2 == 0) ? c : Rat(-c);
            for (const auto& [wo, co] : normal_form(rev, strat)) uea_add_into(out, wo, Rat(sign * co));
        }
        return out;
    }

    /** Signed root-lattice degree of a monomial. */
    DegreeVec grade(const Word& w) const {
        DegreeVec d(static_cast<size_t>(sp_->cb.rs.rank), 0);
        for (int s : w) {
            const DegreeVec& sd = sp_->slot_degree(s);
            for (size_t i = 0; i < d.size(); ++i) d[i] += sd[i];
        }
        return d;
    }

    /** Evaluates the character on a U(h) element: product over letters of the
     *  supplied per-slot values (monomials with h-root-vector letters die via
     *  the zero value). K: commutative ring with +, *, and Rat * K. */
    template <class K>
    K char_eval(const UeaElement& u, const std::vector<K>& slot_values, const K& zero, const K& unit) const {
        K acc = zero;
        for (const auto& [w, c] : u) {
            K term = unit;
            for (int s : w) {
                if (sp_->block[static_cast<size_t>(s)] != LeviSplit::kLev)
                    throw InternalError("character evaluation on a non-centralizer letter");
                term = term * slot_values[static_cast<size_t>(s)];
            }
            acc = acc + c * term;
        }
        return acc;
    }

    std::string render(const UeaElement& u) const {
        if (u.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [w, c] : u) {
            if (!first) out += " + ";
            first = false;
            out += rat_str(c);
            for (int s : w) out += " " + sp_->slot_name(s);
        }
        return out;
    }

private:
    const LeviSplit* sp_;
    std::map<Word, UeaElement> cache_[2];
};

}  // namespace orbitstar
