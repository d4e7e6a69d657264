#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "orbitstar/rootsystem.hpp"

namespace orbitstar {

/** Sparse element of the Lie algebra in the Chevalley basis (index -> coeff). */
using AlgElt = std::map<int, Rat>;

inline AlgElt elt_add(const AlgElt& a, const AlgElt& b) {
    AlgElt out(a);
    for (const auto& [i, c] : b) {
        Rat s = out.count(i) ? Rat(out[i] + c) : c;
        if (is_zero(s))
            out.erase(i);
        else
            out[i] = s;
    }
    return out;
}

inline AlgElt elt_scale(const Rat& c, const AlgElt& a) {
    AlgElt out;
    if (is_zero(c)) return out;
    for (const auto& [i, x] : a) out[i] = Rat(c * x);
    return out;
}

/** Chevalley basis of the simple algebra over its root system.
 *
 *  Basis layout: indices [0, npos) are the negative root vectors f_i (root
 *  -beta_i), [npos, npos+rank) the Cartan h_j, [npos+rank, 2*npos+rank) the
 *  positive root vectors e_i. Structure constants are exact rationals; the
 *  pair constants follow the extraspecial-pair normalization, so every
 *  N_{a,b} is an integer +-(p+1) and Jacobi holds identically. */
class ChevalleyBasis {
public:
    RootSystem rs;
    int dim = 0;

    int f_index(int i) const { return i; }
    int h_index(int j) const { return rs.npos() + j; }
    int e_index(int i) const { return rs.npos() + rs.rank + i; }
    bool is_f(int k) const { return k < rs.npos(); }
    bool is_h(int k) const { return k >= rs.npos() && k < rs.npos() + rs.rank; }
    bool is_e(int k) const { return k >= rs.npos() + rs.rank; }
    int root_of_f(int k) const { return k; }
    int cartan_of_h(int k) const { return k - rs.npos(); }
    int root_of_e(int k) const { return k - rs.npos() - rs.rank; }

    /** Weight of a basis vector in simple-root coordinates (0 on the Cartan). */
    Weight weight_of(int k) const {
        Weight w(static_cast<size_t>(rs.rank), Rat(0));
        if (is_f(k)) w = w_scale(Rat(-1), to_weight(rs.root(root_of_f(k))));
        if (is_e(k)) w = to_weight(rs.root(root_of_e(k)));
        return w;
    }

    std::string basis_name(int k) const {
        auto coords = [&](const DegreeVec& d) {
            std::string s = "[";
            for (size_t i = 0; i < d.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(d[i]);
            }
            return s + "]";
        };
        if (is_f(k)) return "f" + coords(rs.root(root_of_f(k)));
        if (is_h(k)) return "h" + std::to_string(cartan_of_h(k) + 1);
        return "e" + coords(rs.root(root_of_e(k)));
    }

    /** Bracket of basis vectors, as a sparse element. */
    const AlgElt& basis_bracket(int a, int b) const {
        return bkt_[static_cast<size_t>(a)][static_cast<size_t>(b)];
    }

    AlgElt bracket(const AlgElt& x, const AlgElt& y) const {
        AlgElt out;
        for (const auto& [a, ca] : x)
            for (const auto& [b, cb] : y) out = elt_add(out, elt_scale(Rat(ca * cb), basis_bracket(a, b)));
        return out;
    }

    /** Killing form on basis vectors. */
    const Rat& killing(int a, int b) const {
        return killing_[static_cast<size_t>(a)][static_cast<size_t>(b)];
    }

    Rat killing_form(const AlgElt& x, const AlgElt& y) const {
        Rat acc(0);
        for (const auto& [a, ca] : x)
            for (const auto& [b, cb] : y) acc += ca * cb * killing(a, b);
        return acc;
    }

    /** Pair constant N for signed roots, reduced to the positive-pair table.
     *  Signed root code: s in [0, npos) is +beta_s, s in [npos, 2 npos) is
     *  -beta_{s - npos}. Returns 0 when the sum is not a root. */
    Rat pair_constant(int sa, int sb) const {
        int n = rs.npos();
        bool na = sa >= n, nb = sb >= n;
        int ia = na ? sa - n : sa, ib = nb ? sb - n : sb;
        DegreeVec sum(static_cast<size_t>(rs.rank), 0);
        for (int i = 0; i < rs.rank; ++i)
            sum[static_cast<size_t>(i)] = (na ? -1 : 1) * rs.root(ia)[static_cast<size_t>(i)] +
                                          (nb ? -1 : 1) * rs.root(ib)[static_cast<size_t>(i)];
        DegreeVec neg(sum);
        for (int& x : neg) x = -x;
        bool sum_pos = rs.is_pos_root(sum), sum_neg = rs.is_pos_root(neg);
        if (!sum_pos && !sum_neg) return Rat(0);
        if (!na && !nb) {
            auto it = npos_.find({ia, ib});
            return it == npos_.end() ? Rat(0) : it->second;
        }
        if (na && nb) return -pair_constant(ia, ib);
        if (!na && nb) return -pair_constant(sb, sa);
        // sa negative, sb positive; rotate the cyclic identity toward a
        // same-sign pair: for A + B + C = 0, N_{A,B}/<C,C> = N_{B,C}/<A,A>
        // = N_{C,A}/<B,B>.
        Rat qa = sq_len(ia), qb = sq_len(ib);
        if (sum_pos) {
            int c = n + rs.pos_index.at(sum);  // C = -(A+B) negative
            return pair_constant(c, sa) * sum_sq(sum) / qb;
        }
        int c = rs.pos_index.at(neg);  // C positive
        return pair_constant(sb, c) * sum_sq(neg) / qa;
    }

    Rat sq_len(int pos_idx) const {
        Weight w = to_weight(rs.root(pos_idx));
        return rs.pairing(w, w);
    }

    Rat sum_sq(const DegreeVec& d) const {
        Weight w = to_weight(d);
        return rs.pairing(w, w);
    }

    /** Coroot of positive root i as coefficients over the Cartan basis. */
    std::vector<Rat> coroot(int i) const {
        const DegreeVec& g = rs.root(i);
        Rat half = sq_len(i) / Rat(2);
        std::vector<Rat> out(static_cast<size_t>(rs.rank));
        for (int j = 0; j < rs.rank; ++j)
            out[static_cast<size_t>(j)] =
                Rat(g[static_cast<size_t>(j)]) * rs.half_sq[static_cast<size_t>(j)] / half;
        return out;
    }

    void set_tables(std::map<std::pair<int, int>, Rat> npos,
                    std::vector<std::vector<AlgElt>> bkt,
                    std::vector<std::vector<Rat>> killing) {
        npos_ = std::move(npos);
        bkt_ = std::move(bkt);
        killing_ = std::move(killing);
    }

private:
    std::map<std::pair<int, int>, Rat> npos_;  // positive-pair constants, both orders
    std::vector<std::vector<AlgElt>> bkt_;
    std::vector<std::vector<Rat>> killing_;
};

/** Checks [[x,y],z] + [[y,z],x] + [[z,x],y] = 0 on basis triples.
 *  Exhaustive for dim <= 150, seeded random sample otherwise. */
inline void validate_jacobi(const ChevalleyBasis& cb) {
    auto check = [&](int i, int j, int k) {
        AlgElt acc = cb.bracket(cb.basis_bracket(i, j), AlgElt{{k, Rat(1)}});
        acc = elt_add(acc, cb.bracket(cb.basis_bracket(j, k), AlgElt{{i, Rat(1)}}));
        acc = elt_add(acc, cb.bracket(cb.basis_bracket(k, i), AlgElt{{j, Rat(1)}}));
        if (!acc.empty())
            throw InternalError("Jacobi identity failed on basis triple " + cb.basis_name(i) + ", " +
                                cb.basis_name(j) + ", " + cb.basis_name(k));
    };
    if (cb.dim <= 150) {
        for (int i = 0; i < cb.dim; ++i)
            for (int j = i + 1; j < cb.dim; ++j)
                for (int k = j + 1; k < cb.dim; ++k) check(i, j, k);
        return;
    }
    SeededRng rng(0x6a636f62);
    for (int trial = 0; trial < 20000; ++trial) {
        int i = static_cast<int>(rng.pick(0, cb.dim - 1));
        int j = static_cast<int>(rng.pick(0, cb.dim - 1));
        int k = static_cast<int>(rng.pick(0, cb.dim - 1));
        check(i, j, k);
    }
}

/** Builds the Chevalley basis over a root system.
 *
 *  Positive-pair constants are produced by height induction: the
 *  extraspecial pair of each non-simple root gets +(p+1), the remaining
 *  special pairs are forced by the Jacobi identity against that pair, and
 *  signed pairs reduce through antisymmetry, N_{-a,-b} = -N_{a,b}, and the
 *  length-weighted cyclic identity. */
inline ChevalleyBasis build_chevalley_basis(const RootSystem& rs) {
    ChevalleyBasis cb;
    cb.rs = rs;
    int n = rs.npos();
    cb.dim = 2 * n + rs.rank;

    std::map<std::pair<int, int>, Rat> npos;
    auto is_any_root = [&](const DegreeVec& d) {
        if (rs.is_pos_root(d)) return true;
        DegreeVec neg(d);
        for (int& x : neg) x = -x;
        return rs.is_pos_root(neg);
    };
    auto chain_p = [&](int a, int b) {
        int p = 0;
        while (true) {
            DegreeVec d(rs.root(b));
            for (int i = 0; i < rs.rank; ++i)
                d[static_cast<size_t>(i)] -= (p + 1) * rs.root(a)[static_cast<size_t>(i)];
            bool zero = true;
            for (int x : d) zero = zero && x == 0;
            if (zero || !is_any_root(d)) break;
            ++p;
        }
        return p;
    };

    // interim view with the tables filled so far, for pair_constant recursion
    auto interim = [&]() {
        ChevalleyBasis view;
        view.rs = rs;
        view.dim = cb.dim;
        view.set_tables(npos, {}, {});
        return view;
    };

    for (int gi = 0; gi < n; ++gi) {
        if (rs.root_height(gi) < 2) continue;
        const DegreeVec& g = rs.root(gi);
        std::vector<std::pair<int, int>> special;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                bool match = true;
                for (int i = 0; i < rs.rank; ++i)
                    match = match && rs.root(a)[static_cast<size_t>(i)] + rs.root(b)[static_cast<size_t>(i)] ==
                                         g[static_cast<size_t>(i)];
                if (match) special.emplace_back(a, b);
            }
        if (special.empty()) throw InternalError("non-simple root with no special pair");
        auto [a1, b1] = special.front();  // minimal first component = extraspecial
        Rat val(chain_p(a1, b1) + 1);
        npos[{a1, b1}] = val;
        npos[{b1, a1}] = -val;
        if (special.size() > 1) {
            ChevalleyBasis view = interim();
            auto as_signed = [&](const DegreeVec& d) -> int {
                if (rs.is_pos_root(d)) return rs.pos_index.at(d);
                DegreeVec m(d);
                for (int& x : m) x = -x;
                if (rs.is_pos_root(m)) return n + rs.pos_index.at(m);
                return -1;
            };
            auto vsub = [&](const DegreeVec& u, const DegreeVec& v) {
                DegreeVec d(u);
                for (size_t i = 0; i < d.size(); ++i) d[i] -= v[i];
                return d;
            };
            auto ngen = [&](const DegreeVec& u, const DegreeVec& v) -> Rat {
                int su = as_signed(u), sv = as_signed(v);
                if (su < 0 || sv < 0) return Rat(0);
                return view.pair_constant(su, sv);
            };
            DegreeVec v1 = rs.root(a1);
            DegreeVec neg1(v1);
            for (int& x : neg1) x = -x;
            for (size_t s = 1; s < special.size(); ++s) {
                auto [a, b] = special[s];
                const DegreeVec& va = rs.root(a);
                const DegreeVec& vb = rs.root(b);
                Rat t1 = ngen(neg1, va) * ngen(vsub(va, v1), vb);
                Rat t2 = ngen(vb, neg1) * ngen(vsub(vb, v1), va);
                Rat denom = ngen(g, neg1);
                if (is_zero(denom)) throw InternalError("extraspecial reduction hit a zero constant");
                Rat nv = Rat(-(t1 + t2) / denom);
                npos[{a, b}] = nv;
                npos[{b, a}] = -nv;
            }
        }
    }
    cb.set_tables(npos, {}, {});

    // full bracket table
    std::vector<std::vector<AlgElt>> bkt(static_cast<size_t>(cb.dim),
                                         std::vector<AlgElt>(static_cast<size_t>(cb.dim)));
    auto signed_code = [&](int root_idx, bool negv) { return negv ? n + root_idx : root_idx; };
    auto root_vector_index = [&](const DegreeVec& d) {
        if (rs.is_pos_root(d)) return cb.e_index(rs.pos_index.at(d));
        DegreeVec neg(d);
        for (int& x : neg) x = -x;
        return cb.f_index(rs.pos_index.at(neg));
    };
    for (int x = 0; x < cb.dim; ++x) {
        for (int y = x + 1; y < cb.dim; ++y) {
            AlgElt out;
            bool xr = !cb.is_h(x), yr = !cb.is_h(y);
            if (!xr && !yr) {
                // Cartan is abelian
            } else if (!xr || !yr) {
                int hidx = cb.is_h(x) ? x : y;
                int ridx = cb.is_h(x) ? y : x;
                Rat c = rs.pair_coroot(cb.weight_of(ridx), cb.cartan_of_h(hidx));
                if (!is_zero(c)) out[ridx] = cb.is_h(x) ? c : Rat(-c);
            } else {
                bool xneg = cb.is_f(x), yneg = cb.is_f(y);
                int xa = xneg ? cb.root_of_f(x) : cb.root_of_e(x);
                int ya = yneg ? cb.root_of_f(y) : cb.root_of_e(y);
                if (xneg != yneg && xa == ya) {
                    std::vector<Rat> co = cb.coroot(xa);
                    Rat sign = xneg ? Rat(-1) : Rat(1);  // [e_a, f_a] = h_a
                    for (int j = 0; j < rs.rank; ++j)
                        if (!is_zero(co[static_cast<size_t>(j)]))
                            out[cb.h_index(j)] = Rat(sign * co[static_cast<size_t>(j)]);
                } else {
                    DegreeVec sum(static_cast<size_t>(rs.rank), 0);
                    for (int i = 0; i < rs.rank; ++i)
                        sum[static_cast<size_t>(i)] = (xneg ? -1 : 1) * rs.root(xa)[static_cast<size_t>(i)] +
                                                      (yneg ? -1 : 1) * rs.root(ya)[static_cast<size_t>(i)];
                    if (is_any_root(sum)) {
                        Rat c = cb.pair_constant(signed_code(xa, xneg), signed_code(ya, yneg));
                        if (!is_zero(c)) out[root_vector_index(sum)] = c;
                    }
                }
            }
            bkt[static_cast<size_t>(x)][static_cast<size_t>(y)] = out;
            bkt[static_cast<size_t>(y)][static_cast<size_t>(x)] = elt_scale(Rat(-1), out);
        }
    }

    // Killing form from the bracket table: K(x,y) = tr(ad x ad y)
    std::vector<std::vector<Rat>> kil(static_cast<size_t>(cb.dim),
                                      std::vector<Rat>(static_cast<size_t>(cb.dim), Rat(0)));
    for (int x = 0; x < cb.dim; ++x)
        for (int y = x; y < cb.dim; ++y) {
            Rat acc(0);
            for (int z = 0; z < cb.dim; ++z) {
                const AlgElt& yz = bkt[static_cast<size_t>(y)][static_cast<size_t>(z)];
                for (const auto& [w, cw] : yz) {
                    const AlgElt& xw = bkt[static_cast<size_t>(x)][static_cast<size_t>(w)];
                    auto it = xw.find(z);
                    if (it != xw.end()) acc += cw * it->second;
                }
            }
            kil[static_cast<size_t>(x)][static_cast<size_t>(y)] = acc;
            kil[static_cast<size_t>(y)][static_cast<size_t>(x)] = acc;
        }

    cb.set_tables(std::move(npos), std::move(bkt), std::move(kil));
    validate_jacobi(cb);
    return cb;
}

}  // namespace orbitstar
