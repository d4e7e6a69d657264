#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "orbitstar/pbw.hpp"
#include "orbitstar/polynomial.hpp"

namespace orbitstar {

enum class PairingMode { kPlain, kLambdaOverT };

/** Per-slot character values for the two pairing modes. */
inline std::vector<ScalarQt> pairing_slot_values(const LeviSplit& sp, PairingMode mode) {
    std::vector<ScalarQt> vals(static_cast<size_t>(sp.nslots()), ScalarQt(Rat(0)));
    for (int s = 0; s < sp.nslots(); ++s) {
        Rat v = sp.lambda_of_slot(s);
        if (is_zero(v)) continue;
        if (mode == PairingMode::kPlain)
            vals[static_cast<size_t>(s)] = ScalarQt(v);
        else
            vals[static_cast<size_t>(s)] = ScalarQt(Poly(v), Poly::variable());
    }
    return vals;
}

/** PBW words of fixed root-lattice degree mu on both sides of the pairing:
 *  rows in U(n_-) (ascending f slots), columns in U(n_+) (ascending e slots).
 *  Both enumerate the multisets of split positive roots summing to mu, so the
 *  two lists always have equal length. */
inline void degree_basis(const LeviSplit& sp, const DegreeVec& mu, std::vector<Word>& rows, std::vector<Word>& cols) {
    rows.clear();
    cols.clear();
    size_t k = sp.delta_plus.size();
    Word fw, ew;
    DegreeVec rem(mu);
    std::function<void(size_t)> dfs = [&](size_t idx) {
        if (idx == k) {
            for (int x : rem)
                if (x != 0) return;
            rows.push_back(fw);
            cols.push_back(ew);
            return;
        }
        int ri = sp.delta_plus[idx];
        const DegreeVec& r = sp.cb.rs.root(ri);
        // multiplicity 0 first (skip this root), then grow while it fits
        dfs(idx + 1);
        int used = 0;
        while (true) {
            bool fits = true;
            for (size_t c = 0; c < rem.size(); ++c) fits = fits && rem[c] >= r[c];
            if (!fits) break;
            for (size_t c = 0; c < rem.size(); ++c) rem[c] -= r[c];
            fw.push_back(sp.neg_slot_of_root(ri));
            ew.push_back(sp.pos_slot_of_root(ri));
            ++used;
            dfs(idx + 1);
        }
        for (int u = 0; u < used; ++u) {
            for (size_t c = 0; c < rem.size(); ++c) rem[c] += r[c];
            fw.pop_back();
            ew.pop_back();
        }
    };
    dfs(0);
    // dfs pushed pairs in lockstep; sort both by the row word for determinism
    std::vector<size_t> perm(rows.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) { return rows[a] < rows[b]; });
    std::vector<Word> r2, c2;
    for (size_t i : perm) {
        r2.push_back(rows[i]);
        c2.push_back(cols[i]);
    }
    rows = std::move(r2);
    cols = std::move(c2);
}

/** <x, y> = chi(phi(S(y) x)) for one (row, col) pair, over any coefficient
 *  ring K; the product S(y) x is built one letter at a time so rewriting stays
 *  local. sign(S) = (-1)^len(y). */
template <class K>
K pairing_entry(Uea& U, const Word& row, const Word& col, const std::vector<K>& slot_values, const K& zero,
                const K& unit) {
    UeaElement acc{{row, Rat(1)}};
    for (int s : col) {
        UeaElement letter{{Word{s}, Rat(1)}};
        acc = U.mul(letter, acc);
    }
    UeaElement ph = U.hc_project(acc);
    K val = U.char_eval(ph, slot_values, zero, unit);
    if (col.size() % 2 == 1) val = zero - val;
    return val;
}

/** Gram block of the pairing at degree mu, with its exact inverse. */
struct ShapovalovBlock {
    DegreeVec mu;
    int height = 0;
    PairingMode mode = PairingMode::kLambdaOverT;
    std::vector<Word> rows;                      // x_i in U(n_-)
    std::vector<Word> cols;                      // y_j in U(n_+)
    std::vector<std::vector<ScalarQt>> entries;  // entries[i][j] = <x_i, y_j>
    std::vector<std::vector<ScalarQt>> inverse;

    int size() const { return static_cast<int>(rows.size()); }
};

inline std::string degree_str(const DegreeVec& mu) {
    std::string out = "[";
    for (size_t i = 0; i < mu.size(); ++i) out += (i ? "," : "") + std::to_string(mu[i]);
    return out + "]";
}

/** Builds the degree-mu block. Unreachable mu gives the empty (0 x 0) block;
 *  a singular Gram matrix raises DegeneracyError naming the degree. */
inline ShapovalovBlock shapovalov_block(Uea& U, const DegreeVec& mu, PairingMode mode) {
    const LeviSplit& sp = U.split();
    ShapovalovBlock blk;
    blk.mu = mu;
    blk.height = height(mu);
    blk.mode = mode;
    degree_basis(sp, mu, blk.rows, blk.cols);
    size_t n = blk.rows.size();
    std::vector<ScalarQt> vals = pairing_slot_values(sp, mode);
    ScalarQt zero{Rat(0)}, unit{Rat(1)};
    blk.entries.assign(n, std::vector<ScalarQt>(n, zero));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            blk.entries[i][j] = pairing_entry(U, blk.rows[i], blk.cols[j], vals, zero, unit);
    if (n > 0) {
        try {
            blk.inverse = matrix_inverse(blk.entries);
        } catch (const DegeneracyError&) {
            throw DegeneracyError("singular pairing block at degree " + degree_str(mu));
        }
        // exact arithmetic: P P^{-1} = I must hold on the nose
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                ScalarQt acc{Rat(0)};
                for (size_t k = 0; k < n; ++k) acc = acc + blk.entries[i][k] * blk.inverse[k][j];
                if (!(acc == (i == j ? unit : zero))) throw InternalError("block inverse check failed");
            }
    }
    return blk;
}

/** Symbolic Gram determinant at degree mu: a polynomial in the character
 *  coordinates v_1..v_rank (values on the simple coroots), computed in the
 *  plain pairing. Intended for the unscaled basis, where entries stay
 *  polynomial; the vanishing locus flags degenerate characters. */
inline MultiPoly block_determinant(Uea& U, const DegreeVec& mu) {
    const LeviSplit& sp = U.split();
    int nv = sp.cb.rs.rank;
    std::vector<Word> rows, cols;
    degree_basis(sp, mu, rows, cols);
    MultiPoly zero(nv), unit = MultiPoly::constant(nv, Rat(1));
    std::vector<MultiPoly> vals(static_cast<size_t>(sp.nslots()), zero);
    for (int s = 0; s < sp.nslots(); ++s) {
        int b = sp.basis_of_slot(s);
        if (sp.cb.is_h(b)) vals[static_cast<size_t>(s)] = MultiPoly::variable(nv, sp.cb.cartan_of_h(b));
    }
    size_t n = rows.size();
    if (n == 0) return unit;  // empty block: det of nothing
    std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>(n, zero));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m[i][j] = pairing_entry(U, rows[i], cols[j], vals, zero, unit);
    return det_cofactor(m);
}

/** The inverse element as a finite two-sided tensor: all degrees of height
 *  <= cutoff. Coefficient of x_i (x) y_j at degree mu is (G_mu^{-1})_{ji}. */
struct TwoTensor {
    const LeviSplit* sp = nullptr;
    int cutoff = 0;
    std::map<DegreeVec, ShapovalovBlock> blocks;              // every reachable mu, height <= cutoff
    std::map<std::pair<Word, Word>, ScalarQt> terms;          // includes the 1 (x) 1 term

    struct BlockStat {
        DegreeVec mu;
        int height = 0;
        int size = 0;
        int min_order = 0;        // min ord_t over nonzero inverse entries
        bool meets_height_order = true;  // min_order >= height(mu)
    };
    std::vector<BlockStat> stats;
};

using BlockLoad = std::function<bool(const DegreeVec&, ShapovalovBlock&)>;
using BlockStore = std::function<void(const ShapovalovBlock&)>;

/** Enumerates every degree reachable from the split positive roots with
 *  height <= cutoff (excluding 0), ascending by (height, lex). */
inline std::vector<DegreeVec> reachable_degrees(const LeviSplit& sp, int cutoff) {
    std::map<DegreeVec, int> seen;  // degree -> height
    std::vector<DegreeVec> frontier{DegreeVec(static_cast<size_t>(sp.cb.rs.rank), 0)};
    seen[frontier[0]] = 0;
    size_t head = 0;
    while (head < frontier.size()) {
        DegreeVec cur = frontier[head++];
        int h = seen[cur];
        for (int ri : sp.delta_plus) {
            const DegreeVec& r = sp.cb.rs.root(ri);
            int nh = h + sp.cb.rs.root_height(ri);
            if (nh > cutoff) continue;
            DegreeVec nxt(cur);
            for (size_t c = 0; c < nxt.size(); ++c) nxt[c] += r[c];
            if (seen.emplace(nxt, nh).second) frontier.push_back(nxt);
        }
    }
    std::vector<DegreeVec> out;
    for (const auto& [d, h] : seen)
        if (h > 0) out.push_back(d);
    std::sort(out.begin(), out.end(), [&](const DegreeVec& a, const DegreeVec& b) {
        int ha = height(a), hb = height(b);
        return ha != hb ? ha < hb : a < b;
    });
    return out;
}

/** Builds the inverse element through degree height <= cutoff in the deformed
 *  pairing. Every inverse entry must vanish at t = 0 to order at least the
 *  longer of the two monomial lengths; that bound is what makes the t-power
 *  series of the element well defined, so it is enforced hard here. */
inline TwoTensor compute_B(Uea& U, int cutoff, const BlockLoad& load = {}, const BlockStore& store = {}) {
    const LeviSplit& sp = U.split();
    TwoTensor B;
    B.sp = &sp;
    B.cutoff = cutoff;
    B.terms[{Word{}, Word{}}] = ScalarQt(Rat(1));
    for (const DegreeVec& mu : reachable_degrees(sp, cutoff)) {
        ShapovalovBlock blk;
        bool hit = load && load(mu, blk);
        if (!hit) {
            blk = shapovalov_block(U, mu, PairingMode::kLambdaOverT);
            if (store) store(blk);
        }
        TwoTensor::BlockStat st;
        st.mu = mu;
        st.height = height(mu);
        st.size = blk.size();
        st.min_order = 1 << 20;
        size_t n = blk.rows.size();
        for (size_t j = 0; j < n; ++j)
            for (size_t i = 0; i < n; ++i) {
                const ScalarQt& c = blk.inverse[j][i];
                if (c.is_zero_fn()) continue;
                int ord = c.order_at_zero();
                int need = static_cast<int>(std::max(blk.rows[i].size(), blk.cols[j].size()));
                if (ord < need)
                    throw InternalError("inverse entry at degree " + degree_str(mu) + " has t-order " +
                                        std::to_string(ord) + " < word length " + std::to_string(need));
                st.min_order = std::min(st.min_order, ord);
                B.terms[{blk.rows[i], blk.cols[j]}] = c;
            }
        st.meets_height_order = st.min_order >= st.height;
        B.stats.push_back(st);
        B.blocks.emplace(mu, std::move(blk));
    }
    return B;
}

/** Power-series table of the element in t.
 *
 *  Orders up to floor(cutoff / max split height) are complete: a term of
 *  t-order k has monomial length <= k on each side, and a length-k monomial
 *  reaches height at most k * H, so every contributing degree was computed.
 *  Higher orders would silently miss terms, hence the guard. */
struct BSeries {
    int order = 0;
    std::map<std::pair<Word, Word>, std::vector<Rat>> coeff;  // per term: orders 0..order
};

inline BSeries b_series(const TwoTensor& B, int order) {
    int H = B.sp->max_split_height();
    int complete = H > 0 ? B.cutoff / H : 0;
    if (order > complete)
        throw CutoffError("series order " + std::to_string(order) + " exceeds the complete range " +
                          std::to_string(complete) + " for cutoff " + std::to_string(B.cutoff) +
                          " (max split height " + std::to_string(H) + "); raise the cutoff");
    BSeries out;
    out.order = order;
    for (const auto& [xy, c] : B.terms) {
        std::vector<Rat> s = c.series(order);
        bool all0 = true;
        for (const Rat& v : s) all0 = all0 && is_zero(v);
        if (!all0) out.coeff[xy] = std::move(s);
    }
    return out;
}

/** Column test of the element against the coadjoint action on the character.
 *
 *  For each degree block and each row monomial x_i, the weighted sum of the
 *  column monomials' coadjoint action on lambda,
 *      sum_j (G^{-1})_{ji} (y_j . lambda),
 *  must equal t (e_mu . lambda) when x_i is the single letter at a split root
 *  mu, and vanish for every longer x_i. Requires the scaled basis, where the
 *  target coefficient is exactly t. */
struct MomentumCheck {
    bool pass = true;
    int checked = 0;
    std::string detail = "all momentum columns match";
};

/** beta(u_m) values of the coadjoint action (x . beta) = -beta([x, .]) of one
 *  slot letter on a functional given by its values on the basis. */
inline std::vector<Rat> coadjoint_slot(const LeviSplit& sp, int slot, const std::vector<Rat>& beta) {
    const ChevalleyBasis& cb = sp.cb;
    int b = sp.basis_of_slot(slot);
    const Rat& sg = sp.sigma[static_cast<size_t>(b)];
    std::vector<Rat> out(static_cast<size_t>(cb.dim), Rat(0));
    for (int m = 0; m < cb.dim; ++m) {
        Rat acc(0);
        for (const auto& [k, c] : cb.basis_bracket(b, m)) acc += c * beta[static_cast<size_t>(k)];
        out[static_cast<size_t>(m)] = Rat(-sg * acc);
    }
    return out;
}

/** Word action on a functional, rightmost letter first. */
inline std::vector<Rat> coadjoint_word(const LeviSplit& sp, const Word& w, std::vector<Rat> beta) {
    for (size_t p = w.size(); p-- > 0;) beta = coadjoint_slot(sp, w[p], beta);
    return beta;
}

inline std::vector<Rat> lambda_functional(const LeviSplit& sp) {
    std::vector<Rat> beta(static_cast<size_t>(sp.cb.dim), Rat(0));
    for (int j = 0; j < sp.cb.rs.rank; ++j)
        beta[static_cast<size_t>(sp.cb.h_index(j))] = sp.lambda_h[static_cast<size_t>(j)];
    return beta;
}

inline MomentumCheck momentum_identity_check(const TwoTensor& B) {
    const LeviSplit& sp = *B.sp;
    if (!sp.normalized) throw InternalError("momentum identity check requires the scaled split basis");
    MomentumCheck res;
    std::vector<Rat> lam = lambda_functional(sp);
    ScalarQt t = ScalarQt::t();
    // group the element's terms by row monomial; the empty row (the 1 (x) 1
    // term) carries no constraint
    std::map<Word, std::vector<std::pair<const Word*, const ScalarQt*>>> by_row;
    for (const auto& [xy, c] : B.terms) {
        if (xy.first.empty()) continue;
        by_row[xy.first].push_back({&xy.second, &c});
    }
    std::map<Word, std::vector<Rat>> ylam_cache;
    for (const auto& [row, cols] : by_row) {
        std::vector<ScalarQt> lhs(static_cast<size_t>(sp.cb.dim), ScalarQt(Rat(0)));
        for (const auto& [yw, c] : cols) {
            auto it = ylam_cache.find(*yw);
            if (it == ylam_cache.end()) it = ylam_cache.emplace(*yw, coadjoint_word(sp, *yw, lam)).first;
            for (int m = 0; m < sp.cb.dim; ++m) {
                const Rat& v = it->second[static_cast<size_t>(m)];
                if (!is_zero(v)) lhs[static_cast<size_t>(m)] = lhs[static_cast<size_t>(m)] + v * *c;
            }
        }
        bool is_single = row.size() == 1 && sp.block[static_cast<size_t>(row[0])] == LeviSplit::kNeg;
        std::vector<ScalarQt> rhs(static_cast<size_t>(sp.cb.dim), ScalarQt(Rat(0)));
        if (is_single) {
            int ri = sp.cb.root_of_f(sp.basis_of_slot(row[0]));
            std::vector<Rat> elam = coadjoint_slot(sp, sp.pos_slot_of_root(ri), lam);
            for (int m = 0; m < sp.cb.dim; ++m)
                if (!is_zero(elam[static_cast<size_t>(m)])) rhs[static_cast<size_t>(m)] = elam[static_cast<size_t>(m)] * t;
        }
        ++res.checked;
        for (int m = 0; m < sp.cb.dim; ++m) {
            if (lhs[static_cast<size_t>(m)] == rhs[static_cast<size_t>(m)]) continue;
            res.pass = false;
            ScalarQt diff = lhs[static_cast<size_t>(m)] - rhs[static_cast<size_t>(m)];
            res.detail = "column mismatch at row degree " + degree_str(Uea(&sp).grade(row)) + ", basis " +
                         sp.cb.basis_name(m) + ": off by " + diff.str();
            return res;
        }
    }
    return res;
}

/** Fault injection for the verification suites: doubles the first-order part
 *  of every coefficient (c <- c + c_1 t). Keeps the element well formed but
 *  breaks every first-order identity downstream. */
inline TwoTensor perturb_scale_t(TwoTensor B) {
    for (auto& [xy, c] : B.terms) {
        Rat c1 = c.series(1)[1];
        if (!is_zero(c1)) c = c + ScalarQt(Poly(std::vector<Rat>{Rat(0), c1}));
    }
    return B;
}

}  // namespace orbitstar
