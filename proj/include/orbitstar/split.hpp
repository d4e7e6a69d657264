#pragma once

#include <map>
#include <string>
#include <vector>

#include "orbitstar/chevalley.hpp"

namespace orbitstar {

/** Levi decomposition of the algebra induced by a character lambda.
 *
 *  delta_plus holds the positive roots with <lambda, alpha> > 0 (their
 *  negatives form delta_minus implicitly); zero_roots the root spaces that
 *  land in the centralizer h = Cartan + zero root spaces. lambda must be
 *  dominant (values on simple coroots >= 0) so that delta_plus is a subset
 *  of the ambient positive system and degrees stay in the positive cone.
 *
 *  The PBW alphabet ("slots") lists every basis vector in the order
 *  n_- block, then h block (Cartan first, then zero-pairing root vectors),
 *  then n_+ block; each block sorted by (height, lex). sigma holds the
 *  per-basis-vector rescaling of normalize_root_vectors; the slot bracket
 *  table is expressed in the rescaled basis. */
class LeviSplit {
public:
    ChevalleyBasis cb;
    std::vector<Rat> lambda_h;   // values lambda(h_i)
    Weight lambda_rc;            // lambda in simple-root coordinates
    std::vector<int> delta_plus; // positive-root indices, ascending
    std::vector<int> zero_roots; // positive-root indices with <lambda,alpha> = 0
    std::vector<Rat> sigma;      // rescaling per basis index (1 outside split f's)
    bool normalized = false;

    enum Block { kNeg = 0, kLev = 1, kPos = 2 };
    std::vector<int> slots;      // slot -> basis index
    std::vector<int> slot_of;    // basis index -> slot
    std::vector<int> block;      // slot -> Block

    int nslots() const { return static_cast<int>(slots.size()); }
    int basis_of_slot(int s) const { return slots[static_cast<size_t>(s)]; }

    /** Bracket of rescaled slot letters as a slot-indexed combination. */
    const std::map<int, Rat>& slot_bracket(int a, int b) const {
        return bkt_[static_cast<size_t>(a)][static_cast<size_t>(b)];
    }

    /** Character value of a slot letter: lambda(h_j) on Cartan slots, 0 on
     *  root-vector slots (lambda kills every root space). */
    Rat lambda_of_slot(int s) const {
        int b = basis_of_slot(s);
        return cb.is_h(b) ? lambda_h[static_cast<size_t>(cb.cartan_of_h(b))] : Rat(0);
    }

    /** lambda extended by zero to all of g. */
    Rat lambda_of_elt(const AlgElt& x) const {
        Rat acc(0);
        for (const auto& [b, c] : x)
            if (cb.is_h(b)) acc += c * lambda_h[static_cast<size_t>(cb.cartan_of_h(b))];
        return acc;
    }

    /** Signed root-lattice degree of a slot letter (zero on the Cartan). */
    const DegreeVec& slot_degree(int s) const { return deg_[static_cast<size_t>(s)]; }

    int neg_slot_of_root(int pos_idx) const { return slot_of[static_cast<size_t>(cb.f_index(pos_idx))]; }
    int pos_slot_of_root(int pos_idx) const { return slot_of[static_cast<size_t>(cb.e_index(pos_idx))]; }

    /** Maximum height among the split's positive roots (annihilation-window
     *  width and the series completeness modulus). */
    int max_split_height() const {
        int h = 0;
        for (int i : delta_plus) h = std::max(h, cb.rs.root_height(i));
        return h;
    }

    std::string slot_name(int s) const { return cb.basis_name(basis_of_slot(s)); }

    void rebuild_tables() {
        int n = nslots();
        bkt_.assign(static_cast<size_t>(n), std::vector<std::map<int, Rat>>(static_cast<size_t>(n)));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int ba = basis_of_slot(a), bb = basis_of_slot(b);
                const AlgElt& raw = cb.basis_bracket(ba, bb);
                std::map<int, Rat> out;
                for (const auto& [k, c] : raw) {
                    Rat scaled = Rat(sigma[static_cast<size_t>(ba)] * sigma[static_cast<size_t>(bb)] /
                                     sigma[static_cast<size_t>(k)] * c);
                    if (!is_zero(scaled)) out[slot_of[static_cast<size_t>(k)]] = scaled;
                }
                bkt_[static_cast<size_t>(a)][static_cast<size_t>(b)] = std::move(out);
            }
        deg_.assign(static_cast<size_t>(n), DegreeVec(static_cast<size_t>(cb.rs.rank), 0));
        for (int s = 0; s < n; ++s) {
            int b = basis_of_slot(s);
            if (cb.is_h(b)) continue;
            DegreeVec d = cb.is_e(b) ? cb.rs.root(cb.root_of_e(b)) : cb.rs.root(cb.root_of_f(b));
            if (cb.is_f(b))
                for (int& x : d) x = -x;
            deg_[static_cast<size_t>(s)] = d;
        }
    }

private:
    std::vector<std::vector<std::map<int, Rat>>> bkt_;
    std::vector<DegreeVec> deg_;
};

/** Splits the algebra by the character lambda (values on the simple coroots).
 *
 *  Rejects lambda = 0 (the orbit degenerates to a point) and non-dominant
 *  lambda (every orbit has a dominant representative; using it keeps split
 *  degrees inside the ambient positive cone). */
inline LeviSplit centralizer_split(const ChevalleyBasis& cb, const std::vector<Rat>& lambda_h) {
    if (static_cast<int>(lambda_h.size()) != cb.rs.rank)
        throw ConfigError("lambda needs one value per simple coroot (rank " + std::to_string(cb.rs.rank) + ")");
    bool all_zero = true;
    for (const Rat& v : lambda_h) {
        if (v < 0)
            throw ConfigError(
                "lambda must be dominant (all values on simple coroots >= 0); "
                "replace lambda by the dominant representative of its Weyl orbit");
        if (!is_zero(v)) all_zero = false;
    }
    if (all_zero) throw DegeneracyError("lambda = 0: the orbit is a point");

    LeviSplit sp;
    sp.cb = cb;
    sp.lambda_h = lambda_h;
    sp.lambda_rc = cb.rs.fund_to_root(lambda_h);
    for (int i = 0; i < cb.rs.npos(); ++i) {
        Rat v = cb.rs.pairing(sp.lambda_rc, to_weight(cb.rs.root(i)));
        if (is_zero(v))
            sp.zero_roots.push_back(i);
        else
            sp.delta_plus.push_back(i);  // dominant lambda: v > 0
    }
    sp.sigma.assign(static_cast<size_t>(cb.dim), Rat(1));

    sp.slots.clear();
    for (int i : sp.delta_plus) sp.slots.push_back(cb.f_index(i));
    for (int j = 0; j < cb.rs.rank; ++j) sp.slots.push_back(cb.h_index(j));
    for (int i : sp.zero_roots) sp.slots.push_back(cb.f_index(i));
    for (int i : sp.zero_roots) sp.slots.push_back(cb.e_index(i));
    for (int i : sp.delta_plus) sp.slots.push_back(cb.e_index(i));
    sp.slot_of.assign(static_cast<size_t>(cb.dim), -1);
    sp.block.assign(sp.slots.size(), LeviSplit::kLev);
    for (int s = 0; s < sp.nslots(); ++s) sp.slot_of[static_cast<size_t>(sp.slots[static_cast<size_t>(s)])] = s;
    size_t nsplit = sp.delta_plus.size();
    for (size_t s = 0; s < nsplit; ++s) sp.block[s] = LeviSplit::kNeg;
    for (size_t s = sp.slots.size() - nsplit; s < sp.slots.size(); ++s) sp.block[s] = LeviSplit::kPos;

    // lambda must be a Lie character of the centralizer: zero on [h, h]
    for (int i : sp.zero_roots) {
        AlgElt br = cb.basis_bracket(cb.e_index(i), cb.f_index(i));
        if (!is_zero(sp.lambda_of_elt(br))) throw InternalError("lambda does not vanish on [h,h]");
    }
    sp.rebuild_tables();
    return sp;
}

/** Rescales each e_{-alpha}, alpha in delta_plus, so lambda([e_{-alpha}, e_alpha]) = 1.
 *  Idempotent; cross terms lambda([e_{-alpha}, e_beta]) are checked to vanish. */
inline LeviSplit normalize_root_vectors(LeviSplit sp) {
    const ChevalleyBasis& cb = sp.cb;
    for (int i : sp.delta_plus) {
        int fi = cb.f_index(i), ei = cb.e_index(i);
        AlgElt br = cb.basis_bracket(fi, ei);
        Rat v = Rat(sp.sigma[static_cast<size_t>(fi)] * sp.sigma[static_cast<size_t>(ei)] * sp.lambda_of_elt(br));
        if (is_zero(v)) throw InternalError("lambda([e_{-a}, e_a]) = 0 on a split root");
        sp.sigma[static_cast<size_t>(fi)] /= v;
    }
    for (int i : sp.delta_plus)
        for (int j : sp.delta_plus) {
            if (i == j) continue;
            AlgElt br = cb.basis_bracket(cb.f_index(i), cb.e_index(j));
            if (!is_zero(sp.lambda_of_elt(br)))
                throw InternalError("lambda([e_{-a}, e_b]) non-zero for distinct split roots");
        }
    sp.normalized = true;
    sp.rebuild_tables();
    return sp;
}

}  // namespace orbitstar
