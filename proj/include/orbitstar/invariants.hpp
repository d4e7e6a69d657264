#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "orbitstar/split.hpp"

namespace orbitstar {

/** First Chern class image of the character of an h-module with the given
 *  weights (simple-root coordinates): i * sum of weights. */
inline std::vector<GaussRat> c1_image(const std::vector<Weight>& weights) {
    if (weights.empty()) throw ConfigError("c1_image: empty weight list");
    size_t n = weights.front().size();
    Weight acc(n, Rat(0));
    for (const Weight& w : weights) {
        if (w.size() != n) throw ConfigError("c1_image: ragged weight list");
        acc = w_add(acc, w);
    }
    return times_i(acc);
}

/** Characteristic class of the deformation, as a pair of weight-space vectors
 *  over Gaussian rationals in simple-root coordinates: order0 + t * order1. */
struct CharClass {
    std::vector<GaussRat> order0;  // -lambda
    std::vector<GaussRat> order1;  // i * (half-sum of the split's positive roots)
};

/** Half-sum of the split's positive roots, simple-root coordinates. */
inline Weight split_rho(const LeviSplit& sp) {
    const RootSystem& rs = sp.cb.rs;
    Weight acc(static_cast<size_t>(rs.rank), Rat(0));
    for (int ri : sp.delta_plus) acc = w_add(acc, to_weight(rs.root(ri)));
    return w_scale(Rat(1, 2), acc);
}

inline CharClass characteristic_class(const LeviSplit& sp) {
    const RootSystem& rs = sp.cb.rs;
    Weight rho_s = split_rho(sp);
    CharClass out;
    out.order0.resize(static_cast<size_t>(rs.rank));
    out.order1 = times_i(rho_s);
    for (int j = 0; j < rs.rank; ++j)
        out.order0[static_cast<size_t>(j)] = GaussRat(Rat(-sp.lambda_rc[static_cast<size_t>(j)]), Rat(0));
    // cross-check against the curvature route: -(1/2) * c1(negative-root module)
    std::vector<Weight> neg_weights;
    for (int ri : sp.delta_plus) neg_weights.push_back(w_scale(Rat(-1), to_weight(rs.root(ri))));
    std::vector<GaussRat> route = c1_image(neg_weights);
    for (size_t j = 0; j < route.size(); ++j) {
        if (!(Rat(-1, 2) * route[j] == out.order1[static_cast<size_t>(j)]))
            throw InternalError("characteristic class: curvature route disagrees with direct formula");
    }
    return out;
}

/** Weight argument for the trace formula: xi plays the role of a rescaled
 *  orbit parameter. Simple-root coordinates. */
struct RescaledWeight {
    Weight xi;
};

namespace detail {

/** Product formula with every pairing multiplied by form_scale (rescaling the
 *  invariant form); the ratio must not depend on the scale. */
inline Rat quantum_dimension_scaled(const RootSystem& rs, const LeviSplit& sp, const RescaledWeight& xi,
                                    const Rat& form_scale) {
    if (static_cast<int>(xi.xi.size()) != rs.rank)
        throw ConfigError("quantum_dimension: xi has wrong coordinate length");
    Weight rho_s = split_rho(sp);
    Weight shifted = w_add(xi.xi, rho_s);
    Rat num(1), den(1);
    for (int ri : sp.delta_plus) {
        Weight alpha = to_weight(rs.root(ri));
        Rat d = form_scale * rs.pairing(alpha, rho_s);
        if (d == 0)
            throw DegeneracyError("quantum dimension: <alpha, rho> = 0 for a split root (degenerate split)");
        num *= form_scale * rs.pairing(alpha, shifted);
        den *= d;
    }
    return Rat(num / den);
}

}  // namespace detail

/** Trace of the unit: prod_{alpha in split Delta+} <alpha, xi + rho> / <alpha, rho>. */
inline Rat quantum_dimension(const RootSystem& rs, const LeviSplit& sp, const RescaledWeight& xi) {
    return detail::quantum_dimension_scaled(rs, sp, xi, Rat(1));
}

namespace detail {

inline bool is_nonneg_int(const Rat& r) { return r.get_den() == 1 && r >= 0; }

/** Dominant representative of a weight under the Weyl group. */
inline Weight dominantize(const RootSystem& rs, Weight w) {
    bool moved = true;
    while (moved) {
        moved = false;
        for (int j = 0; j < rs.rank; ++j) {
            if (rs.pair_coroot(w, j) < 0) {
                w = rs.reflect_simple(w, j);
                moved = true;
            }
        }
    }
    return w;
}

/** Size of the Weyl orbit of a dominant weight, by closure under simple reflections. */
inline long weyl_orbit_size(const RootSystem& rs, const Weight& w) {
    std::set<Weight> orbit{w};
    std::vector<Weight> frontier{w};
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const Weight& u : frontier)
            for (int j = 0; j < rs.rank; ++j) {
                Weight v = rs.reflect_simple(u, j);
                if (orbit.insert(v).second) next.push_back(v);
            }
        frontier = std::move(next);
    }
    return static_cast<long>(orbit.size());
}

}  // namespace detail

/** Dimension of the irreducible module of highest weight mu (simple-root
 *  coordinates, dominant integral), by the Freudenthal multiplicity recursion.
 *  Independent of the Weyl product formula. */
inline Rat freudenthal_dim(const RootSystem& rs, const Weight& mu) {
    if (static_cast<int>(mu.size()) != rs.rank) throw ConfigError("freudenthal_dim: wrong coordinate length");
    for (int j = 0; j < rs.rank; ++j)
        if (!detail::is_nonneg_int(Rat(rs.pair_coroot(mu, j))))
            throw ConfigError("freudenthal_dim: weight is not dominant integral");

    Weight rho = rs.rho();
    Weight top = w_add(mu, rho);
    Rat r2 = rs.pairing(top, top);

    // candidate dominant weights nu <= mu: box in fundamental coordinates with
    // (m_j + 1)^2 * half_sq[j] / 2 <= <mu+rho, mu+rho>, filtered by
    // mu - nu in the nonnegative root lattice and the norm bound.
    std::vector<long> box(static_cast<size_t>(rs.rank));
    for (int j = 0; j < rs.rank; ++j) {
        long m = 0;
        while (Rat(Rat(m + 2) * Rat(m + 2)) * rs.half_sq[static_cast<size_t>(j)] <= Rat(2) * r2) ++m;
        box[static_cast<size_t>(j)] = m;
    }
    std::vector<Weight> candidates;
    std::vector<Rat> fund(static_cast<size_t>(rs.rank), Rat(0));
    std::function<void(int)> enumerate = [&](int j) {
        if (j == rs.rank) {
            Weight nu = rs.fund_to_root(fund);
            Weight diff = w_add(mu, w_scale(Rat(-1), nu));
            for (const Rat& c : diff)
                if (!detail::is_nonneg_int(c)) return;
            Weight sh = w_add(nu, rho);
            if (rs.pairing(sh, sh) > r2) return;
            candidates.push_back(nu);
            return;
        }
        for (long m = 0; m <= box[static_cast<size_t>(j)]; ++m) {
            fund[static_cast<size_t>(j)] = Rat(m);
            enumerate(j + 1);
        }
    };
    enumerate(0);

    auto depth = [&](const Weight& nu) {
        Rat h(0);
        for (size_t j = 0; j < nu.size(); ++j) h += mu[j] - nu[j];
        return h;
    };
    std::sort(candidates.begin(), candidates.end(),
              [&](const Weight& a, const Weight& b) { return depth(a) < depth(b) || (depth(a) == depth(b) && a < b); });

    std::map<Weight, Rat> mult;
    Rat total(0);
    for (const Weight& nu : candidates) {
        Rat m;
        if (nu == mu) {
            m = Rat(1);
        } else {
            Rat acc(0);
            for (int ri = 0; ri < rs.npos(); ++ri) {
                Weight alpha = to_weight(rs.root(ri));
                Rat prev_norm(-1);
                for (long k = 1;; ++k) {
                    Weight up = w_add(nu, w_scale(Rat(k), alpha));
                    Weight sh = w_add(up, rho);
                    Rat norm = rs.pairing(sh, sh);
                    if (norm > r2) {
                        if (prev_norm >= 0 && norm >= prev_norm) break;  // convex in k: gone for good
                        prev_norm = norm;
                        continue;
                    }
                    prev_norm = norm;
                    auto it = mult.find(detail::dominantize(rs, up));
                    if (it != mult.end()) acc += it->second * rs.pairing(up, alpha);
                }
            }
            Rat denom = r2 - rs.pairing(w_add(nu, rho), w_add(nu, rho));
            if (!(denom > 0)) throw InternalError("freudenthal: nonpositive recursion denominator");
            m = Rat(Rat(2) * acc / denom);
            if (m.get_den() != 1 || m <= 0)
                throw InternalError("freudenthal: multiplicity not a positive integer");
        }
        mult[nu] = m;
        total += m * Rat(detail::weyl_orbit_size(rs, nu));
    }
    if (total.get_den() != 1 || total <= 0) throw InternalError("freudenthal: non-integer dimension");
    return total;
}

}  // namespace orbitstar
