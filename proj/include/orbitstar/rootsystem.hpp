#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "orbitstar/polynomial.hpp"
#include "orbitstar/rational.hpp"

namespace orbitstar {

/** Weight: exact rational coordinates in the simple-root basis. */
using Weight = std::vector<Rat>;

/** Degree in the root lattice: integer coordinates in the simple-root basis.
 *  Degrees used for grading keep nonnegative entries. */
using DegreeVec = std::vector<int>;

inline int height(const DegreeVec& d) {
    int h = 0;
    for (int x : d) h += x;
    return h;
}

inline Weight to_weight(const DegreeVec& d) {
    Weight w;
    w.reserve(d.size());
    for (int x : d) w.emplace_back(x);
    return w;
}

inline Weight w_add(const Weight& a, const Weight& b) {
    Weight out(a);
    for (size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

inline Weight w_sub(const Weight& a, const Weight& b) {
    Weight out(a);
    for (size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
}

inline Weight w_scale(const Rat& c, const Weight& a) {
    Weight out(a);
    for (Rat& x : out) x *= c;
    return out;
}

inline bool w_is_zero(const Weight& a) {
    for (const Rat& x : a)
        if (!is_zero(x)) return false;
    return true;
}

inline std::string weight_str(const Weight& w) {
    std::string out = "[";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ",";
        out += rat_str(w[i]);
    }
    return out + "]";
}

/** Exact Gauss-Jordan inverse over any field-like scalar K. */
template <class K>
std::vector<std::vector<K>> matrix_inverse(std::vector<std::vector<K>> m) {
    size_t n = m.size();
    std::vector<std::vector<K>> inv(n, std::vector<K>(n, K(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = K(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == K(0)) ++piv;
        if (piv == n) throw DegeneracyError("singular matrix in exact inversion");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        K scale = K(1) / m[col][col];
        for (size_t j = 0; j < n; ++j) {
            m[col][j] = m[col][j] * scale;
            inv[col][j] = inv[col][j] * scale;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == K(0)) continue;
            K f = m[r][col];
            for (size_t j = 0; j < n; ++j) {
                m[r][j] = m[r][j] - f * m[col][j];
                inv[r][j] = inv[r][j] - f * inv[col][j];
            }
        }
    }
    return inv;
}

/** Finite root system of a single simple series, enumerated exactly.
 *
 *  Positive roots are integer vectors in the simple-root basis, sorted by
 *  (height, lex). The invariant form is normalized so long roots have
 *  squared length 2; all pairings are exact rationals. */
class RootSystem {
public:
    char series = 'A';
    int rank = 0;
    std::vector<std::vector<int>> cartan;      // cartan[i][j] = 2<a_i,a_j>/<a_j,a_j>
    std::vector<Rat> half_sq;                  // <a_i,a_i>/2, long roots -> 1
    std::vector<std::vector<Rat>> form;        // <a_i,a_j> on simple roots
    std::vector<DegreeVec> pos_roots;          // sorted by (height, lex)
    std::map<DegreeVec, int> pos_index;
    int max_height = 0;

    int npos() const { return static_cast<int>(pos_roots.size()); }
    const DegreeVec& root(int i) const { return pos_roots[static_cast<size_t>(i)]; }
    int root_height(int i) const { return height(root(i)); }

    bool is_pos_root(const DegreeVec& d) const { return pos_index.count(d) > 0; }

    /** <u, v> for weights in simple-root coordinates. */
    Rat pairing(const Weight& u, const Weight& v) const {
        Rat acc(0);
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                acc += u[static_cast<size_t>(i)] * form[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                       v[static_cast<size_t>(j)];
        return acc;
    }

    /** <u, a_j^vee> = 2<u, a_j>/<a_j, a_j>. */
    Rat pair_coroot(const Weight& u, int j) const {
        Rat acc(0);
        for (int i = 0; i < rank; ++i)
            acc += u[static_cast<size_t>(i)] * Rat(cartan[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        return acc;
    }

    /** Simple reflection s_j on weights. */
    Weight reflect_simple(const Weight& u, int j) const {
        Weight out(u);
        Rat c = pair_coroot(u, j);
        out[static_cast<size_t>(j)] -= c;
        return out;
    }

    /** Half-sum of the positive roots. */
    Weight rho() const {
        Weight acc(static_cast<size_t>(rank), Rat(0));
        for (const DegreeVec& a : pos_roots) acc = w_add(acc, to_weight(a));
        return w_scale(Rat(1, 2), acc);
    }

    /** Fundamental weight i in simple-root coordinates: column i of (A^T)^-1. */
    std::vector<Weight> fundamental_weights() const {
        std::vector<std::vector<Rat>> at(static_cast<size_t>(rank), std::vector<Rat>(static_cast<size_t>(rank)));
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                at[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    Rat(cartan[static_cast<size_t>(j)][static_cast<size_t>(i)]);
        auto inv = matrix_inverse(at);
        std::vector<Weight> out(static_cast<size_t>(rank), Weight(static_cast<size_t>(rank)));
        for (int i = 0; i < rank; ++i)
            for (int k = 0; k < rank; ++k) out[static_cast<size_t>(i)][static_cast<size_t>(k)] =
                inv[static_cast<size_t>(k)][static_cast<size_t>(i)];
        return out;
    }

    /** Converts fundamental-weight coordinates (values on simple coroots). */
    Weight fund_to_root(const std::vector<Rat>& fund) const {
        auto fw = fundamental_weights();
        Weight acc(static_cast<size_t>(rank), Rat(0));
        for (int i = 0; i < rank; ++i) acc = w_add(acc, w_scale(fund[static_cast<size_t>(i)], fw[static_cast<size_t>(i)]));
        return acc;
    }

    /** Values on simple coroots of a weight in root coordinates. */
    std::vector<Rat> root_to_fund(const Weight& u) const {
        std::vector<Rat> out(static_cast<size_t>(rank));
        for (int j = 0; j < rank; ++j) out[static_cast<size_t>(j)] = pair_coroot(u, j);
        return out;
    }

    int highest_root_index() const { return npos() - 1; }
};

namespace detail {

inline long expected_dimension(char series, int n) {
    switch (series) {
        case 'A': return static_cast<long>(n) * (n + 2);
        case 'B':
        case 'C': return static_cast<long>(n) * (2 * n + 1);
        case 'D': return static_cast<long>(n) * (2 * n - 1);
        case 'E': return n == 6 ? 78 : (n == 7 ? 133 : 248);
        case 'F': return 52;
        case 'G': return 14;
        default: throw ConfigError("unknown series");
    }
}

inline int expected_max_height(char series, int n) {
    switch (series) {
        case 'A': return n;
        case 'B':
        case 'C': return 2 * n - 1;
        case 'D': return 2 * n - 3;
        case 'E': return n == 6 ? 11 : (n == 7 ? 17 : 29);
        case 'F': return 11;
        case 'G': return 5;
        default: throw ConfigError("unknown series");
    }
}

inline std::vector<std::vector<int>> cartan_matrix(char series, int n) {
    auto chain = [&](int len) {
        std::vector<std::vector<int>> a(static_cast<size_t>(len), std::vector<int>(static_cast<size_t>(len), 0));
        for (int i = 0; i < len; ++i) a[static_cast<size_t>(i)][static_cast<size_t>(i)] = 2;
        for (int i = 0; i + 1 < len; ++i) {
            a[static_cast<size_t>(i)][static_cast<size_t>(i + 1)] = -1;
            a[static_cast<size_t>(i + 1)][static_cast<size_t>(i)] = -1;
        }
        return a;
    };
    switch (series) {
        case 'A': {
            if (n < 1) throw ConfigError("A series needs rank >= 1");
            return chain(n);
        }
        case 'B': {
            if (n < 2) throw ConfigError("B series needs rank >= 2");
            auto a = chain(n);
            a[static_cast<size_t>(n - 2)][static_cast<size_t>(n - 1)] = -2;  // last simple root short
            return a;
        }
        case 'C': {
            if (n < 2) throw ConfigError("C series needs rank >= 2");
            auto a = chain(n);
            a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 2)] = -2;  // last simple root long
            return a;
        }
        case 'D': {
            if (n < 3) throw ConfigError("D series needs rank >= 3");
            auto a = chain(n - 1);
            a.resize(static_cast<size_t>(n));
            for (auto& row : a) row.resize(static_cast<size_t>(n), 0);
            a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)] = 2;
            a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 2)] = 0;
            a[static_cast<size_t>(n - 2)][static_cast<size_t>(n - 1)] = 0;
            a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 3)] = -1;  // fork at node n-2 (0-based n-3)
            a[static_cast<size_t>(n - 3)][static_cast<size_t>(n - 1)] = -1;
            return a;
        }
        case 'E': {
            if (n < 6 || n > 8) throw ConfigError("E series needs rank in {6,7,8}");
            std::vector<std::vector<int>> a(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
            for (int i = 0; i < n; ++i) a[static_cast<size_t>(i)][static_cast<size_t>(i)] = 2;
            auto link = [&](int i, int j) {
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] = -1;
                a[static_cast<size_t>(j)][static_cast<size_t>(i)] = -1;
            };
            link(0, 2);
            link(2, 3);
            link(3, 4);
            link(4, 5);
            link(1, 3);
            if (n >= 7) link(5, 6);
            if (n == 8) link(6, 7);
            return a;
        }
        case 'F': {
            if (n != 4) throw ConfigError("F series needs rank 4");
            auto a = chain(4);
            a[1][2] = -2;  // roots 3,4 short
            return a;
        }
        case 'G': {
            if (n != 2) throw ConfigError("G series needs rank 2");
            return {{2, -1}, {-3, 2}};
        }
        default: throw ConfigError(std::string("unknown series '") + series + "'");
    }
}

}  // namespace detail

/** Builds the root system: Cartan matrix by series, positive roots by simple
 *  reflection closure over a height-bounded worklist, invariant form with
 *  long roots normalized to squared length 2.
 *
 *  Postconditions checked here: cartan[i][j] = 2<a_i,a_j>/<a_j,a_j> exactly,
 *  and |pos_roots| = (dim - rank)/2 for the matched algebra dimension. */
inline RootSystem build_root_system(char series, int rank) {
    RootSystem rs;
    rs.series = series;
    rs.rank = rank;
    rs.cartan = detail::cartan_matrix(series, rank);

    // squared-length ratios propagate along edges: d_j / d_i = a_ji / a_ij
    std::vector<Rat> d(static_cast<size_t>(rank), Rat(0));
    for (int start = 0; start < rank; ++start) {
        if (!is_zero(d[static_cast<size_t>(start)])) continue;
        d[static_cast<size_t>(start)] = Rat(1);
        std::vector<int> work{start};
        while (!work.empty()) {
            int i = work.back();
            work.pop_back();
            for (int j = 0; j < rank; ++j) {
                if (i == j || rs.cartan[static_cast<size_t>(i)][static_cast<size_t>(j)] == 0) continue;
                Rat dj = d[static_cast<size_t>(i)] * Rat(rs.cartan[static_cast<size_t>(j)][static_cast<size_t>(i)]) /
                         Rat(rs.cartan[static_cast<size_t>(i)][static_cast<size_t>(j)]);
                if (is_zero(d[static_cast<size_t>(j)])) {
                    d[static_cast<size_t>(j)] = dj;
                    work.push_back(j);
                } else if (d[static_cast<size_t>(j)] != dj) {
                    throw InternalError("inconsistent root lengths from Cartan matrix");
                }
            }
        }
    }
    Rat dmax(0);
    for (const Rat& x : d)
        if (x > dmax) dmax = x;
    for (Rat& x : d) x /= dmax;
    rs.half_sq = d;

    rs.form.assign(static_cast<size_t>(rank), std::vector<Rat>(static_cast<size_t>(rank)));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            rs.form[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                Rat(rs.cartan[static_cast<size_t>(i)][static_cast<size_t>(j)]) * d[static_cast<size_t>(j)];
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            if (rs.form[static_cast<size_t>(i)][static_cast<size_t>(j)] !=
                rs.form[static_cast<size_t>(j)][static_cast<size_t>(i)])
                throw InternalError("invariant form not symmetric");
            Rat lhs = Rat(2) * rs.form[static_cast<size_t>(i)][static_cast<size_t>(j)];
            Rat rhs = Rat(rs.cartan[static_cast<size_t>(i)][static_cast<size_t>(j)]) * Rat(2) *
                      d[static_cast<size_t>(j)];
            if (lhs != rhs) throw InternalError("Cartan entry inconsistent with form");
        }

    // reflection closure on integer root vectors, bounded by the series height
    int hmax = detail::expected_max_height(series, rank);
    std::map<DegreeVec, bool> seen;
    std::vector<DegreeVec> work;
    for (int i = 0; i < rank; ++i) {
        DegreeVec a(static_cast<size_t>(rank), 0);
        a[static_cast<size_t>(i)] = 1;
        seen[a] = true;
        work.push_back(a);
    }
    while (!work.empty()) {
        DegreeVec a = work.back();
        work.pop_back();
        for (int j = 0; j < rank; ++j) {
            long c = 0;
            for (int i = 0; i < rank; ++i)
                c += static_cast<long>(a[static_cast<size_t>(i)]) *
                     rs.cartan[static_cast<size_t>(i)][static_cast<size_t>(j)];
            DegreeVec b(a);
            b[static_cast<size_t>(j)] -= static_cast<int>(c);
            bool positive = true, negative = true;
            for (int x : b) {
                if (x > 0) negative = false;
                if (x < 0) positive = false;
            }
            if (!positive || negative) continue;  // keep the positive chamber only
            if (height(b) > hmax) throw InternalError("reflection closure exceeded series height bound");
            if (!seen.count(b)) {
                seen[b] = true;
                work.push_back(b);
            }
        }
    }
    for (const auto& [a, _] : seen) rs.pos_roots.push_back(a);
    std::sort(rs.pos_roots.begin(), rs.pos_roots.end(), [](const DegreeVec& x, const DegreeVec& y) {
        if (height(x) != height(y)) return height(x) < height(y);
        return x < y;
    });
    for (int i = 0; i < rs.npos(); ++i) rs.pos_index[rs.pos_roots[static_cast<size_t>(i)]] = i;
    rs.max_height = height(rs.pos_roots.back());
    if (rs.max_height != hmax) throw InternalError("highest root height does not match series");

    long dim = detail::expected_dimension(series, rank);
    if (2L * rs.npos() + rank != dim)
        throw InternalError("positive root count does not match algebra dimension");
    return rs;
}

}  // namespace orbitstar
