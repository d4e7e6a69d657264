#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "orbitstar/shapovalov.hpp"

namespace orbitstar {

/** Monomial in the generator symbols X[k,m]: varid = k*dim + m, value = exponent.
 *  X[k,m] is the matrix-coefficient function g -> u_k*(Ad_{g^-1} u_m) on G. */
using Monomial = std::map<int, int>;

/** Polynomial in the X symbols with exact rational-function coefficients.
 *  Invariant: no zero coefficients, no zero exponents. */
struct OrbitFunction {
    std::map<Monomial, ScalarQt> terms;

    bool is_zero_fn() const { return terms.empty(); }

    friend bool operator==(const OrbitFunction& a, const OrbitFunction& b) { return a.terms == b.terms; }
};

inline void of_add_into(OrbitFunction& acc, const Monomial& m, const ScalarQt& c) {
    if (c.is_zero_fn()) return;
    auto it = acc.terms.find(m);
    if (it == acc.terms.end()) {
        acc.terms.emplace(m, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero_fn()) acc.terms.erase(it);
}

inline OrbitFunction of_constant(const ScalarQt& c) {
    OrbitFunction f;
    if (!c.is_zero_fn()) f.terms.emplace(Monomial{}, c);
    return f;
}

inline OrbitFunction of_add(const OrbitFunction& a, const OrbitFunction& b) {
    OrbitFunction out(a);
    for (const auto& [m, c] : b.terms) of_add_into(out, m, c);
    return out;
}

inline OrbitFunction of_sub(const OrbitFunction& a, const OrbitFunction& b) {
    OrbitFunction out(a);
    for (const auto& [m, c] : b.terms) of_add_into(out, m, -c);
    return out;
}

inline OrbitFunction of_scale(const ScalarQt& s, const OrbitFunction& a) {
    OrbitFunction out;
    if (s.is_zero_fn()) return out;
    for (const auto& [m, c] : a.terms) out.terms.emplace(m, s * c);
    return out;
}

inline OrbitFunction of_mul(const OrbitFunction& a, const OrbitFunction& b) {
    OrbitFunction out;
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            Monomial m(ma);
            for (const auto& [v, e] : mb) m[v] += e;
            of_add_into(out, m, ca * cb);
        }
    return out;
}

inline int of_degree(const OrbitFunction& f) {
    int d = 0;
    for (const auto& [m, c] : f.terms) {
        int t = 0;
        for (const auto& [v, e] : m) t += e;
        d = std::max(d, t);
    }
    return d;
}

/** Exact point of G given by a word of unipotent factors exp(s * u_b); stores
 *  Ad_g and its inverse. Construction checks the automorphism invariants:
 *  bracket and invariant-form preservation on all basis pairs. */
struct GroupPoint {
    std::vector<std::pair<int, Rat>> word;  // (basis index, parameter)
    std::vector<std::vector<Rat>> ad;       // Ad_g
    std::vector<std::vector<Rat>> ad_inv;   // Ad_{g^-1}
};

inline std::string point_str(const ChevalleyBasis& cb, const GroupPoint& p) {
    std::string out = "g";
    for (const auto& [b, s] : p.word) out += "[" + cb.basis_name(b) + "=" + rat_str(s) + "]";
    return out;
}

inline GroupPoint group_point(const ChevalleyBasis& cb, const std::vector<std::pair<int, Rat>>& word) {
    size_t n = static_cast<size_t>(cb.dim);
    GroupPoint p;
    p.word = word;
    p.ad.assign(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) p.ad[i][i] = Rat(1);
    for (const auto& [b, s] : word) {
        if (cb.is_h(b)) throw ConfigError("group point words use ad-nilpotent letters only; '" +
                                          cb.basis_name(b) + "' is not a root vector");
        // ad matrix of u_b: adm[k][j] = coefficient of u_k in [u_b, u_j]
        std::vector<std::vector<Rat>> adm(n, std::vector<Rat>(n, Rat(0)));
        for (int j = 0; j < cb.dim; ++j)
            for (const auto& [k, c] : cb.basis_bracket(b, j)) adm[static_cast<size_t>(k)][static_cast<size_t>(j)] = c;
        // exp(s * adm): nilpotent, terminates
        std::vector<std::vector<Rat>> expm(n, std::vector<Rat>(n, Rat(0)));
        for (size_t i = 0; i < n; ++i) expm[i][i] = Rat(1);
        std::vector<std::vector<Rat>> pw(expm);
        Rat fact(1);
        for (int k = 1;; ++k) {
            std::vector<std::vector<Rat>> nx(n, std::vector<Rat>(n, Rat(0)));
            bool nz = false;
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) {
                    Rat acc(0);
                    for (size_t l = 0; l < n; ++l) acc += pw[i][l] * adm[l][j];
                    nz = nz || !is_zero(acc);
                    nx[i][j] = acc;
                }
            if (!nz) break;
            if (k > cb.dim) throw InternalError("ad power fails to vanish for a root vector");
            pw = std::move(nx);
            fact *= k;
            Rat sk(1);
            for (int q = 0; q < k; ++q) sk *= s;
            Rat w = sk / fact;
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) expm[i][j] += w * pw[i][j];
        }
        // p.ad = p.ad * expm  (Ad of the product, factors in word order)
        std::vector<std::vector<Rat>> out(n, std::vector<Rat>(n, Rat(0)));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                Rat acc(0);
                for (size_t l = 0; l < n; ++l) acc += p.ad[i][l] * expm[l][j];
                out[i][j] = acc;
            }
        p.ad = std::move(out);
    }
    p.ad_inv = matrix_inverse(p.ad);
    // automorphism checks: [Mu_i, Mu_j] = M[u_i, u_j] and the Killing pairing is preserved
    auto col = [&](const std::vector<std::vector<Rat>>& m, int j) {
        AlgElt v;
        for (int k = 0; k < cb.dim; ++k)
            if (!is_zero(m[static_cast<size_t>(k)][static_cast<size_t>(j)]))
                v[k] = m[static_cast<size_t>(k)][static_cast<size_t>(j)];
        return v;
    };
    for (int i = 0; i < cb.dim; ++i)
        for (int j = i + 1; j < cb.dim; ++j) {
            AlgElt lhs = cb.bracket(col(p.ad, i), col(p.ad, j));
            AlgElt rhs;
            for (const auto& [k, c] : cb.basis_bracket(i, j))
                for (const auto& [l, d] : col(p.ad, k)) rhs = elt_add(rhs, AlgElt{{l, Rat(c * d)}});
            if (!(lhs == rhs)) throw InternalError("group point does not preserve the bracket");
            Rat kl(0);
            AlgElt ci = col(p.ad, i), cj = col(p.ad, j);
            for (const auto& [a, ca] : ci)
                for (const auto& [b2, cb2] : cj) kl += ca * cb2 * cb.killing(a, b2);
            if (kl != cb.killing(i, j)) throw InternalError("group point does not preserve the invariant form");
        }
    return p;
}

/** The symbol calculus: momentum functions, the derivation action of slot
 *  letters, the star product with its dynamic completeness certificate,
 *  the Poisson bracket and exact evaluation at group points. */
class OrbitCalc {
public:
    explicit OrbitCalc(const LeviSplit* sp) : sp_(sp), dim_(sp->cb.dim) {
        rows_.assign(static_cast<size_t>(dim_), {});
        for (int b = 0; b < dim_; ++b)
            for (int j = 0; j < dim_; ++j)
                for (const auto& [k, c] : sp_->cb.basis_bracket(b, j))
                    rows_[static_cast<size_t>(b)][k].push_back({j, Rat(-c)});
    }

    const LeviSplit& split() const { return *sp_; }
    int dim() const { return dim_; }

    int var_id(int k, int m) const { return k * dim_ + m; }

    /** f_{u_m} = sum_k lambda(u_k) X[k, m]: the character expanded in the dual basis. */
    OrbitFunction momentum(int m) const {
        OrbitFunction f;
        for (int j = 0; j < sp_->cb.rs.rank; ++j) {
            const Rat& v = sp_->lambda_h[static_cast<size_t>(j)];
            if (is_zero(v)) continue;
            Monomial mo{{var_id(sp_->cb.h_index(j), m), 1}};
            f.terms.emplace(mo, ScalarQt(v));
        }
        return f;
    }

    /** Momentum-type symbol for an arbitrary functional beta (values on the basis). */
    OrbitFunction functional_symbol(const std::vector<Rat>& beta, int m) const {
        OrbitFunction f;
        for (int k = 0; k < dim_; ++k)
            if (!is_zero(beta[static_cast<size_t>(k)]))
                f.terms.emplace(Monomial{{var_id(k, m), 1}}, ScalarQt(beta[static_cast<size_t>(k)]));
        return f;
    }

    /** One slot letter acting as a derivation: x.X[k,m] = X[x.beta, m] with
     *  (x.beta) = -beta([x, .]); the letter carries its basis rescaling. */
    OrbitFunction act_slot(int slot, const OrbitFunction& f) const {
        int b = sp_->basis_of_slot(slot);
        const Rat& sg = sp_->sigma[static_cast<size_t>(b)];
        const auto& row = rows_[static_cast<size_t>(b)];
        OrbitFunction out;
        for (const auto& [mo, c] : f.terms) {
            for (const auto& [v, e] : mo) {
                int k = v / dim_, m = v % dim_;
                auto it = row.find(k);
                if (it == row.end()) continue;
                Monomial partial(mo);
                if (--partial[v] == 0) partial.erase(v);
                ScalarQt w = Rat(Rat(e) * sg) * c;
                for (const auto& [j, a] : it->second) {
                    Monomial nm(partial);
                    nm[var_id(j, m)] += 1;
                    of_add_into(out, nm, a * w);
                }
            }
        }
        return out;
    }

    /** PBW-order composition: the rightmost letter acts first. */
    OrbitFunction act_word(const Word& w, OrbitFunction f) const {
        for (size_t p = w.size(); p-- > 0;) {
            if (f.is_zero_fn()) break;
            f = act_slot(w[p], f);
        }
        return f;
    }

    OrbitFunction act_elt(const UeaElement& u, const OrbitFunction& f) const {
        OrbitFunction out;
        for (const auto& [w, c] : u) out = of_add(out, of_scale(ScalarQt(c), act_word(w, f)));
        return out;
    }

    /** {f,g} = sum_alpha (e_{-alpha}.f)(e_alpha.g) - (e_alpha.f)(e_{-alpha}.g)
     *  over the split's positive roots, in the scaled basis. */
    OrbitFunction poisson(const OrbitFunction& f, const OrbitFunction& g) const {
        OrbitFunction out;
        for (int ri : sp_->delta_plus) {
            int ns = sp_->neg_slot_of_root(ri), ps = sp_->pos_slot_of_root(ri);
            out = of_add(out, of_mul(act_slot(ns, f), act_slot(ps, g)));
            out = of_sub(out, of_mul(act_slot(ps, f), act_slot(ns, g)));
        }
        return out;
    }

    /** f * g = m(B.(f (x) g)) as a finite exact sum over B's terms.
     *
     *  Completeness certificate: the sum over the computed terms equals the
     *  full product iff every omitted term acts as zero. Normal monomials have
     *  nondecreasing letters and act rightmost-first, so any word of height
     *  beyond a window [m, m+H-1] (H = max split height) has a suffix whose
     *  height lands in the window; if every column word with height in some
     *  such window kills g — or symmetrically every row word kills f — all
     *  omitted terms vanish. No window inside the cutoff -> CutoffError. */
    OrbitFunction star(const TwoTensor& B, const OrbitFunction& f, const OrbitFunction& g) const {
        std::map<Word, OrbitFunction> xf, yg;
        OrbitFunction out;
        for (const auto& [xy, c] : B.terms) {
            auto ix = xf.find(xy.first);
            if (ix == xf.end()) ix = xf.emplace(xy.first, act_word(xy.first, f)).first;
            if (ix->second.is_zero_fn()) continue;
            auto iy = yg.find(xy.second);
            if (iy == yg.end()) iy = yg.emplace(xy.second, act_word(xy.second, g)).first;
            if (iy->second.is_zero_fn()) continue;
            out = of_add(out, of_scale(c, of_mul(ix->second, iy->second)));
        }
        if (!window_certified(B, g, false, &yg) && !window_certified(B, f, true, &xf))
            throw CutoffError("star product: no annihilation window of width " +
                              std::to_string(sp_->max_split_height()) + " inside height cutoff " +
                              std::to_string(B.cutoff) + "; rebuild with a larger cutoff");
        return out;
    }

    /** True when some height window [m, m+H-1] within the cutoff has every
     *  basis word on the given side annihilate the function. */
    bool window_certified(const TwoTensor& B, const OrbitFunction& fn, bool row_side,
                          std::map<Word, OrbitFunction>* cache = nullptr) const {
        int H = sp_->max_split_height();
        if (B.cutoff < H) return false;
        // all reachable degrees, grouped by height
        std::map<int, std::vector<const DegreeVec*>> by_height;
        for (const auto& [mu, blk] : B.blocks) by_height[blk.height].push_back(&mu);
        std::map<Word, OrbitFunction> local;
        std::map<Word, OrbitFunction>& c = cache ? *cache : local;
        auto dead = [&](const Word& w) {
            auto it = c.find(w);
            if (it == c.end()) it = c.emplace(w, act_word(w, fn)).first;
            return it->second.is_zero_fn();
        };
        for (int m = 1; m + H - 1 <= B.cutoff; ++m) {
            bool ok = true;
            for (int h = m; ok && h < m + H; ++h) {
                auto hit = by_height.find(h);
                if (hit == by_height.end()) continue;  // no degrees at this height
                for (const DegreeVec* mu : hit->second) {
                    const ShapovalovBlock& blk = B.blocks.at(*mu);
                    for (size_t q = 0; ok && q < blk.rows.size(); ++q)
                        ok = dead(row_side ? blk.rows[q] : blk.cols[q]);
                    if (!ok) break;
                }
            }
            if (ok) return true;
        }
        return false;
    }

    /** X[k,m] -> u_k*(Ad_{g^-1} u_m), extended multiplicatively. */
    ScalarQt evaluate(const OrbitFunction& f, const GroupPoint& p) const {
        ScalarQt acc{Rat(0)};
        for (const auto& [mo, c] : f.terms) {
            Rat v(1);
            for (const auto& [var, e] : mo) {
                int k = var / dim_, m = var % dim_;
                const Rat& x = p.ad_inv[static_cast<size_t>(k)][static_cast<size_t>(m)];
                for (int q = 0; q < e; ++q) v *= x;
            }
            acc = acc + v * c;
        }
        return acc;
    }

    std::string render(const OrbitFunction& f) const {
        if (f.terms.empty()) return "0";
        std::string out;
        for (const auto& [mo, c] : f.terms) {
            if (!out.empty()) out += " + ";
            out += "(" + c.str() + ")";
            for (const auto& [v, e] : mo) {
                int k = v / dim_, m = v % dim_;
                out += " X[" + sp_->cb.basis_name(k) + "," + sp_->cb.basis_name(m) + "]";
                if (e > 1) out += "^" + std::to_string(e);
            }
        }
        return out;
    }

private:
    const LeviSplit* sp_;
    int dim_;
    // rows_[b][k] = pairs (j, a): u_b.X[k,m] = sum_j a X[j,m], a = -(coeff of u_k in [u_b, u_j])
    std::vector<std::map<int, std::vector<std::pair<int, Rat>>>> rows_;
};

/** Deterministic test corpus: sums and products of momentum functions with
 *  small rational coefficients, of symbol degree <= max_degree. */
inline OrbitFunction random_momentum_poly(const OrbitCalc& oc, SeededRng& rng, int max_degree) {
    int dim = oc.dim();
    auto linear = [&]() {
        OrbitFunction f;
        int nterms = static_cast<int>(rng.pick(1, 2));
        for (int i = 0; i < nterms; ++i) {
            int m = static_cast<int>(rng.pick(0, dim - 1));
            f = of_add(f, of_scale(ScalarQt(rng.small_rat()), oc.momentum(m)));
        }
        return f;
    };
    int deg = static_cast<int>(rng.pick(1, max_degree));
    OrbitFunction f = linear();
    for (int d = 1; d < deg; ++d) f = of_mul(f, linear());
    if (rng.pick(0, 2) == 0) f = of_add(f, of_constant(ScalarQt(rng.small_rat())));
    return f;
}

/** Deterministic unipotent group point from the split's root vectors. */
inline GroupPoint random_group_point(const LeviSplit& sp, SeededRng& rng, int nletters) {
    std::vector<std::pair<int, Rat>> w;
    for (int i = 0; i < nletters; ++i) {
        int ri = static_cast<int>(rng.pick(0, sp.cb.rs.npos() - 1));
        bool neg = rng.pick(0, 1) == 0;
        int b = neg ? sp.cb.f_index(ri) : sp.cb.e_index(ri);
        w.push_back({b, rng.small_rat()});
    }
    return group_point(sp.cb, w);
}

/** One verification record: check id, hash of the check's sampled inputs,
 *  residual rendered exactly ("0" when the check holds), pass flag. */
struct CheckRecord {
    std::string check_id;
    std::string fingerprint;
    std::string residual = "0";
    bool pass = true;
    int degree_bound = 0;  // polynomial degree bound in point parameters (0 = n/a)
    bool diagnostic = false;  // informational only, never fails a suite
};

/** Content hash of a check's inputs, for the report's fingerprint column. */
inline std::string fp_inputs(const std::vector<std::string>& parts) {
    std::string all;
    for (const std::string& s : parts) {
        all += s;
        all += '\x1f';
    }
    return hex64(fnv1a64(all));
}

struct SuiteReport {
    std::string suite;
    std::vector<CheckRecord> records;

    bool all_pass() const {
        for (const auto& r : records)
            if (!r.pass) return false;
        return true;
    }
    void add(std::string id, std::string fp, const OrbitFunction& residual, const OrbitCalc& oc,
             int degree_bound = 0) {
        CheckRecord r;
        r.check_id = std::move(id);
        r.fingerprint = std::move(fp);
        r.pass = residual.is_zero_fn();
        if (!r.pass) r.residual = oc.render(residual);
        r.degree_bound = degree_bound;
        records.push_back(std::move(r));
    }
    void add_scalar(std::string id, std::string fp, const ScalarQt& residual, int degree_bound = 0) {
        CheckRecord r;
        r.check_id = std::move(id);
        r.fingerprint = std::move(fp);
        r.pass = residual.is_zero_fn();
        if (!r.pass) r.residual = residual.str();
        r.degree_bound = degree_bound;
        records.push_back(std::move(r));
    }
};

inline std::string index2(int i) {
    std::string s = std::to_string(i);
    return s.size() < 2 ? "0" + s : s;
}

/** (f*g)*h = f*(g*h) as functions on G: exact evaluation at unipotent points.
 *  The degree bound column records the residual's total degree in the point's
 *  word parameters, for a deterministic point-count argument. */
inline SuiteReport verify_associativity(const OrbitCalc& oc, const TwoTensor& B, SeededRng& rng, int ntriples,
                                        int npoints) {
    const LeviSplit& sp = oc.split();
    SuiteReport rep;
    rep.suite = "associativity";
    // one nilpotency bound for every letter: ad powers vanish beyond the root
    // ladder, 2*maxheight + 1 steps
    int nilp = 2 * sp.cb.rs.max_height + 1;
    for (int tr = 0; tr < ntriples; ++tr) {
        OrbitFunction f = random_momentum_poly(oc, rng, 2);
        OrbitFunction g = random_momentum_poly(oc, rng, 2);
        OrbitFunction h = random_momentum_poly(oc, rng, 2);
        std::string tfp = fp_inputs({oc.render(f), oc.render(g), oc.render(h)});
        OrbitFunction lhs = oc.star(B, oc.star(B, f, g), h);
        OrbitFunction rhs = oc.star(B, f, oc.star(B, g, h));
        OrbitFunction diff = of_sub(lhs, rhs);
        // the symbol-level associator need not vanish in the free model; record
        // it for diagnosis without affecting the suite outcome
        CheckRecord diag;
        diag.check_id = "associativity/triple" + index2(tr) + "/symbol-diagnostic";
        diag.fingerprint = tfp;
        diag.diagnostic = true;
        if (!diff.is_zero_fn()) diag.residual = std::to_string(diff.terms.size()) + " symbol terms";
        rep.records.push_back(diag);
        for (int pt = 0; pt < npoints; ++pt) {
            int letters = static_cast<int>(rng.pick(1, 4));
            GroupPoint p = random_group_point(sp, rng, letters);
            ScalarQt val = oc.evaluate(diff, p);
            int bound = of_degree(diff) * letters * nilp;
            std::string pfp = fp_inputs({tfp, point_str(sp.cb, p)});
            rep.add_scalar("associativity/triple" + index2(tr) + "/point" + index2(pt), pfp, val, bound);
        }
    }
    return rep;
}

/** Strong momentum map, exact at symbol level: for every basis element u_m
 *  and sampled f, f_m * f - f * f_m = t {f_m, f}. */
inline SuiteReport verify_momentum_map(const OrbitCalc& oc, const TwoTensor& B, SeededRng& rng, int nsamples) {
    const LeviSplit& sp = oc.split();
    SuiteReport rep;
    rep.suite = "momentum";
    ScalarQt t = ScalarQt::t();
    for (int s = 0; s < nsamples; ++s) {
        OrbitFunction f = random_momentum_poly(oc, rng, 3);
        for (int m = 0; m < sp.cb.dim; ++m) {
            OrbitFunction fm = oc.momentum(m);
            OrbitFunction comm = of_sub(oc.star(B, fm, f), oc.star(B, f, fm));
            OrbitFunction diff = of_sub(comm, of_scale(t, oc.poisson(fm, f)));
            rep.add("momentum-map/f" + index2(s) + "/" + sp.cb.basis_name(m),
                    fp_inputs({oc.render(f), sp.cb.basis_name(m)}), diff, oc);
        }
    }
    return rep;
}

/** The product-against-a-momentum-function truncation, exact at symbol level:
 *  f * f_m = f f_m + t sum_alpha (e_{-alpha}.f)(e_alpha.f_m), higher orders
 *  vanishing identically. */
inline SuiteReport verify_comp(const OrbitCalc& oc, const TwoTensor& B, SeededRng& rng, int nsamples) {
    const LeviSplit& sp = oc.split();
    SuiteReport rep;
    rep.suite = "momentum";  // reported under the momentum suite
    ScalarQt t = ScalarQt::t();
    for (int s = 0; s < nsamples; ++s) {
        OrbitFunction f = random_momentum_poly(oc, rng, 3);
        for (int m = 0; m < sp.cb.dim; ++m) {
            OrbitFunction fm = oc.momentum(m);
            OrbitFunction first;
            for (int ri : sp.delta_plus) {
                first = of_add(first, of_mul(oc.act_slot(sp.neg_slot_of_root(ri), f),
                                             oc.act_slot(sp.pos_slot_of_root(ri), fm)));
            }
            OrbitFunction rhs = of_add(of_mul(f, fm), of_scale(t, first));
            OrbitFunction diff = of_sub(oc.star(B, f, fm), rhs);
            rep.add("comp/f" + index2(s) + "/" + sp.cb.basis_name(m),
                    fp_inputs({oc.render(f), sp.cb.basis_name(m)}), diff, oc);
        }
    }
    return rep;
}

/** Order-0 and order-1 laws on the corpus: f*g - fg vanishes at t = 0, and
 *  the t-coefficient of f*g - g*f equals {f,g}. Both exact. */
inline SuiteReport verify_laws(const OrbitCalc& oc, const TwoTensor& B, SeededRng& rng, int nsamples) {
    SuiteReport rep;
    rep.suite = "laws";
    ScalarQt t = ScalarQt::t();
    for (int s = 0; s < nsamples; ++s) {
        OrbitFunction f = random_momentum_poly(oc, rng, 2);
        OrbitFunction g = random_momentum_poly(oc, rng, 2);
        std::string fp = fp_inputs({oc.render(f), oc.render(g)});
        OrbitFunction prod = oc.star(B, f, g);
        OrbitFunction order0 = of_sub(prod, of_mul(f, g));
        // divisibility by t: every coefficient's order at 0 must be >= 1
        bool div = true;
        std::string bad;
        for (const auto& [mo, c] : order0.terms)
            if (c.order_at_zero() < 1) {
                div = false;
                bad = c.str();
                break;
            }
        CheckRecord r0;
        r0.check_id = "order0/f" + index2(s);
        r0.fingerprint = fp;
        r0.pass = div;
        if (!div) r0.residual = bad;
        rep.records.push_back(r0);

        OrbitFunction comm = of_sub(prod, oc.star(B, g, f));
        // first-order coefficient: evaluate (comm - t*{f,g})/t at t=0 by order check
        OrbitFunction diff = of_sub(comm, of_scale(t, oc.poisson(f, g)));
        bool ok = true;
        std::string res;
        for (const auto& [mo, c] : diff.terms)
            if (c.order_at_zero() < 2) {
                ok = false;
                res = c.str();
                break;
            }
        CheckRecord r1;
        r1.check_id = "bracket/f" + index2(s);
        r1.fingerprint = fp;
        r1.pass = ok;
        if (!ok) r1.residual = res;
        rep.records.push_back(r1);
    }
    return rep;
}

/** Separation of variables: symbols built from the invariant-form dual of the
 *  lowest root vector are killed by every n_- letter, so f * g = f g exactly;
 *  mirror statement on the n_+ side. Both checked at symbol level. */
inline SuiteReport verify_separation(const OrbitCalc& oc, const TwoTensor& B, SeededRng& rng, int nsamples) {
    const LeviSplit& sp = oc.split();
    SuiteReport rep;
    rep.suite = "separation";
    int th = sp.cb.rs.highest_root_index();
    std::vector<Rat> beta_low(static_cast<size_t>(sp.cb.dim)), beta_high(static_cast<size_t>(sp.cb.dim));
    for (int k = 0; k < sp.cb.dim; ++k) {
        beta_low[static_cast<size_t>(k)] = sp.cb.killing(sp.cb.f_index(th), k);
        beta_high[static_cast<size_t>(k)] = sp.cb.killing(sp.cb.e_index(th), k);
    }
    for (int s = 0; s < nsamples; ++s) {
        int m = static_cast<int>(rng.pick(0, sp.cb.dim - 1));
        OrbitFunction f = oc.functional_symbol(beta_low, m);
        // the defining property: every n_- letter kills f
        OrbitFunction killed;
        for (int ri : sp.delta_plus) killed = of_add(killed, oc.act_slot(sp.neg_slot_of_root(ri), f));
        rep.add("separation/left-killed/f" + index2(s), fp_inputs({oc.render(f)}), killed, oc);
        OrbitFunction g = random_momentum_poly(oc, rng, 2);
        rep.add("separation/left/f" + index2(s), fp_inputs({oc.render(f), oc.render(g)}),
                of_sub(oc.star(B, f, g), of_mul(f, g)), oc);

        int m2 = static_cast<int>(rng.pick(0, sp.cb.dim - 1));
        OrbitFunction fh = oc.functional_symbol(beta_high, m2);
        OrbitFunction killed2;
        for (int ri : sp.delta_plus) killed2 = of_add(killed2, oc.act_slot(sp.pos_slot_of_root(ri), fh));
        rep.add("separation/right-killed/f" + index2(s), fp_inputs({oc.render(fh)}), killed2, oc);
        rep.add("separation/right/f" + index2(s), fp_inputs({oc.render(g), oc.render(fh)}),
                of_sub(oc.star(B, g, fh), of_mul(g, fh)), oc);
    }
    return rep;
}

/** Infinitesimal H-invariance: every centralizer letter annihilates f * g for
 *  momentum-generated f, g (the element's equivariance, order by order). */
inline SuiteReport verify_hinv(const OrbitCalc& oc, const TwoTensor& B, SeededRng& rng, int nsamples) {
    const LeviSplit& sp = oc.split();
    SuiteReport rep;
    rep.suite = "h-invariance";
    std::vector<int> lev_slots;
    for (int s = 0; s < sp.nslots(); ++s)
        if (sp.block[static_cast<size_t>(s)] == LeviSplit::kLev) lev_slots.push_back(s);
    for (int s = 0; s < nsamples; ++s) {
        OrbitFunction f = random_momentum_poly(oc, rng, 2);
        OrbitFunction g = random_momentum_poly(oc, rng, 2);
        OrbitFunction prod = oc.star(B, f, g);
        for (int xi : lev_slots)
            rep.add("h-invariance/f" + index2(s) + "/" + sp.slot_name(xi),
                    fp_inputs({oc.render(f), oc.render(g), sp.slot_name(xi)}), oc.act_slot(xi, prod), oc);
    }
    return rep;
}

}  // namespace orbitstar
