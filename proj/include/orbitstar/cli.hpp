#pragma once

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "orbitstar/cache.hpp"
#include "orbitstar/invariants.hpp"
#include "orbitstar/orbit.hpp"

namespace orbitstar {

/** Everything one run needs. lambda holds the values lambda(h_i) in simple
 *  coroot order; fundamental-weight coordinates coincide with those values
 *  (both equal <lambda, alpha_i-coroot>), so the two input flags share this
 *  field. */
struct RunConfig {
    char series = 'A';
    int rank = 1;
    std::vector<Rat> lambda;  // empty = all ones
    int cutoff = 6;
    std::vector<std::string> suites;  // empty = all
    std::uint64_t seed = 1;
    std::string cache_dir;  // empty = caching off
    std::string output;     // empty = stdout
    std::string fault;      // "" or "scale-t"
    int grid = -1;          // invariants: grid bound per coordinate
    std::vector<Rat> xi;    // invariants: single weight, fundamental coordinates
    bool xi_short_fundamental = false;
    int order = -1;  // dump-b: series order (default: the complete range)
};

inline std::vector<Rat> parse_rat_list(const std::string& text) {
    std::vector<Rat> out;
    std::string cur;
    std::stringstream ss(text);
    while (std::getline(ss, cur, ',')) out.push_back(rat_parse(cur));
    return out;
}

inline std::string rat_list_str(const std::vector<Rat>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + rat_str(v[i]);
    return out;
}

/** The shared build: root system -> Chevalley basis -> centralizer split with
 *  scaled root vectors -> rewriting engine. */
struct Pipeline {
    LeviSplit sp;
    std::unique_ptr<Uea> U;

    explicit Pipeline(const RunConfig& cfg)
        : sp(normalize_root_vectors(centralizer_split(
              build_chevalley_basis(build_root_system(cfg.series, cfg.rank)),
              cfg.lambda.empty() ? std::vector<Rat>(static_cast<size_t>(cfg.rank), Rat(1)) : cfg.lambda))) {
        if (!cfg.lambda.empty() && static_cast<int>(cfg.lambda.size()) != cfg.rank)
            throw ConfigError("lambda needs exactly " + std::to_string(cfg.rank) + " coordinates");
        U = std::make_unique<Uea>(&sp);
    }
};

inline TwoTensor build_b(Pipeline& pipe, const RunConfig& cfg, BlockCache* cache) {
    if (cfg.cutoff < 1) throw ConfigError("cutoff must be >= 1");
    if (cache) return compute_B(*pipe.U, cfg.cutoff, cache->loader(), cache->storer());
    return compute_B(*pipe.U, cfg.cutoff);
}

// ---------------------------------------------------------------------------
// verification suites, in their fixed reporting order

inline std::string word_str(const LeviSplit& sp, const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) out += (i ? "." : "") + sp.slot_name(w[static_cast<size_t>(i)]);
    return out;
}

/** Suite 1: algebraic bedrock. Jacobi on all basis triples, rewriting
 *  confluence (leftmost vs rightmost strategies) on random words, antipode
 *  involutivity. */
inline SuiteReport structure_suite(Uea& U, SeededRng& rng) {
    const LeviSplit& sp = U.split();
    const ChevalleyBasis& cb = sp.cb;
    SuiteReport rep;
    rep.suite = "structure";

    bool jac = true;
    std::string bad;
    for (int i = 0; i < cb.dim && jac; ++i)
        for (int j = 0; j < cb.dim && jac; ++j)
            for (int k = 0; k < cb.dim && jac; ++k) {
                AlgElt acc = cb.bracket(cb.basis_bracket(i, j), AlgElt{{k, Rat(1)}});
                acc = elt_add(acc, cb.bracket(cb.basis_bracket(j, k), AlgElt{{i, Rat(1)}}));
                acc = elt_add(acc, cb.bracket(cb.basis_bracket(k, i), AlgElt{{j, Rat(1)}}));
                for (const auto& [b, c] : acc)
                    if (!is_zero(c)) {
                        jac = false;
                        bad = cb.basis_name(i) + "," + cb.basis_name(j) + "," + cb.basis_name(k);
                    }
            }
    CheckRecord rj;
    rj.check_id = "structure/jacobi(all-basis-triples)";
    rj.fingerprint = fp_inputs({std::string(1, cb.rs.series), std::to_string(cb.rs.rank)});
    rj.pass = jac;
    if (!jac) rj.residual = "fails at " + bad;
    rep.records.push_back(rj);

    for (int w = 0; w < 100; ++w) {
        Word word;
        int len = static_cast<int>(rng.pick(1, 6));
        for (int l = 0; l < len; ++l) word.push_back(static_cast<int>(rng.pick(0, sp.nslots() - 1)));
        UeaElement a = U.normal_form(word, Uea::kLeftmost);
        UeaElement b = U.normal_form(word, Uea::kRightmost);
        UeaElement diff = uea_add(a, uea_scale(Rat(-1), b));
        CheckRecord r;
        r.check_id = "structure/confluence/w" + index2(w);
        r.fingerprint = fp_inputs({word_str(sp, word)});
        r.pass = diff.empty();
        if (!r.pass) r.residual = U.render(diff);
        rep.records.push_back(r);
    }

    for (int w = 0; w < 50; ++w) {
        Word word;
        int len = static_cast<int>(rng.pick(1, 5));
        for (int l = 0; l < len; ++l) word.push_back(static_cast<int>(rng.pick(0, sp.nslots() - 1)));
        UeaElement u = U.from_word(word);
        UeaElement ss = U.antipode(U.antipode(u));
        UeaElement diff = uea_add(ss, uea_scale(Rat(-1), u));
        CheckRecord r;
        r.check_id = "structure/antipode-involution/w" + index2(w);
        r.fingerprint = fp_inputs({word_str(sp, word)});
        r.pass = diff.empty();
        if (!r.pass) r.residual = U.render(diff);
        rep.records.push_back(r);
    }
    return rep;
}

/** Suite 2: the pairing blocks behind B. Inverse-product identity per degree,
 *  with the per-degree t-order floor recorded (diagnostic where it exceeds the
 *  block height; the hard per-entry bound is enforced during the build). */
inline SuiteReport pairing_suite(const TwoTensor& B) {
    SuiteReport rep;
    rep.suite = "pairing";
    for (const auto& [mu, blk] : B.blocks) {
        size_t n = blk.rows.size();
        bool ok = true;
        std::string res;
        for (size_t i = 0; i < n && ok; ++i)
            for (size_t j = 0; j < n && ok; ++j) {
                ScalarQt acc{Rat(0)};
                for (size_t k = 0; k < n; ++k) acc = acc + blk.entries[i][k] * blk.inverse[k][j];
                ScalarQt want{i == j ? Rat(1) : Rat(0)};
                if (!(acc == want)) {
                    ok = false;
                    res = "(" + std::to_string(i) + "," + std::to_string(j) + ") = " + acc.str();
                }
            }
        CheckRecord r;
        r.check_id = "pairing/inverse-block/" + degree_str(mu);
        r.fingerprint = fp_inputs({cache_key_prefix(*B.sp), degree_str(mu)});
        r.pass = ok;
        if (!ok) r.residual = res;
        rep.records.push_back(r);
    }
    for (const auto& st : B.stats) {
        if (st.size == 0 || st.meets_height_order) continue;
        CheckRecord d;
        d.check_id = "pairing/height-order/" + degree_str(st.mu);
        d.fingerprint = fp_inputs({cache_key_prefix(*B.sp), degree_str(st.mu)});
        d.diagnostic = true;
        d.residual = "min t-order " + std::to_string(st.min_order) + " < height " + std::to_string(st.height);
        rep.records.push_back(d);
    }
    return rep;
}

/** Suite 3 wrapper: the column identity of B itself plus the two symbol-level
 *  momentum suites. */
inline SuiteReport momentum_suite(const OrbitCalc& oc, const TwoTensor& B, SeededRng& rng, int nsamples) {
    SuiteReport rep;
    rep.suite = "momentum";
    MomentumCheck mc = momentum_identity_check(B);
    CheckRecord r;
    r.check_id = "momentum/column-identity";
    r.fingerprint = fp_inputs({cache_key_prefix(*B.sp), std::to_string(B.cutoff)});
    r.pass = mc.pass;
    if (!mc.pass) r.residual = mc.detail;
    rep.records.push_back(r);
    SuiteReport comp = verify_comp(oc, B, rng, nsamples);
    SuiteReport mm = verify_momentum_map(oc, B, rng, nsamples);
    rep.records.insert(rep.records.end(), comp.records.begin(), comp.records.end());
    rep.records.insert(rep.records.end(), mm.records.begin(), mm.records.end());
    return rep;
}

struct SuiteSpecEntry {
    int index;
    const char* name;
};

inline const std::vector<SuiteSpecEntry>& suite_order() {
    static const std::vector<SuiteSpecEntry> order = {{1, "structure"},     {2, "pairing"}, {3, "momentum"},
                                                      {4, "associativity"}, {5, "laws"},    {6, "separation"},
                                                      {7, "h-invariance"}};
    return order;
}

inline bool suite_selected(const RunConfig& cfg, const std::string& name) {
    if (cfg.suites.empty()) return true;
    for (const std::string& s : cfg.suites)
        if (s == name) return true;
    return false;
}

inline void check_suite_names(const RunConfig& cfg) {
    for (const std::string& s : cfg.suites) {
        bool known = false;
        for (const auto& e : suite_order()) known = known || s == e.name;
        if (!known) {
            std::string valid;
            for (const auto& e : suite_order()) valid += std::string(valid.empty() ? "" : ", ") + e.name;
            throw ConfigError("unknown suite '" + s + "' (valid: " + valid + ")");
        }
    }
}

inline std::string config_fingerprint(const RunConfig& cfg) {
    return fp_inputs({std::string(1, cfg.series), std::to_string(cfg.rank), rat_list_str(cfg.lambda),
                      std::to_string(cfg.cutoff), std::to_string(cfg.seed), cfg.fault});
}

inline nlohmann::ordered_json report_json(const RunConfig& cfg, const std::vector<SuiteReport>& suites,
                                          const std::vector<int>& indices) {
    nlohmann::ordered_json j;
    j["tool"] = "orbitstar";
    nlohmann::ordered_json c;
    c["series"] = std::string(1, cfg.series);
    c["rank"] = cfg.rank;
    c["lambda"] = rat_list_str(cfg.lambda.empty() ? std::vector<Rat>(static_cast<size_t>(cfg.rank), Rat(1))
                                                  : cfg.lambda);
    c["cutoff"] = cfg.cutoff;
    c["seed"] = cfg.seed;
    c["fault"] = cfg.fault;
    j["config"] = std::move(c);
    j["fingerprint"] = config_fingerprint(cfg);
    bool all = true;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (size_t s = 0; s < suites.size(); ++s) {
        nlohmann::ordered_json js;
        js["suite"] = suites[s].suite;
        js["index"] = indices[s];
        nlohmann::ordered_json recs = nlohmann::ordered_json::array();
        bool pass = true;
        for (const CheckRecord& r : suites[s].records) {
            nlohmann::ordered_json jr;
            jr["check_id"] = r.check_id;
            jr["fingerprint"] = r.fingerprint;
            jr["residual"] = r.residual;
            jr["pass"] = r.pass;
            if (r.degree_bound > 0) jr["degree_bound"] = r.degree_bound;
            if (r.diagnostic) jr["diagnostic"] = true;
            recs.push_back(std::move(jr));
            pass = pass && r.pass;
        }
        js["records"] = std::move(recs);
        js["pass"] = pass;
        all = all && pass;
        arr.push_back(std::move(js));
    }
    j["suites"] = std::move(arr);
    j["pass"] = all;
    return j;
}

inline void emit_document(const RunConfig& cfg, const std::string& text) {
    if (cfg.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.output);
    if (!out) throw ConfigError("cannot open output path '" + cfg.output + "'");
    out << text;
}

// ---------------------------------------------------------------------------
// subcommands

inline int cmd_build(const RunConfig& cfg) {
    Pipeline pipe(cfg);
    std::unique_ptr<BlockCache> cache;
    if (!cfg.cache_dir.empty()) cache = std::make_unique<BlockCache>(cfg.cache_dir, pipe.sp);
    TwoTensor B = build_b(pipe, cfg, cache.get());

    std::ostringstream doc;
    doc << "orbitstar build: series " << cfg.series << cfg.rank << ", lambda(h) = "
        << rat_list_str(pipe.sp.lambda_h) << "\n";
    doc << "split: " << pipe.sp.delta_plus.size() << " positive roots, max height "
        << pipe.sp.max_split_height() << ", algebra dimension " << pipe.sp.cb.dim << "\n";
    int nblocks = 0;
    for (const auto& st : B.stats)
        if (st.size > 0) ++nblocks;
    doc << "cutoff " << cfg.cutoff << ": " << nblocks << " blocks + mu=0\n";
    for (const auto& st : B.stats) {
        if (st.size == 0) continue;
        doc << "  degree " << degree_str(st.mu) << " height " << st.height << " size " << st.size
            << " det-guard ok min-t-order " << st.min_order << " height-order "
            << (st.meets_height_order ? "met" : "exceeded-below") << "\n";
    }
    int complete = pipe.sp.max_split_height() > 0 ? cfg.cutoff / pipe.sp.max_split_height() : 0;
    BSeries bs = b_series(B, complete);
    doc << "b-series through t^" << complete << " (complete at this cutoff):\n";
    for (const auto& [xy, coeffs] : bs.coeff) {
        doc << "  " << word_str(pipe.sp, xy.first) << " (x) " << word_str(pipe.sp, xy.second) << " : "
            << Poly(coeffs).str("t") << "\n";
    }
    emit_document(cfg, doc.str());
    if (cache)
        std::cerr << "cache " << cfg.cache_dir << ": " << cache->stores << " stored, " << cache->hits
                  << " hits\n";
    return 0;
}

inline int cmd_verify(const RunConfig& cfg) {
    check_suite_names(cfg);
    Pipeline pipe(cfg);
    std::unique_ptr<BlockCache> cache;
    if (!cfg.cache_dir.empty()) cache = std::make_unique<BlockCache>(cfg.cache_dir, pipe.sp);
    TwoTensor B = build_b(pipe, cfg, cache.get());
    if (cfg.fault == "scale-t") B = perturb_scale_t(B);
    OrbitCalc oc(&pipe.sp);
    SeededRng rng(cfg.seed);

    std::vector<SuiteReport> suites;
    std::vector<int> indices;
    for (const auto& entry : suite_order()) {
        if (!suite_selected(cfg, entry.name)) continue;
        SuiteReport rep;
        std::string name = entry.name;
        if (name == "structure")
            rep = structure_suite(*pipe.U, rng);
        else if (name == "pairing")
            rep = pairing_suite(B);
        else if (name == "momentum")
            rep = momentum_suite(oc, B, rng, 3);
        else if (name == "associativity")
            rep = verify_associativity(oc, B, rng, 4, 3);
        else if (name == "laws")
            rep = verify_laws(oc, B, rng, 4);
        else if (name == "separation")
            rep = verify_separation(oc, B, rng, 4);
        else
            rep = verify_hinv(oc, B, rng, 2);
        suites.push_back(std::move(rep));
        indices.push_back(entry.index);
    }
    nlohmann::ordered_json j = report_json(cfg, suites, indices);
    emit_document(cfg, j.dump(1) + "\n");
    return j["pass"].get<bool>() ? 0 : 1;
}

inline int cmd_invariants(const RunConfig& cfg) {
    if (cfg.grid >= 0 && (!cfg.xi.empty() || cfg.xi_short_fundamental))
        throw ConfigError("--grid and --xi are mutually exclusive");
    Pipeline pipe(cfg);
    const RootSystem& rs = pipe.sp.cb.rs;

    std::ostringstream doc;
    CharClass cc = characteristic_class(pipe.sp);
    doc << "theta (simple-root coordinates): order0 = [";
    for (size_t i = 0; i < cc.order0.size(); ++i) doc << (i ? ", " : "") << cc.order0[i].str();
    doc << "], order1 = [";
    for (size_t i = 0; i < cc.order1.size(); ++i) doc << (i ? ", " : "") << cc.order1[i].str();
    doc << "]\n";

    std::vector<std::vector<Rat>> rows;  // fundamental coordinates
    if (cfg.xi_short_fundamental) {
        int short_idx = 0;
        for (int j = 1; j < rs.rank; ++j)
            if (rs.half_sq[static_cast<size_t>(j)] < rs.half_sq[static_cast<size_t>(short_idx)]) short_idx = j;
        std::vector<Rat> fund(static_cast<size_t>(rs.rank), Rat(0));
        fund[static_cast<size_t>(short_idx)] = Rat(1);
        rows.push_back(std::move(fund));
    } else if (!cfg.xi.empty()) {
        if (static_cast<int>(cfg.xi.size()) != rs.rank)
            throw ConfigError("xi needs exactly " + std::to_string(rs.rank) + " coordinates");
        rows.push_back(cfg.xi);
    } else {
        int bound = cfg.grid >= 0 ? cfg.grid : 2;
        std::vector<Rat> fund(static_cast<size_t>(rs.rank), Rat(0));
        std::function<void(int)> walk = [&](int j) {
            if (j == rs.rank) {
                rows.push_back(fund);
                return;
            }
            for (int k = 0; k <= bound; ++k) {
                fund[static_cast<size_t>(j)] = Rat(k);
                walk(j + 1);
            }
        };
        walk(0);
    }

    for (int j = 0; j < rs.rank; ++j) doc << "k" << j + 1 << ",";
    doc << "qdim,freudenthal,match\n";
    for (const auto& fund : rows) {
        Weight mu = rs.fund_to_root(fund);
        Rat q = quantum_dimension(rs, pipe.sp, RescaledWeight{mu});
        doc << rat_list_str(fund) << "," << rat_str(q) << ",";
        bool dominant_integral = true;
        for (int j = 0; j < rs.rank; ++j)
            dominant_integral =
                dominant_integral && fund[static_cast<size_t>(j)].get_den() == 1 && fund[static_cast<size_t>(j)] >= 0;
        if (!dominant_integral) {
            doc << "-,skipped: not dominant integral\n";
            continue;
        }
        Rat fd = freudenthal_dim(rs, mu);
        doc << rat_str(fd) << "," << (q == fd ? "true" : "false") << "\n";
    }
    emit_document(cfg, doc.str());
    return 0;
}

inline int cmd_dump_b(const RunConfig& cfg) {
    Pipeline pipe(cfg);
    std::unique_ptr<BlockCache> cache;
    if (!cfg.cache_dir.empty()) cache = std::make_unique<BlockCache>(cfg.cache_dir, pipe.sp);
    TwoTensor B = build_b(pipe, cfg, cache.get());
    int complete = pipe.sp.max_split_height() > 0 ? cfg.cutoff / pipe.sp.max_split_height() : 0;
    int order = cfg.order >= 0 ? cfg.order : complete;
    BSeries bs = b_series(B, order);
    std::ostringstream doc;
    doc << "b-series of " << cfg.series << cfg.rank << " lambda(h) = " << rat_list_str(pipe.sp.lambda_h)
        << " through t^" << order << " (cutoff " << cfg.cutoff << ")\n";
    for (const auto& [xy, coeffs] : bs.coeff)
        doc << word_str(pipe.sp, xy.first) << " (x) " << word_str(pipe.sp, xy.second) << " : "
            << Poly(coeffs).str("t") << "\n";
    emit_document(cfg, doc.str());
    return 0;
}

}  // namespace orbitstar
