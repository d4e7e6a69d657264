#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "orbitstar/shapovalov.hpp"

namespace orbitstar {

namespace detail {

inline nlohmann::ordered_json poly_json(const Poly& p) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Rat& c : p.coeffs()) arr.push_back(rat_str(c));
    return arr;
}

inline Poly poly_parse(const nlohmann::json& arr) {
    std::vector<Rat> c;
    for (const auto& s : arr) c.push_back(rat_parse(s.get<std::string>()));
    return Poly(std::move(c));
}

inline nlohmann::ordered_json ratfunc_json(const ScalarQt& v) {
    nlohmann::ordered_json j;
    j["num"] = poly_json(v.num());
    j["den"] = poly_json(v.den());
    return j;
}

inline ScalarQt ratfunc_parse(const nlohmann::json& j) {
    return ScalarQt(poly_parse(j.at("num")), poly_parse(j.at("den")));
}

}  // namespace detail

/** Canonical identity of a cached pairing computation: everything the block
 *  entries depend on (series, rank, lambda values, the normalization actually
 *  applied, pairing mode). */
inline std::string cache_key_prefix(const LeviSplit& sp) {
    std::string k = "series=";
    k += sp.cb.rs.series;
    k += ";rank=" + std::to_string(sp.cb.rs.rank) + ";lambda=";
    for (size_t i = 0; i < sp.lambda_h.size(); ++i) k += (i ? "," : "") + rat_str(sp.lambda_h[i]);
    k += ";sigma=";
    for (size_t i = 0; i < sp.sigma.size(); ++i) k += (i ? "," : "") + rat_str(sp.sigma[i]);
    k += ";mode=lambda-over-t";
    return k;
}

/** Content-addressed store of Shapovalov blocks: one JSON file per (key,
 *  degree), named by the 64-bit content hash of the full key. Mismatched or
 *  unreadable files count as misses and are recomputed and overwritten. */
class BlockCache {
  public:
    BlockCache(std::filesystem::path dir, const LeviSplit& sp)
        : dir_(std::move(dir)), prefix_(cache_key_prefix(sp)) {
        std::filesystem::create_directories(dir_);
    }

    std::filesystem::path path_for(const DegreeVec& mu) const {
        return dir_ / (hex64(fnv1a64(prefix_ + ";mu=" + degree_str(mu))) + ".json");
    }

    bool load(const DegreeVec& mu, ShapovalovBlock& out) {
        std::ifstream in(path_for(mu));
        if (!in) return false;
        nlohmann::json j;
        try {
            in >> j;
            if (j.at("key").get<std::string>() != prefix_ + ";mu=" + degree_str(mu)) return false;
            ShapovalovBlock blk;
            blk.mu = mu;
            blk.height = j.at("height").get<int>();
            blk.mode = PairingMode::kLambdaOverT;
            for (const auto& w : j.at("rows")) blk.rows.push_back(w.get<Word>());
            for (const auto& w : j.at("cols")) blk.cols.push_back(w.get<Word>());
            for (const auto& row : j.at("entries")) {
                blk.entries.emplace_back();
                for (const auto& e : row) blk.entries.back().push_back(detail::ratfunc_parse(e));
            }
            for (const auto& row : j.at("inverse")) {
                blk.inverse.emplace_back();
                for (const auto& e : row) blk.inverse.back().push_back(detail::ratfunc_parse(e));
            }
            size_t n = blk.rows.size();
            if (blk.cols.size() != n || blk.entries.size() != n || blk.inverse.size() != n) return false;
            for (size_t i = 0; i < n; ++i)
                if (blk.entries[i].size() != n || blk.inverse[i].size() != n) return false;
            out = std::move(blk);
        } catch (const nlohmann::json::exception&) {
            return false;
        }
        ++hits;
        return true;
    }

    void store(const ShapovalovBlock& blk) {
        nlohmann::ordered_json j;
        j["key"] = prefix_ + ";mu=" + degree_str(blk.mu);
        j["height"] = blk.height;
        j["mode"] = "lambda-over-t";
        j["rows"] = blk.rows;
        j["cols"] = blk.cols;
        nlohmann::ordered_json entries = nlohmann::ordered_json::array();
        for (const auto& row : blk.entries) {
            nlohmann::ordered_json r = nlohmann::ordered_json::array();
            for (const auto& e : row) r.push_back(detail::ratfunc_json(e));
            entries.push_back(std::move(r));
        }
        j["entries"] = std::move(entries);
        nlohmann::ordered_json inverse = nlohmann::ordered_json::array();
        for (const auto& row : blk.inverse) {
            nlohmann::ordered_json r = nlohmann::ordered_json::array();
            for (const auto& e : row) r.push_back(detail::ratfunc_json(e));
            inverse.push_back(std::move(r));
        }
        j["inverse"] = std::move(inverse);
        std::ofstream out(path_for(blk.mu));
        out << j.dump(1) << "\n";
        ++stores;
    }

    BlockLoad loader() {
        return [this](const DegreeVec& mu, ShapovalovBlock& out) { return load(mu, out); };
    }
    BlockStore storer() {
        return [this](const ShapovalovBlock& blk) { store(blk); };
    }

    int hits = 0;
    int stores = 0;

  private:
    std::filesystem::path dir_;
    std::string prefix_;
};

}  // namespace orbitstar
