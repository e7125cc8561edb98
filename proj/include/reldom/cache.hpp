#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

#include "reldom/homology.hpp"

namespace reldom {

namespace detail {

inline std::string fnv64_hex(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

template <class F>
nlohmann::ordered_json matrix_to_json(const Matrix<F>& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.field().to_string(m.at(i, j)));
        rows.push_back(row);
    }
    nlohmann::ordered_json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["entries"] = rows;
    return j;
}

template <class F>
Matrix<F> matrix_from_json(const F& f, const nlohmann::ordered_json& j) {
    Matrix<F> m(f, j.at("rows").get<int>(), j.at("cols").get<int>());
    const auto& rows = j.at("entries");
    for (int i = 0; i < m.rows(); ++i)
        for (int c = 0; c < m.cols(); ++c)
            m.at(i, c) = f.from_string(rows[i][c].get<std::string>());
    return m;
}

template <class F>
nlohmann::ordered_json module_to_json(const ModPtr<F>& m) {
    nlohmann::ordered_json j;
    j["name"] = m->name();
    j["dims"] = m->dims();
    nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
    for (size_t g = 0; g < m->algebra()->gens.size(); ++g)
        blocks.push_back(matrix_to_json(m->block(static_cast<int>(g))));
    j["blocks"] = blocks;
    return j;
}

template <class F>
ModPtr<F> module_from_json(const AlgPtr<F>& a, const nlohmann::ordered_json& j) {
    std::vector<int> dims = j.at("dims").get<std::vector<int>>();
    std::vector<Matrix<F>> blocks;
    for (const auto& b : j.at("blocks")) blocks.push_back(matrix_from_json(a->field, b));
    return std::make_shared<Module<F>>(a, dims, std::move(blocks),
                                       j.value("name", std::string()));
}

template <class F>
nlohmann::ordered_json map_to_json(const ModuleMap<F>& m) {
    nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
    for (const auto& b : m.b) blocks.push_back(matrix_to_json(b));
    return blocks;
}

}  // namespace detail

// Persist every cached minimal projective resolution of this algebra.
// One file per start module, keyed by a content hash; the full key material
// is stored inside, so a stale or colliding entry is detected and skipped.
template <class F>
void persist_resolution_cache(const std::string& dir, const AlgPtr<F>& a) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    for (const auto& [key, res] : caches_of(*a).proj_res) {
        if (!res || res->terms.empty()) continue;
        nlohmann::ordered_json j;
        j["schema"] = 1;
        j["kind"] = "projective_resolution";
        j["algebra_key"] = a->key();
        j["module_key"] = key;
        j["start"] = detail::module_to_json<F>(res->start);
        j["complete"] = res->complete;
        if (res->repeat) j["repeat"] = {res->repeat->first, res->repeat->second};
        nlohmann::ordered_json terms = nlohmann::ordered_json::array();
        nlohmann::ordered_json maps = nlohmann::ordered_json::array();
        nlohmann::ordered_json syz = nlohmann::ordered_json::array();
        nlohmann::ordered_json syzinc = nlohmann::ordered_json::array();
        nlohmann::ordered_json content = nlohmann::ordered_json::array();
        for (int t = 0; t < res->depth(); ++t) {
            terms.push_back(detail::module_to_json<F>(res->terms[t]));
            maps.push_back(detail::map_to_json(res->maps[t]));
            syz.push_back(detail::module_to_json<F>(res->syzygies[t]));
            syzinc.push_back(detail::map_to_json(res->syz_inc[t]));
            content.push_back(res->content[t]);
        }
        j["terms"] = terms;
        j["maps"] = maps;
        j["syzygies"] = syz;
        j["syzygy_inclusions"] = syzinc;
        j["content"] = content;
        auto name = detail::fnv64_hex(a->key() + "|" + key) + ".json";
        auto tmp = fs::path(dir) / ("tmp_" + name);
        auto final = fs::path(dir) / name;
        {
            std::ofstream out(tmp);
            out << j.dump();
        }
        fs::rename(tmp, final);  // atomic publish
    }
}

// Load every matching cache file for this algebra into its resolution cache.
template <class F>
void load_resolution_cache(const std::string& dir, const AlgPtr<F>& a) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) return;
    auto& cache = caches_of(*a).proj_res;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() != ".json") continue;
        nlohmann::ordered_json j;
        try {
            std::ifstream in(entry.path());
            in >> j;
        } catch (...) {
            continue;  // unreadable: treated as absent
        }
        try {
            if (j.value("kind", "") != "projective_resolution") continue;
            if (j.value("algebra_key", "") != a->key()) continue;  // stale or foreign
            auto start = detail::module_from_json(a, j.at("start"));
            if (start->key() != j.value("module_key", "")) continue;  // hash mismatch
            if (cache.count(start->key())) continue;
            auto res = std::make_shared<Resolution<F>>();
            res->projective = true;
            res->start = start;
            res->complete = j.value("complete", false);
            if (j.contains("repeat"))
                res->repeat = {j["repeat"][0].get<int>(), j["repeat"][1].get<int>()};
            const auto& terms = j.at("terms");
            const auto& maps = j.at("maps");
            const auto& syz = j.at("syzygies");
            const auto& syzinc = j.at("syzygy_inclusions");
            const auto& content = j.at("content");
            for (size_t t = 0; t < terms.size(); ++t) {
                auto term = detail::module_from_json(a, terms[t]);
                auto sy = detail::module_from_json(a, syz[t]);
                std::vector<Matrix<F>> mb, sb;
                for (const auto& b : maps[t]) mb.push_back(detail::matrix_from_json(a->field, b));
                for (const auto& b : syzinc[t]) sb.push_back(detail::matrix_from_json(a->field, b));
                ModPtr<F> prev = t == 0 ? start : res->terms[t - 1];
                res->terms.push_back(term);
                res->maps.push_back(ModuleMap<F>{term, prev, std::move(mb)});
                res->syzygies.push_back(sy);
                res->syz_inc.push_back(ModuleMap<F>{sy, term, std::move(sb)});
                res->content.push_back(content[t].get<std::vector<std::pair<int, int>>>());
            }
            cache[start->key()] = res;
        } catch (...) {
            continue;  // malformed entry: never served
        }
    }
}

}  // namespace reldom
