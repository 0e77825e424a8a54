#include "eo/cli/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "eo/catalan/counts.hpp"
#include "eo/errors.hpp"
#include "eo/hurwitz/counts.hpp"

namespace eo::cli {

namespace fs = std::filesystem;
using algebra::Rational;

std::string cache_key(int g, const std::vector<int>& mu) {
    std::string k = std::to_string(g) + "," + std::to_string(mu.size());
    for (int m : mu) k += "," + std::to_string(m);
    return k;
}

namespace {

std::pair<int, std::vector<int>> parse_key(const std::string& key) {
    std::vector<int> f;
    std::stringstream ss(key);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size()) throw CorruptCache("malformed key " + key);
        f.push_back(v);
    }
    if (f.size() < 3 || f[1] != static_cast<int>(f.size()) - 2) throw CorruptCache("malformed key " + key);
    return {f[0], std::vector<int>(f.begin() + 2, f.end())};
}

}  // namespace

std::optional<fs::path> resolve_cache_path(const std::string& explicit_path, wkb::Model model) {
    if (!explicit_path.empty()) return fs::path(explicit_path);
    if (const char* dir = std::getenv("EO_CACHE_DIR"); dir && *dir) return fs::path(dir) / (wkb::model_name(model) + ".json");
    return std::nullopt;
}

CacheLoad load_cache(const fs::path& path, wkb::Model model) {
    CacheLoad out;
    if (!fs::exists(path)) {
        out.missing = true;
        return out;
    }
    std::ifstream in(path);
    if (!in) throw IoError("cannot read " + path.string());
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
        out.warnings.push_back("cache " + path.string() + " is not a JSON object; ignored");
        return out;
    }
    for (const auto& [key, value] : j.items()) {
        try {
            if (!value.is_string()) throw CorruptCache("value is not a string");
            auto [g, mu] = parse_key(key);
            Rational v = algebra::parse_rational(value.get<std::string>());
            if (v < 0) throw CorruptCache("negative value");
            if (model == wkb::Model::catalan) {
                if (!algebra::is_integer(v)) throw CorruptCache("non-integral count " + value.get<std::string>());
                auto k = catalan::canonical_key(g, mu);
                if (!k) throw CorruptCache("count is identically zero");
                catalan::default_counter().seed(*k, v.get_num());
            } else {
                auto k = hurwitz::canonical_key(g, mu);
                if (!k) throw CorruptCache("no such Hurwitz number");
                hurwitz::default_counter().seed(*k, v);
            }
            ++out.loaded;
        } catch (const std::exception& e) {
            out.rejected.push_back(key);
            out.warnings.push_back("rejected cache entry " + key + ": " + e.what() + "; will recompute");
        }
    }
    return out;
}

void store_cache(const fs::path& path, wkb::Model model) {
    nlohmann::json j = nlohmann::json::object();
    if (model == wkb::Model::catalan)
        for (const auto& [k, v] : catalan::default_counter().snapshot()) j[cache_key(k.first, k.second)] = algebra::to_string(v);
    else
        for (const auto& [k, v] : hurwitz::default_counter().snapshot()) j[cache_key(k.first, k.second)] = algebra::to_string(v);
    std::error_code ec;
    if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
    std::ofstream os(path);
    if (!os) throw IoError("cannot write " + path.string());
    os << j.dump(1) << '\n';
    if (!os) throw IoError("write failed: " + path.string());
}

nlohmann::json table_json(wkb::Model model, int g, int n, int max_degree, parallel::Exec exec) {
    nlohmann::json j = nlohmann::json::object();
    if (model == wkb::Model::catalan) {
        catalan::CatalanTable t(g, n, max_degree, exec);
        for (const auto& [k, v] : t.entries()) {
            catalan::default_counter().seed(k, v);
            j[cache_key(k.first, k.second)] = algebra::to_string(v);
        }
    } else {
        hurwitz::HurwitzTable t(g, n, max_degree, exec);
        for (const auto& [k, v] : t.entries()) {
            hurwitz::default_counter().seed(k, v);
            j[cache_key(k.first, k.second)] = algebra::to_string(v);
        }
    }
    return j;
}

}  // namespace eo::cli
