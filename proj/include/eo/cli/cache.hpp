#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "eo/parallel/exec.hpp"
#include "eo/wkb/hierarchy.hpp"

namespace eo::cli {

// "g,n,mu_1,...,mu_n"
std::string cache_key(int g, const std::vector<int>& mu);

struct CacheLoad {
    bool missing = false;
    std::size_t loaded = 0;
    std::vector<std::string> rejected;  // keys, each followed by recomputation on demand
    std::vector<std::string> warnings;
};

// --cache wins; otherwise $EO_CACHE_DIR/<model>.json; otherwise none.
std::optional<std::filesystem::path> resolve_cache_path(const std::string& explicit_path, wkb::Model model);

// Seeds the default memo of the model from the file. Catalan values must be non-negative integers,
// Hurwitz values non-negative rationals; anything else is rejected with a warning.
// A missing file is a cold start. An unparsable file is rejected as a whole.
CacheLoad load_cache(const std::filesystem::path& path, wkb::Model model);

// Writes the current memo snapshot of the model. Throws IoError.
void store_cache(const std::filesystem::path& path, wkb::Model model);

// Fills the model table for (g, n, max_degree) and returns it in cache form.
nlohmann::json table_json(wkb::Model model, int g, int n, int max_degree, parallel::Exec exec);

}  // namespace eo::cli
