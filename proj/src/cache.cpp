#include "ergm/cache.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>

#include "ergm/errors.hpp"
#include "ergm/rational.hpp"

namespace ergm {

namespace {

using nlohmann::json;

[[noreturn]] void defect(const std::string& what) { throw CacheError("cache: " + what); }

std::uint64_t read_uint(const json& j, const char* field) {
    if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() &&
                                   j.get<std::int64_t>() < 0))
        defect(std::string(field) + " must be a nonnegative integer");
    return j.get<std::uint64_t>();
}

}  // namespace

nlohmann::json cache_to_json(const RealizableSet& set) {
    json j;
    j["cache_version"] = kCacheVersion;
    j["k"] = set.k;
    json names = json::array();
    for (const auto& spec : set.specs) names.push_back(std::string(stat_kind_name(spec.kind)));
    j["statistics"] = std::move(names);
    j["total_graphs"] = set.total_graphs;
    json points = json::array();
    for (std::size_t i = 0; i < set.points.size(); ++i) {
        json pt;
        json coords = json::array();
        for (const Rat& c : set.points[i]) coords.push_back(to_fraction_string(c));
        pt["coords"] = std::move(coords);
        pt["multiplicity"] = set.multiplicities[i];
        points.push_back(std::move(pt));
    }
    j["points"] = std::move(points);
    return j;
}

RealizableSet cache_from_json(const nlohmann::json& j) {
    if (!j.is_object()) defect("expected a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        if (key != "cache_version" && key != "k" && key != "statistics" &&
            key != "total_graphs" && key != "points")
            defect("unknown field '" + key + "'");
    }
    for (const char* field : {"cache_version", "k", "statistics", "total_graphs", "points"})
        if (!j.contains(field)) defect(std::string("missing field '") + field + "'");

    if (read_uint(j["cache_version"], "cache_version") != static_cast<std::uint64_t>(kCacheVersion))
        defect("unsupported cache_version");

    RealizableSet set;
    if (!j["k"].is_number_integer()) defect("k must be an integer");
    const std::int64_t k = j["k"].get<std::int64_t>();
    if (k < 1 || k > kMaxVertices) defect("k out of range");
    set.k = static_cast<int>(k);

    if (!j["statistics"].is_array() || j["statistics"].empty())
        defect("statistics must be a nonempty array");
    std::set<std::string> seen;
    for (const json& entry : j["statistics"]) {
        if (!entry.is_string()) defect("statistics entries must be strings");
        const std::string name = entry.get<std::string>();
        const auto kind = stat_kind_from_name(name);
        if (!kind) defect("unknown statistic '" + name + "'");
        if (!seen.insert(name).second) defect("duplicate statistic '" + name + "'");
        set.specs.push_back(make_spec(*kind));
    }
    const std::size_t n = set.specs.size();

    if (!j["points"].is_array() || j["points"].empty()) defect("points must be a nonempty array");
    std::uint64_t total = 0;
    for (const json& entry : j["points"]) {
        if (!entry.is_object() || !entry.contains("coords") || !entry.contains("multiplicity") ||
            entry.size() != 2)
            defect("each point needs exactly 'coords' and 'multiplicity'");
        if (!entry["coords"].is_array() || entry["coords"].size() != n)
            defect("point coords must have one entry per statistic");
        RatVec coords;
        for (const json& c : entry["coords"]) {
            if (!c.is_string()) defect("coords entries must be \"p/q\" strings");
            try {
                coords.push_back(parse_rational(c.get<std::string>()));
            } catch (const Error& e) {
                defect(e.what());
            }
        }
        const std::uint64_t mult = read_uint(entry["multiplicity"], "multiplicity");
        if (mult == 0) defect("multiplicity must be positive");
        if (!set.points.empty() && !lex_less(set.points.back(), coords))
            defect("points must be strictly ascending in lex order");
        set.points.push_back(std::move(coords));
        set.multiplicities.push_back(mult);
        total += mult;
    }

    set.total_graphs = total;
    if (read_uint(j["total_graphs"], "total_graphs") != total)
        defect("total_graphs does not match the sum of multiplicities");
    if (total != graph_count(set.k))
        defect("multiplicities do not cover all graphs on " + std::to_string(set.k) +
               " vertices");
    return set;
}

void save_cache(const RealizableSet& set, const std::string& path) {
    namespace fs = std::filesystem;
    std::error_code ec;
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path(), ec);

    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw CacheError("cache: cannot write '" + tmp + "'");
        out << cache_to_json(set).dump(2) << '\n';
        if (!out) throw CacheError("cache: write failed for '" + tmp + "'");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw CacheError("cache: cannot move '" + tmp + "' into place");
    }
}

RealizableSet load_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CacheError("cache: cannot open '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw CacheError("cache: '" + path + "' is not valid JSON: " + e.what());
    }
    return cache_from_json(j);
}

std::optional<std::string> default_cache_path(int k, const std::vector<StatisticSpec>& specs) {
    const char* dir = std::getenv("ERGMX_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return std::nullopt;
    std::string name = "k" + std::to_string(k);
    for (const auto& spec : specs) name += "_" + std::string(stat_kind_name(spec.kind));
    return std::string(dir) + "/" + name + ".json";
}

RealizableSet realizable_set_cached(int k, const std::vector<StatisticSpec>& specs,
                                    const std::optional<std::string>& explicit_path,
                                    CacheOutcome* outcome) {
    CacheOutcome local;
    CacheOutcome& out = outcome != nullptr ? *outcome : local;
    out = CacheOutcome{};

    const std::optional<std::string> path =
        explicit_path ? explicit_path : default_cache_path(k, specs);
    if (!path) return realizable_set(k, specs);

    out.attempted = true;
    out.path = *path;

    if (std::filesystem::exists(*path)) {
        try {
            RealizableSet set = load_cache(*path);
            if (set.k != k || set.specs.size() != specs.size())
                defect("file '" + *path + "' holds a different request");
            for (std::size_t i = 0; i < specs.size(); ++i)
                if (set.specs[i].kind != specs[i].kind)
                    defect("file '" + *path + "' holds different statistics");
            out.hit = true;
            return set;
        } catch (const CacheError& e) {
            out.warning = e.what();
        }
    }

    RealizableSet set = realizable_set(k, specs);
    try {
        save_cache(set, *path);
        out.stored = true;
    } catch (const CacheError& e) {
        if (out.warning.empty()) out.warning = e.what();
    }
    return set;
}

}  // namespace ergm
