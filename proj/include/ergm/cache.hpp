#pragma once

#include "ergm/graphspace.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ergm {

inline constexpr int kCacheVersion = 1;

/// Serializes an enumerated point set (exact "p/q" coordinate strings).
nlohmann::json cache_to_json(const RealizableSet& set);

/// Rebuilds a RealizableSet, re-validating every invariant the enumeration
/// guarantees: known statistics, exact coordinates, positive multiplicities,
/// strictly ascending lex order, and a total equal to the full graph count.
/// Any defect raises CacheError.
RealizableSet cache_from_json(const nlohmann::json& j);

void save_cache(const RealizableSet& set, const std::string& path);
RealizableSet load_cache(const std::string& path);

/// Path under the ERGMX_CACHE_DIR environment directory for this request;
/// nullopt when the variable is unset or empty.
std::optional<std::string> default_cache_path(int k, const std::vector<StatisticSpec>& specs);

struct CacheOutcome {
    bool attempted = false;  // some cache path was in play
    bool hit = false;        // served from disk
    bool stored = false;     // written (back) to disk
    std::string path;        // resolved path, empty when caching was off
    std::string warning;     // nonempty when a corrupt or mismatched file was recovered
};

/// Cache-aware enumeration. An explicit path beats the environment default;
/// with neither, this is a plain computation. Corrupt or mismatched files
/// are recomputed and rewritten with a warning — a broken cache never breaks
/// the run.
RealizableSet realizable_set_cached(int k, const std::vector<StatisticSpec>& specs,
                                    const std::optional<std::string>& explicit_path,
                                    CacheOutcome* outcome = nullptr);

}  // namespace ergm
