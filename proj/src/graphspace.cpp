#include "ergm/graphspace.hpp"

#include "ergm/errors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>
#include <unordered_map>

namespace ergm {

namespace {

void check_vertex_count(int k) {
    if (k < 2) throw InvalidInput("graphspace: need at least 2 vertices, got " + std::to_string(k));
    if (k > kMaxVertices)
        throw CapacityExceeded("graphspace: k = " + std::to_string(k) + " exceeds the cap of " +
                               std::to_string(kMaxVertices) + " vertices");
}

/// Per-k lookup masks shared by all statistic kernels.
struct SlotTables {
    int k = 0;
    int slots = 0;
    std::array<std::uint32_t, kMaxVertices> vertex_slots{};  // edges incident to v
    std::vector<std::uint32_t> triple_masks;                 // 3 edges of each vertex triple

    explicit SlotTables(int k_) : k(k_), slots(edge_slot_count(k_)) {
        for (int v = 0; v < k; ++v) {
            std::uint32_t m = 0;
            for (int u = 0; u < k; ++u) {
                if (u == v) continue;
                m |= std::uint32_t{1} << edge_index(std::min(u, v), std::max(u, v), k);
            }
            vertex_slots[static_cast<std::size_t>(v)] = m;
        }
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                for (int l = j + 1; l < k; ++l)
                    triple_masks.push_back((std::uint32_t{1} << edge_index(i, j, k)) |
                                           (std::uint32_t{1} << edge_index(i, l, k)) |
                                           (std::uint32_t{1} << edge_index(j, l, k)));
    }
};

/// Integer statistic codes. Every kind maps codes to values monotonically;
/// MeanDegree stores the edge count and scales to 2E/k on decode.
int max_code(StatKind kind, int k) {
    switch (kind) {
        case StatKind::Edges:
        case StatKind::MeanDegree:
            return edge_slot_count(k);
        case StatKind::Triangles:
            return k * (k - 1) * (k - 2) / 6;
        case StatKind::TwoStars:
            return k * ((k - 1) * (k - 2) / 2);
        case StatKind::Isolates:
            return k;
        case StatKind::MaxDegree:
            return k - 1;
    }
    throw InvalidInput("graphspace: unknown statistic kind");
}

Rat code_to_value(int code, StatKind kind, int k) {
    if (kind == StatKind::MeanDegree) return make_rational(2 * code, k);
    return Rat(code);
}

struct CodeKernel {
    SlotTables tables;
    std::vector<StatKind> kinds;
    bool need_edges = false;
    bool need_degrees = false;
    bool need_triangles = false;

    CodeKernel(int k, const std::vector<StatisticSpec>& specs) : tables(k) {
        for (const auto& s : specs) {
            kinds.push_back(s.kind);
            switch (s.kind) {
                case StatKind::Edges:
                case StatKind::MeanDegree:
                    need_edges = true;
                    break;
                case StatKind::Triangles:
                    need_triangles = true;
                    break;
                case StatKind::TwoStars:
                case StatKind::Isolates:
                case StatKind::MaxDegree:
                    need_degrees = true;
                    break;
            }
        }
    }

    void codes(std::uint32_t m, int* out) const {
        int edges = 0;
        int triangles = 0;
        std::array<int, kMaxVertices> deg{};
        if (need_edges) edges = std::popcount(m);
        if (need_degrees)
            for (int v = 0; v < tables.k; ++v)
                deg[static_cast<std::size_t>(v)] =
                    std::popcount(m & tables.vertex_slots[static_cast<std::size_t>(v)]);
        if (need_triangles)
            for (std::uint32_t t : tables.triple_masks) triangles += ((m & t) == t);

        for (std::size_t s = 0; s < kinds.size(); ++s) {
            switch (kinds[s]) {
                case StatKind::Edges:
                case StatKind::MeanDegree:
                    out[s] = edges;
                    break;
                case StatKind::Triangles:
                    out[s] = triangles;
                    break;
                case StatKind::TwoStars: {
                    int acc = 0;
                    for (int v = 0; v < tables.k; ++v) {
                        int d = deg[static_cast<std::size_t>(v)];
                        acc += d * (d - 1) / 2;
                    }
                    out[s] = acc;
                    break;
                }
                case StatKind::Isolates: {
                    int acc = 0;
                    for (int v = 0; v < tables.k; ++v)
                        acc += (deg[static_cast<std::size_t>(v)] == 0);
                    out[s] = acc;
                    break;
                }
                case StatKind::MaxDegree: {
                    int acc = 0;
                    for (int v = 0; v < tables.k; ++v)
                        acc = std::max(acc, deg[static_cast<std::size_t>(v)]);
                    out[s] = acc;
                    break;
                }
            }
        }
    }
};

// Packed statistic codes must fit a uint64_t key; 8 statistics of the
// widest registered kind stay well inside that.
constexpr std::size_t kMaxSpecs = 8;

void validate_specs(const std::vector<StatisticSpec>& specs) {
    if (specs.empty()) throw InvalidInput("graphspace: statistic list is empty");
    if (specs.size() > kMaxSpecs)
        throw CapacityExceeded("graphspace: more than " + std::to_string(kMaxSpecs) +
                               " statistics requested");
}

// Threshold on the packed-code space below which a flat tally array is used
// instead of a hash map. 2^21 slots of 8 bytes is 16 MiB per thread.
constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 21;

}  // namespace

int edge_index(int i, int j, int k) {
    check_vertex_count(k);
    if (i < 0 || j <= i || j >= k)
        throw InvalidInput("edge_index: need 0 <= i < j < k, got i=" + std::to_string(i) +
                           " j=" + std::to_string(j) + " k=" + std::to_string(k));
    return i * k - i * (i + 1) / 2 + (j - i - 1);
}

EdgeMask make_edge_mask(std::uint32_t bits, int k) {
    check_vertex_count(k);
    int slots = edge_slot_count(k);
    if (slots < 32 && (bits >> slots) != 0)
        throw InvalidInput("make_edge_mask: bits set beyond the " + std::to_string(slots) +
                           " edge slots of k=" + std::to_string(k));
    return EdgeMask{bits, k};
}

bool has_edge(const EdgeMask& g, int i, int j) {
    return (g.bits >> edge_index(std::min(i, j), std::max(i, j), g.k)) & 1u;
}

int degree(const EdgeMask& g, int v) {
    check_vertex_count(g.k);
    if (v < 0 || v >= g.k) throw InvalidInput("degree: vertex out of range");
    int d = 0;
    for (int u = 0; u < g.k; ++u)
        if (u != v && has_edge(g, v, u)) ++d;
    return d;
}

std::uint64_t graph_count(int k) {
    check_vertex_count(k);
    return std::uint64_t{1} << edge_slot_count(k);
}

GraphRange::GraphRange(int k) : k_(k), count_(graph_count(k)) {}

GraphRange enumerate_graphs(int k) { return GraphRange(k); }

std::string_view stat_kind_name(StatKind kind) {
    switch (kind) {
        case StatKind::Edges: return "edges";
        case StatKind::Triangles: return "triangles";
        case StatKind::TwoStars: return "two_stars";
        case StatKind::MeanDegree: return "mean_degree";
        case StatKind::Isolates: return "isolates";
        case StatKind::MaxDegree: return "max_degree";
    }
    return "unknown";
}

std::optional<StatKind> stat_kind_from_name(std::string_view name) {
    for (StatKind kind : kAllStatKinds)
        if (stat_kind_name(kind) == name) return kind;
    return std::nullopt;
}

StatisticSpec make_spec(StatKind kind) {
    return StatisticSpec{kind, std::string(stat_kind_name(kind))};
}

std::vector<StatisticSpec> specs_from_names(const std::vector<std::string>& names) {
    std::vector<StatisticSpec> specs;
    specs.reserve(names.size());
    for (const std::string& name : names) {
        auto kind = stat_kind_from_name(name);
        if (!kind) throw InvalidInput("graphspace: unknown statistic '" + name + "'");
        specs.push_back(make_spec(*kind));
    }
    return specs;
}

Rat statistic_value(const EdgeMask& g, const StatisticSpec& spec) {
    return statistic_vector(g, {spec})[0];
}

RatVec statistic_vector(const EdgeMask& g, const std::vector<StatisticSpec>& specs) {
    validate_specs(specs);
    (void)make_edge_mask(g.bits, g.k);
    CodeKernel kernel(g.k, specs);
    std::array<int, kMaxSpecs> codes{};
    kernel.codes(g.bits, codes.data());
    RatVec out(specs.size());
    for (std::size_t s = 0; s < specs.size(); ++s)
        out[s] = code_to_value(codes[s], specs[s].kind, g.k);
    return out;
}

bool operator==(const RealizableSet& a, const RealizableSet& b) {
    if (a.k != b.k || a.total_graphs != b.total_graphs) return false;
    if (a.specs.size() != b.specs.size()) return false;
    for (std::size_t i = 0; i < a.specs.size(); ++i)
        if (a.specs[i].kind != b.specs[i].kind || a.specs[i].label != b.specs[i].label)
            return false;
    return a.points == b.points && a.multiplicities == b.multiplicities;
}

RealizableSet realizable_set(int k, const std::vector<StatisticSpec>& specs) {
    check_vertex_count(k);
    validate_specs(specs);

    CodeKernel kernel(k, specs);
    const std::size_t n = specs.size();

    // Mixed-radix packing of the per-statistic codes, first spec most
    // significant so ascending keys sort like ascending statistic vectors.
    std::vector<std::uint64_t> strides(n);
    std::uint64_t space = 1;
    for (std::size_t s = n; s-- > 0;) {
        strides[s] = space;
        space *= static_cast<std::uint64_t>(max_code(specs[s].kind, k)) + 1;
    }

    const std::uint64_t total = graph_count(k);
    const bool dense = space <= kDenseLimit;

    std::vector<std::uint64_t> tally;              // dense path
    std::map<std::uint64_t, std::uint64_t> heavy;  // sparse path, key-sorted
    if (dense) tally.assign(space, 0);

#pragma omp parallel
    {
        std::vector<std::uint64_t> local_tally;
        std::unordered_map<std::uint64_t, std::uint64_t> local_heavy;
        if (dense) local_tally.assign(space, 0);

        int codes[kMaxSpecs];
#pragma omp for schedule(static)
        for (std::int64_t m = 0; m < static_cast<std::int64_t>(total); ++m) {
            kernel.codes(static_cast<std::uint32_t>(m), codes);
            std::uint64_t key = 0;
            for (std::size_t s = 0; s < n; ++s)
                key += strides[s] * static_cast<std::uint64_t>(codes[s]);
            if (dense)
                ++local_tally[key];
            else
                ++local_heavy[key];
        }

#pragma omp critical(ergm_realizable_merge)
        {
            if (dense) {
                for (std::uint64_t key = 0; key < space; ++key) tally[key] += local_tally[key];
            } else {
                for (const auto& [key, count] : local_heavy) heavy[key] += count;
            }
        }
    }

    RealizableSet set;
    set.k = k;
    set.specs = specs;
    set.total_graphs = total;

    auto emit = [&](std::uint64_t key, std::uint64_t count) {
        RatVec point(n);
        for (std::size_t s = 0; s < n; ++s) {
            std::uint64_t code = key / strides[s];
            key -= code * strides[s];
            point[s] = code_to_value(static_cast<int>(code), specs[s].kind, k);
        }
        set.points.push_back(std::move(point));
        set.multiplicities.push_back(count);
    };

    if (dense) {
        for (std::uint64_t key = 0; key < space; ++key)
            if (tally[key] > 0) emit(key, tally[key]);
    } else {
        for (const auto& [key, count] : heavy) emit(key, count);
    }

    // Keys ascend exactly when statistic vectors do, but the invariant is
    // cheap to state directly on the output.
    for (std::size_t i = 1; i < set.points.size(); ++i)
        if (!lex_less(set.points[i - 1], set.points[i]))
            throw InternalError("realizable_set: points not in ascending order");
    std::uint64_t mass =
        std::accumulate(set.multiplicities.begin(), set.multiplicities.end(), std::uint64_t{0});
    if (mass != total)
        throw InternalError("realizable_set: multiplicities sum to " + std::to_string(mass) +
                            ", expected " + std::to_string(total));
    return set;
}

}  // namespace ergm
