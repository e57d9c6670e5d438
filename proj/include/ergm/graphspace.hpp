#pragma once

#include "ergm/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ergm {

/// Hard vertex cap. Edge slots fit a uint32_t up to here (8 choose 2 = 28)
/// and full enumeration stays tractable (2^28 graphs).
inline constexpr int kMaxVertices = 8;

/// Number of unordered vertex pairs, i.e. edge slots, for k vertices.
constexpr int edge_slot_count(int k) { return k * (k - 1) / 2; }

/// Bit position of edge {i, j} with 0 <= i < j < k: pairs in lexicographic
/// order, so (0,1) -> 0, (0,2) -> 1, ..., (k-2,k-1) -> last.
int edge_index(int i, int j, int k);

/// A labeled undirected graph on vertices 0..k-1, one bit per edge slot.
struct EdgeMask {
    std::uint32_t bits = 0;
    int k = 0;
};

/// Validates that only the low edge_slot_count(k) bits are set.
EdgeMask make_edge_mask(std::uint32_t bits, int k);

bool has_edge(const EdgeMask& g, int i, int j);
int degree(const EdgeMask& g, int v);

/// Total number of labeled graphs on k vertices, 2^(k choose 2).
std::uint64_t graph_count(int k);

/// Lazily yields every EdgeMask on k vertices in ascending bits order.
class GraphRange {
public:
    class Iterator {
    public:
        Iterator(std::uint64_t pos, int k) : pos_(pos), k_(k) {}
        EdgeMask operator*() const { return EdgeMask{static_cast<std::uint32_t>(pos_), k_}; }
        Iterator& operator++() {
            ++pos_;
            return *this;
        }
        bool operator!=(const Iterator& o) const { return pos_ != o.pos_; }

    private:
        std::uint64_t pos_;
        int k_;
    };

    explicit GraphRange(int k);
    Iterator begin() const { return Iterator(0, k_); }
    Iterator end() const { return Iterator(count_, k_); }
    std::uint64_t size() const { return count_; }

private:
    int k_;
    std::uint64_t count_;
};

/// Streaming enumeration; masks are never materialized as a container.
GraphRange enumerate_graphs(int k);

/// The closed registry of graph statistics.
enum class StatKind {
    Edges,
    Triangles,
    TwoStars,    // paths of length two: sum over vertices of C(deg, 2)
    MeanDegree,  // 2E / k, the one non-integer-valued statistic
    Isolates,
    MaxDegree,
};

inline constexpr StatKind kAllStatKinds[] = {
    StatKind::Edges,     StatKind::Triangles, StatKind::TwoStars,
    StatKind::MeanDegree, StatKind::Isolates, StatKind::MaxDegree,
};

std::string_view stat_kind_name(StatKind kind);
std::optional<StatKind> stat_kind_from_name(std::string_view name);

struct StatisticSpec {
    StatKind kind;
    std::string label;  // report/cache label; defaults to the kind name
};

StatisticSpec make_spec(StatKind kind);
std::vector<StatisticSpec> specs_from_names(const std::vector<std::string>& names);

/// Exact value of one statistic on one graph.
Rat statistic_value(const EdgeMask& g, const StatisticSpec& spec);

/// Exact statistic vector; specs must be nonempty.
RatVec statistic_vector(const EdgeMask& g, const std::vector<StatisticSpec>& specs);

/// The multiset of statistic vectors over all labeled graphs on k vertices,
/// collapsed to distinct points with multiplicities.
struct RealizableSet {
    int k = 0;
    std::vector<StatisticSpec> specs;
    std::vector<RatVec> points;                 // distinct, ascending lex order
    std::vector<std::uint64_t> multiplicities;  // aligned with points, each >= 1
    std::uint64_t total_graphs = 0;             // sum of multiplicities

    std::size_t dimension() const { return specs.size(); }
};

bool operator==(const RealizableSet& a, const RealizableSet& b);

/// Enumerates all graphs and aggregates their statistic vectors. Splits the
/// mask range across OpenMP threads and merges per-thread tallies; merging
/// is plain addition, so the result is identical for any partitioning.
RealizableSet realizable_set(int k, const std::vector<StatisticSpec>& specs);

}  // namespace ergm
