#include "ergm/reference.hpp"

#include "ergm/errors.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace ergm::reference {

namespace {

using AdjMatrix = std::array<std::array<bool, kMaxVertices>, kMaxVertices>;

AdjMatrix adjacency(const EdgeMask& g) {
    AdjMatrix adj{};
    for (int i = 0; i < g.k; ++i)
        for (int j = i + 1; j < g.k; ++j)
            if (has_edge(g, i, j)) adj[i][j] = adj[j][i] = true;
    return adj;
}

std::array<int, kMaxVertices> degree_sequence(const AdjMatrix& adj, int k) {
    std::array<int, kMaxVertices> deg{};
    for (int v = 0; v < k; ++v)
        for (int u = 0; u < k; ++u)
            if (adj[v][u]) ++deg[v];
    return deg;
}

Rat value_from_adjacency(const AdjMatrix& adj, int k, StatKind kind) {
    auto deg = degree_sequence(adj, k);
    switch (kind) {
        case StatKind::Edges: {
            int e = 0;
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) e += adj[i][j];
            return Rat(e);
        }
        case StatKind::Triangles: {
            int t = 0;
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j)
                    for (int l = j + 1; l < k; ++l)
                        t += adj[i][j] && adj[j][l] && adj[i][l];
            return Rat(t);
        }
        case StatKind::TwoStars: {
            int s = 0;
            for (int v = 0; v < k; ++v) s += deg[v] * (deg[v] - 1) / 2;
            return Rat(s);
        }
        case StatKind::MeanDegree: {
            int sum = 0;
            for (int v = 0; v < k; ++v) sum += deg[v];
            return make_rational(sum, k);
        }
        case StatKind::Isolates: {
            int c = 0;
            for (int v = 0; v < k; ++v) c += (deg[v] == 0);
            return Rat(c);
        }
        case StatKind::MaxDegree: {
            int m = 0;
            for (int v = 0; v < k; ++v) m = std::max(m, deg[v]);
            return Rat(m);
        }
    }
    throw InvalidInput("reference: unknown statistic kind");
}

}  // namespace

Rat statistic_value(const EdgeMask& g, const StatisticSpec& spec) {
    (void)make_edge_mask(g.bits, g.k);
    return value_from_adjacency(adjacency(g), g.k, spec.kind);
}

RatVec statistic_vector(const EdgeMask& g, const std::vector<StatisticSpec>& specs) {
    if (specs.empty()) throw InvalidInput("reference: statistic list is empty");
    (void)make_edge_mask(g.bits, g.k);
    AdjMatrix adj = adjacency(g);
    RatVec out(specs.size());
    for (std::size_t s = 0; s < specs.size(); ++s)
        out[s] = value_from_adjacency(adj, g.k, specs[s].kind);
    return out;
}

RealizableSet realizable_set(int k, const std::vector<StatisticSpec>& specs) {
    if (specs.empty()) throw InvalidInput("reference: statistic list is empty");
    struct LexLess {
        bool operator()(const RatVec& a, const RatVec& b) const { return lex_less(a, b); }
    };
    std::map<RatVec, std::uint64_t, LexLess> tally;
    for (EdgeMask g : enumerate_graphs(k)) ++tally[reference::statistic_vector(g, specs)];

    RealizableSet set;
    set.k = k;
    set.specs = specs;
    set.total_graphs = graph_count(k);
    for (auto& [point, count] : tally) {
        set.points.push_back(point);
        set.multiplicities.push_back(count);
    }
    return set;
}

}  // namespace ergm::reference
