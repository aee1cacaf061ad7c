#include "ttp/graph.hpp"

#include <algorithm>
#include <limits>

#include "ttp/errors.hpp"
#include "ttp/kernels.hpp"

namespace ttp {

int Matching::mate(int v) const
{
    for (const auto& [a, b] : pairs) {
        if (a == v)
            return b;
        if (b == v)
            return a;
    }
    return -1;
}

double edge_weight(const DistanceMatrix& d, std::vector<Edge>& edges)
{
    for (auto& e : edges)
        if (e.first > e.second)
            std::swap(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    double w = 0.0;
    for (const auto& [a, b] : edges)
        w += d(a, b);
    return w;
}

double tour_weight(const DistanceMatrix& d, const std::vector<int>& order)
{
    double w = 0.0;
    for (size_t i = 0; i < order.size(); ++i)
        w += d(order[i], order[(i + 1) % order.size()]);
    return w;
}

SpanningTree minimum_spanning_tree(const DistanceMatrix& d)
{
    const int n = d.n();
    SpanningTree t;
    if (n <= 1)
        return t;
    const auto& kt = kernels::active();
    std::vector<double> key(n, std::numeric_limits<double>::infinity());
    std::vector<int> parent(n, -1);
    std::vector<unsigned char> in_tree(n, 0);
    in_tree[0] = 1;
    kt.prim_update(key.data(), parent.data(), in_tree.data(), d.row(0), 0, static_cast<size_t>(n));
    for (int step = 1; step < n; ++step) {
        int u = static_cast<int>(kt.prim_argmin(key.data(), in_tree.data(), static_cast<size_t>(n)));
        in_tree[u] = 1;
        t.edges.emplace_back(std::min(parent[u], u), std::max(parent[u], u));
        kt.prim_update(key.data(), parent.data(), in_tree.data(), d.row(u), u, static_cast<size_t>(n));
    }
    t.weight = edge_weight(d, t.edges);
    return t;
}

Matching min_weight_perfect_matching(const DistanceMatrix& d, const std::vector<int>& subset)
{
    const int k = static_cast<int>(subset.size());
    if (k % 2 != 0)
        throw DomainError("perfect matching needs an even vertex subset, got " + std::to_string(k));
    std::vector<int> seen(d.n(), 0);
    for (int v : subset) {
        if (v < 0 || v >= d.n() || seen[v]++)
            throw DomainError("matching subset has an invalid or repeated vertex");
    }
    Matching m;
    if (k == 0)
        return m;
    double maxd = 0.0;
    for (int a : subset)
        for (int b : subset)
            maxd = std::max(maxd, d(a, b));
    std::vector<double> w(static_cast<size_t>(k) * k, 0.0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j)
                w[static_cast<size_t>(i) * k + j] = maxd - d(subset[i], subset[j]);
    auto mate = max_weight_matching_dense(w, k, true);
    for (int i = 0; i < k; ++i) {
        if (mate[i] < 0)
            throw DomainError("matching left a vertex uncovered");
        if (i < mate[i])
            m.pairs.emplace_back(subset[i], subset[mate[i]]);
    }
    m.weight = edge_weight(d, m.pairs);
    return m;
}

namespace {

// Hierholzer on a multigraph given as an edge list; neighbours are taken in
// (vertex, edge id) order so the circuit is deterministic.
std::vector<int> euler_circuit(int n, const std::vector<Edge>& edges, int start)
{
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        adj[edges[e].first].emplace_back(edges[e].second, e);
        adj[edges[e].second].emplace_back(edges[e].first, e);
    }
    for (auto& a : adj)
        std::sort(a.begin(), a.end());
    std::vector<size_t> next(n, 0);
    std::vector<unsigned char> used(edges.size(), 0);
    std::vector<int> stack{start}, circuit;
    while (!stack.empty()) {
        int v = stack.back();
        while (next[v] < adj[v].size() && used[adj[v][next[v]].second])
            ++next[v];
        if (next[v] == adj[v].size()) {
            circuit.push_back(v);
            stack.pop_back();
        } else {
            auto [w, e] = adj[v][next[v]];
            used[e] = 1;
            stack.push_back(w);
        }
    }
    std::reverse(circuit.begin(), circuit.end());
    return circuit;
}

}  // namespace

ChristofidesParts christofides(const DistanceMatrix& d)
{
    const int n = d.n();
    ChristofidesParts out;
    out.tree = minimum_spanning_tree(d);
    std::vector<int> deg(n, 0);
    for (const auto& [a, b] : out.tree.edges) {
        ++deg[a];
        ++deg[b];
    }
    std::vector<int> odd;
    for (int v = 0; v < n; ++v)
        if (deg[v] % 2)
            odd.push_back(v);
    out.odd_matching = min_weight_perfect_matching(d, odd);
    std::vector<Edge> multi = out.tree.edges;
    multi.insert(multi.end(), out.odd_matching.pairs.begin(), out.odd_matching.pairs.end());
    out.euler = n > 0 ? euler_circuit(n, multi, 0) : std::vector<int>{};
    std::vector<unsigned char> seen(n, 0);
    for (int v : out.euler)
        if (!seen[v]) {
            seen[v] = 1;
            out.tour.order.push_back(v);
        }
    out.tour.weight = tour_weight(d, out.tour.order);
    return out;
}

Tour christofides_tour(const DistanceMatrix& d) { return christofides(d).tour; }

}  // namespace ttp
