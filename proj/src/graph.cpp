#include "qspectral/graph.hpp"

#include <algorithm>
#include <queue>

namespace qspectral {

Graph::Graph(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("graph order must be >= 1");
    bits_.assign(static_cast<size_t>((pair_count() + 63) / 64), 0);
    degrees_.assign(static_cast<size_t>(n), 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

long long Graph::pair_index(int i, int j) {
    if (i > j) std::swap(i, j);
    return static_cast<long long>(j) * (j - 1) / 2 + i;
}

bool Graph::pair_bit(long long idx) const {
    return (bits_[static_cast<size_t>(idx >> 6)] >> (idx & 63)) & 1u;
}

void Graph::set_pair_bit(long long idx) {
    bits_[static_cast<size_t>(idx >> 6)] |= uint64_t{1} << (idx & 63);
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    return pair_bit(pair_index(u, v));
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    long long idx = pair_index(u, v);
    if (pair_bit(idx)) return;
    set_pair_bit(idx);
    ++degrees_[static_cast<size_t>(u)];
    ++degrees_[static_cast<size_t>(v)];
    ++m_;
}

BasicInvariants basic_invariants(const Graph& g) {
    BasicInvariants inv;
    inv.n = g.order();
    inv.m = g.size();
    auto [lo, hi] = std::minmax_element(g.degrees().begin(), g.degrees().end());
    inv.min_degree = *lo;
    inv.max_degree = *hi;
    inv.avg_degree = 2.0 * static_cast<double>(inv.m) / inv.n;
    return inv;
}

long long zagreb_m1(const Graph& g) {
    long long sum = 0;
    for (int d : g.degrees()) sum += static_cast<long long>(d) * d;
    return sum;
}

namespace {

// BFS distances from src; -1 marks unreachable.
std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(static_cast<size_t>(g.order()), -1);
    std::queue<int> q;
    dist[static_cast<size_t>(src)] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v = 0; v < g.order(); ++v) {
            if (dist[static_cast<size_t>(v)] < 0 && g.has_edge(u, v)) {
                dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
                q.push(v);
            }
        }
    }
    return dist;
}

}  // namespace

bool is_connected(const Graph& g) {
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

int diameter(const Graph& g) {
    int diam = 0;
    for (int s = 0; s < g.order(); ++s) {
        auto dist = bfs_distances(g, s);
        for (int d : dist) {
            if (d < 0) throw std::invalid_argument("diameter undefined: graph is disconnected");
            diam = std::max(diam, d);
        }
    }
    return diam;
}

}  // namespace qspectral
