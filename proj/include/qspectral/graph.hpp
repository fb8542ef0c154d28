#ifndef QSPECTRAL_GRAPH_HPP
#define QSPECTRAL_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qspectral {

/// Simple undirected graph on vertices 0..n-1. Edges live in a packed
/// upper-triangle bitset in column-major pair order, the same order the
/// graph6 format uses: (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
/// Graphs are meant to be immutable once built; add_edge is a builder aid.
class Graph {
public:
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    long long size() const { return m_; }

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);

    int degree(int v) const { return degrees_[static_cast<size_t>(v)]; }
    const std::vector<int>& degrees() const { return degrees_; }

    /// Index of unordered pair {i,j} in column-major order; i != j.
    static long long pair_index(int i, int j);
    /// Number of unordered pairs, n(n-1)/2.
    long long pair_count() const { return static_cast<long long>(n_) * (n_ - 1) / 2; }

    /// Raw upper-triangle bit, by column-major pair index.
    bool pair_bit(long long idx) const;
    void set_pair_bit(long long idx);

private:
    int n_;
    long long m_ = 0;
    std::vector<uint64_t> bits_;
    std::vector<int> degrees_;
};

struct BasicInvariants {
    int n = 0;
    long long m = 0;
    int max_degree = 0;
    int min_degree = 0;
    double avg_degree = 0.0;  // 2m/n
};

BasicInvariants basic_invariants(const Graph& g);

/// First Zagreb index, sum of squared vertex degrees. Exact.
long long zagreb_m1(const Graph& g);

/// BFS from vertex 0 reaches everything. Single vertices count as connected.
bool is_connected(const Graph& g);

/// Largest BFS eccentricity over all vertices. Throws std::invalid_argument
/// on disconnected input (diameter undefined).
int diameter(const Graph& g);

}  // namespace qspectral

#endif
