#include "qspectral/matrix.hpp"

namespace qspectral {

std::string_view matrix_kind_name(MatrixKind kind) {
    switch (kind) {
        case MatrixKind::adjacency: return "adjacency";
        case MatrixKind::laplacian: return "laplacian";
        case MatrixKind::signless_laplacian: return "signless_laplacian";
    }
    return "?";
}

SymMatrix build_matrix(const Graph& g, MatrixKind kind) {
    const int n = g.order();
    SymMatrix m(n, kind);
    double off = kind == MatrixKind::laplacian ? -1.0 : 1.0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (g.has_edge(i, j)) {
                m.at(i, j) = off;
                m.at(j, i) = off;
            }
        }
    }
    if (kind != MatrixKind::adjacency)
        for (int v = 0; v < n; ++v) m.at(v, v) = g.degree(v);
    return m;
}

}  // namespace qspectral
