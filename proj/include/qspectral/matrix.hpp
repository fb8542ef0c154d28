#ifndef QSPECTRAL_MATRIX_HPP
#define QSPECTRAL_MATRIX_HPP

#include <vector>

#include "qspectral/graph.hpp"

namespace qspectral {

enum class MatrixKind { adjacency, laplacian, signless_laplacian };

std::string_view matrix_kind_name(MatrixKind kind);

/// Dense symmetric matrix, row-major.
struct SymMatrix {
    int n = 0;
    MatrixKind kind = MatrixKind::adjacency;
    std::vector<double> a;

    SymMatrix() = default;
    SymMatrix(int n, MatrixKind kind) : n(n), kind(kind), a(static_cast<size_t>(n) * n, 0.0) {}

    double& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    double at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

/// A = 0/1 adjacency, L = D - A, Q = D + A. Exact integer entries.
SymMatrix build_matrix(const Graph& g, MatrixKind kind);

}  // namespace qspectral

#endif
