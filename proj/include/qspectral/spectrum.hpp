#ifndef QSPECTRAL_SPECTRUM_HPP
#define QSPECTRAL_SPECTRUM_HPP

#include <stdexcept>
#include <vector>

#include "qspectral/graph.hpp"
#include "qspectral/matrix.hpp"

namespace qspectral {

/// Eigenvalues of one matrix kind, sorted nonincreasing, plus the achieved
/// off-diagonal Frobenius residual of the eigensolve.
struct Spectrum {
    MatrixKind kind = MatrixKind::adjacency;
    std::vector<double> values;
    double tol = 0.0;
};

class EigensolveError : public std::runtime_error {
public:
    EigensolveError(double residual, int sweeps);
    double residual;
    int sweeps;
};

/// Jacobi eigensolver, OpenMP round-robin ordering. Sweeps until the
/// off-diagonal Frobenius norm drops to 1e-12 * (1 + ||input||_F), at most
/// 100 sweeps, then throws EigensolveError carrying the residual. Results
/// are bit-identical for any thread count.
Spectrum eigenvalues(SymMatrix m);

/// Serial cyclic-by-rows Jacobi, same convergence contract. Kept as the
/// reference implementation the parallel kernel is tested against.
Spectrum eigenvalues_serial(SymMatrix m);

/// Number of distinct eigenvalues: single-link clusters of the sorted values
/// with gap threshold 1e-8 * max(1, |values[0]|).
int distinct_count(const Spectrum& s);

/// Sum of the k largest signless Laplacian eigenvalues.
double s_plus_k(const Spectrum& s, int k);
/// Sum of the k smallest signless Laplacian eigenvalues.
double l_k(const Spectrum& s, int k);
/// Sum of the k largest Laplacian eigenvalues.
double s_k(const Spectrum& s, int k);
/// Largest signless Laplacian eigenvalue (Q-index).
double q_index(const Spectrum& s);

/// Sum of |value - center|; center is the average degree 2m/n for L/Q
/// energies and 0 for adjacency energy.
double spectral_energy(const Spectrum& s, double center);

struct MomentResiduals {
    double sum_residual;  // |sum q_i - 2m|
    double sq_residual;   // |sum q_i^2 - (2m + M1)|
};

/// Trace identities of the signless Laplacian spectrum against the exact
/// degree data of the source graph.
MomentResiduals moment_identities(const Graph& g, const Spectrum& s);

}  // namespace qspectral

#endif
