#ifndef QSPECTRAL_BOUNDS_HPP
#define QSPECTRAL_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "qspectral/graph.hpp"
#include "qspectral/spectrum.hpp"

namespace qspectral {

/// Relative tolerance for the tight flag (CLI --tol overrides).
constexpr double kDefaultTightTol = 1e-8;
/// Relative slack below which a negative residual counts as a violation.
constexpr double kViolationTol = 1e-9;

/// One bound evaluation. residual is rhs-lhs for upper bounds and lhs-rhs
/// for lower bounds, so residual >= 0 uniformly means the inequality holds.
struct BoundReport {
    std::string name;
    std::optional<int> k;
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
    bool tight = false;
    bool preconditions_met = false;
    std::string reason;  // set when preconditions_met is false
};

/// residual >= -kViolationTol * max(1, |rhs|), only meaningful when
/// preconditions_met.
bool bound_holds(const BoundReport& r);

enum class Conjecture { brouwer, ashraf };

std::string_view conjecture_name(Conjecture c);

struct ConjectureVerdict {
    int k;
    double value;  // S_k or S+_k
    double bound;  // m + C(k+1,2)
    double slack;  // bound - value
};

struct ConjectureReport {
    Conjecture which;
    std::vector<ConjectureVerdict> verdicts;  // exactly n entries, k = 1..n
    double min_slack = 0.0;
    int min_slack_k = 0;  // smallest k attaining min_slack
    bool counterexample = false;
};

/// Everything the bound evaluations need, computed once per graph.
struct GraphFacts {
    BasicInvariants inv;
    long long zagreb = 0;
    bool connected = false;
    std::optional<int> diam;  // connected graphs only
    Spectrum q_spectrum;
    Spectrum l_spectrum;
    int distinct_q = 0;
    double eigensolve_ms = 0.0;
};

GraphFacts analyze(const Graph& g);

// Zagreb-index upper bounds.
BoundReport bound_m1_polarization(const GraphFacts& f, double tight_tol = kDefaultTightTol);
BoundReport bound_m1_polya_szego(const GraphFacts& f, double tight_tol = kDefaultTightTol);
BoundReport bound_m1_decaen(const GraphFacts& f, double tight_tol = kDefaultTightTol);

// Eigenvalue-sum bounds; k in 1..n, where rhs(k=n) is the trace 2m.
BoundReport bound_skplus_polarization(const GraphFacts& f, int k, double tight_tol = kDefaultTightTol);
BoundReport bound_lk_polarization(const GraphFacts& f, int k, double tight_tol = kDefaultTightTol);
BoundReport bound_skplus_polya_szego(const GraphFacts& f, int k, double tight_tol = kDefaultTightTol);
BoundReport bound_lk_polya_szego(const GraphFacts& f, int k, double tight_tol = kDefaultTightTol);

// Q-index bounds.
BoundReport bound_qindex_polarization(const GraphFacts& f, double tight_tol = kDefaultTightTol);
BoundReport bound_qindex_polya_szego(const GraphFacts& f, double tight_tol = kDefaultTightTol);
BoundReport bound_qindex_hong(const GraphFacts& f, double tight_tol = kDefaultTightTol);

// Signless Laplacian energy bounds.
BoundReport bound_qe_polarization(const GraphFacts& f, double tight_tol = kDefaultTightTol);
BoundReport bound_qe_decaen(const GraphFacts& f, double tight_tol = kDefaultTightTol);

// Spectral-structure checks: D <= e(G)-1, and e(G)=2 iff the graph is complete.
BoundReport check_diameter_eigs(const GraphFacts& f, double tight_tol = kDefaultTightTol);
BoundReport check_two_eigs_complete(const GraphFacts& f, double tight_tol = kDefaultTightTol);

/// Brouwer (Laplacian) or Ashraf (signless Laplacian) slack for every k.
/// Connectivity is not required; the conjectures are stated for any graph.
ConjectureReport conjecture_check(const GraphFacts& f, Conjecture which);

struct Evaluation {
    std::vector<BoundReport> bounds;          // 4n + 10 reports, fixed order
    std::vector<ConjectureReport> conjectures;  // brouwer, ashraf
};

Evaluation evaluate_all(const GraphFacts& f, double tight_tol = kDefaultTightTol);
Evaluation evaluate_all(const Graph& g, double tight_tol = kDefaultTightTol);

/// Number of reports evaluate_all emits for a graph of order n.
inline int registered_bound_count(int n) { return 4 * n + 10; }

}  // namespace qspectral

#endif
