#include "qspectral/bounds.hpp"

#include <chrono>
#include <cmath>

namespace qspectral {

bool bound_holds(const BoundReport& r) {
    return r.residual >= -kViolationTol * std::max(1.0, std::abs(r.rhs));
}

std::string_view conjecture_name(Conjecture c) {
    return c == Conjecture::brouwer ? "brouwer" : "ashraf";
}

GraphFacts analyze(const Graph& g) {
    GraphFacts f;
    f.inv = basic_invariants(g);
    f.zagreb = zagreb_m1(g);
    f.connected = is_connected(g);
    if (f.connected) f.diam = diameter(g);

    auto t0 = std::chrono::steady_clock::now();
    f.q_spectrum = eigenvalues(build_matrix(g, MatrixKind::signless_laplacian));
    f.l_spectrum = eigenvalues(build_matrix(g, MatrixKind::laplacian));
    auto t1 = std::chrono::steady_clock::now();
    f.eigensolve_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

    f.distinct_q = distinct_count(f.q_spectrum);
    return f;
}

namespace {

std::optional<std::string> precondition_failure(const GraphFacts& f) {
    if (f.inv.n < 2) return "bounds require n >= 2";
    if (!f.connected) return "graph is disconnected";
    return std::nullopt;
}

BoundReport skipped_report(std::string name, std::optional<int> k, std::string reason) {
    BoundReport r;
    r.name = std::move(name);
    r.k = k;
    r.preconditions_met = false;
    r.reason = std::move(reason);
    return r;
}

BoundReport upper_report(std::string name, std::optional<int> k, double lhs, double rhs,
                         double tight_tol) {
    BoundReport r;
    r.name = std::move(name);
    r.k = k;
    r.lhs = lhs;
    r.rhs = rhs;
    r.residual = rhs - lhs;
    r.tight = std::abs(r.residual) <= tight_tol * std::max(1.0, std::abs(rhs));
    r.preconditions_met = true;
    return r;
}

BoundReport lower_report(std::string name, std::optional<int> k, double lhs, double rhs,
                         double tight_tol) {
    BoundReport r;
    r.name = std::move(name);
    r.k = k;
    r.lhs = lhs;
    r.rhs = rhs;
    r.residual = lhs - rhs;
    r.tight = std::abs(r.residual) <= tight_tol * std::max(1.0, std::abs(rhs));
    r.preconditions_met = true;
    return r;
}

// Radicands may dip a hair below zero at equality cases; anything worse than
// the numeric slack is a transcription bug, not a graph property.
double guarded_sqrt(double radicand, double scale) {
    if (radicand >= 0.0) return std::sqrt(radicand);
    if (radicand >= -kViolationTol * std::max(1.0, scale)) return 0.0;
    throw std::runtime_error("negative radicand " + std::to_string(radicand) +
                             " beyond tolerance: bound formula transcription bug");
}

struct Params {
    double n, m, dmax, dmin, m1, dbar;
};

Params params_of(const GraphFacts& f) {
    return Params{static_cast<double>(f.inv.n),     static_cast<double>(f.inv.m),
                  static_cast<double>(f.inv.max_degree), static_cast<double>(f.inv.min_degree),
                  static_cast<double>(f.zagreb),    f.inv.avg_degree};
}

// sqrt(k(n-k)(8mn + n^2 (dmax-dmin)^2)) / (2n), the shared polarization radical.
double polarization_radical(const Params& p, double k) {
    double spread = p.dmax - p.dmin;
    double rad = k * (p.n - k) * (8.0 * p.m * p.n + p.n * p.n * spread * spread);
    return std::sqrt(rad) / (2.0 * p.n);
}

// sqrt(mk(n-k)(2*dmax*dmin*(n-2m) + m(dmax+dmin)^2)) / (n*sqrt(dmax*dmin)).
double polya_szego_radical(const Params& p, double k) {
    double dd = p.dmax * p.dmin;
    double inner = 2.0 * dd * (p.n - 2.0 * p.m) + p.m * (p.dmax + p.dmin) * (p.dmax + p.dmin);
    double rad = p.m * k * (p.n - k) * inner;
    return std::sqrt(rad) / (p.n * std::sqrt(dd));
}

}  // namespace

BoundReport bound_m1_polarization(const GraphFacts& f, double tight_tol) {
    if (auto why = precondition_failure(f)) return skipped_report("m1_polarization", {}, *why);
    Params p = params_of(f);
    double spread = p.dmax - p.dmin;
    double rhs = 4.0 * p.m * p.m / p.n + p.n / 4.0 * spread * spread;
    return upper_report("m1_polarization", {}, p.m1, rhs, tight_tol);
}

BoundReport bound_m1_polya_szego(const GraphFacts& f, double tight_tol) {
    if (auto why = precondition_failure(f)) return skipped_report("m1_polya_szego", {}, *why);
    Params p = params_of(f);
    double sum = p.dmax + p.dmin;
    double rhs = p.m * p.m * sum * sum / (p.n * p.dmax * p.dmin);
    return upper_report("m1_polya_szego", {}, p.m1, rhs, tight_tol);
}

BoundReport bound_m1_decaen(const GraphFacts& f, double tight_tol) {
    if (auto why = precondition_failure(f)) return skipped_report("m1_decaen", {}, *why);
    Params p = params_of(f);
    double rhs = p.m * (2.0 * p.m / (p.n - 1.0) + p.n - 2.0);
    return upper_report("m1_decaen", {}, p.m1, rhs, tight_tol);
}

BoundReport bound_skplus_polarization(const GraphFacts& f, int k, double tight_tol) {
    if (auto why = precondition_failure(f)) return skipped_report("skplus_polarization", k, *why);
    Params p = params_of(f);
    double lhs = s_plus_k(f.q_spectrum, k);
    double rhs = (k == f.inv.n) ? 2.0 * p.m
                                : 2.0 * p.m * k / p.n + polarization_radical(p, k);
    return upper_report("skplus_polarization", k, lhs, rhs, tight_tol);
}

BoundReport bound_lk_polarization(const GraphFacts& f, int k, double tight_tol) {
    if (auto why = precondition_failure(f)) return skipped_report("lk_polarization", k, *why);
    Params p = params_of(f);
    double lhs = l_k(f.q_spectrum, k);
    double rhs = (k == f.inv.n) ? 2.0 * p.m
                                : 2.0 * p.m * k / p.n - polarization_radical(p, k);
    return lower_report("lk_polarization", k, lhs, rhs, tight_tol);
}

BoundReport bound_qindex_polarization(const GraphFacts& f, double tight_tol) {
    if (auto why = precondition_failure(f)) return skipped_report("qindex_polarization", {}, *why);
    Params p = params_of(f);
    double rhs = 2.0 * p.m / p.n + polarization_radical(p, 1.0);
    return upper_report("qindex_polarization", {}, q_index(f.q_spectrum), rhs, tight_tol);
}

BoundReport bound_skplus_polya_szego(const GraphFacts& f, int k, double tight_tol) {
    if (auto why = precondition_failure(f)) return skipped_report("skplus_polya_szego", k, *why);
    Params p = params_of(f);
    double lhs = s_plus_k(f.q_spectrum, k);
    double rhs = (k == f.inv.n) ? 2.0 * p.m
                                : 2.0 * p.m * k / p.n + polya_szego_radical(p, k);
    return upper_report("skplus_polya_szego", k, lhs, rhs, tight_tol);
}

BoundReport bound_qindex_polya_szego(const GraphFacts& f, double tight_tol) {
    if (auto why = precondition_failure(f)) return skipped_report("qindex_polya_szego", {}, *why);
    Params p = params_of(f);
    double rhs = 2.0 * p.m / p.n + polya_szego_radical(p, 1.0);
    return upper_report("qindex_polya_szego", {}, q_index(f.q_spectrum), rhs, tight_tol);
}

BoundReport bound_lk_polya_szego(const GraphFacts& f, int k, double tight_tol) {
    if (auto why = precondition_failure(f)) return skipped_report("lk_polya_szego", k, *why);
    Params p = params_of(f);
    double lhs = l_k(f.q_spectrum, k);
    double rhs = (k == f.inv.n) ? 2.0 * p.m
                                : 2.0 * p.m * k / p.n - polya_szego_radical(p, k);
    return lower_report("lk_polya_szego", k, lhs, rhs, tight_tol);
}

BoundReport bound_qindex_hong(const GraphFacts& f, double tight_tol) {
    if (auto why = precondition_failure(f)) return skipped_report("qindex_hong", {}, *why);
    Params p = params_of(f);
    double rhs = 2.0 * p.m / (p.n - 1.0) + p.n - 2.0;
    return upper_report("qindex_hong", {}, q_index(f.q_spectrum), rhs, tight_tol);
}

BoundReport bound_qe_polarization(const GraphFacts& f, double tight_tol) {
    if (auto why = precondition_failure(f)) return skipped_report("qe_polarization", {}, *why);
    Params p = params_of(f);
    double qe = spectral_energy(f.q_spectrum, p.dbar);
    double spread = p.dmax - p.dmin;
    double dev = q_index(f.q_spectrum) - p.dbar;
    double positive = 2.0 * p.m + p.n / 4.0 * spread * spread;
    double rad = (p.n - 1.0) * (positive - dev * dev);
    double rhs = 2.0 * p.m / (p.n * (p.n - 1.0)) + p.n - 2.0 +
                 guarded_sqrt(rad, (p.n - 1.0) * positive);
    return upper_report("qe_polarization", {}, qe, rhs, tight_tol);
}

BoundReport bound_qe_decaen(const GraphFacts& f, double tight_tol) {
    if (auto why = precondition_failure(f)) return skipped_report("qe_decaen", {}, *why);
    Params p = params_of(f);
    double qe = spectral_energy(f.q_spectrum, p.dbar);
    double dev = q_index(f.q_spectrum) - p.dbar;
    double positive = p.m * p.n + 2.0 * p.m * p.m * (2.0 - p.n) / (p.n * (p.n - 1.0));
    double rad = (p.n - 1.0) * (positive - dev * dev);
    double rhs = 2.0 * p.m / (p.n * (p.n - 1.0)) + p.n - 2.0 +
                 guarded_sqrt(rad, (p.n - 1.0) * std::abs(positive));
    return upper_report("qe_decaen", {}, qe, rhs, tight_tol);
}

BoundReport check_diameter_eigs(const GraphFacts& f, double tight_tol) {
    if (auto why = precondition_failure(f)) return skipped_report("diameter_eigs", {}, *why);
    return upper_report("diameter_eigs", {}, static_cast<double>(*f.diam),
                        static_cast<double>(f.distinct_q - 1), tight_tol);
}

BoundReport check_two_eigs_complete(const GraphFacts& f, double tight_tol) {
    if (auto why = precondition_failure(f)) return skipped_report("two_eigs_complete", {}, *why);
    bool two = f.distinct_q == 2;
    bool complete = f.inv.m == static_cast<long long>(f.inv.n) * (f.inv.n - 1) / 2;
    BoundReport r = lower_report("two_eigs_complete", {}, static_cast<double>(f.distinct_q), 2.0,
                                 tight_tol);
    if (two != complete) {  // characterization failed; flag as violation
        r.residual = -1.0;
        r.tight = false;
    }
    return r;
}

ConjectureReport conjecture_check(const GraphFacts& f, Conjecture which) {
    const Spectrum& s = which == Conjecture::brouwer ? f.l_spectrum : f.q_spectrum;
    ConjectureReport rep;
    rep.which = which;
    rep.verdicts.reserve(s.values.size());
    double m = static_cast<double>(f.inv.m);
    double sum = 0.0;
    for (size_t i = 0; i < s.values.size(); ++i) {
        int k = static_cast<int>(i) + 1;
        sum += s.values[i];
        double bound = m + static_cast<double>(k) * (k + 1) / 2.0;
        double slack = bound - sum;
        rep.verdicts.push_back(ConjectureVerdict{k, sum, bound, slack});
        if (i == 0 || slack < rep.min_slack) {
            rep.min_slack = slack;
            rep.min_slack_k = k;
        }
    }
    double scale = m + static_cast<double>(rep.min_slack_k) * (rep.min_slack_k + 1) / 2.0;
    rep.counterexample = rep.min_slack < -kViolationTol * std::max(1.0, scale);
    return rep;
}

Evaluation evaluate_all(const GraphFacts& f, double tight_tol) {
    Evaluation ev;
    int n = f.inv.n;
    ev.bounds.reserve(static_cast<size_t>(registered_bound_count(n)));
    ev.bounds.push_back(bound_m1_polarization(f, tight_tol));
    ev.bounds.push_back(bound_m1_polya_szego(f, tight_tol));
    ev.bounds.push_back(bound_m1_decaen(f, tight_tol));
    for (int k = 1; k <= n; ++k) ev.bounds.push_back(bound_skplus_polarization(f, k, tight_tol));
    for (int k = 1; k <= n; ++k) ev.bounds.push_back(bound_lk_polarization(f, k, tight_tol));
    ev.bounds.push_back(bound_qindex_polarization(f, tight_tol));
    for (int k = 1; k <= n; ++k) ev.bounds.push_back(bound_skplus_polya_szego(f, k, tight_tol));
    ev.bounds.push_back(bound_qindex_polya_szego(f, tight_tol));
    for (int k = 1; k <= n; ++k) ev.bounds.push_back(bound_lk_polya_szego(f, k, tight_tol));
    ev.bounds.push_back(bound_qindex_hong(f, tight_tol));
    ev.bounds.push_back(bound_qe_polarization(f, tight_tol));
    ev.bounds.push_back(bound_qe_decaen(f, tight_tol));
    ev.bounds.push_back(check_diameter_eigs(f, tight_tol));
    ev.bounds.push_back(check_two_eigs_complete(f, tight_tol));
    ev.conjectures.push_back(conjecture_check(f, Conjecture::brouwer));
    ev.conjectures.push_back(conjecture_check(f, Conjecture::ashraf));
    return ev;
}

Evaluation evaluate_all(const Graph& g, double tight_tol) {
    return evaluate_all(analyze(g), tight_tol);
}

}  // namespace qspectral
