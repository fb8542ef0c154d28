#include "qspectral/spectrum.hpp"

#include <cmath>

namespace qspectral {

namespace {

void require_kind(const Spectrum& s, MatrixKind kind, const char* op) {
    if (s.kind != kind)
        throw std::invalid_argument(std::string(op) + " requires a " +
                                    std::string(matrix_kind_name(kind)) + " spectrum");
}

void require_k(const Spectrum& s, int k) {
    if (k < 1 || static_cast<size_t>(k) > s.values.size())
        throw std::out_of_range("k must satisfy 1 <= k <= n");
}

}  // namespace

int distinct_count(const Spectrum& s) {
    if (s.values.empty()) return 0;
    double gap = 1e-8 * std::max(1.0, std::abs(s.values.front()));
    int clusters = 1;
    for (size_t i = 1; i < s.values.size(); ++i)
        if (s.values[i - 1] - s.values[i] > gap) ++clusters;
    return clusters;
}

double s_plus_k(const Spectrum& s, int k) {
    require_kind(s, MatrixKind::signless_laplacian, "s_plus_k");
    require_k(s, k);
    double sum = 0.0;
    for (int i = 0; i < k; ++i) sum += s.values[static_cast<size_t>(i)];
    return sum;
}

double l_k(const Spectrum& s, int k) {
    require_kind(s, MatrixKind::signless_laplacian, "l_k");
    require_k(s, k);
    double sum = 0.0;
    size_t n = s.values.size();
    for (int i = 0; i < k; ++i) sum += s.values[n - 1 - static_cast<size_t>(i)];
    return sum;
}

double s_k(const Spectrum& s, int k) {
    require_kind(s, MatrixKind::laplacian, "s_k");
    require_k(s, k);
    double sum = 0.0;
    for (int i = 0; i < k; ++i) sum += s.values[static_cast<size_t>(i)];
    return sum;
}

double q_index(const Spectrum& s) {
    require_kind(s, MatrixKind::signless_laplacian, "q_index");
    if (s.values.empty()) throw std::out_of_range("empty spectrum");
    return s.values.front();
}

double spectral_energy(const Spectrum& s, double center) {
    double sum = 0.0;
    for (double v : s.values) sum += std::abs(v - center);
    return sum;
}

MomentResiduals moment_identities(const Graph& g, const Spectrum& s) {
    require_kind(s, MatrixKind::signless_laplacian, "moment_identities");
    double sum = 0.0, sumsq = 0.0;
    for (double v : s.values) {
        sum += v;
        sumsq += v * v;
    }
    double two_m = 2.0 * static_cast<double>(g.size());
    double target_sq = two_m + static_cast<double>(zagreb_m1(g));
    return MomentResiduals{std::abs(sum - two_m), std::abs(sumsq - target_sq)};
}

}  // namespace qspectral
