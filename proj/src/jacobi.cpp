#include <algorithm>
#include <cmath>

#include "qspectral/spectrum.hpp"

namespace qspectral {

EigensolveError::EigensolveError(double residual, int sweeps)
    : std::runtime_error("Jacobi eigensolve did not converge after " + std::to_string(sweeps) +
                         " sweeps (off-diagonal residual " + std::to_string(residual) + ")"),
      residual(residual),
      sweeps(sweeps) {}

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kRelTarget = 1e-12;
// Below this order the round-robin kernel runs its loops without OpenMP;
// same operations in the same order, so results do not change.
constexpr int kParallelCutoff = 64;

double frobenius(const SymMatrix& m) {
    double sum = 0.0;
    for (double v : m.a) sum += v * v;
    return std::sqrt(sum);
}

// Serial on purpose: a parallel reduction would make the sweep count depend
// on thread count through rounding.
double off_diagonal_norm(const SymMatrix& m) {
    double sum = 0.0;
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            if (i != j) sum += m.at(i, j) * m.at(i, j);
    return std::sqrt(sum);
}

struct Rotation {
    double c, s, t;
};

Rotation rotation_for(double app, double aqq, double apq) {
    double theta = (aqq - app) / (2.0 * apq);
    double t;
    if (std::abs(theta) > 1e150) {
        t = 1.0 / (2.0 * theta);  // theta^2 would overflow; limit of the stable root
    } else {
        t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    }
    double c = 1.0 / std::sqrt(t * t + 1.0);
    return Rotation{c, t * c, t};
}

// One cyclic-by-rows sweep with exact symmetric updates.
void sweep_serial(SymMatrix& m) {
    const int n = m.n;
    for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
            double apq = m.at(p, q);
            if (apq == 0.0) continue;
            auto [c, s, t] = rotation_for(m.at(p, p), m.at(q, q), apq);
            m.at(p, p) -= t * apq;
            m.at(q, q) += t * apq;
            m.at(p, q) = m.at(q, p) = 0.0;
            for (int r = 0; r < n; ++r) {
                if (r == p || r == q) continue;
                double arp = m.at(r, p), arq = m.at(r, q);
                m.at(r, p) = m.at(p, r) = c * arp - s * arq;
                m.at(r, q) = m.at(q, r) = s * arp + c * arq;
            }
        }
    }
}

// Round-robin tournament pairing: N indices (N even), N-1 rounds, every
// unordered pair visited exactly once. Pure function of (N, round, slot).
std::pair<int, int> round_robin_pair(int N, int round, int slot) {
    int a, b;
    if (slot == 0) {
        a = N - 1;
        b = round;
    } else {
        a = (round + slot) % (N - 1);
        b = (round - slot + N - 1) % (N - 1);
    }
    if (a > b) std::swap(a, b);
    return {a, b};
}

// One sweep in round-robin order. Each round applies all its row updates,
// then all its column updates; pairs in a round touch disjoint rows/columns,
// so every matrix entry is written by exactly one pair and the result is
// bit-identical for any thread count.
void sweep_parallel(SymMatrix& m) {
    const int n = m.n;
    const int N = (n % 2 == 0) ? n : n + 1;  // odd order gets a sit-out slot
    const int slots = N / 2;
    std::vector<Rotation> rot(static_cast<size_t>(slots));

    for (int round = 0; round < N - 1; ++round) {
#pragma omp parallel for schedule(static) if (n >= kParallelCutoff)
        for (int slot = 0; slot < slots; ++slot) {
            auto [p, q] = round_robin_pair(N, round, slot);
            if (q >= n) {
                rot[static_cast<size_t>(slot)] = Rotation{1.0, 0.0, 0.0};
                continue;
            }
            double apq = m.at(p, q);
            if (apq == 0.0) {
                rot[static_cast<size_t>(slot)] = Rotation{1.0, 0.0, 0.0};
                continue;
            }
            Rotation r = rotation_for(m.at(p, p), m.at(q, q), apq);
            rot[static_cast<size_t>(slot)] = r;
            for (int j = 0; j < n; ++j) {
                double x = m.at(p, j), y = m.at(q, j);
                m.at(p, j) = r.c * x - r.s * y;
                m.at(q, j) = r.s * x + r.c * y;
            }
        }
#pragma omp parallel for schedule(static) if (n >= kParallelCutoff)
        for (int slot = 0; slot < slots; ++slot) {
            auto [p, q] = round_robin_pair(N, round, slot);
            if (q >= n) continue;
            Rotation r = rot[static_cast<size_t>(slot)];
            if (r.s == 0.0) continue;
            for (int i = 0; i < n; ++i) {
                double x = m.at(i, p), y = m.at(i, q);
                m.at(i, p) = r.c * x - r.s * y;
                m.at(i, q) = r.s * x + r.c * y;
            }
            m.at(p, q) = m.at(q, p) = 0.0;
        }
    }
}

template <typename SweepFn>
Spectrum run_jacobi(SymMatrix m, SweepFn&& sweep) {
    const double target = kRelTarget * (1.0 + frobenius(m));
    double off = off_diagonal_norm(m);
    int sweeps = 0;
    while (off > target) {
        if (sweeps >= kMaxSweeps) throw EigensolveError(off, sweeps);
        sweep(m);
        ++sweeps;
        off = off_diagonal_norm(m);
    }

    Spectrum s;
    s.kind = m.kind;
    s.tol = off;
    s.values.resize(static_cast<size_t>(m.n));
    for (int i = 0; i < m.n; ++i) s.values[static_cast<size_t>(i)] = m.at(i, i);
    std::sort(s.values.begin(), s.values.end(), std::greater<double>());
    return s;
}

}  // namespace

Spectrum eigenvalues(SymMatrix m) { return run_jacobi(std::move(m), sweep_parallel); }

Spectrum eigenvalues_serial(SymMatrix m) { return run_jacobi(std::move(m), sweep_serial); }

}  // namespace qspectral
