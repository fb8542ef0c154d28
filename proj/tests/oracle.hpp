// Test-only oracles, kept independent of the library implementations they
// check: analytic family spectra, an inertia/bisection eigensolver, a
// bit-string graph6 encoder, union-find connectivity, Floyd-Warshall
// distances, and long-double transcriptions of every bound formula.

#ifndef QSPECTRAL_TESTS_ORACLE_HPP
#define QSPECTRAL_TESTS_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace oracle {

// ---- analytic spectra (sorted nonincreasing) ----

// Q-spectrum of K_n: {2n-2, n-2 repeated n-1 times}.
inline std::vector<double> complete_q_spectrum(int n) {
    std::vector<double> v(static_cast<size_t>(n), static_cast<double>(n - 2));
    v[0] = 2.0 * n - 2.0;
    return v;
}

// L-spectrum of K_n: {n repeated n-1 times, 0}.
inline std::vector<double> complete_l_spectrum(int n) {
    std::vector<double> v(static_cast<size_t>(n), static_cast<double>(n));
    v.back() = 0.0;
    return v;
}

// Q-spectrum of the star K_{1,n-1}: {n, 1 repeated n-2 times, 0}.
inline std::vector<double> star_q_spectrum(int n) {
    std::vector<double> v(static_cast<size_t>(n), 1.0);
    v.front() = static_cast<double>(n);
    v.back() = 0.0;
    return v;
}

// L-eigenvalues of P_n are 4 sin^2(k pi / 2n), k = 0..n-1; paths are
// bipartite so the Q-spectrum coincides.
inline std::vector<double> path_q_spectrum(int n) {
    std::vector<double> v;
    for (int k = 0; k < n; ++k) {
        double s = std::sin(k * std::numbers::pi / (2.0 * n));
        v.push_back(4.0 * s * s);
    }
    std::sort(v.begin(), v.end(), std::greater<double>());
    return v;
}

// Q-eigenvalues of C_n are 2 + 2 cos(2 pi k / n).
inline std::vector<double> cycle_q_spectrum(int n) {
    std::vector<double> v;
    for (int k = 0; k < n; ++k) v.push_back(2.0 + 2.0 * std::cos(2.0 * std::numbers::pi * k / n));
    std::sort(v.begin(), v.end(), std::greater<double>());
    return v;
}

// ---- independent eigensolver: inertia counting + bisection ----

// Pivot signs of a - xI under symmetric elimination; false on a pivot too
// small to trust (the probe hit an eigenvalue of a leading submatrix).
inline bool try_inertia(std::vector<long double> a, int n, long double x, long double tiny,
                        int& neg) {
    for (int i = 0; i < n; ++i) a[static_cast<size_t>(i) * n + i] -= x;
    neg = 0;
    for (int k = 0; k < n; ++k) {
        long double piv = a[static_cast<size_t>(k) * n + k];
        if (std::abs(piv) < tiny) return false;
        if (piv < 0.0L) ++neg;
        for (int i = k + 1; i < n; ++i) {
            long double f = a[static_cast<size_t>(i) * n + k] / piv;
            for (int j = k + 1; j < n; ++j)
                a[static_cast<size_t>(i) * n + j] -= f * a[static_cast<size_t>(k) * n + j];
        }
    }
    return true;
}

// Eigenvalues of (symmetric) a strictly below x, by Sylvester inertia.
// Breakdowns re-probe at a deterministically jittered shift.
inline int eigs_below(const std::vector<long double>& a, int n, long double x) {
    long double scale = 1.0L;
    for (long double v : a) scale = std::max(scale, std::abs(v));
    long double tiny = 1e-24L * scale;
    for (int attempt = 0; attempt < 50; ++attempt) {
        int neg = 0;
        if (try_inertia(a, n, x, tiny, neg)) return neg;
        x += 3.7e-14L * scale * (attempt + 1);
    }
    return -1;  // unreachable for sane inputs
}

// All eigenvalues via bisection on the inertia count, sorted nonincreasing.
// Slow and simple; for cross-checking small matrices only.
inline std::vector<double> bisection_eigenvalues(const std::vector<double>& a, int n) {
    std::vector<long double> al(a.begin(), a.end());
    long double lo = 0.0L, hi = 0.0L;
    for (int i = 0; i < n; ++i) {
        long double r = 0.0L;
        for (int j = 0; j < n; ++j)
            if (j != i) r += std::abs(al[static_cast<size_t>(i) * n + j]);
        lo = std::min(lo, al[static_cast<size_t>(i) * n + i] - r);
        hi = std::max(hi, al[static_cast<size_t>(i) * n + i] + r);
    }
    lo -= 1.0L;
    hi += 1.0L;

    std::vector<double> out;
    for (int i = n - 1; i >= 0; --i) {  // i-th smallest has inertia count <= i
        long double a0 = lo, b0 = hi;
        for (int it = 0; it < 120; ++it) {
            long double mid = (a0 + b0) / 2.0L;
            if (eigs_below(al, n, mid) <= i)
                a0 = mid;
            else
                b0 = mid;
        }
        out.push_back(static_cast<double>((a0 + b0) / 2.0L));
    }
    std::sort(out.begin(), out.end(), std::greater<double>());
    return out;
}

// ---- bit-string graph6 encoder ----

// Spells out the record via an explicit '0'/'1' string; bits[t] is the t-th
// upper-triangle pair in column-major order.
inline std::string graph6_encode_bits(int n, const std::vector<bool>& bits) {
    std::string header;
    if (n <= 62) {
        header.push_back(static_cast<char>(63 + n));
    } else {
        header.push_back(static_cast<char>(126));
        header.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        header.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        header.push_back(static_cast<char>(63 + (n & 63)));
    }
    std::string bitstr;
    for (bool b : bits) bitstr.push_back(b ? '1' : '0');
    while (bitstr.size() % 6 != 0) bitstr.push_back('0');
    std::string payload;
    for (size_t i = 0; i < bitstr.size(); i += 6) {
        int v = 0;
        for (size_t j = 0; j < 6; ++j) v = v * 2 + (bitstr[i + j] == '1' ? 1 : 0);
        payload.push_back(static_cast<char>(63 + v));
    }
    return header + payload;
}

// ---- structural oracles ----

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
        return x;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

inline bool connected_by_unionfind(int n, const std::vector<std::pair<int, int>>& edges) {
    UnionFind uf(n);
    for (auto [u, v] : edges) uf.unite(u, v);
    for (int v = 1; v < n; ++v)
        if (uf.find(v) != uf.find(0)) return false;
    return true;
}

// Floyd-Warshall diameter; -1 when disconnected.
inline int floyd_warshall_diameter(int n, const std::vector<std::pair<int, int>>& edges) {
    const int inf = 1 << 28;
    std::vector<int> d(static_cast<size_t>(n) * n, inf);
    for (int i = 0; i < n; ++i) d[static_cast<size_t>(i) * n + i] = 0;
    for (auto [u, v] : edges) {
        d[static_cast<size_t>(u) * n + v] = 1;
        d[static_cast<size_t>(v) * n + u] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[static_cast<size_t>(i) * n + j] =
                    std::min(d[static_cast<size_t>(i) * n + j],
                             d[static_cast<size_t>(i) * n + k] + d[static_cast<size_t>(k) * n + j]);
    int diam = 0;
    for (int v : d) {
        if (v >= inf) return -1;
        diam = std::max(diam, v);
    }
    return diam;
}

// ---- long-double transcriptions of the bound right-hand sides ----

struct Invariants {
    long double n, m, dmax, dmin;
};

inline long double rhs_m1_polarization(const Invariants& p) {
    long double s = p.dmax - p.dmin;
    return 4.0L * p.m * p.m / p.n + p.n / 4.0L * s * s;
}

inline long double rhs_m1_polya_szego(const Invariants& p) {
    long double s = p.dmax + p.dmin;
    return p.m * p.m * s * s / (p.n * p.dmax * p.dmin);
}

inline long double rhs_m1_decaen(const Invariants& p) {
    return p.m * (2.0L * p.m / (p.n - 1.0L) + p.n - 2.0L);
}

inline long double rhs_skplus_polarization(const Invariants& p, int k) {
    if (k == static_cast<int>(p.n)) return 2.0L * p.m;
    long double s = p.dmax - p.dmin;
    long double rad = k * (p.n - k) * (8.0L * p.m * p.n + p.n * p.n * s * s);
    return 2.0L * p.m * k / p.n + std::sqrt(rad) / (2.0L * p.n);
}

inline long double rhs_lk_polarization(const Invariants& p, int k) {
    if (k == static_cast<int>(p.n)) return 2.0L * p.m;
    long double s = p.dmax - p.dmin;
    long double rad = k * (p.n - k) * (8.0L * p.m * p.n + p.n * p.n * s * s);
    return 2.0L * p.m * k / p.n - std::sqrt(rad) / (2.0L * p.n);
}

inline long double rhs_skplus_polya_szego(const Invariants& p, int k) {
    if (k == static_cast<int>(p.n)) return 2.0L * p.m;
    long double dd = p.dmax * p.dmin;
    long double sum = p.dmax + p.dmin;
    long double rad = p.m * k * (p.n - k) * (2.0L * dd * (p.n - 2.0L * p.m) + p.m * sum * sum);
    return 2.0L * p.m * k / p.n + std::sqrt(rad) / (p.n * std::sqrt(dd));
}

inline long double rhs_lk_polya_szego(const Invariants& p, int k) {
    if (k == static_cast<int>(p.n)) return 2.0L * p.m;
    long double dd = p.dmax * p.dmin;
    long double sum = p.dmax + p.dmin;
    long double rad = p.m * k * (p.n - k) * (2.0L * dd * (p.n - 2.0L * p.m) + p.m * sum * sum);
    return 2.0L * p.m * k / p.n - std::sqrt(rad) / (p.n * std::sqrt(dd));
}

inline long double rhs_qindex_hong(const Invariants& p) {
    return 2.0L * p.m / (p.n - 1.0L) + p.n - 2.0L;
}

inline long double rhs_qe_polarization(const Invariants& p, long double q1) {
    long double s = p.dmax - p.dmin;
    long double dev = q1 - 2.0L * p.m / p.n;
    long double rad = (p.n - 1.0L) * (2.0L * p.m + p.n / 4.0L * s * s - dev * dev);
    return 2.0L * p.m / (p.n * (p.n - 1.0L)) + p.n - 2.0L + std::sqrt(std::max(rad, 0.0L));
}

inline long double rhs_qe_decaen(const Invariants& p, long double q1) {
    long double dev = q1 - 2.0L * p.m / p.n;
    long double rad = (p.n - 1.0L) * (p.m * p.n + 2.0L * p.m * p.m * (2.0L - p.n) / (p.n * (p.n - 1.0L)) -
                                      dev * dev);
    return 2.0L * p.m / (p.n * (p.n - 1.0L)) + p.n - 2.0L + std::sqrt(std::max(rad, 0.0L));
}

}  // namespace oracle

#endif
