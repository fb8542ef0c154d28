#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "qspectral/families.hpp"
#include "qspectral/spectrum.hpp"

using namespace qspectral;

namespace {

Graph family_one(FamilyKind kind, int n) {
    FamilySpec spec;
    spec.kind = kind;
    spec.n = n;
    GraphStream s(spec);
    return *s.next();
}

Spectrum q_of(const Graph& g) {
    return eigenvalues(build_matrix(g, MatrixKind::signless_laplacian));
}

}  // namespace

TEST_CASE("eigenvalue sums on K_4") {
    Spectrum q = q_of(family_one(FamilyKind::complete, 4));
    CHECK(s_plus_k(q, 1) == doctest::Approx(6.0).epsilon(1e-10));
    CHECK(l_k(q, 3) == doctest::Approx(6.0).epsilon(1e-10));
    CHECK(s_plus_k(q, 4) == doctest::Approx(12.0).epsilon(1e-10));  // trace = 2m

    Spectrum l = eigenvalues(build_matrix(family_one(FamilyKind::complete, 4),
                                          MatrixKind::laplacian));
    CHECK(s_k(l, 1) == doctest::Approx(4.0).epsilon(1e-10));
}

TEST_CASE("kind and range validation") {
    Graph k4 = family_one(FamilyKind::complete, 4);
    Spectrum q = q_of(k4);
    Spectrum l = eigenvalues(build_matrix(k4, MatrixKind::laplacian));
    CHECK_THROWS_AS(s_plus_k(l, 1), std::invalid_argument);
    CHECK_THROWS_AS(l_k(l, 1), std::invalid_argument);
    CHECK_THROWS_AS(s_k(q, 1), std::invalid_argument);
    CHECK_THROWS_AS(q_index(l), std::invalid_argument);
    CHECK_THROWS_AS(s_plus_k(q, 0), std::out_of_range);
    CHECK_THROWS_AS(s_plus_k(q, 5), std::out_of_range);
    CHECK_THROWS_AS(l_k(q, 5), std::out_of_range);
}

TEST_CASE("distinct eigenvalue count") {
    CHECK(distinct_count(q_of(family_one(FamilyKind::complete, 4))) == 2);
    CHECK(distinct_count(q_of(family_one(FamilyKind::path, 4))) == 4);

    Spectrum fake;
    fake.kind = MatrixKind::signless_laplacian;
    fake.values = {5.0 + 1e-12, 5.0, 3.0};
    fake.tol = 0.0;
    CHECK(distinct_count(fake) == 2);
}

TEST_CASE("q_index") {
    CHECK(q_index(q_of(family_one(FamilyKind::complete, 4))) == doctest::Approx(6.0));
    CHECK(q_index(q_of(family_one(FamilyKind::star, 4))) == doctest::Approx(4.0));
    // q1 >= average degree on connected graphs
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        FamilySpec spec;
        spec.kind = FamilyKind::gnp;
        spec.n = 3 + static_cast<int>(rng() % 15);
        spec.p = 0.6;
        spec.seed = rng();
        spec.samples = 1;
        Graph g = *GraphStream(spec).next();
        if (!is_connected(g)) continue;
        CHECK(q_index(q_of(g)) >= basic_invariants(g).avg_degree - 1e-9);
    }
}

TEST_CASE("energies") {
    Graph k4 = family_one(FamilyKind::complete, 4);
    CHECK(spectral_energy(q_of(k4), 3.0) == doctest::Approx(6.0).epsilon(1e-10));

    Graph k2 = family_one(FamilyKind::complete, 2);
    Spectrum a = eigenvalues(build_matrix(k2, MatrixKind::adjacency));
    CHECK(spectral_energy(a, 0.0) == doctest::Approx(2.0).epsilon(1e-10));

    Graph p4 = family_one(FamilyKind::path, 4);
    CHECK(spectral_energy(q_of(p4), 1.5) ==
          doctest::Approx(4.82842712474619).epsilon(1e-10));  // 2 + 2*sqrt(2)
}

TEST_CASE("moment identities") {
    Graph k4 = family_one(FamilyKind::complete, 4);
    auto mk4 = moment_identities(k4, q_of(k4));
    CHECK(mk4.sum_residual <= 1e-9 * 48);
    CHECK(mk4.sq_residual <= 1e-9 * 48);

    Graph star = family_one(FamilyKind::star, 4);
    auto ms = moment_identities(star, q_of(star));
    CHECK(ms.sum_residual <= 1e-9 * 18);
    CHECK(ms.sq_residual <= 1e-9 * 18);

    Graph p4 = family_one(FamilyKind::path, 4);
    auto mp = moment_identities(p4, q_of(p4));
    CHECK(mp.sum_residual <= 1e-9);
    CHECK(mp.sq_residual <= 1e-9 * 16);
}

TEST_CASE("S+_k and L_{n-k} partition the trace") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 30; ++trial) {
        FamilySpec spec;
        spec.kind = FamilyKind::gnp;
        spec.n = 2 + static_cast<int>(rng() % 20);
        spec.p = 0.5;
        spec.seed = rng();
        spec.samples = 1;
        Graph g = *GraphStream(spec).next();
        Spectrum q = q_of(g);
        double two_m = 2.0 * static_cast<double>(g.size());
        for (int k = 1; k < g.order(); ++k)
            CHECK(std::abs(s_plus_k(q, k) + l_k(q, g.order() - k) - two_m) <= 1e-9);
        CHECK(std::abs(s_plus_k(q, g.order()) - two_m) <= 1e-9);
    }
}
