#include "qspectral/families.hpp"

#include <stdexcept>

namespace qspectral {

std::optional<FamilyKind> family_kind_from_name(std::string_view name) {
    if (name == "complete") return FamilyKind::complete;
    if (name == "star") return FamilyKind::star;
    if (name == "path") return FamilyKind::path;
    if (name == "cycle") return FamilyKind::cycle;
    if (name == "complete_bipartite") return FamilyKind::complete_bipartite;
    if (name == "gnp") return FamilyKind::gnp;
    if (name == "exhaustive") return FamilyKind::exhaustive;
    return std::nullopt;
}

std::string_view family_kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::complete: return "complete";
        case FamilyKind::star: return "star";
        case FamilyKind::path: return "path";
        case FamilyKind::cycle: return "cycle";
        case FamilyKind::complete_bipartite: return "complete_bipartite";
        case FamilyKind::gnp: return "gnp";
        case FamilyKind::exhaustive: return "exhaustive";
    }
    return "?";
}

void FamilySpec::validate() const {
    switch (kind) {
        case FamilyKind::complete:
        case FamilyKind::star:
        case FamilyKind::path:
        case FamilyKind::cycle:
            if (n < 2) throw std::invalid_argument("family requires n >= 2");
            break;
        case FamilyKind::complete_bipartite:
            if (a < 1 || b < 1)
                throw std::invalid_argument("complete_bipartite requires parts a >= 1 and b >= 1");
            break;
        case FamilyKind::gnp:
            if (n < 1) throw std::invalid_argument("gnp requires n >= 1");
            if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gnp requires 0 <= p <= 1");
            if (samples < 0) throw std::invalid_argument("gnp requires samples >= 0");
            break;
        case FamilyKind::exhaustive:
            if (n < 2 || n > 7)
                throw std::invalid_argument("exhaustive enumeration is limited to 2 <= n <= 7");
            break;
    }
}

GraphStream::GraphStream(FamilySpec spec) : spec_(spec), rng_(spec.seed) {
    spec_.validate();
    if (spec_.kind == FamilyKind::exhaustive)
        mask_end_ = uint64_t{1} << (spec_.n * (spec_.n - 1) / 2);
}

namespace {

Graph make_complete(int n) {
    Graph g(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) g.add_edge(i, j);
    return g;
}

Graph make_star(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

Graph make_path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph make_cycle(int n) {
    Graph g = make_path(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph make_complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

Graph make_from_mask(int n, uint64_t mask) {
    Graph g(n);
    long long nbits = g.pair_count();
    int j = 1, i = 0;
    for (long long t = 0; t < nbits; ++t) {
        if ((mask >> t) & 1u) g.add_edge(i, j);
        if (++i == j) {
            ++j;
            i = 0;
        }
    }
    return g;
}

}  // namespace

std::optional<Graph> GraphStream::next() {
    switch (spec_.kind) {
        case FamilyKind::complete:
        case FamilyKind::star:
        case FamilyKind::path:
        case FamilyKind::cycle:
        case FamilyKind::complete_bipartite: {
            if (emitted_ > 0) return std::nullopt;
            ++emitted_;
            switch (spec_.kind) {
                case FamilyKind::complete: return make_complete(spec_.n);
                case FamilyKind::star: return make_star(spec_.n);
                case FamilyKind::path: return make_path(spec_.n);
                case FamilyKind::cycle: return make_cycle(spec_.n);
                default: return make_complete_bipartite(spec_.a, spec_.b);
            }
        }
        case FamilyKind::gnp: {
            if (emitted_ >= spec_.samples) return std::nullopt;
            ++emitted_;
            Graph g(spec_.n);
            for (int j = 1; j < spec_.n; ++j) {
                for (int i = 0; i < j; ++i) {
                    double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
                    if (u < spec_.p) g.add_edge(i, j);
                }
            }
            return g;
        }
        case FamilyKind::exhaustive: {
            while (mask_ < mask_end_) {
                Graph g = make_from_mask(spec_.n, mask_++);
                if (spec_.connected_only && !is_connected(g)) continue;
                return g;
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

}  // namespace qspectral
