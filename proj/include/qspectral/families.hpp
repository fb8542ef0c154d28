#ifndef QSPECTRAL_FAMILIES_HPP
#define QSPECTRAL_FAMILIES_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "qspectral/graph.hpp"

namespace qspectral {

enum class FamilyKind {
    complete,
    star,
    path,
    cycle,
    complete_bipartite,
    gnp,
    exhaustive,
};

std::optional<FamilyKind> family_kind_from_name(std::string_view name);
std::string_view family_kind_name(FamilyKind kind);

/// Declarative description of a graph family or random ensemble.
///   complete/star/path/cycle: n >= 2
///   complete_bipartite: parts a >= 1, b >= 1
///   gnp: n >= 1, 0 <= p <= 1, explicit 64-bit seed, samples >= 0
///   exhaustive: 2 <= n <= 7 (resource guard), every labeled graph on n
///   vertices via an upper-triangle bitmask counter
struct FamilySpec {
    FamilyKind kind = FamilyKind::complete;
    int n = 0;
    int a = 0, b = 0;        // complete_bipartite parts
    double p = 0.0;          // gnp edge probability
    uint64_t seed = 0;       // gnp PRNG seed
    long long samples = 1;   // gnp stream length
    bool connected_only = false;  // exhaustive: drop disconnected masks

    /// Throws std::invalid_argument when the parameters violate the rules above.
    void validate() const;
};

/// Deterministic single-threaded generator over one family.
///
/// gnp draws one mt19937_64 sample per unordered pair in column-major
/// (graph6) order and keeps the edge when (x >> 11) * 2^-53 < p, so the
/// stream is reproducible bit-for-bit from the seed on any platform.
class GraphStream {
public:
    explicit GraphStream(FamilySpec spec);

    /// Next graph, or nullopt when the family is exhausted.
    std::optional<Graph> next();

private:
    FamilySpec spec_;
    long long emitted_ = 0;
    uint64_t mask_ = 0;        // exhaustive counter
    uint64_t mask_end_ = 0;
    std::mt19937_64 rng_;
};

}  // namespace qspectral

#endif
