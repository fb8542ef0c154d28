#ifndef QSPECTRAL_HARNESS_HPP
#define QSPECTRAL_HARNESS_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qspectral/bounds.hpp"
#include "qspectral/families.hpp"

namespace qspectral {

enum class OutputFormat { json, csv, table };

std::optional<OutputFormat> output_format_from_name(std::string_view name);

struct SweepOptions {
    OutputFormat format = OutputFormat::table;
    double tight_tol = kDefaultTightTol;
    int jobs = 1;
    bool allow_disconnected = false;
};

/// Graph source: a graph6 file (newline-separated records, '#' comments,
/// "-" for stdin), one inline record, or a list of family specs swept in
/// order.
struct InputSpec {
    enum class Kind { file, inline_record, family };
    Kind kind = Kind::inline_record;
    std::string path;
    std::string record;
    std::vector<FamilySpec> families;
};

struct SweepSummary {
    long long graphs = 0;           // graphs analyzed (skipped ones excluded)
    long long skipped_graphs = 0;   // disconnected under the default policy
    long long errors = 0;           // parse/processing failures
    long long bounds_evaluated = 0;
    long long bounds_hold = 0;
    long long bounds_tight = 0;
    long long bounds_violated = 0;
    long long bounds_skipped = 0;   // preconditions_met == false
    long long conjectures_checked = 0;
    long long counterexamples = 0;
};

/// Exit codes: 0 all verified, 1 at least one violation/counterexample,
/// 2 input or processing errors only.
int exit_code_for(const SweepSummary& s);

/// Per-graph structural/spectral record, bounds omitted.
int run_invariants(const InputSpec& in, const SweepOptions& opt, std::ostream& out,
                   std::ostream& err);

/// evaluate_all per connected graph (or per graph with --allow-disconnected),
/// plus a holds/tight/violated/skipped summary.
int run_verify(const InputSpec& in, const SweepOptions& opt, std::ostream& out, std::ostream& err);

/// Minimum Brouwer/Ashraf slack over the swept ensemble with the witness
/// graph6 record; nullopt checks both conjectures.
int run_hunt(const InputSpec& in, const SweepOptions& opt, std::optional<Conjecture> which,
             std::ostream& out, std::ostream& err);

}  // namespace qspectral

#endif
