#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qspectral/harness.hpp"

namespace {

using namespace qspectral;

struct CommonArgs {
    std::string input;
    std::string g6;
    std::string family;
    std::string n_range;
    int a = 0, b = 0;
    double p = 0.5;
    uint64_t seed = 0;
    long long samples = 1;
    std::string format = "table";
    double tol = kDefaultTightTol;
    int jobs = 1;
    bool allow_disconnected = false;
};

void add_common_flags(CLI::App* cmd, CommonArgs& args) {
    auto* input = cmd->add_option("--input", args.input,
                                  "graph6 file, newline-separated records, '#' comments"
                                  " ('-' reads stdin)");
    auto* g6 = cmd->add_option("--g6", args.g6, "inline graph6 record");
    auto* family = cmd->add_option(
        "--family", args.family,
        "graph family: complete|star|path|cycle|complete_bipartite|gnp|exhaustive");
    input->excludes(g6)->excludes(family);
    g6->excludes(family);

    cmd->add_option("--n", args.n_range, "order or order range a..b (family input)");
    cmd->add_option("--a", args.a, "first part size (complete_bipartite)");
    cmd->add_option("--b", args.b, "second part size (complete_bipartite)");
    cmd->add_option("--p", args.p, "edge probability (gnp)");
    cmd->add_option("--seed", args.seed, "64-bit PRNG seed (gnp)");
    cmd->add_option("--samples", args.samples, "number of gnp samples per order");
    cmd->add_option("--format", args.format, "output format: json|csv|table")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    cmd->add_option("--tol", args.tol, "relative tolerance for the tight flag");
    cmd->add_option("--jobs", args.jobs, "worker pool width");
    cmd->add_flag("--allow-disconnected", args.allow_disconnected,
                  "evaluate disconnected graphs too (bounds are reported as skipped)");
}

int parse_order(const std::string& text) {
    size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty())
        throw std::invalid_argument("--n expects an integer or a range a..b, got '" + text + "'");
    return v;
}

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int v = parse_order(text);
        return {v, v};
    }
    int lo = parse_order(text.substr(0, dots));
    int hi = parse_order(text.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("range end below start: " + text);
    return {lo, hi};
}

InputSpec build_input(const CommonArgs& args) {
    InputSpec in;
    if (!args.input.empty()) {
        in.kind = InputSpec::Kind::file;
        in.path = args.input;
        return in;
    }
    if (!args.g6.empty()) {
        in.kind = InputSpec::Kind::inline_record;
        in.record = args.g6;
        return in;
    }
    if (args.family.empty())
        throw std::invalid_argument("one of --input, --g6 or --family is required");

    auto kind = family_kind_from_name(args.family);
    if (!kind) throw std::invalid_argument("unknown family: " + args.family);

    in.kind = InputSpec::Kind::family;
    if (*kind == FamilyKind::complete_bipartite) {
        FamilySpec spec;
        spec.kind = *kind;
        spec.a = args.a;
        spec.b = args.b;
        spec.validate();
        in.families.push_back(spec);
        return in;
    }
    if (args.n_range.empty()) throw std::invalid_argument("--family requires --n");
    auto [lo, hi] = parse_range(args.n_range);
    for (int n = lo; n <= hi; ++n) {
        FamilySpec spec;
        spec.kind = *kind;
        spec.n = n;
        spec.p = args.p;
        spec.seed = args.seed;
        spec.samples = args.samples;
        spec.validate();
        in.families.push_back(spec);
    }
    return in;
}

SweepOptions build_options(const CommonArgs& args) {
    SweepOptions opt;
    opt.format = *output_format_from_name(args.format);
    opt.tight_tol = args.tol;
    opt.jobs = args.jobs;
    opt.allow_disconnected = args.allow_disconnected;
    return opt;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"signless Laplacian spectra, Zagreb/eigenvalue-sum/energy bounds,"
                 " and Brouwer/Ashraf conjecture checks over graph6 inputs"};
    app.require_subcommand(1);

    CommonArgs inv_args, ver_args, hunt_args;
    std::string hunt_conjecture = "both";

    CLI::App* inv = app.add_subcommand("invariants", "structural and spectral invariants per graph");
    add_common_flags(inv, inv_args);
    CLI::App* ver = app.add_subcommand("verify", "evaluate every bound and conjecture per graph");
    add_common_flags(ver, ver_args);
    CLI::App* hunt = app.add_subcommand("hunt", "track minimum conjecture slack over an ensemble");
    add_common_flags(hunt, hunt_args);
    hunt->add_option("--conjecture", hunt_conjecture, "brouwer|ashraf|both")
        ->check(CLI::IsMember({"brouwer", "ashraf", "both"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // usage problems are input errors
    }

    try {
        if (inv->parsed())
            return run_invariants(build_input(inv_args), build_options(inv_args), std::cout,
                                  std::cerr);
        if (ver->parsed())
            return run_verify(build_input(ver_args), build_options(ver_args), std::cout,
                              std::cerr);
        std::optional<Conjecture> which;
        if (hunt_conjecture == "brouwer") which = Conjecture::brouwer;
        if (hunt_conjecture == "ashraf") which = Conjecture::ashraf;
        return run_hunt(build_input(hunt_args), build_options(hunt_args), which, std::cout,
                        std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
