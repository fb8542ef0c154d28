#include "qspectral/harness.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>

#include <json.hpp>

#include "qspectral/graph6.hpp"

namespace qspectral {

namespace {

using ojson = nlohmann::ordered_json;

constexpr size_t kChunk = 256;

std::string fmt(double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, p);
}

std::string trimmed(const std::string& line) {
    size_t a = line.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return {};
    size_t b = line.find_last_not_of(" \t\r\n");
    return line.substr(a, b - a + 1);
}

// Drains the configured input in order; parse failures are logged and counted,
// processing continues.
class RecordSource {
public:
    struct Item {
        std::string g6;
        Graph graph;
    };

    RecordSource(const InputSpec& in, std::ostream& err) : in_(in), err_(err) {
        if (in_.kind == InputSpec::Kind::file && in_.path != "-") {
            file_.open(in_.path);
            if (!file_) {
                err_ << "error: cannot open " << in_.path << "\n";
                ++errors_;
                done_ = true;
            }
        }
    }

    std::optional<Item> next() {
        if (done_) return std::nullopt;
        switch (in_.kind) {
            case InputSpec::Kind::inline_record: {
                done_ = true;
                return parse(in_.record, 0);
            }
            case InputSpec::Kind::file: {
                std::istream& is = in_.path == "-" ? std::cin : file_;
                std::string line;
                while (std::getline(is, line)) {
                    ++line_no_;
                    std::string rec = trimmed(line);
                    if (rec.empty() || rec[0] == '#') continue;
                    if (auto item = parse(rec, line_no_)) return item;
                }
                done_ = true;
                return std::nullopt;
            }
            case InputSpec::Kind::family: {
                while (true) {
                    if (!stream_) {
                        if (family_idx_ >= in_.families.size()) {
                            done_ = true;
                            return std::nullopt;
                        }
                        stream_.emplace(in_.families[family_idx_++]);
                    }
                    if (auto g = stream_->next())
                        return Item{to_graph6(*g), std::move(*g)};
                    stream_.reset();
                }
            }
        }
        return std::nullopt;
    }

    long long errors() const { return errors_; }

private:
    std::optional<Item> parse(const std::string& rec, long long line) {
        try {
            Graph g = from_graph6(rec);
            return Item{to_graph6(g), std::move(g)};
        } catch (const Graph6Error& e) {
            if (line > 0)
                err_ << in_.path << ":" << line << ": " << e.what() << "\n";
            else
                err_ << "error: invalid graph6 record: " << e.what() << "\n";
            ++errors_;
            return std::nullopt;
        }
    }

    InputSpec in_;
    std::ostream& err_;
    std::ifstream file_;
    long long line_no_ = 0;
    long long errors_ = 0;
    size_t family_idx_ = 0;
    std::optional<GraphStream> stream_;
    bool done_ = false;
};

std::vector<RecordSource::Item> take_batch(RecordSource& src, size_t maxn) {
    std::vector<RecordSource::Item> batch;
    batch.reserve(maxn);
    while (batch.size() < maxn) {
        auto item = src.next();
        if (!item) break;
        batch.push_back(std::move(*item));
    }
    return batch;
}

struct Row {
    std::string g6;
    GraphFacts facts;
    std::optional<Evaluation> ev;
    bool skipped = false;  // disconnected under the default verify policy
    std::string error;
};

ojson invariants_json(const Row& row) {
    ojson j;
    j["v"] = 1;
    j["graph_id"] = row.g6;
    j["connected"] = row.facts.connected;
    ojson inv;
    inv["n"] = row.facts.inv.n;
    inv["m"] = row.facts.inv.m;
    inv["max_degree"] = row.facts.inv.max_degree;
    inv["min_degree"] = row.facts.inv.min_degree;
    inv["avg_degree"] = row.facts.inv.avg_degree;
    if (row.facts.diam)
        inv["diameter"] = *row.facts.diam;
    else
        inv["diameter"] = nullptr;
    inv["zagreb_m1"] = row.facts.zagreb;
    inv["distinct_q_eigenvalues"] = row.facts.distinct_q;
    j["invariants"] = std::move(inv);
    return j;
}

ojson bound_json(const BoundReport& b) {
    ojson j;
    j["name"] = b.name;
    if (b.k)
        j["k"] = *b.k;
    else
        j["k"] = nullptr;
    if (b.preconditions_met) {
        j["lhs"] = b.lhs;
        j["rhs"] = b.rhs;
        j["residual"] = b.residual;
        j["tight"] = b.tight;
        j["preconditions_met"] = true;
    } else {
        j["preconditions_met"] = false;
        j["reason"] = b.reason;
    }
    return j;
}

ojson conjecture_json(const ConjectureReport& c) {
    ojson j;
    j["conjecture"] = std::string(conjecture_name(c.which));
    j["min_slack"] = c.min_slack;
    j["min_slack_k"] = c.min_slack_k;
    j["counterexample"] = c.counterexample;
    ojson verdicts = ojson::array();
    for (const auto& v : c.verdicts) {
        ojson vj;
        vj["k"] = v.k;
        vj["value"] = v.value;
        vj["bound"] = v.bound;
        vj["slack"] = v.slack;
        verdicts.push_back(std::move(vj));
    }
    j["verdicts"] = std::move(verdicts);
    return j;
}

ojson verify_json(const Row& row) {
    ojson j = invariants_json(row);
    ojson bounds = ojson::array();
    for (const auto& b : row.ev->bounds) bounds.push_back(bound_json(b));
    j["bounds"] = std::move(bounds);
    ojson conjectures = ojson::array();
    for (const auto& c : row.ev->conjectures) conjectures.push_back(conjecture_json(c));
    j["conjectures"] = std::move(conjectures);
    return j;
}

class JsonArrayWriter {
public:
    explicit JsonArrayWriter(std::ostream& out) : out_(out) { out_ << "["; }
    void row(const ojson& j) {
        out_ << (first_ ? "\n" : ",\n") << j.dump();
        first_ = false;
    }
    void finish() { out_ << (first_ ? "]\n" : "\n]\n"); }

private:
    std::ostream& out_;
    bool first_ = true;
};

void csv_invariants_header(std::ostream& out) {
    out << "graph_id,n,m,max_degree,min_degree,avg_degree,diameter,zagreb_m1,"
           "distinct_q_eigenvalues,connected\n";
}

void csv_invariants_row(std::ostream& out, const Row& row) {
    const auto& f = row.facts;
    out << row.g6 << ',' << f.inv.n << ',' << f.inv.m << ',' << f.inv.max_degree << ','
        << f.inv.min_degree << ',' << fmt(f.inv.avg_degree) << ',';
    if (f.diam) out << *f.diam;
    out << ',' << f.zagreb << ',' << f.distinct_q << ',' << (f.connected ? "true" : "false")
        << '\n';
}

void csv_verify_header(std::ostream& out) { out << "graph_id,bound,k,lhs,rhs,residual,tight\n"; }

void csv_verify_row(std::ostream& out, const Row& row) {
    for (const auto& b : row.ev->bounds) {
        out << row.g6 << ',' << b.name << ',';
        if (b.k) out << *b.k;
        out << ',';
        if (b.preconditions_met)
            out << fmt(b.lhs) << ',' << fmt(b.rhs) << ',' << fmt(b.residual) << ','
                << (b.tight ? "true" : "false");
        else
            out << ",,,false";
        out << '\n';
    }
    for (const auto& c : row.ev->conjectures) {
        for (const auto& v : c.verdicts) {
            bool tight = std::abs(v.slack) <= kDefaultTightTol * std::max(1.0, std::abs(v.bound));
            out << row.g6 << ",conjecture_" << conjecture_name(c.which) << ',' << v.k << ','
                << fmt(v.value) << ',' << fmt(v.bound) << ',' << fmt(v.slack) << ','
                << (tight ? "true" : "false") << '\n';
        }
    }
}

void table_invariants_header(std::ostream& out) {
    out << std::left << std::setw(16) << "graph_id" << std::right << std::setw(5) << "n"
        << std::setw(7) << "m" << std::setw(5) << "max" << std::setw(5) << "min" << std::setw(9)
        << "avg" << std::setw(6) << "diam" << std::setw(10) << "M1" << std::setw(5) << "eQ"
        << std::setw(7) << "conn" << std::setw(11) << "eig_ms" << '\n';
}

void table_invariants_row(std::ostream& out, const Row& row) {
    const auto& f = row.facts;
    out << std::left << std::setw(16) << row.g6 << std::right << std::setw(5) << f.inv.n
        << std::setw(7) << f.inv.m << std::setw(5) << f.inv.max_degree << std::setw(5)
        << f.inv.min_degree << std::setw(9) << fmt(f.inv.avg_degree) << std::setw(6)
        << (f.diam ? std::to_string(*f.diam) : std::string("-")) << std::setw(10) << f.zagreb
        << std::setw(5) << f.distinct_q << std::setw(7) << (f.connected ? "yes" : "no")
        << std::setw(11) << fmt(f.eigensolve_ms) << '\n';
}

void table_verify_header(std::ostream& out) {
    out << std::left << std::setw(16) << "graph_id" << std::right << std::setw(5) << "n"
        << std::setw(7) << "m" << std::setw(7) << "holds" << std::setw(7) << "tight"
        << std::setw(6) << "viol" << std::setw(6) << "skip" << std::setw(24) << "brouwer_slack"
        << std::setw(24) << "ashraf_slack" << std::setw(12) << "eig_ms" << '\n';
}

void table_verify_row(std::ostream& out, const Row& row) {
    int holds = 0, tight = 0, viol = 0, skip = 0;
    for (const auto& b : row.ev->bounds) {
        if (!b.preconditions_met) {
            ++skip;
        } else if (bound_holds(b)) {
            ++holds;
            if (b.tight) ++tight;
        } else {
            ++viol;
        }
    }
    const auto& cs = row.ev->conjectures;
    out << std::left << std::setw(16) << row.g6 << std::right << std::setw(5) << row.facts.inv.n
        << std::setw(7) << row.facts.inv.m << std::setw(7) << holds << std::setw(7) << tight
        << std::setw(6) << viol << std::setw(6) << skip << std::setw(24) << fmt(cs[0].min_slack)
        << std::setw(24) << fmt(cs[1].min_slack) << std::setw(12) << fmt(row.facts.eigensolve_ms)
        << '\n';
}

void accumulate(SweepSummary& sum, const Evaluation& ev) {
    for (const auto& b : ev.bounds) {
        if (!b.preconditions_met) {
            ++sum.bounds_skipped;
        } else {
            ++sum.bounds_evaluated;
            if (bound_holds(b)) {
                ++sum.bounds_hold;
                if (b.tight) ++sum.bounds_tight;
            } else {
                ++sum.bounds_violated;
            }
        }
    }
    for (const auto& c : ev.conjectures) {
        ++sum.conjectures_checked;
        if (c.counterexample) ++sum.counterexamples;
    }
}

void print_summary(std::ostream& os, const SweepSummary& s) {
    os << "summary: graphs=" << s.graphs << " skipped_graphs=" << s.skipped_graphs
       << " errors=" << s.errors << " | bounds: evaluated=" << s.bounds_evaluated
       << " hold=" << s.bounds_hold << " tight=" << s.bounds_tight
       << " violated=" << s.bounds_violated << " skipped=" << s.bounds_skipped
       << " | conjectures: checked=" << s.conjectures_checked
       << " counterexamples=" << s.counterexamples << '\n';
}

int clamp_jobs(int jobs) { return jobs < 1 ? 1 : jobs; }

}  // namespace

std::optional<OutputFormat> output_format_from_name(std::string_view name) {
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    if (name == "table") return OutputFormat::table;
    return std::nullopt;
}

int exit_code_for(const SweepSummary& s) {
    if (s.bounds_violated > 0 || s.counterexamples > 0) return 1;
    if (s.errors > 0) return 2;
    return 0;
}

int run_invariants(const InputSpec& in, const SweepOptions& opt, std::ostream& out,
                   std::ostream& err) {
    RecordSource src(in, err);
    SweepSummary sum;
    const int jobs = clamp_jobs(opt.jobs);

    std::optional<JsonArrayWriter> json;
    if (opt.format == OutputFormat::json)
        json.emplace(out);
    else if (opt.format == OutputFormat::csv)
        csv_invariants_header(out);
    else
        table_invariants_header(out);

    while (true) {
        auto batch = take_batch(src, kChunk);
        if (batch.empty()) break;
        std::vector<Row> rows(batch.size());
#pragma omp parallel for num_threads(jobs) schedule(dynamic)
        for (size_t i = 0; i < batch.size(); ++i) {
            rows[i].g6 = batch[i].g6;
            try {
                rows[i].facts = analyze(batch[i].graph);
            } catch (const std::exception& e) {
                rows[i].error = e.what();
            }
        }
        for (const Row& row : rows) {
            if (!row.error.empty()) {
                err << "error: " << row.g6 << ": " << row.error << "\n";
                ++sum.errors;
                continue;
            }
            ++sum.graphs;
            if (json)
                json->row(invariants_json(row));
            else if (opt.format == OutputFormat::csv)
                csv_invariants_row(out, row);
            else
                table_invariants_row(out, row);
        }
    }
    if (json) json->finish();
    sum.errors += src.errors();
    err << "processed " << sum.graphs << " graphs, " << sum.errors << " errors\n";
    return exit_code_for(sum);
}

int run_verify(const InputSpec& in, const SweepOptions& opt, std::ostream& out,
               std::ostream& err) {
    RecordSource src(in, err);
    SweepSummary sum;
    const int jobs = clamp_jobs(opt.jobs);

    std::optional<JsonArrayWriter> json;
    if (opt.format == OutputFormat::json)
        json.emplace(out);
    else if (opt.format == OutputFormat::csv)
        csv_verify_header(out);
    else
        table_verify_header(out);

    while (true) {
        auto batch = take_batch(src, kChunk);
        if (batch.empty()) break;
        std::vector<Row> rows(batch.size());
#pragma omp parallel for num_threads(jobs) schedule(dynamic)
        for (size_t i = 0; i < batch.size(); ++i) {
            rows[i].g6 = batch[i].g6;
            try {
                rows[i].facts = analyze(batch[i].graph);
                if (!rows[i].facts.connected && !opt.allow_disconnected)
                    rows[i].skipped = true;
                else
                    rows[i].ev = evaluate_all(rows[i].facts, opt.tight_tol);
            } catch (const std::exception& e) {
                rows[i].error = e.what();
            }
        }
        for (const Row& row : rows) {
            if (!row.error.empty()) {
                err << "error: " << row.g6 << ": " << row.error << "\n";
                ++sum.errors;
                continue;
            }
            if (row.skipped) {
                ++sum.skipped_graphs;
                continue;
            }
            ++sum.graphs;
            accumulate(sum, *row.ev);
            if (json)
                json->row(verify_json(row));
            else if (opt.format == OutputFormat::csv)
                csv_verify_row(out, row);
            else
                table_verify_row(out, row);
        }
    }
    if (json) json->finish();
    sum.errors += src.errors();
    if (sum.skipped_graphs > 0)
        err << "warning: skipped " << sum.skipped_graphs
            << " disconnected graph(s); bounds require connectivity"
               " (use --allow-disconnected to include them)\n";
    print_summary(opt.format == OutputFormat::table ? out : err, sum);
    return exit_code_for(sum);
}

namespace {

struct HuntBest {
    bool seen = false;
    double min_slack = 0.0;
    int k = 0;
    std::string witness;
};

ojson hunt_json(Conjecture which, const HuntBest& best, long long scanned) {
    ojson j;
    j["v"] = 1;
    j["conjecture"] = std::string(conjecture_name(which));
    j["graphs_scanned"] = scanned;
    if (best.seen) {
        j["min_slack"] = best.min_slack;
        j["k"] = best.k;
        j["witness"] = best.witness;
    } else {
        j["min_slack"] = nullptr;
        j["k"] = nullptr;
        j["witness"] = nullptr;
    }
    return j;
}

}  // namespace

int run_hunt(const InputSpec& in, const SweepOptions& opt, std::optional<Conjecture> which,
             std::ostream& out, std::ostream& err) {
    RecordSource src(in, err);
    SweepSummary sum;
    const int jobs = clamp_jobs(opt.jobs);

    std::vector<Conjecture> targets;
    if (!which || *which == Conjecture::brouwer) targets.push_back(Conjecture::brouwer);
    if (!which || *which == Conjecture::ashraf) targets.push_back(Conjecture::ashraf);

    std::vector<HuntBest> best(targets.size());

    struct HuntRow {
        std::string g6;
        std::string error;
        std::vector<ConjectureReport> reports;
    };

    while (true) {
        auto batch = take_batch(src, kChunk);
        if (batch.empty()) break;
        std::vector<HuntRow> rows(batch.size());
#pragma omp parallel for num_threads(jobs) schedule(dynamic)
        for (size_t i = 0; i < batch.size(); ++i) {
            rows[i].g6 = batch[i].g6;
            try {
                GraphFacts facts = analyze(batch[i].graph);
                for (Conjecture c : targets) rows[i].reports.push_back(conjecture_check(facts, c));
            } catch (const std::exception& e) {
                rows[i].error = e.what();
            }
        }
        for (const HuntRow& row : rows) {
            if (!row.error.empty()) {
                err << "error: " << row.g6 << ": " << row.error << "\n";
                ++sum.errors;
                continue;
            }
            ++sum.graphs;
            for (size_t t = 0; t < targets.size(); ++t) {
                const ConjectureReport& rep = row.reports[t];
                ++sum.conjectures_checked;
                if (rep.counterexample) ++sum.counterexamples;
                // strict < keeps the first witness on ties, so the result is
                // independent of --jobs
                if (!best[t].seen || rep.min_slack < best[t].min_slack) {
                    best[t].seen = true;
                    best[t].min_slack = rep.min_slack;
                    best[t].k = rep.min_slack_k;
                    best[t].witness = row.g6;
                }
            }
        }
    }
    sum.errors += src.errors();

    if (opt.format == OutputFormat::json) {
        JsonArrayWriter json(out);
        for (size_t t = 0; t < targets.size(); ++t) json.row(hunt_json(targets[t], best[t], sum.graphs));
        json.finish();
    } else if (opt.format == OutputFormat::csv) {
        out << "conjecture,graphs_scanned,min_slack,k,witness\n";
        for (size_t t = 0; t < targets.size(); ++t) {
            out << conjecture_name(targets[t]) << ',' << sum.graphs << ',';
            if (best[t].seen)
                out << fmt(best[t].min_slack) << ',' << best[t].k << ',' << best[t].witness;
            else
                out << ",,";
            out << '\n';
        }
    } else {
        out << std::left << std::setw(11) << "conjecture" << std::right << std::setw(10)
            << "scanned" << std::setw(26) << "min_slack" << std::setw(5) << "k" << "  witness"
            << '\n';
        for (size_t t = 0; t < targets.size(); ++t) {
            out << std::left << std::setw(11) << conjecture_name(targets[t]) << std::right
                << std::setw(10) << sum.graphs << std::setw(26)
                << (best[t].seen ? fmt(best[t].min_slack) : "-") << std::setw(5)
                << (best[t].seen ? std::to_string(best[t].k) : "-") << "  "
                << (best[t].seen ? best[t].witness : "-") << '\n';
        }
    }
    if (sum.counterexamples > 0)
        err << "counterexample candidates found: " << sum.counterexamples << "\n";
    return exit_code_for(sum);
}

}  // namespace qspectral
