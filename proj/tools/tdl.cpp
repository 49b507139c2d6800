// tdl - command-line front end for total difference labelings.
//
// Exit codes: 0 ok, 1 usage or parse error, 2 search indeterminate,
// 3 verification failure, 4 sweep disagreement.

#include "tdl/constructions.hpp"
#include "tdl/io.hpp"
#include "tdl/lobster.hpp"
#include "tdl/solver.hpp"
#include "tdl/verifier.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

namespace {

using namespace tdl;
using nlohmann::json;

enum Exit { kOk = 0, kUsage = 1, kIndeterminate = 2, kVerifyFailed = 3, kDisagree = 4 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FamilyFlags {
    std::string name;
    std::optional<std::size_t> n, m, delta1, delta2, delta, h;
    std::vector<std::size_t> spine;

    void attach(CLI::App* cmd, bool required = false) {
        // --h is the tree height, so help is long-form only here
        cmd->set_help_flag("--help", "Print this help message and exit");
        auto* f = cmd->add_option("--family", name,
                                  "path|cycle|star|wheel|gear|helm|caterpillar|lobster|uniform-tree");
        if (required) f->required();
        cmd->add_option("--n", n, "order parameter (path, cycle, wheel, gear, helm, lobster)");
        cmd->add_option("--m", m, "star leaves");
        cmd->add_option("--spine", spine, "caterpillar spine degrees")->delimiter(',');
        cmd->add_option("--delta1", delta1, "lobster primary degree");
        cmd->add_option("--delta2", delta2, "lobster secondary degree");
        cmd->add_option("--delta", delta, "uniform tree degree");
        cmd->add_option("--h", h, "uniform tree height");
    }

    std::size_t need(const std::optional<std::size_t>& v, const char* flag) const {
        if (!v) throw UsageError("--family " + name + " requires " + flag);
        return *v;
    }

    FamilySpec spec() const {
        if (name == "path") return family::Path{need(n, "--n")};
        if (name == "cycle") return family::Cycle{need(n, "--n")};
        if (name == "star") return family::Star{need(m, "--m")};
        if (name == "wheel") return family::Wheel{need(n, "--n")};
        if (name == "gear") return family::Gear{need(n, "--n")};
        if (name == "helm") return family::Helm{need(n, "--n")};
        if (name == "caterpillar") {
            if (spine.empty()) throw UsageError("--family caterpillar requires --spine");
            return family::Caterpillar{spine};
        }
        if (name == "lobster")
            return family::MaximalLobster{need(n, "--n"), need(delta1, "--delta1"),
                                          need(delta2, "--delta2")};
        if (name == "uniform-tree") return family::UniformTree{need(delta, "--delta"), need(h, "--h")};
        throw UsageError("unknown family '" + name + "'");
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

Graph load_graph(const std::string& path) {
    try {
        return parse_edge_list(read_file(path));
    } catch (const ParseError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

std::optional<std::uint64_t> env_node_limit() {
    const char* raw = std::getenv("TDL_NODE_LIMIT");
    if (!raw || !*raw) return std::nullopt;
    char* end = nullptr;
    const auto v = std::strtoull(raw, &end, 10);
    if (*end != '\0') throw UsageError("TDL_NODE_LIMIT must be a non-negative integer");
    return v;
}

struct BudgetFlags {
    std::optional<std::uint64_t> node_limit;
    std::optional<double> time_limit;

    void attach(CLI::App* cmd) {
        cmd->add_option("--node-limit", node_limit, "search node budget (default: TDL_NODE_LIMIT)");
        cmd->add_option("--time-limit", time_limit, "search time budget in seconds")
            ->check(CLI::PositiveNumber);
    }

    SearchOptions options() const {
        SearchOptions o;
        o.node_limit = node_limit ? node_limit : env_node_limit();
        if (time_limit)
            o.time_limit = std::chrono::milliseconds(static_cast<std::int64_t>(*time_limit * 1000));
        return o;
    }
};

std::string join(const std::vector<Label>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + std::to_string(xs[i]);
    return out;
}

// --- chi ------------------------------------------------------------------

struct ChiCmd {
    std::string input;
    FamilyFlags fam;
    BudgetFlags budget;
    std::optional<Label> max_k;
    std::string witness_out;
    bool as_json = false;

    int run() const {
        Graph g;
        std::string what;
        if (!input.empty()) {
            g = load_graph(input);
            what = input;
        } else if (!fam.name.empty()) {
            const auto spec = fam.spec();
            g = build(spec).graph;
            what = describe(spec);
        } else {
            throw UsageError("chi needs --input FILE or --family NAME");
        }
        auto opts = budget.options();
        opts.max_k = max_k;
        const auto r = chi_td(g, opts);
        if (r.witness && !witness_out.empty()) write_file(witness_out, labeling_to_json(*r.witness));

        if (as_json) {
            json doc{{"graph", what}, {"lower", r.lower}, {"upper", r.upper},
                     {"exact", r.exact ? json(*r.exact) : json(nullptr)},
                     {"provenance", r.provenance}};
            doc["witness"] = r.witness ? json(r.witness->labels) : json(nullptr);
            if (!witness_out.empty() && r.witness) doc["witness_path"] = witness_out;
            std::cout << doc.dump() << '\n';
        } else {
            std::cout << what << ": ";
            if (r.exact) {
                std::cout << "chi_td = " << *r.exact << '\n';
                std::cout << "witness: " << join(r.witness->labels) << '\n';
                if (!witness_out.empty()) std::cout << "witness written to " << witness_out << '\n';
            } else if (max_k && r.lower > *max_k) {
                std::cout << "no k <= " << *max_k << " (chi_td >= " << r.lower << ")\n";
            } else {
                std::cout << "indeterminate, " << r.lower << " <= chi_td <= ";
                if (r.upper == std::numeric_limits<Label>::max())
                    std::cout << "3^" << g.vertex_count() - 1 << '\n';
                else
                    std::cout << r.upper << '\n';
            }
        }
        if (r.exact || (max_k && r.lower > *max_k)) return kOk;
        return kIndeterminate;
    }
};

// --- construct ------------------------------------------------------------

struct ConstructCmd {
    FamilyFlags fam;
    std::string out, graph_out;
    bool as_json = false;

    int run() const {
        const auto spec = fam.spec();
        const auto g = build(spec).graph;
        const auto c = construct(spec);
        if (!out.empty()) write_file(out, construction_to_json(c) + "\n");
        if (!graph_out.empty()) write_file(graph_out, emit_edge_list(g));
        if (as_json) {
            std::cout << construction_to_json(c) << '\n';
        } else {
            std::cout << describe(spec) << ": k = " << c.claimed_k << " (" << c.provenance
                      << (c.tight ? ", tight" : "") << (c.repaired ? ", repaired by search" : "")
                      << ")\nlabels: " << join(c.labeling.labels) << '\n';
        }
        return is_k_tdl(g, c.labeling, c.claimed_k) ? kOk : kVerifyFailed;
    }
};

// --- verify ---------------------------------------------------------------

struct VerifyCmd {
    std::string graph, labeling;
    std::optional<Label> k;
    bool as_json = false;

    int run() const {
        const auto g = load_graph(graph);
        Labeling lab;
        try {
            lab = labeling_from_json(read_file(labeling));
        } catch (const ParseError& e) {
            throw UsageError(labeling + ": " + e.what());
        }
        try {
            check_labeling_shape(g, lab);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        const auto report = find_violations(g, lab);
        const Label top = total_max_label(g, lab);
        const bool within = !k || top <= *k;
        const bool ok = report.empty() && within;
        if (as_json) {
            std::cout << report_to_json(report, ok, k) << '\n';
        } else {
            for (const auto& v : report.violations) {
                std::cout << to_string(v.kind) << ": vertices";
                for (auto x : v.vertices) std::cout << ' ' << x;
                std::cout << ", labels " << join(v.labels) << '\n';
            }
            if (!within) std::cout << "largest label " << top << " exceeds k = " << *k << '\n';
            std::cout << (ok ? "ok" : "FAILED") << ": " << report.violations.size()
                      << " violation(s), largest label " << top << '\n';
        }
        return ok ? kOk : kVerifyFailed;
    }
};

// --- sweep ----------------------------------------------------------------

struct SweepRow {
    std::string spec;
    BoundsResult theorem;
    std::optional<Label> solver;
    std::string solver_outcome = "skipped";
    Label claimed_k = 0;
    bool witness_ok = false;
    bool agree = false;
    double elapsed = 0;
};

struct SweepCmd {
    FamilyFlags fam;
    std::size_t from = 0, to = 0;
    std::string check = "exact";
    unsigned parallel = 1;
    BudgetFlags budget;
    bool as_json = false;

    FamilySpec instance(std::size_t x) const {
        FamilyFlags f = fam;
        if (f.name == "star")
            f.m = x;
        else if (f.name == "uniform-tree")
            f.delta = x;
        else if (f.name == "caterpillar")
            throw UsageError("sweep does not support caterpillars");
        else
            f.n = x;
        return f.spec();
    }

    SweepRow evaluate(const FamilySpec& spec) const {
        const auto start = std::chrono::steady_clock::now();
        SweepRow row;
        row.spec = describe(spec);
        row.theorem = closed_form(spec);
        const auto g = build(spec).graph;
        const auto c = construct(spec);
        row.claimed_k = c.claimed_k;
        row.witness_ok = is_k_tdl(g, c.labeling, c.claimed_k) && definitional_check(g, c.labeling);
        row.agree = row.witness_ok;
        if (row.theorem.exact && c.tight && c.claimed_k != *row.theorem.exact) row.agree = false;
        if (check == "exact") {
            const auto r = chi_td(g, budget.options());
            if (r.exact) {
                row.solver = r.exact;
                row.solver_outcome = "exact";
                if (row.theorem.exact && *row.theorem.exact != *r.exact) row.agree = false;
                if (*r.exact < row.theorem.lower || *r.exact > row.theorem.upper) row.agree = false;
            } else {
                row.solver_outcome = "indeterminate";
            }
        }
        row.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return row;
    }

    int run() const {
        if (fam.name.empty()) throw UsageError("sweep requires --family");
        if (from > to) throw UsageError("--from must not exceed --to");
        std::vector<FamilySpec> specs;
        for (std::size_t x = from; x <= to; ++x) {
            specs.push_back(instance(x));
            validate(specs.back());
        }
        std::vector<SweepRow> rows(specs.size());
        std::atomic<std::size_t> next{0};
        std::mutex error_mutex;
        std::exception_ptr error;
        auto worker = [&] {
            for (std::size_t i; (i = next++) < specs.size();) {
                try {
                    rows[i] = evaluate(specs[i]);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 1; t < std::max(1u, parallel); ++t) pool.emplace_back(worker);
        worker();
        for (auto& t : pool) t.join();
        if (error) std::rethrow_exception(error);

        bool all_agree = true;
        for (const auto& r : rows) all_agree = all_agree && r.agree;
        if (as_json) {
            json doc = json::array();
            for (const auto& r : rows) {
                json theorem{{"lower", r.theorem.lower}, {"upper", r.theorem.upper},
                             {"exact", r.theorem.exact ? json(*r.theorem.exact) : json(nullptr)},
                             {"provenance", r.theorem.provenance}};
                doc.push_back({{"spec", r.spec},
                               {"theorem", theorem},
                               {"claimed_k", r.claimed_k},
                               {"solver_value", r.solver ? json(*r.solver) : json(nullptr)},
                               {"solver_outcome", r.solver_outcome},
                               {"witness_ok", r.witness_ok},
                               {"agree", r.agree},
                               {"elapsed", r.elapsed}});
            }
            std::cout << json{{"rows", doc}, {"all_agree", all_agree}}.dump() << '\n';
        } else {
            std::cout << std::left << std::setw(32) << "instance" << std::setw(12) << "theorem"
                      << std::setw(10) << "claimed" << std::setw(10) << "solver" << std::setw(10)
                      << "witness" << std::setw(8) << "agree" << "seconds\n";
            for (const auto& r : rows) {
                const std::string theorem =
                    r.theorem.exact ? std::to_string(*r.theorem.exact)
                                    : "[" + std::to_string(r.theorem.lower) + "," +
                                          std::to_string(r.theorem.upper) + "]";
                std::cout << std::setw(32) << r.spec << std::setw(12) << theorem << std::setw(10)
                          << r.claimed_k << std::setw(10)
                          << (r.solver ? std::to_string(*r.solver) : r.solver_outcome)
                          << std::setw(10) << (r.witness_ok ? "ok" : "BAD") << std::setw(8)
                          << (r.agree ? "yes" : "NO") << std::fixed << std::setprecision(3)
                          << r.elapsed << '\n';
            }
        }
        return all_agree ? kOk : kDisagree;
    }
};

// --- lobster-table --------------------------------------------------------

struct LobsterTableCmd {
    std::size_t delta1 = 0, delta2 = 0;
    bool csv = false;

    int run() const {
        const auto t = m_table(delta1, delta2);
        std::cout << (csv ? t.render_csv() : t.render_text());
        return kOk;
    }
};

// --- bounds ---------------------------------------------------------------

struct BoundsCmd {
    std::string input;
    FamilyFlags fam;
    bool as_json = false;

    int run() const {
        BoundsResult b;
        std::string lower_why, upper_why;
        if (!input.empty()) {
            const auto g = load_graph(input);
            if (g.empty()) throw UsageError("graph has no vertices");
            b.lower = lower_bound(g);
            const auto diam = diameter(g);
            const Label by_degree = static_cast<Label>(g.max_degree()) + 1;
            lower_why = diam && *diam <= 2 && static_cast<Label>(g.vertex_count()) > by_degree
                            ? "diameter-2 bound (n)"
                            : "maximum degree bound (Delta+1)";
            if (is_tree(g)) {
                b.upper = 2 * static_cast<Label>(g.max_degree()) + 1;
                upper_why = "tree bound (2 Delta + 1)";
            } else {
                b.upper = power_of_three_bound(g.vertex_count());
                upper_why = "powers-of-three labeling (3^(n-1))";
            }
            b.lower = std::min(b.lower, b.upper);
        } else if (!fam.name.empty()) {
            b = closed_form(fam.spec());
            lower_why = upper_why = b.provenance;
        } else {
            throw UsageError("bounds needs --input FILE or --family NAME");
        }
        if (as_json) {
            std::cout << json{{"lower", b.lower},
                              {"upper", b.upper},
                              {"exact", b.exact ? json(*b.exact) : json(nullptr)},
                              {"lower_provenance", lower_why},
                              {"upper_provenance", upper_why}}
                             .dump()
                      << '\n';
        } else {
            std::cout << "lower " << b.lower << " (" << lower_why << ")\n"
                      << "upper " << b.upper << " (" << upper_why << ")\n";
            if (b.exact) std::cout << "exact " << *b.exact << '\n';
        }
        return kOk;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Total difference labelings: exact search, constructions and verification"};
    app.require_subcommand(1);

    ChiCmd chi;
    auto* chi_cmd = app.add_subcommand("chi", "compute chi_td by exact search");
    chi_cmd->add_option("--input", chi.input, "edge-list file");
    chi.fam.attach(chi_cmd);
    chi.budget.attach(chi_cmd);
    chi_cmd->add_option("--max-k", chi.max_k, "largest k to try")->check(CLI::PositiveNumber);
    chi_cmd->add_option("--witness-out", chi.witness_out, "write the witness labeling JSON here");
    chi_cmd->add_flag("--json", chi.as_json);

    ConstructCmd con;
    auto* con_cmd = app.add_subcommand("construct", "build a family labeling");
    con.fam.attach(con_cmd, true);
    con_cmd->add_option("--out", con.out, "labeling JSON output");
    con_cmd->add_option("--graph-out", con.graph_out, "edge-list output");
    con_cmd->add_flag("--json", con.as_json);

    VerifyCmd ver;
    auto* ver_cmd = app.add_subcommand("verify", "check a labeling");
    ver_cmd->add_option("--graph", ver.graph, "edge-list file")->required();
    ver_cmd->add_option("--labeling", ver.labeling, "labeling JSON file")->required();
    ver_cmd->add_option("--k", ver.k, "largest allowed vertex or edge label");
    ver_cmd->add_flag("--json", ver.as_json);

    SweepCmd sw;
    auto* sw_cmd = app.add_subcommand("sweep", "construct, verify and solve a range of instances");
    sw.fam.attach(sw_cmd, true);
    sw_cmd->add_option("--from", sw.from)->required();
    sw_cmd->add_option("--to", sw.to)->required();
    sw_cmd->add_option("--check", sw.check)->check(CLI::IsMember({"exact", "verify-only"}));
    sw_cmd->add_option("--parallel", sw.parallel)->check(CLI::Range(1u, 256u));
    sw.budget.attach(sw_cmd);
    sw_cmd->add_flag("--json", sw.as_json);

    LobsterTableCmd lt;
    auto* lt_cmd = app.add_subcommand("lobster-table", "greedy tertiary maxima m(r, s)");
    lt_cmd->add_option("--delta1", lt.delta1)->required();
    lt_cmd->add_option("--delta2", lt.delta2)->required();
    lt_cmd->add_flag("--csv", lt.csv);

    BoundsCmd bd;
    auto* bd_cmd = app.add_subcommand("bounds", "lower and upper bounds with their source");
    bd_cmd->add_option("--input", bd.input, "edge-list file");
    bd.fam.attach(bd_cmd);
    bd_cmd->add_flag("--json", bd.as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*chi_cmd) return chi.run();
        if (*con_cmd) return con.run();
        if (*ver_cmd) return ver.run();
        if (*sw_cmd) return sw.run();
        if (*lt_cmd) return lt.run();
        if (*bd_cmd) return bd.run();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kVerifyFailed;
    }
    return kUsage;
}
