#include "unitgraph/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <thread>

#include "unitgraph/catalog.hpp"
#include "unitgraph/errors.hpp"
#include "unitgraph/finite_ring.hpp"
#include "unitgraph/invariants.hpp"
#include "unitgraph/reports.hpp"
#include "unitgraph/structure.hpp"
#include "unitgraph/theorem_lab.hpp"
#include "unitgraph/unit_graph.hpp"

namespace unitgraph {

namespace {

constexpr std::uint64_t kDefaultChiBudget = 2'000'000;

struct Settings {
    std::size_t order_cap = RealizeOptions{}.order_cap;
    std::string spec;
    std::string format;
    bool check_axioms = false;
    std::uint64_t seed = AxiomCheckOptions{}.seed;
    std::uint64_t node_budget = 0;
    std::size_t chi_cap = ChromaticOptions{}.exact_cap;
    std::vector<std::string> theorems;
    std::vector<std::string> rings;
    unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
    std::uint64_t max_order = 0;
};

RealizeOptions realize_options(const Settings& s) {
    RealizeOptions opts;
    opts.order_cap = s.order_cap;
    return opts;
}

int cmd_ring(const Settings& s, std::ostream& out, std::ostream& err) {
    const auto ring = FiniteRing::realize(s.spec, realize_options(s));
    Record record = structure_record(ring, structure_report(ring));
    int code = exit_ok;
    if (s.check_axioms) {
        AxiomCheckOptions opts;
        opts.seed = s.seed;
        const auto axioms = check_ring_axioms(ring, opts);
        std::string text = axioms.ok ? "ok" : "failed";
        text += axioms.exhaustive ? " exhaustive " : " sampled ";
        text += std::to_string(axioms.triples_checked) + " triples";
        record.emplace_back("axioms", text);
        if (!axioms.ok) {
            err << "ring axioms fail: " << axioms.failure << '\n';
            code = exit_realize_error;
        }
    }
    out << (s.format == "records" ? render_records(record) : render_human(record));
    return code;
}

int cmd_graph(const Settings& s, std::ostream& out) {
    const auto ring = FiniteRing::realize(s.spec, realize_options(s));
    const auto g = build_unit_graph(ring);
    if (s.format == "dot") {
        out << export_dot(g, ring.name());
    } else {
        const auto text = export_edgelist(g);
        out << text;
        if (!text.empty()) out << '\n';
    }
    return exit_ok;
}

int cmd_invariants(const Settings& s, std::ostream& out, std::ostream& err) {
    const auto ring = FiniteRing::realize(s.spec, realize_options(s));
    InvariantOptions opts;
    opts.node_budget = s.node_budget;
    opts.chromatic.exact_cap = s.chi_cap;
    opts.chromatic.node_budget = s.node_budget != 0 ? s.node_budget : kDefaultChiBudget;
    const auto report = compute_invariants(build_unit_graph(ring), opts);
    const Record record = invariant_record(ring, report);
    out << (s.format == "records" ? render_records(record) : render_human(record));
    if (!report.exact()) {
        err << "solver limits reached; report is inexact\n";
        return exit_budget_exceeded;
    }
    return exit_ok;
}

std::vector<std::string> split_filters(const std::vector<std::string>& raw) {
    std::vector<std::string> out;
    for (const auto& item : raw) {
        std::size_t start = 0;
        while (start <= item.size()) {
            const auto comma = std::min(item.find(',', start), item.size());
            if (comma > start) out.push_back(item.substr(start, comma - start));
            start = comma + 1;
        }
    }
    return out;
}

int cmd_verify(const Settings& s, std::ostream& out, std::ostream& err) {
    const auto filters = split_filters(s.theorems);
    for (const auto& f : filters) {
        const bool known = std::any_of(kAllTheorems.begin(), kAllTheorems.end(),
                                       [&](TheoremId id) { return theorem_name(id).starts_with(f); });
        if (!known) {
            err << "unknown theorem filter: " << f << '\n';
            return exit_parse_error;
        }
    }
    std::vector<std::string> specs;
    if (s.rings.empty()) {
        const auto entries = s.max_order != 0 ? catalog_up_to(s.max_order) : default_catalog();
        for (const auto& e : entries) specs.push_back(e.spec);
    } else {
        for (const auto& text : s.rings) specs.push_back(to_string(parse_ring_spec(text)));
    }
    LabOptions opts;
    opts.realize = realize_options(s);
    opts.clique_budget = s.node_budget;
    opts.chromatic.exact_cap = s.chi_cap;
    if (s.node_budget != 0) opts.chromatic.node_budget = s.node_budget;

    const auto run = run_catalog(specs, filters, opts, s.jobs);
    for (const auto& v : run.verdicts) out << serialize(v) << '\n';
    for (const auto& e : run.errors) err << "error: " << e << '\n';
    out << "# summary holds=" << run.holds << " fails=" << run.fails << " n/a=" << run.not_applicable
        << " skipped=" << run.skipped << '\n';
    if (!run.errors.empty()) return exit_realize_error;
    return run.fails == 0 ? exit_ok : exit_theorem_failure;
}

int cmd_catalog_list(const Settings& s, std::ostream& out) {
    const auto entries = s.max_order != 0 ? catalog_up_to(s.max_order) : default_catalog();
    for (const auto& e : entries) out << e.spec << '\t' << e.notes << '\n';
    return exit_ok;
}

int cmd_catalog_describe(const Settings& s, std::ostream& out, std::ostream& err) {
    const auto entry = find_catalog_entry(s.spec);
    if (!entry) {
        err << "not in the default catalog: " << s.spec << '\n';
        return exit_parse_error;
    }
    out << entry->spec << '\t' << entry->notes << '\n';
    return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Settings s;
    CLI::App app{"Unit graphs of finite rings", "unitgraph"};
    app.require_subcommand(1);
    app.add_option("--order-cap", s.order_cap, "Largest ring order to realize")->check(CLI::PositiveNumber);

    auto* ring = app.add_subcommand("ring", "Structure report for a ring");
    ring->add_option("spec", s.spec, "Ring spec, e.g. Z4, GF(9), M2(GF(2)), Z3 x Z5")->required();
    ring->add_option("--format", s.format)->check(CLI::IsMember({"human", "records"}));
    ring->add_flag("--check-axioms", s.check_axioms, "Check the ring axioms");
    ring->add_option("--seed", s.seed, "Seed for sampled axiom checks");

    auto* graph = app.add_subcommand("graph", "Print the unit graph");
    graph->add_option("spec", s.spec)->required();
    graph->add_option("--format", s.format)->check(CLI::IsMember({"dot", "edgelist"}));

    auto* inv = app.add_subcommand("invariants", "Clique, independence and chromatic numbers");
    inv->add_option("spec", s.spec)->required();
    inv->add_option("--format", s.format)->check(CLI::IsMember({"human", "records"}));
    inv->add_option("--node-budget", s.node_budget, "Search node budget (0 = unlimited)");
    inv->add_option("--chi-cap", s.chi_cap, "Largest graph for exact chromatic number");

    auto* verify = app.add_subcommand("verify", "Check the theorem suite over rings");
    verify->add_option("--theorem", s.theorems, "Theorem id or prefix (repeatable, comma separated)");
    verify->add_option("--ring", s.rings, "Ring spec (repeatable); default is the catalog");
    verify->add_option("--jobs", s.jobs, "Worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--max-order", s.max_order, "Only catalog rings up to this order");
    verify->add_option("--node-budget", s.node_budget);
    verify->add_option("--chi-cap", s.chi_cap);

    auto* catalog = app.add_subcommand("catalog", "The default ring catalog");
    catalog->require_subcommand(1);
    auto* list = catalog->add_subcommand("list", "List catalog specs");
    list->add_option("--max-order", s.max_order);
    auto* describe = catalog->add_subcommand("describe", "Notes for one catalog ring");
    describe->add_option("spec", s.spec)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_parse_error;
    }

    try {
        if (ring->parsed()) return cmd_ring(s, out, err);
        if (graph->parsed()) return cmd_graph(s, out);
        if (inv->parsed()) return cmd_invariants(s, out, err);
        if (verify->parsed()) return cmd_verify(s, out, err);
        if (list->parsed()) return cmd_catalog_list(s, out);
        if (describe->parsed()) return cmd_catalog_describe(s, out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return exit_parse_error;
    } catch (const RealizeError& e) {
        err << "cannot realize: " << e.what() << '\n';
        return exit_realize_error;
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << '\n';
        return exit_realize_error;
    }
    return exit_parse_error;
}

}  // namespace unitgraph
