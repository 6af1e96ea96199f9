#include <hrl/bounds.hpp>
#include <hrl/cli.hpp>
#include <hrl/generators.hpp>
#include <hrl/harness.hpp>
#include <hrl/io.hpp>
#include <hrl/loose.hpp>
#include <hrl/monochromatic.hpp>
#include <hrl/regularity.hpp>
#include <hrl/rng.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <ostream>

namespace hrl::cli {

namespace {

using nlohmann::json;

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const char * to_string(mono::SearchStatus s) { return s == mono::SearchStatus::complete ? "complete" : "incomplete"; }
const char * to_string(loose::SearchStatus s) { return s == loose::SearchStatus::complete ? "complete" : "incomplete"; }

/// Colors realigned from canonical edge order to the file's line order.
Coloring in_file_order(const io::LoadedHypergraph & loaded, const Coloring & coloring)
{
    std::vector<Color> colors;
    for (auto e : loaded.canonical_index)
        colors.push_back(coloring[e]);
    return Coloring(coloring.r(), std::move(colors));
}

json edge_sets(const Hypergraph & graph, const std::vector<EdgeIndex> & edges)
{
    json out = json::array();
    for (auto e : edges) {
        auto edge = graph.edge(e);
        out.push_back(std::vector<Vertex>(edge.begin(), edge.end()));
    }
    return out;
}

json mc_json(const mono::McResult & result)
{
    json out{{"value", result.value}, {"witness_color", result.witness_color},
        {"witness_component", result.witness_component}, {"status", to_string(result.status)}};
    if (result.status == mono::SearchStatus::incomplete)
        out["lower_bound"] = result.lower_bound;
    return out;
}

struct Options {
    std::size_t shards = 1;

    std::string gen_kind;
    std::size_t k = 3, n = 0, r = 2, t = 0, color = 1, restarts = 10, attempts = 50, ell = 0, a = 0, b = 0;
    double p = 0.5, eps = 0.0, density = 1.0;
    std::uint64_t seed = 1, budget_nodes = 0, budget = 256;
    std::string mode = "uniform";
    std::string out_file, coloring_out, partition_out, graph_file, coloring_file, partition_file, cluster_coloring;
    bool exact = false, heuristic = false;
    std::string theorem, eps_text, alpha_text;
    std::string suite = "all";

    std::string config_file, kind, coloring_kind, csv_out, json_out;
    std::vector<std::size_t> ns;
    std::vector<double> ps;
    std::size_t trials = 0;
    double alpha = -1;
};

io::LoadedHypergraph load_graph(const Options & o)
{
    if (o.graph_file.empty())
        throw Usage("--graph is required");
    return io::read_hypergraph(o.graph_file);
}

int cmd_gen(const Options & o, std::ostream & out)
{
    Hypergraph graph;
    std::optional<Coloring> coloring;
    std::optional<Partition> partition;
    if (o.gen_kind == "complete") {
        graph = gen::complete(o.k, o.n);
    } else if (o.gen_kind == "random") {
        graph = gen::random_hypergraph(o.k, o.n, o.p, o.seed);
    } else if (o.gen_kind == "near-complete") {
        auto mode = o.mode == "star" ? gen::DeletionMode::adversarial_star : gen::DeletionMode::uniform_random;
        if (o.mode != "star" && o.mode != "uniform")
            throw Usage("--mode must be uniform or star");
        graph = gen::near_complete(o.k, o.n, o.eps, mode, o.seed);
    } else if (o.gen_kind == "kpartite") {
        std::vector<std::size_t> sizes(o.k, o.n);
        auto inst = gen::k_partite(sizes, o.p, o.seed);
        graph = std::move(inst.graph);
        partition = std::move(inst.parts);
    } else if (o.gen_kind == "extremal-comp") {
        auto ext = gen::extremal_component_coloring(o.k, o.n);
        graph = std::move(ext.graph);
        coloring = std::move(ext.coloring);
        partition = std::move(ext.parts);
    } else {
        auto ext = gen::extremal_cycle_coloring(o.k, o.n);
        graph = std::move(ext.graph);
        coloring = std::move(ext.coloring);
    }
    if (!o.coloring_out.empty()) {
        if (!coloring)
            throw Usage("--coloring-out needs a generator that produces a coloring");
        io::save_coloring(o.coloring_out, *coloring);
    }
    if (!o.partition_out.empty()) {
        if (!partition)
            throw Usage("--partition-out needs a generator that produces a partition");
        io::save_partition(o.partition_out, *partition);
    }
    if (o.out_file.empty()) {
        io::write_hypergraph(out, graph);
    } else {
        io::save_hypergraph(o.out_file, graph);
        out << json{{"k", graph.k()}, {"n", graph.n()}, {"edges", graph.num_edges()}}.dump(2) << "\n";
    }
    return 0;
}

int cmd_mc(const Options & o, std::ostream & out)
{
    auto loaded = load_graph(o);
    if (o.coloring_file.empty())
        throw Usage("--coloring is required");
    auto coloring = io::read_coloring(o.coloring_file, loaded);
    out << mc_json(mono::mc(loaded.graph, coloring)).dump(2) << "\n";
    return 0;
}

int cmd_mc_exact(const Options & o, std::ostream & out)
{
    auto loaded = load_graph(o);
    mono::SearchBudget budget;
    budget.shards = o.shards;
    if (o.budget_nodes > 0)
        budget.max_nodes = o.budget_nodes;
    auto result = mono::mc_r_exact(loaded.graph, o.r, budget);
    if (!o.coloring_out.empty() && result.coloring)
        io::save_coloring(o.coloring_out, in_file_order(loaded, *result.coloring));
    out << mc_json(result).dump(2) << "\n";
    return result.status == mono::SearchStatus::complete ? 0 : 1;
}

int cmd_mc_search(const Options & o, std::ostream & out)
{
    auto loaded = load_graph(o);
    auto result = mono::mc_r_localsearch(loaded.graph, o.r, o.restarts, o.seed);
    if (!o.coloring_out.empty() && result.coloring)
        io::save_coloring(o.coloring_out, in_file_order(loaded, *result.coloring));
    out << mc_json(result).dump(2) << "\n";
    return 0;
}

int cmd_cycle_longest(const Options & o, std::ostream & out)
{
    auto loaded = load_graph(o);
    std::optional<Coloring> coloring;
    std::optional<loose::ColorFilter> filter;
    if (!o.coloring_file.empty()) {
        coloring = io::read_coloring(o.coloring_file, loaded);
        filter = loose::ColorFilter{&*coloring, static_cast<Color>(o.color)};
    }
    if (o.exact && o.heuristic)
        throw Usage("--exact and --heuristic are exclusive");
    loose::CycleSearchResult result;
    if (o.heuristic) {
        result = loose::longest_loose_cycle_heuristic(loaded.graph, filter, o.attempts, o.seed);
    } else {
        auto limit = o.budget_nodes > 0 ? o.budget_nodes : std::numeric_limits<std::uint64_t>::max();
        result = loose::longest_loose_cycle_exact(loaded.graph, filter, limit);
    }
    json j{{"mode", o.heuristic ? "heuristic" : "exact"}, {"status", to_string(result.status)}};
    if (result.cycle) {
        j["vertices"] = result.cycle->vertices.size();
        j["edge_count"] = result.cycle->edges.size();
        j["cycle"] = result.cycle->vertices;
        j["edges"] = edge_sets(loaded.graph, result.cycle->edges);
    } else {
        j["vertices"] = 0;
        j["edge_count"] = 0;
    }
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_cycle_assemble(const Options & o, std::ostream & out)
{
    auto loaded = load_graph(o);
    if (o.coloring_file.empty() || o.partition_file.empty())
        throw Usage("--coloring and --partition are required");
    auto coloring = io::read_coloring(o.coloring_file, loaded);
    auto clusters = io::read_partition(o.partition_file);
    auto cluster = reg::build_cluster_graph(loaded.graph, coloring, clusters, o.eps, o.p);
    Coloring cluster_coloring = cluster.coloring;
    if (!o.cluster_coloring.empty()) {
        io::LoadedHypergraph canonical{cluster.graph, {}};
        for (EdgeIndex e = 0; e < cluster.graph.num_edges(); ++e)
            canonical.canonical_index.push_back(e);
        cluster_coloring = io::read_coloring(o.cluster_coloring, canonical);
    }
    std::optional<loose::DiamondMatching> best;
    for (Color c = 1; c <= cluster_coloring.r(); ++c) {
        auto packing = loose::find_connected_diamond_matching(cluster.graph, cluster_coloring, c, 0);
        if (!packing.cycles.empty() && (!best || packing.vertex_count > best->vertex_count))
            best = std::move(packing);
    }
    json j{{"cluster_edges", cluster.graph.num_edges()}, {"rejected_tuples", cluster.rejected.size()}};
    if (!best) {
        j["error"] = "cluster graph has no monochromatic loose cycle packing";
        out << j.dump(2) << "\n";
        return 1;
    }
    try {
        auto report = loose::assemble_loose_cycle(loaded.graph, coloring, clusters, cluster.graph, cluster_coloring,
            best->cycles, o.eps);
        j["color"] = report.color;
        j["edge_count"] = report.cycle.edges.size();
        j["vertices"] = report.cycle.vertices.size();
        j["packing_edges"] = report.packing_edges;
        j["long_path_edges"] = report.long_path_edges;
        j["connector_edges"] = report.connector_edges;
        j["edge_bound"] = report.edge_bound;
        j["cycle"] = report.cycle.vertices;
        out << j.dump(2) << "\n";
        return 0;
    } catch (const loose::AssemblyError & e) {
        j["error"] = e.what();
        j["stage"] = loose::to_string(e.stage());
        out << j.dump(2) << "\n";
        return 1;
    }
}

json density_json(const reg::DensityRecord & d)
{
    return json{{"tuple", d.tuple}, {"edges", d.edges}, {"product", d.product}, {"dp", d.dp}};
}

int cmd_regularity_audit(const Options & o, std::ostream & out)
{
    auto loaded = load_graph(o);
    if (o.partition_file.empty())
        throw Usage("--partition is required");
    auto partition = io::read_partition(o.partition_file);
    check_partition(partition, loaded.graph.n(), false);
    std::vector<std::pair<Color, Hypergraph>> classes;
    if (o.coloring_file.empty()) {
        classes.emplace_back(0, loaded.graph);
    } else {
        auto coloring = io::read_coloring(o.coloring_file, loaded);
        for (Color c = 1; c <= coloring.r(); ++c)
            classes.emplace_back(c, color_class(loaded.graph, coloring, c).graph);
    }
    std::size_t k = loaded.graph.k(), t = partition.size();
    json tuples = json::array();
    bool all = true;
    std::uint64_t rank = 0;
    if (t >= k) {
        for (std::uint64_t index = 0; index < binomial_coefficient(t, k); ++index) {
            auto pick = gen::unrank_subset(t, k, index);
            Partition sets;
            for (auto i : pick)
                sets.push_back(partition[i]);
            for (const auto & [c, graph] : classes) {
                auto d = reg::density(graph, sets, o.p);
                d.tuple.assign(pick.begin(), pick.end());
                auto verdict = reg::regularity_falsifier(graph, sets, o.eps, o.p, o.budget, derive_seed(o.seed, rank++));
                json entry = density_json(d);
                if (c != 0)
                    entry["color"] = c;
                entry["verdict"] = verdict.pass ? "pass" : "fail";
                entry["exhaustive"] = verdict.exhaustive;
                if (verdict.witness) {
                    entry["witness"] = *verdict.witness;
                    entry["witness_dp"] = verdict.witness_density;
                    entry["deviation"] = verdict.deviation;
                }
                all = all && verdict.pass;
                tuples.push_back(std::move(entry));
            }
        }
    }
    out << json{{"pass", all}, {"tuples", tuples}}.dump(2) << "\n";
    return all ? 0 : 1;
}

int cmd_regularity_refine(const Options & o, std::ostream & out)
{
    auto loaded = load_graph(o);
    if (o.coloring_file.empty())
        throw Usage("--coloring is required");
    auto coloring = io::read_coloring(o.coloring_file, loaded);
    auto refined = reg::refine_partition(loaded.graph, coloring, o.t, o.eps, o.p, o.restarts, o.seed, o.budget);
    if (!o.out_file.empty())
        io::save_partition(o.out_file, refined.partition);
    out << json{{"partition", refined.partition}, {"irregular_fraction", refined.irregular_fraction},
                   {"tuples", refined.tuples}, {"degenerate", refined.degenerate}}
               .dump(2)
        << "\n";
    return 0;
}

int cmd_bounds(const Options & o, std::ostream & out)
{
    bounds::Params params;
    if (o.k)
        params.k = o.k;
    if (o.n)
        params.n = o.n;
    if (o.r)
        params.r = o.r;
    if (o.ell)
        params.ell = o.ell;
    if (!o.eps_text.empty())
        params.eps = bounds::parse_rational(o.eps_text);
    if (!o.alpha_text.empty())
        params.alpha = bounds::parse_rational(o.alpha_text);
    params.a = o.a;
    params.b = o.b;
    json j{{"theorem", o.theorem}};
    try {
        auto spec = bounds::evaluate(o.theorem, params);
        j["window_ok"] = true;
        j["window"] = spec.window;
        j["exact"] = spec.value.exact.has_value();
        j["threshold"] = spec.value.exact ? bounds::to_string(*spec.value.exact) : spec.value.approx.str(30);
        j["threshold_value"] = spec.value.to_double();
        j["degenerate"] = spec.degenerate;
        out << j.dump(2) << "\n";
        return 0;
    } catch (const bounds::OutOfValidity & e) {
        j["window_ok"] = false;
        j["error"] = e.what();
        out << j.dump(2) << "\n";
        return 1;
    }
}

int cmd_verify(const Options & o, std::ostream & out)
{
    std::vector<std::string> names;
    if (o.suite == "all")
        names = harness::suite_names();
    else
        names.push_back(o.suite);
    json reports = json::array();
    bool all = true;
    for (const auto & name : names) {
        auto report = harness::verify_suite(name, o.shards);
        all = all && report.pass();
        reports.push_back(harness::to_json(report));
    }
    out << json{{"pass", all}, {"suites", reports}}.dump(2) << "\n";
    return all ? 0 : 1;
}

int cmd_experiment(const Options & o, std::ostream & out)
{
    harness::ExperimentConfig config;
    if (!o.config_file.empty())
        config = harness::read_config(o.config_file);
    if (!o.kind.empty())
        config.kind = o.kind;
    if (o.k)
        config.k = o.k;
    if (!o.ns.empty())
        config.n = o.ns;
    if (o.r)
        config.r = o.r;
    if (!o.ps.empty())
        config.p = o.ps;
    if (o.eps > 0)
        config.eps = o.eps;
    if (o.alpha >= 0)
        config.alpha = o.alpha;
    if (o.trials)
        config.trials = o.trials;
    if (o.seed)
        config.seed = o.seed;
    if (!o.coloring_kind.empty())
        config.coloring = o.coloring_kind;
    if (o.restarts)
        config.restarts = o.restarts;
    if (!o.csv_out.empty())
        config.csv_out = o.csv_out;
    if (!o.json_out.empty())
        config.json_out = o.json_out;
    config.shards = o.shards;
    auto result = harness::run_experiment(config);
    auto csv = harness::to_csv(result);
    if (!config.csv_out.empty())
        io::write_text(config.csv_out, csv);
    if (!config.json_out.empty())
        io::write_text(config.json_out, harness::to_json(result).dump(2) + "\n");
    if (config.csv_out.empty())
        out << csv;
    else
        out << harness::to_json(result)["summary"].dump(2) << "\n";
    return result.summary.passed == result.summary.trials ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Monochromatic components and loose cycles in k-uniform hypergraphs", "hrl"};
    app.require_subcommand(1);
    Options o;
    o.seed = 0;
    o.k = 0;
    o.r = 0;
    o.restarts = 0;
    app.add_option("--shards", o.shards, "worker threads / search shards")->check(CLI::PositiveNumber);

    auto * gen = app.add_subcommand("gen", "generate a hypergraph");
    gen->add_option("kind", o.gen_kind)
        ->required()
        ->check(CLI::IsMember({"complete", "random", "near-complete", "kpartite", "extremal-comp", "extremal-cycle"}));
    gen->add_option("--k", o.k)->required();
    gen->add_option("--n", o.n, "vertices (part size for kpartite)")->required();
    gen->add_option("--p", o.p, "edge probability or density");
    gen->add_option("--eps", o.eps);
    gen->add_option("--mode", o.mode, "near-complete deletion: uniform | star");
    gen->add_option("--seed", o.seed);
    gen->add_option("--out", o.out_file);
    gen->add_option("--coloring-out", o.coloring_out);
    gen->add_option("--partition-out", o.partition_out);

    auto * mc = app.add_subcommand("mc", "largest monochromatic component of a coloring");
    mc->add_option("--graph", o.graph_file)->required();
    mc->add_option("--coloring", o.coloring_file)->required();

    auto * exact = app.add_subcommand("mc-exact", "exact mc_r by branch and bound");
    exact->add_option("--graph", o.graph_file)->required();
    exact->add_option("--r", o.r)->required();
    exact->add_option("--budget-nodes", o.budget_nodes);
    exact->add_option("--shards", o.shards)->check(CLI::PositiveNumber);
    exact->add_option("--coloring-out", o.coloring_out);

    auto * search = app.add_subcommand("mc-search", "upper bound on mc_r by local search");
    search->add_option("--graph", o.graph_file)->required();
    search->add_option("--r", o.r)->required();
    search->add_option("--restarts", o.restarts)->required();
    search->add_option("--seed", o.seed)->required();
    search->add_option("--coloring-out", o.coloring_out);

    auto * cycle = app.add_subcommand("cycle", "loose cycles");
    cycle->require_subcommand(1);
    auto * longest = cycle->add_subcommand("longest", "longest loose cycle");
    longest->add_option("--graph", o.graph_file)->required();
    longest->add_option("--coloring", o.coloring_file);
    longest->add_option("--color", o.color);
    longest->add_flag("--exact", o.exact);
    longest->add_flag("--heuristic", o.heuristic);
    longest->add_option("--attempts", o.attempts);
    longest->add_option("--seed", o.seed);
    longest->add_option("--budget-nodes", o.budget_nodes);
    auto * assemble = cycle->add_subcommand("assemble", "loose cycle from a cluster packing");
    assemble->add_option("--graph", o.graph_file)->required();
    assemble->add_option("--coloring", o.coloring_file)->required();
    assemble->add_option("--partition", o.partition_file)->required();
    assemble->add_option("--cluster-coloring", o.cluster_coloring);
    assemble->add_option("--eps", o.eps)->required();
    assemble->add_option("--p", o.p);

    auto * regularity = app.add_subcommand("regularity", "regularity audits");
    regularity->require_subcommand(1);
    auto * audit = regularity->add_subcommand("audit", "falsify (eps, p)-regularity of every part tuple");
    audit->add_option("--graph", o.graph_file)->required();
    audit->add_option("--partition", o.partition_file)->required();
    audit->add_option("--coloring", o.coloring_file);
    audit->add_option("--eps", o.eps)->required();
    audit->add_option("--p", o.p)->required();
    audit->add_option("--budget", o.budget);
    audit->add_option("--seed", o.seed);
    auto * refine = regularity->add_subcommand("refine", "search for a regular equipartition");
    refine->add_option("--graph", o.graph_file)->required();
    refine->add_option("--coloring", o.coloring_file)->required();
    refine->add_option("--t", o.t)->required();
    refine->add_option("--eps", o.eps)->required();
    refine->add_option("--p", o.p);
    refine->add_option("--restarts", o.restarts)->required();
    refine->add_option("--seed", o.seed)->required();
    refine->add_option("--budget", o.budget);
    refine->add_option("--out", o.out_file);

    auto * bounds_cmd = app.add_subcommand("bounds", "closed-form thresholds");
    bounds_cmd->require_subcommand(1);
    auto * eval = bounds_cmd->add_subcommand("eval", "evaluate one threshold");
    eval->add_option("--theorem", o.theorem)->required()->check(CLI::IsMember(bounds::all_theorem_ids()));
    eval->add_option("--k", o.k);
    eval->add_option("--n", o.n);
    eval->add_option("--r", o.r);
    eval->add_option("--eps", o.eps_text, "exact: 1e-6, 0.001 or 1/1000");
    eval->add_option("--alpha", o.alpha_text);
    eval->add_option("--ell", o.ell);
    eval->add_option("--a", o.a, "|A|");
    eval->add_option("--b", o.b, "|B|");

    auto * verify = app.add_subcommand("verify", "run verification suites");
    std::vector<std::string> suites = harness::suite_names();
    suites.push_back("all");
    verify->add_option("--suite", o.suite)->check(CLI::IsMember(suites));
    verify->add_option("--shards", o.shards)->check(CLI::PositiveNumber);

    auto * experiment = app.add_subcommand("experiment", "seeded batch experiment");
    experiment->add_option("--config", o.config_file);
    experiment->add_option("--kind", o.kind);
    experiment->add_option("--k", o.k);
    experiment->add_option("--n", o.ns);
    experiment->add_option("--r", o.r);
    experiment->add_option("--p", o.ps);
    experiment->add_option("--eps", o.eps);
    experiment->add_option("--alpha", o.alpha);
    experiment->add_option("--trials", o.trials);
    experiment->add_option("--seed", o.seed);
    experiment->add_option("--coloring", o.coloring_kind);
    experiment->add_option("--restarts", o.restarts);
    experiment->add_option("--csv", o.csv_out);
    experiment->add_option("--json", o.json_out);
    experiment->add_option("--shards", o.shards)->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError & e) {
        err << "hrl: " << e.what() << "\n";
        return 2;
    }
    if (o.seed == 0 && !experiment->parsed())
        o.seed = 1;
    if (o.restarts == 0 && !experiment->parsed())
        o.restarts = 10;

    try {
        if (gen->parsed())
            return cmd_gen(o, out);
        if (mc->parsed())
            return cmd_mc(o, out);
        if (exact->parsed())
            return cmd_mc_exact(o, out);
        if (search->parsed())
            return cmd_mc_search(o, out);
        if (longest->parsed())
            return cmd_cycle_longest(o, out);
        if (assemble->parsed())
            return cmd_cycle_assemble(o, out);
        if (audit->parsed())
            return cmd_regularity_audit(o, out);
        if (refine->parsed())
            return cmd_regularity_refine(o, out);
        if (eval->parsed())
            return cmd_bounds(o, out);
        if (verify->parsed())
            return cmd_verify(o, out);
        if (experiment->parsed())
            return cmd_experiment(o, out);
    } catch (const Usage & e) {
        err << "hrl: " << e.what() << "\n";
        return 2;
    } catch (const io::ParseError & e) {
        err << "hrl: " << e.what() << "\n";
        return 2;
    } catch (const io::IoError & e) {
        err << "hrl: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument & e) {
        err << "hrl: " << e.what() << "\n";
        return 2;
    } catch (const std::exception & e) {
        err << "hrl: error: " << e.what() << "\n";
        return 1;
    }
    err << "hrl: no command\n";
    return 2;
}

} // namespace hrl::cli
