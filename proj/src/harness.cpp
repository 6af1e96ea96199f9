#include <hrl/bounds.hpp>
#include <hrl/generators.hpp>
#include <hrl/harness.hpp>
#include <hrl/io.hpp>
#include <hrl/loose.hpp>
#include <hrl/monochromatic.hpp>
#include <hrl/parallel.hpp>
#include <hrl/regularity.hpp>
#include <hrl/rng.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hrl::harness {

using nlohmann::json;

namespace {

std::string number(double x)
{
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.17g", x);
    return buffer;
}

bool random_kind(const std::string & kind) { return kind == "mc-random" || kind == "mc-near-complete"; }

const std::set<std::string> & kinds()
{
    static const std::set<std::string> out{"mc-random", "mc-near-complete", "component-extremal", "cycle-extremal"};
    return out;
}

std::size_t longest_cycle_vertices(const Hypergraph & graph, const Coloring & coloring)
{
    std::size_t best = 0;
    for (Color c = 1; c <= coloring.r(); ++c) {
        auto found = loose::longest_loose_cycle_exact(graph, loose::ColorFilter{&coloring, c});
        if (found.status != loose::SearchStatus::complete)
            throw std::runtime_error("cycle search did not complete");
        if (found.cycle)
            best = std::max(best, found.cycle->vertices.size());
    }
    return best;
}

Coloring random_coloring(std::size_t r, std::size_t m, std::uint64_t seed)
{
    auto rng = derive_stream(seed, 0);
    std::vector<Color> colors(m);
    for (auto & c : colors)
        c = static_cast<Color>(1 + uniform_below(rng, r));
    return Coloring(r, std::move(colors));
}

TrialRecord run_trial(const ExperimentConfig & config, std::size_t n, double p, std::size_t trial, std::uint64_t seed)
{
    TrialRecord rec;
    rec.kind = config.kind;
    rec.k = config.k;
    rec.n = n;
    rec.r = config.r;
    rec.p = p;
    rec.eps = config.eps;
    rec.alpha = config.alpha;
    rec.trial = trial;
    rec.seed = seed;
    auto start = std::chrono::steady_clock::now();
    if (random_kind(config.kind)) {
        auto graph = config.kind == "mc-random"
            ? gen::random_hypergraph(config.k, n, p, derive_seed(seed, 0))
            : gen::near_complete(config.k, n, config.eps, gen::DeletionMode::uniform_random, derive_seed(seed, 0));
        Coloring coloring = config.coloring == "localsearch"
            ? *mono::mc_r_localsearch(graph, config.r, config.restarts, derive_seed(seed, 1)).coloring
            : random_coloring(config.r, graph.num_edges(), derive_seed(seed, 1));
        rec.measured = static_cast<double>(mono::mc(graph, coloring).value);
        rec.threshold = (1.0 - config.alpha) * static_cast<double>(n);
        rec.direction = Direction::lower;
    } else if (config.kind == "component-extremal") {
        auto ext = gen::extremal_component_coloring(config.k, n);
        rec.r = config.k + 1;
        rec.measured = static_cast<double>(mono::mc(ext.graph, ext.coloring).value);
        rec.threshold = static_cast<double>(config.k * n) / static_cast<double>(config.k + 1);
        rec.direction = Direction::upper;
    } else {
        auto ext = gen::extremal_cycle_coloring(config.k, n);
        rec.r = 2;
        rec.measured = static_cast<double>(longest_cycle_vertices(ext.graph, ext.coloring));
        rec.threshold = bounds::cycle_threshold(config.k, n, 0).value.to_double();
        rec.direction = Direction::upper;
    }
    rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    rec.pass = rec.recompute_pass();
    return rec;
}

} // namespace

bool TrialRecord::recompute_pass() const
{
    constexpr double slack = 1e-9;
    return direction == Direction::lower ? measured >= threshold - slack : measured <= threshold + slack;
}

void validate(const ExperimentConfig & config)
{
    if (!kinds().count(config.kind))
        throw std::invalid_argument("kind: unknown experiment '" + config.kind + "'");
    if (config.k < 2)
        throw std::invalid_argument("k: must be at least 2");
    if (config.n.empty())
        throw std::invalid_argument("n: grid must be non-empty");
    if (config.p.empty())
        throw std::invalid_argument("p: grid must be non-empty");
    for (double p : config.p)
        if (!(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument("p: values must lie in [0, 1]");
    if (config.trials < 1)
        throw std::invalid_argument("trials: must be at least 1");
    if (config.r < 1)
        throw std::invalid_argument("r: must be at least 1");
    if (config.shards < 1)
        throw std::invalid_argument("shards: must be at least 1");
    if (config.coloring != "random" && config.coloring != "localsearch")
        throw std::invalid_argument("coloring: must be 'random' or 'localsearch'");
    if (config.kind == "mc-near-complete" && !(config.eps >= 0.0 && config.eps < 1.0))
        throw std::invalid_argument("eps: must lie in [0, 1)");
    for (auto n : config.n) {
        if (n < config.k)
            throw std::invalid_argument("n: every value must be at least k");
        if (config.kind == "component-extremal" && n % (config.k + 1) != 0)
            throw std::invalid_argument("n: must be divisible by k+1 for component-extremal");
        if (config.kind == "cycle-extremal" && n % (2 * config.k - 1) != 0)
            throw std::invalid_argument("n: must be divisible by 2k-1 for cycle-extremal");
    }
}

json to_json(const ExperimentConfig & config)
{
    return json{{"kind", config.kind}, {"k", config.k}, {"n", config.n}, {"r", config.r}, {"p", config.p},
        {"eps", config.eps}, {"alpha", config.alpha}, {"trials", config.trials}, {"seed", config.seed},
        {"shards", config.shards}, {"coloring", config.coloring}, {"restarts", config.restarts},
        {"csv_out", config.csv_out}, {"json_out", config.json_out}};
}

ExperimentConfig config_from_json(const json & j)
{
    if (!j.is_object())
        throw std::invalid_argument("config: expected a JSON object");
    static const std::set<std::string> known{"kind", "k", "n", "r", "p", "eps", "alpha", "trials", "seed", "shards",
        "coloring", "restarts", "csv_out", "json_out"};
    for (const auto & item : j.items())
        if (!known.count(item.key()))
            throw std::invalid_argument("config: unknown field '" + item.key() + "'");
    ExperimentConfig out;
    auto field = [&](const char * key, auto & target) {
        if (!j.contains(key))
            return;
        try {
            j.at(key).get_to(target);
        } catch (const json::exception & e) {
            throw std::invalid_argument(std::string(key) + ": " + e.what());
        }
    };
    auto grid = [&](const char * key, auto & target) {
        if (!j.contains(key))
            return;
        if (j.at(key).is_array()) {
            field(key, target);
        } else {
            typename std::decay_t<decltype(target)>::value_type single{};
            field(key, single);
            target = {single};
        }
    };
    field("kind", out.kind);
    field("k", out.k);
    grid("n", out.n);
    field("r", out.r);
    grid("p", out.p);
    field("eps", out.eps);
    field("alpha", out.alpha);
    field("trials", out.trials);
    field("seed", out.seed);
    field("shards", out.shards);
    field("coloring", out.coloring);
    field("restarts", out.restarts);
    field("csv_out", out.csv_out);
    field("json_out", out.json_out);
    validate(out);
    return out;
}

ExperimentConfig read_config(const std::filesystem::path & path)
{
    auto text = io::read_text(path);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error & e) {
        throw io::ParseError(path.string(), 0, e.what());
    }
    return config_from_json(j);
}

ExperimentResult run_experiment(const ExperimentConfig & config)
{
    validate(config);
    std::vector<std::pair<std::size_t, double>> points;
    for (auto n : config.n) {
        if (random_kind(config.kind))
            for (double p : config.p)
                points.emplace_back(n, p);
        else
            points.emplace_back(n, 1.0);
    }
    ExperimentResult out;
    out.records.resize(points.size() * config.trials);
    parallel_for(out.records.size(), worker_count(config.shards), [&](std::size_t index) {
        auto [n, p] = points[index / config.trials];
        out.records[index] = run_trial(config, n, p, index % config.trials, derive_seed(config.seed, index));
    });

    std::vector<double> measured;
    for (const auto & rec : out.records) {
        measured.push_back(rec.measured);
        out.summary.passed += rec.pass;
    }
    out.summary.trials = out.records.size();
    out.summary.pass_fraction = static_cast<double>(out.summary.passed) / static_cast<double>(out.summary.trials);
    std::sort(measured.begin(), measured.end());
    for (double q : {0.0, 0.1, 0.5, 0.9, 1.0}) {
        auto at = static_cast<std::size_t>(std::llround(q * static_cast<double>(measured.size() - 1)));
        out.summary.quantiles.push_back(measured[at]);
    }
    return out;
}

std::string to_csv(const ExperimentResult & result)
{
    std::ostringstream out;
    out << "# hyper-ramsey-lab v" << version << " schema=" << csv_schema << "\n";
    out << "kind,k,n,r,p,eps,alpha,trial,seed,measured,threshold,direction,pass\n";
    for (const auto & rec : result.records)
        out << rec.kind << ',' << rec.k << ',' << rec.n << ',' << rec.r << ',' << number(rec.p) << ','
            << number(rec.eps) << ',' << number(rec.alpha) << ',' << rec.trial << ',' << rec.seed << ','
            << number(rec.measured) << ',' << number(rec.threshold) << ','
            << (rec.direction == Direction::lower ? "lower" : "upper") << ',' << (rec.pass ? 1 : 0) << "\n";
    return out.str();
}

json to_json(const ExperimentResult & result)
{
    json records = json::array();
    for (const auto & rec : result.records)
        records.push_back({{"kind", rec.kind}, {"k", rec.k}, {"n", rec.n}, {"r", rec.r}, {"p", rec.p},
            {"eps", rec.eps}, {"alpha", rec.alpha}, {"trial", rec.trial}, {"seed", rec.seed},
            {"measured", rec.measured}, {"threshold", rec.threshold},
            {"direction", rec.direction == Direction::lower ? "lower" : "upper"}, {"pass", rec.pass}});
    return json{{"version", version}, {"schema", csv_schema}, {"records", records},
        {"summary",
            {{"trials", result.summary.trials}, {"passed", result.summary.passed},
                {"pass_fraction", result.summary.pass_fraction}, {"quantiles", result.summary.quantiles}}}};
}

bool SuiteReport::pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check & c) { return c.pass; });
}

const std::vector<std::string> & suite_names()
{
    static const std::vector<std::string> names{
        "thm1.1", "observation-cycle", "lemma-path", "lemma3.2", "obs6.2", "lemma6.3", "chernoff"};
    return names;
}

namespace {

void add(SuiteReport & report, std::string name, bool pass, std::string detail)
{
    report.checks.push_back({std::move(name), pass, std::move(detail)});
}

template <typename F>
void guarded(SuiteReport & report, const std::string & name, F && body)
{
    try {
        body();
    } catch (const std::exception & e) {
        add(report, name, false, std::string("exception: ") + e.what());
    }
}

std::string vs(double measured, double threshold)
{
    return "measured " + number(measured) + ", threshold " + number(threshold);
}

void suite_components(SuiteReport & report, std::size_t shards)
{
    guarded(report, "mc_3(K^3_5) = 5", [&] {
        mono::SearchBudget budget;
        budget.shards = shards;
        auto result = mono::mc_r_exact(gen::complete(3, 5), 3, budget);
        bool certified = result.coloring && mono::mc(gen::complete(3, 5), *result.coloring).value == 5;
        add(report, "mc_3(K^3_5) = 5", result.status == mono::SearchStatus::complete && result.value == 5 && certified,
            "value " + std::to_string(result.value));
    });
    guarded(report, "mc_3(K^3_4) = 4", [&] {
        mono::SearchBudget budget;
        budget.shards = shards;
        auto result = mono::mc_r_exact(gen::complete(3, 4), 3, budget);
        add(report, "mc_3(K^3_4) = 4", result.value == 4, "value " + std::to_string(result.value));
    });
    for (auto [k, n] : {std::pair<std::size_t, std::size_t>{3, 8}, {3, 12}, {4, 10}}) {
        std::string name = "extremal coloring k=" + std::to_string(k) + " n=" + std::to_string(n);
        guarded(report, name, [&] {
            auto ext = gen::extremal_component_coloring(k, n);
            auto value = mono::mc(ext.graph, ext.coloring).value;
            bounds::Params params;
            params.k = k;
            params.n = n;
            auto threshold = bounds::mc_threshold("1.1b", params).value;
            add(report, name, bounds::Rational(value) == *threshold.exact,
                vs(static_cast<double>(value), threshold.to_double()));
        });
    }
}

void suite_cycle(SuiteReport & report)
{
    guarded(report, "extremal cycle coloring n=10", [&] {
        auto ext = gen::extremal_cycle_coloring(3, 10);
        auto best = longest_cycle_vertices(ext.graph, ext.coloring);
        auto threshold = bounds::cycle_threshold(3, 10, 0).value;
        add(report, "extremal cycle coloring n=10", bounds::Rational(best) == *threshold.exact,
            vs(static_cast<double>(best), threshold.to_double()));
    });
    guarded(report, "red diamond n=5", [&] {
        auto ext = gen::extremal_cycle_coloring(3, 5);
        auto red = loose::find_connected_diamond_matching(ext.graph, ext.coloring, 1, 0);
        auto longest = loose::longest_loose_cycle_exact(ext.graph, loose::ColorFilter{&ext.coloring, 1});
        bool ok = red.cycles.size() == 1 && red.vertex_count == 4 && longest.cycle
            && longest.cycle->vertices.size() == 4;
        add(report, "red diamond n=5", ok, "diamonds " + std::to_string(red.cycles.size()));
    });
}

void suite_path(SuiteReport & report)
{
    auto instance = [&](std::size_t k, std::size_t m, double density, std::uint64_t seed) {
        std::string name = "dfs k=" + std::to_string(k) + " m=" + std::to_string(m) + " density=" + number(density);
        guarded(report, name, [&] {
            std::vector<std::size_t> sizes(k, m);
            sizes.front() = sizes.back() = m / 2;
            auto inst = gen::k_partite(sizes, density, seed);
            double zeta = 2.0 / static_cast<double>(m);
            auto result = loose::dfs_loose_path_or_witness(inst.graph, inst.parts, zeta);
            double need = (1 - 4 * zeta) * static_cast<double>(m) - 2;
            if (result.path) {
                bool valid = loose::is_loose_path(inst.graph, result.path->edges);
                add(report, name, valid && static_cast<double>(result.path->edges.size()) >= need - 1e-9,
                    vs(static_cast<double>(result.path->edges.size()), need));
            } else if (result.witness) {
                add(report, name, density < 1 && loose::spans_no_edge(inst.graph, *result.witness), "witness");
            } else {
                add(report, name, false, "neither path nor witness");
            }
        });
    };
    instance(3, 10, 1.0, 1);
    instance(4, 10, 1.0, 1);
    instance(3, 10, 0.9, 7);
}

void suite_lemma32(SuiteReport & report)
{
    double eps = 1.0 / 3.0 - 1e-6;
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        std::string name = "regular tuple component seed=" + std::to_string(seed);
        guarded(report, name, [&] {
            std::vector<std::size_t> sizes{9, 9, 9};
            auto inst = gen::k_partite(sizes, 0.97, seed);
            auto result = reg::regular_tuple_component(inst.graph, inst.parts, eps);
            if (result.counterexample) {
                bool empty = loose::spans_no_edge(inst.graph, *result.counterexample);
                add(report, name, empty, "hypothesis fails; counterexample spans no edge");
                return;
            }
            bool ok = result.exhaustive && result.component.has_value();
            for (std::size_t i = 0; i < 3 && ok; ++i)
                ok = static_cast<double>(result.intersections[i]) >= (1 - eps) * 9 - 1e-9;
            add(report, name, ok, ok ? "component meets every part" : "component too small");
        });
    }
}

void suite_high_degree(SuiteReport & report)
{
    for (auto [n, eps] : {std::pair<std::size_t, double>{20, 0.01}, {24, 0.02}}) {
        std::string name = "high degree subgraph n=" + std::to_string(n) + " eps=" + number(eps);
        guarded(report, name, [&] {
            auto graph = gen::near_complete(3, n, eps, gen::DeletionMode::uniform_random, n);
            auto result = mono::high_degree_subgraph(graph, eps, 0.5);
            bool ok = static_cast<double>(result.subgraph.vertices.size()) >= result.size_guarantee - 1e-9
                && (!result.min_degree_checked
                    || static_cast<double>(result.min_degree) >= result.degree_threshold - 1e-9);
            add(report, name, ok,
                "kept " + std::to_string(result.subgraph.vertices.size()) + " of " + std::to_string(n)
                    + ", min degree " + std::to_string(result.min_degree));
        });
    }
    guarded(report, "binomial inequality", [&] {
        auto check = bounds::binom_inequality_check(100, 3, bounds::parse_rational("0.01"), 50);
        add(report, "binomial inequality", check.holds,
            "lhs " + bounds::to_string(check.lhs) + ", rhs " + bounds::to_string(check.rhs));
    });
}

void suite_one_core(SuiteReport & report)
{
    double eps = 1e-8;
    guarded(report, "one-core extremal k=3 n=8", [&] {
        auto ext = gen::extremal_component_coloring(3, 8);
        auto check = mono::one_core_bound_check(ext.graph, ext.coloring, eps);
        add(report, "one-core extremal k=3 n=8", check.pass, vs(static_cast<double>(check.largest), check.bound));
    });
    guarded(report, "one-core search k=3 n=8", [&] {
        auto graph = gen::complete(3, 8);
        auto search = mono::mc_r_localsearch(graph, 4, 4, 11);
        auto check = mono::one_core_bound_check(graph, *search.coloring, eps);
        add(report, "one-core search k=3 n=8", check.pass, vs(static_cast<double>(check.largest), check.bound));
    });
}

void suite_chernoff(SuiteReport & report)
{
    guarded(report, "Bin(10^4, 0.01) deviation", [&] {
        double bound = reg::chernoff_bound(100, 0.5);
        double freq = reg::chernoff_deviation_frequency(10000, 0.01, 0.5, 2000, 5);
        add(report, "Bin(10^4, 0.01) deviation", freq <= bound,
            "frequency " + number(freq) + ", bound " + number(bound));
    });
    guarded(report, "upper uniformity H(40, 0.3)", [&] {
        auto graph = gen::random_hypergraph(3, 40, 0.3, 3);
        auto result = reg::upper_uniformity_check(graph, 0.2, 0.3, 2.0, 4, 3);
        add(report, "upper uniformity H(40, 0.3)", result.pass, "max d_p " + number(result.max_dp));
    });
}

} // namespace

SuiteReport verify_suite(const std::string & name, std::size_t shards)
{
    SuiteReport report;
    report.name = name;
    if (name == "thm1.1")
        suite_components(report, shards);
    else if (name == "observation-cycle")
        suite_cycle(report);
    else if (name == "lemma-path")
        suite_path(report);
    else if (name == "lemma3.2")
        suite_lemma32(report);
    else if (name == "obs6.2")
        suite_high_degree(report);
    else if (name == "lemma6.3")
        suite_one_core(report);
    else if (name == "chernoff")
        suite_chernoff(report);
    else
        throw std::invalid_argument("unknown suite '" + name + "'");
    return report;
}

json to_json(const SuiteReport & report)
{
    json checks = json::array();
    for (const auto & c : report.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return json{{"suite", report.name}, {"pass", report.pass()}, {"checks", checks}};
}

} // namespace hrl::harness
