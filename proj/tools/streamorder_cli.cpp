// Command-line front end for the streaming orderers: generate instances, run
// an algorithm over a metered stream, compute exact baselines, or benchmark
// an algorithm over many seeded trials.
//
// Exit codes: 0 success, 2 input violated an algorithm's promise, 3 the
// algorithm reported a failure, 4 I/O or configuration error.

#include "streamorder/fas.hpp"
#include "streamorder/graphcore.hpp"
#include "streamorder/l1sketch.hpp"
#include "streamorder/rankaggr.hpp"
#include "streamorder/sinkfind.hpp"
#include "streamorder/streamgen.hpp"
#include "streamorder/toposort.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using nlohmann::json;
using namespace streamorder;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPromise = 2;
constexpr int kExitAlgoFailure = 3;
constexpr int kExitConfig = 4;

struct GlobalOptions {
    uint64_t seed = 1;
    std::string out;
    std::string format = "json";
    bool no_timing = false;
};

void emit(const GlobalOptions& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::ofstream f(g.out);
    if (!f) throw input_error("cannot open output file: " + g.out);
    f << text << '\n';
}

LoadedInstance load_instance(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw input_error("cannot open input file: " + path);
    return read_edge_list(f);
}

LoadedRankings load_rankings(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw input_error("cannot open input file: " + path);
    return read_rankings(f);
}

StreamOrder parse_policy(const std::string& name) {
    if (name == "given") return StreamOrder::AsGiven;
    if (name == "fixed") return StreamOrder::FixedShuffle;
    if (name == "perpass") return StreamOrder::PerPassShuffle;
    throw input_error("unknown stream order policy: " + name);
}

json meter_json(const SpaceMeter& m) {
    return json{{"stored_edges_peak", m.stored_edges_peak()},
                {"sketch_words", m.sketch_words()},
                {"aux_words_peak", m.aux_words()},
                {"passes_used", m.passes_used()},
                {"total_items_peak", m.total_items_peak()}};
}

json order_json(const Order& o) {
    json a = json::array();
    for (VertexId v : o) a.push_back(v);
    return a;
}

uint64_t trial_seed(uint64_t seed, uint64_t trial, uint64_t salt) {
    return mix64(seed, trial, salt);
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

// ---------------------------------------------------------------------------
// generate
// ---------------------------------------------------------------------------

int cmd_generate(const GlobalOptions& g, const std::string& kind, uint32_t n, double q,
                 uint32_t k) {
    std::ostringstream os;
    if (kind == "coin-tournament") {
        Tournament t = gen_coin_tournament(n, g.seed);
        Digraph d{n, t.all_edges()};
        write_edge_list(os, d, nullptr);
    } else if (kind == "acyclic-tournament") {
        HiddenOrderTournament h = gen_random_acyclic_tournament(n, g.seed);
        Digraph d{n, h.tournament.all_edges()};
        write_edge_list(os, d, &h.hidden_order);
    } else if (kind == "plantdag") {
        PlantedInstance inst = gen_plantdag(n, q, g.seed);
        write_edge_list(os, inst.graph, &inst.hidden_order);
    } else if (kind == "rankings") {
        Rng rng(g.seed);
        RankingInstance inst;
        inst.n = n;
        for (uint32_t i = 0; i < k; ++i) inst.rankings.push_back(random_permutation(n, rng));
        write_rankings(os, inst);
    } else {
        throw input_error("unknown instance kind: " + kind);
    }
    std::string text = os.str();
    if (!text.empty() && text.back() == '\n') text.pop_back();
    emit(g, text);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// run
// ---------------------------------------------------------------------------

struct RunOptions {
    std::string algo;
    std::string input;
    std::string policy; // empty = per-algorithm default
    double eps = 0.2;
    uint32_t passes = 2;
    double q = 0.0;
    double c = 4.0;
    uint32_t enum_cap = 10;
    uint32_t pass_budget = 1000;
    SinkOnePassParams sink;
    VertexId source = 0;
    VertexId target = 0;
    bool have_q = false;
};

StreamOrder default_policy(const std::string& algo) {
    if (algo == "sink-onepass" || algo == "transreduce") return StreamOrder::FixedShuffle;
    if (algo == "shortpath") return StreamOrder::PerPassShuffle;
    return StreamOrder::AsGiven;
}

int cmd_run(const GlobalOptions& g, const RunOptions& opt) {
    auto start = std::chrono::steady_clock::now();
    json out;
    out["algorithm"] = opt.algo;
    out["seed"] = g.seed;
    int exit_code = kExitOk;

    const bool rank_algo = opt.algo.rfind("rank-", 0) == 0;
    StreamOrder policy =
        opt.policy.empty() ? default_policy(opt.algo) : parse_policy(opt.policy);

    if (rank_algo) {
        LoadedRankings lr = load_rankings(opt.input);
        out["n"] = lr.n;
        out["k"] = lr.k;
        RankingInstance inst;
        if (!lr.is_triples()) inst = RankingInstance{lr.n, lr.rankings};

        if (opt.algo == "rank-sketch") {
            AggrSketchResult r =
                lr.is_triples()
                    ? rank_aggr_sketch_from_triples(lr.n, lr.k, lr.triples, opt.eps, g.seed,
                                                    opt.enum_cap)
                    : rank_aggr_sketch(inst, opt.eps, g.seed, opt.enum_cap);
            out["result"] = {{"order", order_json(r.order)},
                             {"estimated_cost", r.estimated_cost},
                             {"sketch_rows", r.sketch_rows}};
            if (!lr.is_triples()) out["result"]["cost"] = aggr_cost(inst, r.order);
            out["params"] = {{"eps", opt.eps}};
        } else if (opt.algo == "rank-pick") {
            if (lr.is_triples())
                throw input_error("rank-pick needs complete rankings, not triples");
            Order o = rank_aggr_pick_random(inst, g.seed);
            out["result"] = {{"order", order_json(o)}, {"cost", aggr_cost(inst, o)}};
            out["params"] = json::object();
        } else {
            throw input_error("unknown algorithm: " + opt.algo);
        }
        if (!g.no_timing) out["timing_ms"] = elapsed_ms(start);
        emit(g, out.dump(2));
        return exit_code;
    }

    LoadedInstance inst = load_instance(opt.input);
    const Digraph& graph = inst.graph;
    out["n"] = graph.n;
    out["m"] = graph.edges.size();
    EdgeStream stream(graph.edges, graph.n, policy, g.seed, opt.pass_budget);
    json params = json::object();

    auto matches_hidden = [&](const Order& o) -> std::optional<bool> {
        if (!inst.hidden_order) return std::nullopt;
        return o == *inst.hidden_order;
    };

    if (opt.algo == "fas-sketch") {
        FasSketchResult r = fas_one_pass_sketch(stream, opt.eps, g.seed, opt.enum_cap);
        Tournament t = tournament_from_digraph(graph);
        out["result"] = {{"order", order_json(r.order)},
                         {"estimated_back_edges", r.estimated_back_edges},
                         {"back_edges", count_back_edges(t, r.order)},
                         {"sketch_rows", r.sketch_rows}};
        params = {{"eps", opt.eps}, {"enum_cap", opt.enum_cap}};
    } else if (opt.algo == "fas-kwiksort") {
        KwikSortResult r = fas_kwiksort_stream(stream, opt.passes, g.seed, opt.c);
        Tournament t = tournament_from_digraph(graph);
        out["result"] = {{"order", order_json(r.order)},
                         {"back_edges", count_back_edges(t, r.order)},
                         {"max_subproblem_after_first_pass", r.max_subproblem_after_first_pass},
                         {"stored_edges_peak", r.stored_edges_peak}};
        params = {{"passes", opt.passes}, {"c", opt.c}};
    } else if (opt.algo == "fas-indegree") {
        Order o = fas_by_indegree(stream);
        Tournament t = tournament_from_digraph(graph);
        out["result"] = {{"order", order_json(o)}, {"back_edges", count_back_edges(t, o)}};
    } else if (opt.algo == "sink-multipass") {
        SinkMultipassResult r = sink_multipass(stream, opt.passes, g.seed);
        out["result"] = {{"candidate", r.candidate},
                         {"rounds", r.rounds},
                         {"sample_size", r.sample_size}};
        if (inst.hidden_order)
            out["result"]["matches_hidden"] = (r.candidate == inst.hidden_order->back());
        params = {{"passes", opt.passes}};
    } else if (opt.algo == "sink-onepass") {
        SinkOnePassResult r = sink_random_order_onepass(stream, g.seed, opt.sink);
        out["result"] = {{"status", to_string(r.status)}, {"segments", r.segments}};
        if (r.status == SinkOnePassStatus::ok) {
            out["result"]["candidate"] = r.candidate;
            if (inst.hidden_order)
                out["result"]["matches_hidden"] = (r.candidate == inst.hidden_order->back());
        } else {
            exit_code = kExitAlgoFailure;
        }
        params = {{"a", opt.sink.a}, {"b", opt.sink.b}, {"cap", opt.sink.cap},
                  {"probe", opt.sink.probe}};
    } else if (opt.algo == "topo-tournament") {
        auto o = toposort_tournament_stream(stream);
        if (o) {
            out["result"] = {{"acyclic", true}, {"order", order_json(*o)}};
            if (auto mh = matches_hidden(*o)) out["result"]["matches_hidden"] = *mh;
        } else {
            out["result"] = {{"acyclic", false}};
            exit_code = kExitAlgoFailure;
        }
    } else if (opt.algo == "acyc-tournament") {
        out["result"] = {{"acyclic", tournament_acyclic_onepass(stream)}};
    } else if (opt.algo == "plantdag-largeq" || opt.algo == "plantdag-smallq" ||
               opt.algo == "plantdag-auto") {
        if (!opt.have_q) throw input_error(opt.algo + " needs --q");
        PlantDagResult r;
        if (opt.algo == "plantdag-largeq")
            r = toposort_plantdag_largeq(stream, opt.q, g.seed, opt.c);
        else if (opt.algo == "plantdag-smallq")
            r = toposort_plantdag_smallq(stream, opt.q, opt.c);
        else
            r = toposort_plantdag(stream, opt.q, g.seed);
        out["result"] = {{"status", to_string(r.status)},
                         {"phases", r.phases},
                         {"max_unclassified", r.max_unclassified},
                         {"stored_edges_peak", r.stored_edges_peak}};
        if (r.status == PlantDagStatus::ok) {
            out["result"]["order"] = order_json(r.order);
            if (auto mh = matches_hidden(r.order)) out["result"]["matches_hidden"] = *mh;
        } else {
            exit_code = kExitAlgoFailure;
        }
        params = {{"q", opt.q}, {"c", opt.c}};
    } else if (opt.algo == "transreduce") {
        TransReduceResult r = transitive_reduction_order(stream);
        out["result"] = {{"ok", r.ok}, {"stored_edges_peak", r.stored_edges_peak}};
        if (r.ok) {
            out["result"]["order"] = order_json(r.order);
            if (auto mh = matches_hidden(r.order)) out["result"]["matches_hidden"] = *mh;
        } else {
            exit_code = kExitAlgoFailure;
        }
    } else if (opt.algo == "shortpath") {
        bool found = shortpath_within(stream, opt.source, opt.target, opt.passes);
        out["result"] = {{"reachable_within", found}};
        params = {{"source", opt.source}, {"target", opt.target}, {"passes", opt.passes}};
    } else {
        throw input_error("unknown algorithm: " + opt.algo);
    }

    out["params"] = params;
    out["meter"] = meter_json(stream.meter());
    if (!g.no_timing) out["timing_ms"] = elapsed_ms(start);
    emit(g, out.dump(2));
    return exit_code;
}

// ---------------------------------------------------------------------------
// exact
// ---------------------------------------------------------------------------

int cmd_exact(const GlobalOptions& g, const std::string& problem, const std::string& input,
              uint32_t cap) {
    auto start = std::chrono::steady_clock::now();
    json out;
    out["problem"] = problem;
    if (problem == "min-back-edges") {
        LoadedInstance inst = load_instance(input);
        ExactFasResult r = exact_min_fas(inst.graph, cap ? cap : kExactFasDefaultCap);
        out["n"] = inst.graph.n;
        out["result"] = {{"beta", r.beta}, {"order", order_json(r.order)}};
    } else if (problem == "kemeny") {
        LoadedRankings lr = load_rankings(input);
        if (lr.is_triples()) throw input_error("kemeny needs complete rankings, not triples");
        RankingInstance inst{lr.n, lr.rankings};
        ExactAggrResult r = rank_aggr_exact(inst, cap ? cap : kExactKemenyDefaultCap);
        out["n"] = lr.n;
        out["result"] = {{"cost", r.cost}, {"order", order_json(r.order)}};
    } else {
        throw input_error("unknown exact problem: " + problem);
    }
    if (!g.no_timing) out["timing_ms"] = elapsed_ms(start);
    emit(g, out.dump(2));
    return kExitOk;
}

// ---------------------------------------------------------------------------
// bench
// ---------------------------------------------------------------------------

struct BenchOptions {
    std::string algo;
    uint32_t n = 64;
    uint32_t trials = 20;
    double eps = 0.2;
    double q = 0.3;
    uint32_t k = 5;
    uint32_t passes = 2;
    double c = 4.0;
    SinkOnePassParams sink;
};

struct TrialRecord {
    bool success = false;
    bool has_ratio = false;
    double num = 0.0, den = 0.0; // cost vs baseline, aggregated as sum/sum
    uint64_t stored = 0;
    uint32_t passes = 0;
};

int cmd_bench(const GlobalOptions& g, const BenchOptions& opt) {
    std::vector<TrialRecord> recs;
    recs.reserve(opt.trials);

    for (uint32_t t = 0; t < opt.trials; ++t) {
        uint64_t gen_seed = trial_seed(g.seed, t, 0x67);
        uint64_t alg_seed = trial_seed(g.seed, t, 0xa1);
        TrialRecord rec;

        if (opt.algo == "fas-sketch" || opt.algo == "fas-kwiksort" ||
            opt.algo == "fas-indegree") {
            Tournament tour = gen_coin_tournament(opt.n, gen_seed);
            uint64_t beta = exact_min_fas(tour).beta;
            EdgeStream stream = stream_of(tour, StreamOrder::AsGiven, 1000, alg_seed);
            uint64_t back = 0;
            double bound = 0.0;
            if (opt.algo == "fas-sketch") {
                FasSketchResult r = fas_one_pass_sketch(stream, opt.eps, alg_seed);
                back = count_back_edges(tour, r.order);
                bound = (1.0 + opt.eps) * (double)beta;
            } else if (opt.algo == "fas-kwiksort") {
                KwikSortResult r = fas_kwiksort_stream(stream, opt.passes, alg_seed, opt.c);
                back = count_back_edges(tour, r.order);
                bound = 3.0 * (double)beta;
            } else {
                Order o = fas_by_indegree(stream);
                back = count_back_edges(tour, o);
                bound = 5.0 * (double)beta;
            }
            rec.success = ((double)back <= bound) || (beta == 0 && back == 0);
            rec.has_ratio = true;
            rec.num = (double)back;
            rec.den = (double)beta;
            rec.stored = stream.meter().total_items_peak();
            rec.passes = stream.meter().passes_used();
        } else if (opt.algo == "sink-multipass" || opt.algo == "sink-onepass") {
            HiddenOrderTournament h = gen_random_acyclic_tournament(opt.n, gen_seed);
            VertexId true_sink = h.hidden_order.back();
            if (opt.algo == "sink-multipass") {
                EdgeStream stream = stream_of(h.tournament, StreamOrder::AsGiven, 1000, alg_seed);
                SinkMultipassResult r = sink_multipass(stream, opt.passes, alg_seed);
                rec.success = (r.candidate == true_sink);
                rec.stored = stream.meter().total_items_peak();
                rec.passes = stream.meter().passes_used();
            } else {
                EdgeStream stream =
                    stream_of(h.tournament, StreamOrder::FixedShuffle, 1000, alg_seed);
                SinkOnePassResult r = sink_random_order_onepass(stream, alg_seed, opt.sink);
                rec.success = (r.status == SinkOnePassStatus::ok && r.candidate == true_sink);
                rec.stored = stream.meter().total_items_peak();
                rec.passes = stream.meter().passes_used();
            }
        } else if (opt.algo == "plantdag-largeq" || opt.algo == "plantdag-smallq" ||
                   opt.algo == "plantdag-auto" || opt.algo == "transreduce") {
            PlantedInstance inst = gen_plantdag(opt.n, opt.q, gen_seed);
            if (opt.algo == "transreduce") {
                EdgeStream stream(inst.graph.edges, opt.n, StreamOrder::FixedShuffle, alg_seed,
                                  1000);
                TransReduceResult r = transitive_reduction_order(stream);
                rec.success = (r.ok && r.order == inst.hidden_order);
                rec.stored = stream.meter().total_items_peak();
                rec.passes = stream.meter().passes_used();
            } else {
                EdgeStream stream(inst.graph.edges, opt.n, StreamOrder::AsGiven, alg_seed, 1000);
                PlantDagResult r;
                if (opt.algo == "plantdag-largeq")
                    r = toposort_plantdag_largeq(stream, opt.q, alg_seed, opt.c);
                else if (opt.algo == "plantdag-smallq")
                    r = toposort_plantdag_smallq(stream, opt.q, opt.c);
                else
                    r = toposort_plantdag(stream, opt.q, alg_seed);
                rec.success = (r.status == PlantDagStatus::ok && r.order == inst.hidden_order);
                rec.stored = stream.meter().total_items_peak();
                rec.passes = stream.meter().passes_used();
            }
        } else if (opt.algo == "rank-sketch" || opt.algo == "rank-pick") {
            Rng rng(gen_seed);
            RankingInstance inst;
            inst.n = opt.n;
            for (uint32_t i = 0; i < opt.k; ++i)
                inst.rankings.push_back(random_permutation(opt.n, rng));
            uint64_t best = rank_aggr_exact(inst).cost;
            uint64_t cost;
            double bound;
            if (opt.algo == "rank-sketch") {
                AggrSketchResult r = rank_aggr_sketch(inst, opt.eps, alg_seed);
                cost = aggr_cost(inst, r.order);
                bound = (1.0 + opt.eps) * (double)best;
            } else {
                Order o = rank_aggr_pick_random(inst, alg_seed);
                cost = aggr_cost(inst, o);
                bound = 2.0 * (double)best;
            }
            rec.success = ((double)cost <= bound) || (best == 0 && cost == 0);
            rec.has_ratio = true;
            rec.num = (double)cost;
            rec.den = (double)best;
        } else {
            throw input_error("unknown bench algorithm: " + opt.algo);
        }
        recs.push_back(rec);
    }

    uint32_t successes = 0;
    double num = 0.0, den = 0.0;
    bool any_ratio = false;
    std::vector<uint64_t> stored;
    uint32_t max_passes = 0;
    for (const TrialRecord& r : recs) {
        successes += r.success ? 1 : 0;
        if (r.has_ratio) {
            any_ratio = true;
            num += r.num;
            den += r.den;
        }
        stored.push_back(r.stored);
        max_passes = std::max(max_passes, r.passes);
    }
    std::sort(stored.begin(), stored.end());
    auto pct = [&](double p) {
        size_t idx = (size_t)std::floor(p * (double)(stored.size() - 1));
        return stored[idx];
    };
    double success_rate = recs.empty() ? 0.0 : (double)successes / (double)recs.size();
    std::optional<double> mean_ratio;
    if (any_ratio && den > 0.0) mean_ratio = num / den;

    std::ostringstream params;
    params << "eps=" << opt.eps << ";q=" << opt.q << ";k=" << opt.k << ";passes=" << opt.passes
           << ";c=" << opt.c;

    if (g.format == "csv") {
        std::ostringstream os;
        os << "algorithm,n,params,trials,success_rate,mean_ratio,p50_stored,p95_stored,passes\n";
        os << opt.algo << ',' << opt.n << ',' << params.str() << ',' << opt.trials << ','
           << success_rate << ',';
        if (mean_ratio) os << *mean_ratio;
        os << ',' << pct(0.50) << ',' << pct(0.95) << ',' << max_passes;
        emit(g, os.str());
    } else {
        json out{{"algorithm", opt.algo}, {"n", opt.n},
                 {"params", params.str()}, {"trials", opt.trials},
                 {"success_rate", success_rate}, {"p50_stored", pct(0.50)},
                 {"p95_stored", pct(0.95)}, {"passes", max_passes}};
        if (mean_ratio) out["mean_ratio"] = *mean_ratio;
        emit(g, out.dump(2));
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"streaming vertex-ordering toolkit"};
    app.require_subcommand(1);
    app.fallthrough(); // let global options (--seed etc.) follow the subcommand

    GlobalOptions g;
    app.add_option("--seed", g.seed, "master seed");
    app.add_option("--out", g.out, "write output to this file instead of stdout");
    app.add_option("--format", g.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--no-timing", g.no_timing, "omit timing for byte-identical output");

    auto* gen = app.add_subcommand("generate", "generate a seeded instance");
    std::string gen_kind;
    uint32_t gen_n = 16, gen_k = 5;
    double gen_q = 0.3;
    gen->add_option("--kind", gen_kind,
                    "coin-tournament | acyclic-tournament | plantdag | rankings")
        ->required();
    gen->add_option("--n", gen_n, "vertex/item count")->required();
    gen->add_option("--q", gen_q, "plantdag extra-edge probability");
    gen->add_option("--k", gen_k, "number of rankings");

    auto* run = app.add_subcommand("run", "run a streaming algorithm on an instance file");
    RunOptions ro;
    run->add_option("--algo", ro.algo,
                    "fas-sketch | fas-kwiksort | fas-indegree | sink-multipass | sink-onepass | "
                    "topo-tournament | acyc-tournament | plantdag-largeq | plantdag-smallq | "
                    "plantdag-auto | transreduce | shortpath | rank-sketch | rank-pick")
        ->required();
    run->add_option("--input", ro.input, "instance file")->required();
    run->add_option("--order", ro.policy, "stream order: given | fixed | perpass");
    run->add_option("--eps", ro.eps, "accuracy parameter");
    run->add_option("--passes", ro.passes, "pass count p");
    auto* qopt = run->add_option("--q", ro.q, "planted instance density");
    run->add_option("--c", ro.c, "algorithm constant (pivot/window multiplier)");
    run->add_option("--enum-cap", ro.enum_cap, "max n for factorial post-processing");
    run->add_option("--pass-budget", ro.pass_budget, "stream pass budget");
    run->add_option("--sink-a", ro.sink.a, "tracked-set multiplier");
    run->add_option("--sink-b", ro.sink.b, "segment length multiplier");
    run->add_option("--sink-cap", ro.sink.cap, "out-list cap multiplier");
    run->add_option("--sink-probe", ro.sink.probe, "probe fraction");
    run->add_option("--source", ro.source, "path source vertex");
    run->add_option("--target", ro.target, "path target vertex");

    auto* exact = app.add_subcommand("exact", "exact baseline solvers");
    std::string ex_problem, ex_input;
    uint32_t ex_cap = 0;
    exact->add_option("--problem", ex_problem, "min-back-edges | kemeny")->required();
    exact->add_option("--input", ex_input, "instance file")->required();
    exact->add_option("--cap", ex_cap, "override the exponential-size cap");

    auto* bench = app.add_subcommand("bench", "seeded multi-trial benchmark");
    BenchOptions bo;
    bench->add_option("--algo", bo.algo, "algorithm (see run)")->required();
    bench->add_option("--n", bo.n, "instance size")->required();
    bench->add_option("--trials", bo.trials, "number of trials");
    bench->add_option("--eps", bo.eps, "accuracy parameter");
    bench->add_option("--q", bo.q, "planted instance density");
    bench->add_option("--k", bo.k, "number of rankings");
    bench->add_option("--passes", bo.passes, "pass count p");
    bench->add_option("--c", bo.c, "algorithm constant");
    bench->add_option("--sink-a", bo.sink.a, "tracked-set multiplier");
    bench->add_option("--sink-b", bo.sink.b, "segment length multiplier");
    bench->add_option("--sink-cap", bo.sink.cap, "out-list cap multiplier");
    bench->add_option("--sink-probe", bo.sink.probe, "probe fraction");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_generate(g, gen_kind, gen_n, gen_q, gen_k);
        if (run->parsed()) {
            ro.have_q = qopt->count() > 0;
            return cmd_run(g, ro);
        }
        if (exact->parsed()) return cmd_exact(g, ex_problem, ex_input, ex_cap);
        if (bench->parsed()) return cmd_bench(g, bo);
    } catch (const promise_error& e) {
        std::cerr << "promise violation: " << e.what() << '\n';
        return kExitPromise;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const stream_error& e) {
        std::cerr << "stream error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    return kExitConfig;
}
