// spreadlab: one binary, subcommand style. Every numerical report is
// machine-readable first (JSON/CSV); human summaries go to stderr. Exit
// codes: 0 success, 1 verdict failure, 2 budget/reliability failure,
// 64 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "spreadlab/bounds.hpp"
#include "spreadlab/degeneracy.hpp"
#include "spreadlab/generators.hpp"
#include "spreadlab/hypergraph.hpp"
#include "spreadlab/isomorphism.hpp"
#include "spreadlab/rational.hpp"
#include "spreadlab/spread.hpp"
#include "spreadlab/threshold.hpp"

using json = nlohmann::ordered_json;
using namespace spreadlab;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr int kExitVerdict = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 64;

std::uint64_t fnv1a(const std::string& data, std::uint64_t h = 0xcbf29ce484222325ULL) {
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)v);
    return buf;
}

std::uint64_t file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return fnv1a(ss.str());
}

std::string now_iso8601() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

// Manifest: the deterministic core (params, seeds, digests, version) is
// embedded in every output; wall-clock timestamps live only in the optional
// sidecar file so outputs stay byte-identical across replays.
struct Manifest {
    std::string subcommand;
    json params = json::object();
    json input_digests = json::object();
    std::string started_at;

    std::uint64_t hash() const {
        return fnv1a(std::string(kVersion) + "|" + subcommand + "|" + params.dump() + "|" +
                     input_digests.dump());
    }
    json core() const {
        json j;
        j["tool"] = "spreadlab";
        j["version"] = kVersion;
        j["subcommand"] = subcommand;
        j["params"] = params;
        j["input_digests"] = input_digests;
        j["hash"] = hex64(hash());
        return j;
    }
    void write_sidecar(const std::string& path) const {
        json j = core();
        j["started_at"] = started_at;
        j["finished_at"] = now_iso8601();
        std::ofstream out(path);
        if (!out) throw std::invalid_argument("cannot write manifest: " + path);
        out << j.dump(2) << "\n";
    }
};

void emit(const json& report, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << report.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write output: " + out_path);
        out << report.dump(2) << "\n";
    }
}

json json_vertex_set(const VertexSet& s) { return json(s.verts); }

// human-readable summaries label vertices 1-based; all files stay 0-based
std::string one_based(const VertexSet& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.verts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s.verts[i] + 1);
    }
    return out + "}";
}

json json_report_header(const Manifest& m) {
    json j;
    j["manifest"] = m.core();
    return j;
}

std::uint64_t env_budget(const char* name, std::uint64_t defval) {
    const char* v = std::getenv(name);
    if (!v) return defval;
    return std::strtoull(v, nullptr, 10);
}

std::string search_status_str(SearchStatus s) {
    return s == SearchStatus::exact ? "exact" : "budget-exceeded";
}

json json_bound_check(const BoundCheck& c) {
    json j;
    j["name"] = c.name;
    json in = json::object();
    for (auto& [k, v] : c.inputs) in[k] = v;
    j["inputs"] = in;
    if (c.exact_count) j["count"] = *c.exact_count;
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
    j["log10_lhs"] = c.log10_lhs;
    j["log10_rhs"] = c.log10_rhs;
    j["pass"] = c.pass;
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

json json_audit_report(const SpreadAuditReport& rep) {
    json j;
    switch (rep.notion) {
        case SpreadNotion::vertex: j["notion"] = "vertex"; break;
        case SpreadNotion::edge: j["notion"] = "edge"; break;
        case SpreadNotion::multilevel: j["notion"] = "multilevel"; break;
        case SpreadNotion::gamma: j["notion"] = "gamma"; break;
    }
    j["search_mode"] = rep.mode == AuditMode::exhaustive ? "exhaustive" : "sampled";
    j["achieved_q"] = rep.achieved_q;
    j["worst_probability"] = rep.worst_prob.str();
    j["worst_exponent"] = rep.worst_exponent;
    if (rep.gamma_achieved) j["gamma_achieved"] = *rep.gamma_achieved;
    if (!rep.witness_pairs.empty()) {
        json pairs = json::array();
        for (auto [x, y] : rep.witness_pairs) pairs.push_back({x, y});
        j["witness_constraints"] = pairs;
    }
    if (!rep.witness_edges.empty()) {
        j["witness_edge_set"] = rep.witness_edges;
        if (rep.witness_t > 0) j["witness_t"] = rep.witness_t;
    }
    j["events_audited"] = rep.events_audited;
    json levels = json::array();
    for (const auto& st : rep.per_level) {
        json l;
        l["exponent"] = st.exponent;
        l["events"] = st.events;
        l["min_probability"] = st.min_prob.str();
        l["max_probability"] = st.max_prob.str();
        levels.push_back(l);
    }
    j["per_exponent"] = levels;
    j["pass"] = rep.pass;
    return j;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

std::vector<long long> parse_ll_list(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoll(item));
    return out;
}

// --- subcommand implementations ----------------------------------------------

int run_gen(const std::string& family, int n, int k, int r, int d, double p, std::uint64_t seed,
            const std::string& out_path, const std::string& manifest_path) {
    Manifest man;
    man.subcommand = "gen";
    man.started_at = now_iso8601();
    man.params = {{"family", family}, {"n", n}, {"k", k}, {"r", r}, {"d", d}, {"p", p}, {"seed", seed}};

    Hypergraph h;
    if (family == "cycle_power") h = cycle_power(n, r);
    else if (family == "tight_cycle_power") h = tight_cycle_power(n, k, r);
    else if (family == "locally_sparse_regular") h = locally_sparse_regular(n, d);
    else if (family == "d_degenerate_random") h = random_d_degenerate(n, d, seed);
    else if (family == "binomial_random") h = gnp(n, k, p, seed);
    else throw CLI::ValidationError("--family", "unknown family '" + family + "'");

    std::vector<std::string> comments = {"spreadlab gen " + man.params.dump() + " manifest=" + hex64(man.hash())};
    if (out_path.empty() || out_path == "-") write_hypergraph(h, std::cout, comments);
    else write_hypergraph_file(h, out_path, comments);
    if (!manifest_path.empty()) man.write_sidecar(manifest_path);
    return 0;
}

int run_density(const std::string& input, int i, std::uint64_t budget, const std::string& out_path,
                const std::string& manifest_path) {
    Manifest man;
    man.subcommand = "density";
    man.started_at = now_iso8601();
    man.params = {{"input", input}, {"i", i}, {"budget", budget}};
    man.input_digests[input] = hex64(file_digest(input));

    Hypergraph h = read_hypergraph_file(input);
    DensityReport rep = density_mi(h, i, budget);
    std::cout << rep.value.str() << "\n";
    if (!out_path.empty()) {
        json j = json_report_header(man);
        j["report"] = {{"i", rep.i},
                       {"value", rep.value.str()},
                       {"value_real", rep.value.to_double()},
                       {"witness", json_vertex_set(rep.witness)},
                       {"status", search_status_str(rep.status)},
                       {"nodes", rep.nodes}};
        emit(j, out_path);
    }
    if (!manifest_path.empty()) man.write_sidecar(manifest_path);
    return rep.status == SearchStatus::exact ? 0 : kExitBudget;
}

int run_pe(const std::string& input, const std::string& mode_str, std::uint64_t budget,
           const std::string& out_path, const std::string& manifest_path) {
    Manifest man;
    man.subcommand = "pe";
    man.started_at = now_iso8601();
    man.params = {{"input", input}, {"mode", mode_str}, {"budget", budget}};
    man.input_digests[input] = hex64(file_digest(input));

    Hypergraph h = read_hypergraph_file(input);
    PeMode mode = mode_str == "literal" ? PeMode::literal : PeMode::standard;
    ExpectationThresholdReport rep = expectation_threshold(h, mode, budget);
    std::cout << rep.value << "\n";
    json j = json_report_header(man);
    std::ostringstream witness_text;
    write_hypergraph(rep.witness, witness_text);
    j["report"] = {{"mode", mode_str},
                   {"value", rep.value},
                   {"witness_vertices", rep.witness.vertex_count()},
                   {"witness_edges", rep.witness.edge_count()},
                   {"witness", witness_text.str()},
                   {"subgraph_classes", rep.subgraph_classes},
                   {"status", search_status_str(rep.status)}};
    if (!out_path.empty()) emit(j, out_path);
    if (!manifest_path.empty()) man.write_sidecar(manifest_path);
    return rep.status == SearchStatus::exact ? 0 : kExitBudget;
}

int run_audit_degeneracy(const std::string& input, const std::string& d_str, const std::string& alpha_str,
                         const std::string& eps_str, int u_min, bool local_sparsity,
                         std::uint64_t budget, const std::string& out_path,
                         const std::string& manifest_path) {
    Manifest man;
    man.subcommand = "audit-degeneracy";
    man.started_at = now_iso8601();
    man.params = {{"input", input}, {"d", d_str}, {"alpha", alpha_str}, {"eps", eps_str},
                  {"u_min", u_min}, {"local_sparsity", local_sparsity}, {"budget", budget}};
    man.input_digests[input] = hex64(file_digest(input));

    Hypergraph h = read_hypergraph_file(input);
    json j = json_report_header(man);

    if (local_sparsity) {
        Rational d = Rational::from_string(d_str);
        if (d.den() != 1) throw CLI::ValidationError("--d", "local sparsity audit needs integer d");
        LocalSparsityReport rep = locally_sparse_audit(h, (int)d.num(), Rational::from_string(eps_str), budget);
        j["report"] = {{"kind", "local-sparsity"},
                       {"d", (int)d.num()},
                       {"eps", eps_str},
                       {"min_boundary", rep.min_boundary},
                       {"witness", json_vertex_set(rep.witness)},
                       {"pass", rep.pass},
                       {"status", search_status_str(rep.status)},
                       {"nodes", rep.nodes}};
        emit(j, out_path);
        std::cerr << (rep.pass ? "PASS" : "FAIL") << " min_boundary=" << rep.min_boundary
                  << " witness=" << one_based(rep.witness) << "\n";
        if (rep.status != SearchStatus::exact) return kExitBudget;
        return rep.pass ? 0 : kExitVerdict;
    }

    DegeneracyParams params{Rational::from_string(d_str), Rational::from_string(alpha_str),
                            Rational::from_string(eps_str), u_min};
    DegeneracyReport rep = certify_degenerate(h, params, budget);
    j["report"] = {{"kind", "degeneracy"},
                   {"d", d_str},
                   {"alpha", alpha_str},
                   {"eps", eps_str},
                   {"u_min", u_min},
                   {"alpha_star", rep.alpha_star.str()},
                   {"alpha_star_real", rep.alpha_star.to_double()},
                   {"m1", rep.m1.str()},
                   {"m1_real", rep.m1.to_double()},
                   {"witness", json_vertex_set(rep.witness)},
                   {"pass", rep.pass},
                   {"status", search_status_str(rep.status)},
                   {"nodes", rep.nodes}};
    if (rep.density_witness) j["report"]["density_witness"] = json_vertex_set(*rep.density_witness);
    if (h.uniformity() > 2)
        j["report"]["note"] = "k>2: subset audits use the verbatim |e cap U|=1 boundary generalization";
    emit(j, out_path);
    std::cerr << (rep.pass ? "PASS" : "FAIL") << " alpha_star=" << rep.alpha_star.str()
              << " m1=" << rep.m1.str() << " witness=" << one_based(rep.witness) << "\n";
    if (!manifest_path.empty()) man.write_sidecar(manifest_path);
    if (rep.status != SearchStatus::exact) return kExitBudget;
    return rep.pass ? 0 : kExitVerdict;
}

int run_schedule(long long n, const std::string& d_str, const std::string& alpha_str,
                 const std::string& eps_str, int k) {
    LevelSchedule s = level_schedule(n, Rational::from_string(d_str), Rational::from_string(alpha_str),
                                     Rational::from_string(eps_str), k);
    std::cout << s.str() << "\n";
    return 0;
}

int run_spread_audit(const std::string& pattern_path, const std::string& host_path,
                     const std::string& notion, double q, double gamma, long long r, long long r_prime,
                     const std::string& schedule_str, int t_max, int s_max, std::uint64_t budget,
                     std::uint64_t seed, const std::string& out_path, const std::string& manifest_path) {
    Manifest man;
    man.subcommand = "spread-audit";
    man.started_at = now_iso8601();
    man.params = {{"pattern", pattern_path}, {"host", host_path}, {"notion", notion}, {"q", q},
                  {"gamma", gamma}, {"r", r}, {"r_prime", r_prime}, {"schedule", schedule_str},
                  {"t_max", t_max}, {"s_max", s_max}, {"budget", budget}, {"seed", seed}};
    man.input_digests[pattern_path] = hex64(file_digest(pattern_path));
    man.input_digests[host_path] = hex64(file_digest(host_path));

    Hypergraph pattern = read_hypergraph_file(pattern_path);
    Hypergraph host = read_hypergraph_file(host_path);
    EmbeddingDistribution dist = uniform_embedding_distribution(pattern, host);

    SpreadAuditReport rep;
    if (notion == "vertex") {
        rep = vertex_spread_audit(dist, s_max > 0 ? s_max : pattern.vertex_count(), budget, seed);
    } else {
        CopyDistribution copies = pushforward_copies(dist);
        if (notion == "edge") {
            rep = edge_spread_audit(copies, t_max > 0 ? t_max : copies.r0, budget, seed);
        } else if (notion == "multilevel") {
            if (schedule_str.empty()) throw CLI::ValidationError("--schedule", "multilevel needs a schedule");
            LevelSchedule schedule = LevelSchedule::from_levels(parse_ll_list(schedule_str));
            rep = multilevel_spread_audit(copies, q, schedule, budget, seed);
        } else if (notion == "gamma") {
            rep = gamma_spread_audit(copies, q, gamma, r, r_prime, budget, seed);
        } else {
            throw CLI::ValidationError("--notion", "unknown notion '" + notion + "'");
        }
    }
    if (q > 0 && notion != "multilevel" && notion != "gamma")
        rep.pass = rep.achieved_q <= q * (1 + 1e-12);

    json j = json_report_header(man);
    j["report"] = json_audit_report(rep);
    if (q > 0) j["report"]["q"] = q;
    emit(j, out_path);
    std::cerr << "achieved_q=" << rep.achieved_q << " mode="
              << (rep.mode == AuditMode::exhaustive ? "exhaustive" : "sampled") << "\n";
    if (!manifest_path.empty()) man.write_sidecar(manifest_path);
    return rep.pass ? 0 : kExitVerdict;
}

int run_verify_bounds(const std::string& which, const std::string& pattern_path,
                      const std::string& host_path, const std::string& input_path,
                      const std::string& f_edges_str, const std::string& s_edges_str, int t, int c,
                      long long size_s, long long n, int k, const std::string& d_str,
                      const std::string& alpha_str, const std::string& eps_str, double l, double c_const,
                      double q, double v_size, double r_lminus1, double gamma, double k_const,
                      int max_n, int samples, std::uint64_t seed, const std::string& out_path) {
    std::ostringstream lines;
    bool all_pass = true;
    auto emit_check = [&](const BoundCheck& check) {
        lines << json_bound_check(check).dump() << "\n";
        all_pass = all_pass && check.pass;
    };
    auto emit_sweep = [&](const std::string& name, const json& inputs, const SweepResult& sweep) {
        json j;
        j["name"] = name + "-sweep";
        j["inputs"] = inputs;
        j["checked"] = sweep.checked;
        j["violations"] = sweep.violations.size();
        j["worst_ratio"] = sweep.worst_ratio;
        j["pass"] = sweep.violations.empty();
        lines << j.dump() << "\n";
        for (const auto& v : sweep.violations) emit_check(v);
        all_pass = all_pass && sweep.violations.empty();
    };

    if (which == "lemma31") {
        Hypergraph g = read_hypergraph_file(pattern_path);
        Hypergraph h = read_hypergraph_file(host_path);
        emit_check(lemma31_check(g, h, parse_int_list(f_edges_str)));
    } else if (which == "lemma32") {
        Hypergraph g = read_hypergraph_file(input_path);
        emit_check(lemma32_check(g, parse_int_list(s_edges_str), t, c));
    } else if (which == "ineq2") {
        emit_check(ineq2_check(size_s, t, c, n, k, Rational::from_string(d_str),
                               Rational::from_string(alpha_str), Rational::from_string(eps_str)));
    } else if (which == "spiro26" || which == "kelly42") {
        SpiroEval eval = spiro_success_bound(which == "spiro26" ? SpiroMode::spiro26 : SpiroMode::kelly42,
                                             l, c_const, q, v_size, r_lminus1, gamma, k_const);
        json j;
        j["name"] = which;
        j["inputs"] = {{"l", l}, {"C", c_const}, {"q", q}, {"v_size", v_size},
                       {"r_lminus1", r_lminus1}, {"gamma", gamma}, {"K", k_const}};
        j["bound"] = eval.bound;
        j["sample_size"] = eval.sample_size;
        j["pass"] = true;
        lines << j.dump() << "\n";
    } else if (which == "sweep") {
        for (int nn = 2; nn <= std::min(max_n, 6); ++nn)
            for (const auto& g : nonisomorphic_graphs(nn)) {
                if (g.edge_count() == 0) continue;
                auto sweep = lemma32_sweep(g);
                all_pass = all_pass && sweep.violations.empty();
                for (const auto& v : sweep.violations) emit_check(v);
            }
        json j32;
        j32["name"] = "lemma32-sweep";
        j32["inputs"] = {{"max_n", std::min(max_n, 6)}};
        j32["pass"] = all_pass;
        lines << j32.dump() << "\n";
        // seeded 3-uniform hypergraphs
        for (std::uint64_t s = 1; s <= 50; ++s) {
            Hypergraph g3 = gnp(7, 3, 0.2, s);
            if (g3.edge_count() == 0) continue;
            emit_sweep("lemma32-3uniform", {{"seed", s}, {"edges", g3.edge_count()}}, lemma32_sweep(g3));
        }
        for (int nn = 2; nn <= std::min(max_n, 5); ++nn) {
            auto patterns = nonisomorphic_graphs(nn);
            std::vector<Hypergraph> hosts;
            {
                std::vector<std::vector<int>> ke;
                for (int a = 0; a < nn; ++a)
                    for (int b = a + 1; b < nn; ++b) ke.push_back({a, b});
                hosts.push_back(Hypergraph::from_edges(2, nn, ke));
            }
            for (std::uint64_t s = 1; s <= 20; ++s) hosts.push_back(gnp(nn, 2, 0.5, s));
            SweepResult agg;
            for (const auto& g : patterns)
                for (const auto& h : hosts) {
                    if (h.edge_count() == 0) continue;
                    auto sweep = lemma31_sweep(g, h);
                    agg.checked += sweep.checked;
                    agg.worst_ratio = std::max(agg.worst_ratio, sweep.worst_ratio);
                    for (auto& v : sweep.violations)
                        if (agg.violations.size() < 100) agg.violations.push_back(std::move(v));
                }
            emit_sweep("lemma31", {{"n", nn}}, agg);
        }
        // ineq2 grid: report-only; the displayed inequality needs n beyond
        // desk scale in parts of the grid, so this prints per-cell results
        for (long long nn : {1000LL, 10000LL})
            for (int kk : {2, 3})
                for (const char* dd : {"2", "3"})
                    for (const char* aa : {"1/2", "1"}) {
                        auto sweep = ineq2_cell_sweep(nn, kk, Rational::from_string(dd),
                                                      Rational::from_string(aa), Rational(1, 2),
                                                      samples, seed);
                        json j;
                        j["name"] = "ineq2-cell";
                        j["inputs"] = {{"n", nn}, {"k", kk}, {"d", dd}, {"alpha", aa}, {"eps", "1/2"}};
                        j["checked"] = sweep.checked;
                        j["violations"] = sweep.violations.size();
                        j["worst_ratio"] = sweep.worst_ratio;
                        lines << j.dump() << "\n";
                    }
    } else {
        throw CLI::ValidationError("--which", "unknown check '" + which + "'");
    }

    if (out_path.empty() || out_path == "-") std::cout << lines.str();
    else {
        std::ofstream out(out_path);
        out << lines.str();
    }
    return all_pass ? 0 : kExitVerdict;
}

int run_threshold_scan(const std::string& target_str, const std::string& n_list_str, int trials,
                       std::uint64_t seed, std::uint64_t node_budget, int workers, double p_point,
                       const std::string& out_prefix, const std::string& manifest_path) {
    Manifest man;
    man.subcommand = "threshold-scan";
    man.started_at = now_iso8601();
    man.params = {{"target", target_str}, {"n_list", n_list_str}, {"trials", trials},
                  {"seed", seed}, {"budget", node_budget}, {"p", p_point}};

    TargetSpec target = TargetSpec::parse(target_str);
    std::vector<int> ns = parse_int_list(n_list_str);
    if (ns.empty()) throw CLI::ValidationError("--n-list", "need at least one n");

    std::ofstream trials_out, summary_out;
    if (!out_prefix.empty()) {
        trials_out.open(out_prefix + ".trials.jsonl");
        summary_out.open(out_prefix + ".summary.csv");
        if (!trials_out || !summary_out)
            throw std::invalid_argument("cannot write outputs with prefix " + out_prefix);
    }

    auto write_records = [&](const std::vector<TrialRecord>& records) {
        if (!trials_out) return;
        for (const auto& rec : records) {
            json j;
            j["config"] = hex64(rec.config_hash);
            j["trial"] = rec.trial;
            j["seed"] = hex64(rec.seed);
            j["outcome"] = containment_str(rec.outcome);
            j["nodes"] = rec.nodes;
            trials_out << j.dump() << "\n";
        }
    };

    bool reliable = true;
    json results = json::array();
    std::vector<std::pair<double, double>> fit_points;

    if (summary_out) summary_out << "n,p_half,ci_lo,ci_hi,timeouts\n";
    for (int n : ns) {
        ExperimentConfig cfg;
        cfg.target = target;
        cfg.n = n;
        cfg.trials = trials;
        cfg.master_seed = seed;
        cfg.node_budget = node_budget;
        cfg.workers = workers;
        std::vector<TrialRecord> records;
        if (p_point >= 0) {
            cfg.p = p_point;
            ProbabilityEstimate est = containment_probability(cfg, &records);
            write_records(records);
            json j = {{"n", n}, {"p", p_point}, {"p_hat", est.p_hat}, {"ci_lo", est.ci_lo},
                      {"ci_hi", est.ci_hi}, {"trials", est.trials}, {"decided", est.decided},
                      {"timeouts", est.timeouts}, {"reliable", est.reliable}};
            results.push_back(j);
            reliable = reliable && est.reliable;
            if (summary_out)
                summary_out << n << "," << est.p_hat << "," << est.ci_lo << "," << est.ci_hi << ","
                            << est.timeouts << "\n";
        } else {
            ThresholdEstimate est = threshold_bisect(cfg, &records);
            write_records(records);
            json j = {{"n", n}, {"p_half", est.p_half}, {"ci_lo", est.ci_lo}, {"ci_hi", est.ci_hi},
                      {"trials_used", est.trials_used}, {"timeout_fraction", est.timeout_fraction},
                      {"converged", est.converged}};
            results.push_back(j);
            reliable = reliable && est.converged && est.timeout_fraction <= 0.2;
            fit_points.push_back({(double)n, est.p_half});
            if (summary_out)
                summary_out << n << "," << est.p_half << "," << est.ci_lo << "," << est.ci_hi << ","
                            << est.timeout_fraction << "\n";
        }
    }

    json j = json_report_header(man);
    j["report"]["points"] = results;
    if (fit_points.size() >= 3) {
        ExponentFit fit = exponent_fit(fit_points);
        j["report"]["exponent_fit"] = {{"slope", fit.slope}, {"intercept", fit.intercept},
                                       {"residual_rms", fit.residual_rms},
                                       {"slope_stderr", fit.slope_stderr}};
    }
    std::cout << j.dump(2) << "\n";
    if (!manifest_path.empty()) man.write_sidecar(manifest_path);
    else if (!out_prefix.empty()) man.write_sidecar(out_prefix + ".manifest.json");
    return reliable ? 0 : kExitBudget;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spreadlab: degeneracy certificates, spread audits, counting bounds, and threshold experiments for k-uniform hypergraphs"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a structure in the hypergraph text format");
    std::string gen_family;
    int gen_n = 0, gen_k = 2, gen_r = 1, gen_d = 3;
    double gen_p = 0.5;
    std::uint64_t gen_seed = 1;
    std::string gen_out, gen_manifest;
    gen->add_option("--family", gen_family,
                    "cycle_power|tight_cycle_power|locally_sparse_regular|d_degenerate_random|binomial_random")
        ->required();
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--k", gen_k, "uniformity");
    gen->add_option("--r", gen_r, "power");
    gen->add_option("--d", gen_d, "degree / degeneracy parameter");
    gen->add_option("--p", gen_p, "edge probability");
    gen->add_option("--seed", gen_seed, "seed for randomized families");
    gen->add_option("--out", gen_out, "output file (default stdout)");
    gen->add_option("--manifest", gen_manifest, "write manifest sidecar");

    // density
    auto* density = app.add_subcommand("density", "exact m_i density parameter");
    std::string den_input, den_out, den_manifest;
    int den_i = 1;
    std::uint64_t den_budget = env_budget("SPREADLAB_SUBSET_BUDGET", kDefaultSubsetBudget);
    density->add_option("--input", den_input, "hypergraph file")->required();
    density->add_option("--i", den_i, "density index i")->required();
    density->add_option("--budget", den_budget, "search node budget");
    density->add_option("--out", den_out, "JSON report file");
    density->add_option("--manifest", den_manifest, "write manifest sidecar");

    // pe
    auto* pe = app.add_subcommand("pe", "expectation threshold p_E");
    std::string pe_input, pe_mode = "standard", pe_out, pe_manifest;
    std::uint64_t pe_budget = env_budget("SPREADLAB_PE_BUDGET", kDefaultPeBudget);
    pe->add_option("--input", pe_input, "hypergraph file")->required();
    pe->add_option("--mode", pe_mode, "standard|literal")
        ->check(CLI::IsMember({"standard", "literal"}));
    pe->add_option("--budget", pe_budget, "subset enumeration budget");
    pe->add_option("--out", pe_out, "JSON report file");
    pe->add_option("--manifest", pe_manifest, "write manifest sidecar");

    // audit-degeneracy
    auto* audit = app.add_subcommand("audit-degeneracy", "(d,alpha)-degeneracy certificate / local sparsity audit");
    std::string aud_input, aud_d = "2", aud_alpha = "1", aud_eps = "1", aud_out = "-", aud_manifest;
    int aud_umin = 2;
    bool aud_local = false;
    std::uint64_t aud_budget = env_budget("SPREADLAB_SUBSET_BUDGET", kDefaultSubsetBudget);
    audit->add_option("--input", aud_input, "hypergraph file")->required();
    audit->add_option("--d", aud_d, "density/degree parameter (rational, e.g. 3/2)");
    audit->add_option("--alpha", aud_alpha, "deficiency parameter (rational)");
    audit->add_option("--eps", aud_eps, "window parameter in (0,1]");
    audit->add_option("--u-min", aud_umin, "smallest audited subset size");
    audit->add_flag("--local-sparsity", aud_local, "audit edge boundaries instead (needs integer --d)");
    audit->add_option("--budget", aud_budget, "search node budget");
    audit->add_option("--out", aud_out, "JSON report file (default stdout)");
    audit->add_option("--manifest", aud_manifest, "write manifest sidecar");

    // schedule
    auto* sched = app.add_subcommand("schedule", "print the multilevel threshold schedule");
    long long sch_n = 0;
    std::string sch_d = "2", sch_alpha = "1", sch_eps = "1/2";
    int sch_k = 2;
    sched->add_option("--n", sch_n, "vertex count")->required();
    sched->add_option("--d", sch_d, "density parameter (rational)");
    sched->add_option("--alpha", sch_alpha, "deficiency parameter (rational)");
    sched->add_option("--eps", sch_eps, "window parameter (rational in (0,1))");
    sched->add_option("--k", sch_k, "uniformity");

    // spread-audit
    auto* spread = app.add_subcommand("spread-audit", "audit spreadness of the uniform embedding distribution");
    std::string spr_pattern, spr_host, spr_notion = "edge", spr_schedule, spr_out = "-", spr_manifest;
    double spr_q = 0, spr_gamma = 1;
    long long spr_r = 0, spr_rp = 1;
    int spr_tmax = 0, spr_smax = 0;
    std::uint64_t spr_budget = env_budget("SPREADLAB_AUDIT_BUDGET", kDefaultAuditBudget);
    std::uint64_t spr_seed = 0;
    spread->add_option("--pattern", spr_pattern, "pattern hypergraph file")->required();
    spread->add_option("--host", spr_host, "host hypergraph file")->required();
    spread->add_option("--notion", spr_notion, "vertex|edge|multilevel|gamma")
        ->check(CLI::IsMember({"vertex", "edge", "multilevel", "gamma"}));
    spread->add_option("--q", spr_q, "target q (verdict when > 0)");
    spread->add_option("--gamma", spr_gamma, "gamma multiplier (gamma notion)");
    spread->add_option("--r", spr_r, "window top (gamma notion)");
    spread->add_option("--r-prime", spr_rp, "window bottom (gamma notion)");
    spread->add_option("--schedule", spr_schedule, "comma-separated level thresholds (multilevel)");
    spread->add_option("--t-max", spr_tmax, "largest audited |S| (edge notion; default r_0)");
    spread->add_option("--s-max", spr_smax, "largest audited s (vertex notion; default v(pattern))");
    spread->add_option("--budget", spr_budget, "audit budget");
    spread->add_option("--seed", spr_seed, "seed for sampled mode");
    spread->add_option("--out", spr_out, "JSON report file (default stdout)");
    spread->add_option("--manifest", spr_manifest, "write manifest sidecar");

    // verify-bounds
    auto* verify = app.add_subcommand("verify-bounds", "counting-bound oracles; one JSON line per check");
    std::string vb_which, vb_pattern, vb_host, vb_input, vb_fedges, vb_sedges;
    std::string vb_d = "2", vb_alpha = "1", vb_eps = "1/2", vb_out;
    int vb_t = 1, vb_c = 1, vb_k = 2, vb_maxn = 6, vb_samples = 2000;
    long long vb_sizes = 1, vb_n = 1000;
    double vb_l = 2, vb_C = 16, vb_q = 0.01, vb_V = 1000, vb_r = 6, vb_gamma = 0, vb_K = 1;
    std::uint64_t vb_seed = 1;
    verify->add_option("--which", vb_which, "lemma31|lemma32|ineq2|spiro26|kelly42|sweep")->required();
    verify->add_option("--pattern", vb_pattern, "G file (lemma31)");
    verify->add_option("--host", vb_host, "H file (lemma31)");
    verify->add_option("--input", vb_input, "G file (lemma32)");
    verify->add_option("--f-edges", vb_fedges, "host edge indices of F, comma-separated");
    verify->add_option("--s-edges", vb_sedges, "edge indices of S, comma-separated");
    verify->add_option("--t", vb_t, "edge count t");
    verify->add_option("--c", vb_c, "component count c");
    verify->add_option("--size-s", vb_sizes, "|S| (ineq2)");
    verify->add_option("--n", vb_n, "n (ineq2)");
    verify->add_option("--k", vb_k, "uniformity (ineq2)");
    verify->add_option("--d", vb_d, "d (rational)");
    verify->add_option("--alpha", vb_alpha, "alpha (rational)");
    verify->add_option("--eps", vb_eps, "eps (rational)");
    verify->add_option("--l", vb_l, "level count (evaluators)");
    verify->add_option("--c-const", vb_C, "constant C (evaluators)");
    verify->add_option("--q", vb_q, "q (evaluators)");
    verify->add_option("--v-size", vb_V, "|V| (evaluators)");
    verify->add_option("--r-lminus1", vb_r, "r_{l-1} (kelly42)");
    verify->add_option("--gamma", vb_gamma, "gamma (kelly42)");
    verify->add_option("--k-const", vb_K, "constant K (spiro26)");
    verify->add_option("--max-n", vb_maxn, "sweep graph size cap");
    verify->add_option("--samples", vb_samples, "ineq2 samples per cell");
    verify->add_option("--seed", vb_seed, "sweep seed");
    verify->add_option("--out", vb_out, "JSONL output file (default stdout)");

    // threshold-scan
    auto* scan = app.add_subcommand("threshold-scan", "Monte Carlo appearance-threshold estimation");
    std::string ts_target, ts_nlist, ts_prefix, ts_manifest;
    int ts_trials = 2000, ts_workers = 1;
    std::uint64_t ts_seed = 1;
    std::uint64_t ts_budget = env_budget("SPREADLAB_CONTAIN_BUDGET", kDefaultContainBudget);
    double ts_p = -1;
    scan->add_option("--target", ts_target,
                     "matching | clique_factor:d=3 | cycle_power:r=2 | tight_cycle_power:k=3,r=1 | "
                     "locally_sparse_regular:d=4 | d_degenerate_random:d=2,seed=1 | file:PATH")
        ->required();
    scan->add_option("--n-list", ts_nlist, "comma-separated vertex counts")->required();
    scan->add_option("--trials", ts_trials, "trials per probe");
    scan->add_option("--seed", ts_seed, "master seed");
    scan->add_option("--budget", ts_budget, "containment node budget");
    scan->add_option("--workers", ts_workers, "parallel trial workers");
    scan->add_option("--p", ts_p, "single-point mode: estimate at this p instead of bisecting");
    scan->add_option("--out-prefix", ts_prefix, "write PREFIX.trials.jsonl, PREFIX.summary.csv, PREFIX.manifest.json");
    scan->add_option("--manifest", ts_manifest, "manifest sidecar path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*gen) return run_gen(gen_family, gen_n, gen_k, gen_r, gen_d, gen_p, gen_seed, gen_out, gen_manifest);
        if (*density) return run_density(den_input, den_i, den_budget, den_out, den_manifest);
        if (*pe) return run_pe(pe_input, pe_mode, pe_budget, pe_out, pe_manifest);
        if (*audit)
            return run_audit_degeneracy(aud_input, aud_d, aud_alpha, aud_eps, aud_umin, aud_local,
                                        aud_budget, aud_out, aud_manifest);
        if (*sched) return run_schedule(sch_n, sch_d, sch_alpha, sch_eps, sch_k);
        if (*spread)
            return run_spread_audit(spr_pattern, spr_host, spr_notion, spr_q, spr_gamma, spr_r, spr_rp,
                                    spr_schedule, spr_tmax, spr_smax, spr_budget, spr_seed, spr_out,
                                    spr_manifest);
        if (*verify)
            return run_verify_bounds(vb_which, vb_pattern, vb_host, vb_input, vb_fedges, vb_sedges, vb_t,
                                     vb_c, vb_sizes, vb_n, vb_k, vb_d, vb_alpha, vb_eps, vb_l, vb_C, vb_q,
                                     vb_V, vb_r, vb_gamma, vb_K, vb_maxn, vb_samples, vb_seed, vb_out);
        if (*scan)
            return run_threshold_scan(ts_target, ts_nlist, ts_trials, ts_seed, ts_budget, ts_workers, ts_p,
                                      ts_prefix, ts_manifest);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    }
    return kExitUsage;
}
