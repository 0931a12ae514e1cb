#include "spreadlab/threshold.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <queue>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "spreadlab/generators.hpp"
#include "spreadlab/isomorphism.hpp"
#include "spreadlab/rng.hpp"

namespace spreadlab {

std::string containment_str(Containment c) {
    switch (c) {
        case Containment::contained: return "contained";
        case Containment::not_contained: return "not-contained";
        default: return "timeout";
    }
}

// --- blossom maximum matching -------------------------------------------------

namespace {

class Blossom {
public:
    explicit Blossom(const Hypergraph& g) : n_(g.vertex_count()), adj_(n_) {
        for (const auto& e : g.edges()) {
            adj_[e[0]].push_back(e[1]);
            adj_[e[1]].push_back(e[0]);
        }
        match_.assign(n_, -1);
        p_.assign(n_, -1);
        base_.assign(n_, 0);
    }

    int solve() {
        int res = 0;
        for (int v = 0; v < n_; ++v)
            if (match_[v] == -1 && find_path(v)) ++res;
        return res;
    }

private:
    void mark_path(int v, int b, int child, std::vector<char>& blossom) {
        while (base_[v] != b) {
            blossom[base_[v]] = 1;
            blossom[base_[match_[v]]] = 1;
            p_[v] = child;
            child = match_[v];
            v = p_[match_[v]];
        }
    }

    int lca(int a, int b) {
        std::vector<char> used(n_, 0);
        int v = a;
        while (true) {
            v = base_[v];
            used[v] = 1;
            if (match_[v] == -1) break;
            v = p_[match_[v]];
        }
        v = b;
        while (true) {
            v = base_[v];
            if (used[v]) return v;
            v = p_[match_[v]];
        }
    }

    bool find_path(int root) {
        std::vector<char> used(n_, 0);
        std::fill(p_.begin(), p_.end(), -1);
        for (int i = 0; i < n_; ++i) base_[i] = i;
        used[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj_[v]) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != -1 && p_[match_[to]] != -1)) {
                    int cur = lca(v, to);
                    std::vector<char> blossom(n_, 0);
                    mark_path(v, cur, to, blossom);
                    mark_path(to, cur, v, blossom);
                    for (int i = 0; i < n_; ++i)
                        if (blossom[base_[i]]) {
                            base_[i] = cur;
                            if (!used[i]) { used[i] = 1; q.push(i); }
                        }
                } else if (p_[to] == -1) {
                    p_[to] = v;
                    if (match_[to] == -1) {
                        augment(to);
                        return true;
                    }
                    used[match_[to]] = 1;
                    q.push(match_[to]);
                }
            }
        }
        return false;
    }

    void augment(int u) {
        while (u != -1) {
            int pv = p_[u], ppv = match_[pv];
            match_[u] = pv;
            match_[pv] = u;
            u = ppv;
        }
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_, p_, base_;
};

}  // namespace

int max_matching_size(const Hypergraph& g) {
    if (g.uniformity() != 2) throw std::invalid_argument("max_matching_size: needs k=2");
    return Blossom(g).solve();
}

bool is_perfect_matching_pattern(const Hypergraph& pattern) {
    if (pattern.uniformity() != 2 || pattern.vertex_count() % 2 != 0 || pattern.vertex_count() == 0)
        return false;
    for (int v = 0; v < pattern.vertex_count(); ++v)
        if (pattern.degree(v) != 1) return false;
    return true;
}

int clique_factor_size(const Hypergraph& pattern) {
    if (pattern.uniformity() != 2 || pattern.vertex_count() == 0) return 0;
    auto parts = components(pattern);
    const int d = (int)parts[0].size();
    if (d < 3) return 0;  // matchings go through the blossom path
    if (pattern.vertex_count() % d != 0) return 0;
    for (const auto& part : parts) {
        if ((int)part.size() != d) return 0;
        for (int v : part)
            if (pattern.degree(v) != d - 1) return 0;
    }
    return d;
}

// --- clique-factor exact cover -------------------------------------------------

namespace {

struct CliqueCover {
    const Hypergraph& host;
    int d;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    std::vector<std::uint64_t> cliques;                 // vertex masks
    std::vector<std::vector<int>> cliques_at;           // vertex -> clique ids
    std::unordered_set<std::uint64_t> failed;           // covered-masks with no completion

    CliqueCover(const Hypergraph& h, int dd, std::uint64_t b) : host(h), d(dd), budget(b) {}

    bool adjacent(int a, int b) const {
        std::vector<int> e{std::min(a, b), std::max(a, b)};
        return host.has_edge(e);
    }

    void collect(std::vector<int>& cur, int next) {
        if ((int)cur.size() == d) {
            std::uint64_t m = 0;
            for (int v : cur) m |= 1ULL << v;
            cliques.push_back(m);
            return;
        }
        for (int v = next; v < host.vertex_count(); ++v) {
            bool ok = true;
            for (int u : cur)
                if (!adjacent(u, v)) { ok = false; break; }
            if (!ok) continue;
            cur.push_back(v);
            collect(cur, v + 1);
            cur.pop_back();
        }
    }

    bool run() {
        std::vector<int> cur;
        collect(cur, 0);
        cliques_at.assign(host.vertex_count(), {});
        for (int i = 0; i < (int)cliques.size(); ++i)
            for (int v = 0; v < host.vertex_count(); ++v)
                if (cliques[i] & (1ULL << v)) cliques_at[v].push_back(i);
        const std::uint64_t full = host.vertex_count() == 64 ? ~0ULL : (1ULL << host.vertex_count()) - 1;
        return search(0, full);
    }

    bool search(std::uint64_t covered, std::uint64_t full) {
        if (covered == full) return true;
        if (out_of_budget) return false;
        if (++nodes > budget) { out_of_budget = true; return false; }
        if (failed.count(covered)) return false;
        int v = __builtin_ctzll(~covered);
        for (int ci : cliques_at[v]) {
            if (cliques[ci] & covered) continue;
            if (search(covered | cliques[ci], full)) return true;
            if (out_of_budget) return false;
        }
        if (failed.size() < (1u << 22)) failed.insert(covered);
        return false;
    }
};

}  // namespace

ContainmentResult contains_spanning(const Hypergraph& host, const Hypergraph& pattern,
                                    std::uint64_t node_budget, bool force_generic) {
    if (host.vertex_count() != pattern.vertex_count())
        throw std::invalid_argument("contains_spanning: pattern and host must have the same vertex count");
    if (pattern.edge_count() > 0 && host.uniformity() != pattern.uniformity())
        throw std::invalid_argument("contains_spanning: uniformity mismatch");

    ContainmentResult res;
    if (!force_generic && is_perfect_matching_pattern(pattern)) {
        int mm = max_matching_size(host);
        res.outcome = (mm == pattern.vertex_count() / 2) ? Containment::contained : Containment::not_contained;
        res.nodes = (std::uint64_t)host.vertex_count() * std::max(1, host.edge_count());
        return res;
    }
    if (!force_generic && pattern.vertex_count() <= 64) {
        int d = clique_factor_size(pattern);
        if (d > 0) {
            CliqueCover cover(host, d, node_budget);
            bool found = cover.run();
            res.nodes = cover.nodes;
            if (cover.out_of_budget && !found) res.outcome = Containment::timeout;
            else res.outcome = found ? Containment::contained : Containment::not_contained;
            return res;
        }
    }
    // quick reject: sorted host degrees must dominate sorted pattern degrees
    {
        auto hd = host.degree_sequence();
        auto pd = pattern.degree_sequence();
        for (size_t i = 0; i < hd.size(); ++i)
            if (hd[i] < pd[i]) {
                res.outcome = Containment::not_contained;
                res.nodes = 0;
                return res;
            }
    }
    bool budget_hit = false;
    std::uint64_t nodes = 0;
    auto found = find_embedding(pattern, host, node_budget, &nodes, &budget_hit);
    res.nodes = nodes;
    if (found) res.outcome = Containment::contained;
    else if (budget_hit) res.outcome = Containment::timeout;
    else res.outcome = Containment::not_contained;
    return res;
}

// --- targets -------------------------------------------------------------------

TargetSpec TargetSpec::parse(const std::string& text) {
    TargetSpec spec;
    std::string family = text;
    std::string args;
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        family = text.substr(0, colon);
        args = text.substr(colon + 1);
    }
    auto get = [&](const std::string& name, int defval) {
        auto pos = args.find(name + "=");
        if (pos == std::string::npos) return defval;
        return std::stoi(args.substr(pos + name.size() + 1));
    };
    if (family == "matching") {
        spec.family = Family::matching;
    } else if (family == "clique_factor") {
        spec.family = Family::clique_factor;
        spec.d = get("d", 3);
        if (spec.d < 2) throw std::invalid_argument("target: clique_factor needs d >= 2");
    } else if (family == "cycle_power") {
        spec.family = Family::cycle_power;
        spec.r = get("r", 1);
    } else if (family == "tight_cycle_power") {
        spec.family = Family::tight_cycle_power;
        spec.k = get("k", 3);
        spec.r = get("r", 1);
    } else if (family == "locally_sparse_regular") {
        spec.family = Family::locally_sparse_regular;
        spec.d = get("d", 3);
    } else if (family == "d_degenerate_random") {
        spec.family = Family::d_degenerate_random;
        spec.d = get("d", 2);
        spec.seed = (std::uint64_t)get("seed", 1);
    } else if (family == "file") {
        spec.family = Family::from_file;
        spec.path = args;
        if (spec.path.empty()) throw std::invalid_argument("target: file needs a path, e.g. file:pattern.hg");
    } else {
        throw std::invalid_argument("target: unknown family '" + family + "'");
    }
    return spec;
}

std::string TargetSpec::str() const {
    switch (family) {
        case Family::matching: return "matching";
        case Family::clique_factor: return "clique_factor:d=" + std::to_string(d);
        case Family::cycle_power: return "cycle_power:r=" + std::to_string(r);
        case Family::tight_cycle_power:
            return "tight_cycle_power:k=" + std::to_string(k) + ",r=" + std::to_string(r);
        case Family::locally_sparse_regular: return "locally_sparse_regular:d=" + std::to_string(d);
        case Family::d_degenerate_random:
            return "d_degenerate_random:d=" + std::to_string(d) + ",seed=" + std::to_string(seed);
        default: return "file:" + path;
    }
}

Hypergraph make_target(const TargetSpec& spec, int n) {
    switch (spec.family) {
        case TargetSpec::Family::matching: {
            if (n % 2 != 0) throw std::invalid_argument("target matching: n must be even");
            std::vector<std::vector<int>> edges;
            for (int i = 0; i < n; i += 2) edges.push_back({i, i + 1});
            return Hypergraph::from_edges(2, n, edges);
        }
        case TargetSpec::Family::clique_factor: {
            if (n % spec.d != 0) throw std::invalid_argument("target clique_factor: d must divide n");
            std::vector<std::vector<int>> edges;
            for (int b = 0; b < n; b += spec.d)
                for (int i = b; i < b + spec.d; ++i)
                    for (int j = i + 1; j < b + spec.d; ++j) edges.push_back({i, j});
            return Hypergraph::from_edges(2, n, edges);
        }
        case TargetSpec::Family::cycle_power:
            return cycle_power(n, spec.r);
        case TargetSpec::Family::tight_cycle_power:
            return tight_cycle_power(n, spec.k, spec.r);
        case TargetSpec::Family::locally_sparse_regular:
            return locally_sparse_regular(n, spec.d);
        case TargetSpec::Family::d_degenerate_random:
            return random_d_degenerate(n, spec.d, spec.seed);
        default: {
            Hypergraph h = read_hypergraph_file(spec.path);
            if (h.vertex_count() != n)
                throw std::invalid_argument("target file: pattern has " + std::to_string(h.vertex_count()) +
                                            " vertices, expected n=" + std::to_string(n));
            return h;
        }
    }
}

// --- experiment harness ----------------------------------------------------------

std::uint64_t experiment_config_hash(const ExperimentConfig& c) {
    char pbuf[32];
    std::snprintf(pbuf, sizeof pbuf, "%.17g", c.p);
    std::string canon = "target=" + c.target.str() + ";n=" + std::to_string(c.n) + ";p=" + pbuf +
                        ";trials=" + std::to_string(c.trials) + ";seed=" + std::to_string(c.master_seed) +
                        ";budget=" + std::to_string(c.node_budget);
    std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
    for (unsigned char ch : canon) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

void wilson_ci(int successes, int total, double* lo, double* hi) {
    if (total == 0) { *lo = 0.0; *hi = 1.0; return; }
    const double z = 1.959963984540054;
    const double nn = total, ph = (double)successes / total;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double center = (ph + z2 / (2 * nn)) / denom;
    const double half = z * std::sqrt(ph * (1 - ph) / nn + z2 / (4 * nn * nn)) / denom;
    *lo = successes == 0 ? 0.0 : std::max(0.0, center - half);
    *hi = successes == total ? 1.0 : std::min(1.0, center + half);
}

ProbabilityEstimate containment_probability(const ExperimentConfig& config,
                                            std::vector<TrialRecord>* records,
                                            std::uint64_t probe_index) {
    if (config.trials < 1) throw std::invalid_argument("containment_probability: trials must be >= 1");
    const Hypergraph pattern = make_target(config.target, config.n);
    const std::uint64_t chash = experiment_config_hash(config);

    std::vector<TrialRecord> local(config.trials);
    auto run_trial = [&](int t) {
        TrialRecord& rec = local[t];
        rec.config_hash = chash;
        rec.trial = t;
        rec.seed = derive_seed(config.master_seed, chash ^ (probe_index * 0x9e3779b9ULL), (std::uint64_t)t);
        auto t0 = std::chrono::steady_clock::now();
        Hypergraph host = gnp(config.n, pattern.uniformity(), config.p, rec.seed);
        ContainmentResult res = contains_spanning(host, pattern, config.node_budget);
        rec.outcome = res.outcome;
        rec.nodes = res.nodes;
        rec.elapsed_sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    const int workers = std::max(1, config.workers);
    if (workers == 1 || config.trials < 2 * workers) {
        for (int t = 0; t < config.trials; ++t) run_trial(t);
    } else {
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&]() {
                int t;
                while ((t = next.fetch_add(1)) < config.trials) run_trial(t);
            });
        for (auto& th : pool) th.join();
    }

    ProbabilityEstimate est;
    est.trials = config.trials;
    for (const auto& rec : local) {
        if (rec.outcome == Containment::timeout) ++est.timeouts;
        else {
            ++est.decided;
            if (rec.outcome == Containment::contained) ++est.contained;
        }
    }
    est.p_hat = est.decided ? (double)est.contained / est.decided : 0.0;
    wilson_ci(est.contained, est.decided, &est.ci_lo, &est.ci_hi);
    est.reliable = est.timeouts <= 0.2 * est.trials;
    if (records) records->insert(records->end(), local.begin(), local.end());
    return est;
}

ThresholdEstimate threshold_bisect(const ExperimentConfig& config,
                                   std::vector<TrialRecord>* records) {
    ThresholdEstimate out;
    out.n = config.n;
    double lo = 0.0, hi = 1.0;
    const double resolution = 1.0 / ((double)config.n * config.n);
    long long timeouts = 0;
    std::uint64_t probe = 0;
    bool straddled = false;
    double mid = 0.5;
    while (hi - lo > resolution && probe < 64) {
        mid = 0.5 * (lo + hi);
        ExperimentConfig probe_cfg = config;
        probe_cfg.p = mid;
        ProbabilityEstimate est = containment_probability(probe_cfg, records, probe);
        out.trials_used += est.trials;
        timeouts += est.timeouts;
        ++probe;
        if (est.ci_lo > 0.5) hi = mid;
        else if (est.ci_hi < 0.5) lo = mid;
        else { straddled = true; break; }  // CI straddles 1/2: mid is the crossing
    }
    out.p_half = straddled ? mid : 0.5 * (lo + hi);
    out.ci_lo = lo;
    out.ci_hi = hi;
    out.timeout_fraction = out.trials_used ? (double)timeouts / out.trials_used : 0.0;
    out.converged = straddled || hi - lo <= resolution;
    return out;
}

ExponentFit exponent_fit(const std::vector<std::pair<double, double>>& xy) {
    if (xy.size() < 3) throw std::invalid_argument("exponent_fit: need at least 3 points");
    std::vector<double> xs, ys;
    for (auto [x, y] : xy) {
        if (x <= 0 || y <= 0) throw std::invalid_argument("exponent_fit: points must be positive");
        xs.push_back(std::log(x));
        ys.push_back(std::log(y));
    }
    {
        auto mm = std::minmax_element(xs.begin(), xs.end());
        if (*mm.first == *mm.second) throw std::invalid_argument("exponent_fit: x values are constant");
    }
    const double n = (double)xs.size();
    double mx = 0, my = 0;
    for (size_t i = 0; i < xs.size(); ++i) { mx += xs[i]; my += ys[i]; }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    ExponentFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
        ss += r * r;
    }
    fit.residual_rms = std::sqrt(ss / n);
    fit.slope_stderr = xs.size() > 2 ? std::sqrt(ss / (n - 2) / sxx) : 0.0;
    return fit;
}

}  // namespace spreadlab
