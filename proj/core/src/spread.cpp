#include "spreadlab/spread.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "spreadlab/rng.hpp"

namespace spreadlab {

namespace {

constexpr double kRelSlack = 1e-12;

// q-comparison with the documented slack; probabilities are exact rationals,
// q^t lives in floating point.
bool prob_within(const Rational& p, double bound) {
    return p.to_double() <= bound * (1.0 + kRelSlack) + 1e-300;
}

long double log_q_value(const Rational& p, int exponent) {
    if (p.is_zero()) return -std::numeric_limits<long double>::infinity();
    return (std::log((long double)p.num()) - std::log((long double)p.den())) / exponent;
}

// iterate all k-subsets of items, invoking fn(subset)
template <typename F>
void for_each_subset(const std::vector<int>& items, int k, F&& fn) {
    const int n = (int)items.size();
    if (k < 0 || k > n) return;
    std::vector<int> pick(k);
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        for (int i = 0; i < k; ++i) pick[i] = items[idx[i]];
        fn(pick);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

double subset_count(int n, int k_max) {
    double total = 0, c = 1;
    for (int j = 1; j <= std::min(n, k_max); ++j) {
        c = c * (n - j + 1) / j;
        total += c;
        if (total > 1e18) return 1e18;
    }
    return total;
}

}  // namespace

void EmbeddingDistribution::validate() const {
    if (support.size() != prob.size())
        throw std::invalid_argument("embedding distribution: support/probability size mismatch");
    if (support.empty()) throw std::invalid_argument("embedding distribution: empty support");
    Rational total(0);
    for (const auto& p : prob) {
        if (p <= Rational(0)) throw std::invalid_argument("embedding distribution: nonpositive probability");
        total += p;
    }
    if (total != Rational(1)) throw std::invalid_argument("embedding distribution: probabilities sum to " + total.str());
    for (const auto& psi : support)
        if (!is_valid_embedding(pattern, host, psi))
            throw std::invalid_argument("embedding distribution: support element is not an embedding");
}

EmbeddingDistribution uniform_embedding_distribution(const Hypergraph& pattern, const Hypergraph& host,
                                                     std::uint64_t node_budget) {
    auto en = enumerate_embeddings(pattern, host, node_budget);
    if (en.status == SearchStatus::budget_exceeded)
        throw std::runtime_error("uniform_embedding_distribution: embedding enumeration exceeded budget");
    if (en.embeddings.empty())
        throw std::invalid_argument("uniform_embedding_distribution: pattern has no embeddings in host");
    EmbeddingDistribution d;
    d.pattern = pattern;
    d.host = host;
    d.support = std::move(en.embeddings);
    d.prob.assign(d.support.size(), Rational(1, (long long)d.support.size()));
    return d;
}

CopyDistribution pushforward_copies(const EmbeddingDistribution& d) {
    std::map<std::vector<int>, Rational> acc;
    for (size_t i = 0; i < d.support.size(); ++i) {
        std::vector<int> image;
        image.reserve(d.pattern.edge_count());
        std::vector<int> img_edge;
        for (const auto& e : d.pattern.edges()) {
            img_edge.clear();
            for (int v : e) img_edge.push_back(d.support[i][v]);
            std::sort(img_edge.begin(), img_edge.end());
            int idx = d.host.edge_index(img_edge);
            if (idx < 0) throw std::logic_error("pushforward_copies: embedding image is not a host edge");
            image.push_back(idx);
        }
        std::sort(image.begin(), image.end());
        auto it = acc.find(image);
        if (it == acc.end()) acc.emplace(std::move(image), d.prob[i]);
        else it->second += d.prob[i];
    }
    CopyDistribution out;
    out.host = d.host;
    out.support.reserve(acc.size());
    out.prob.reserve(acc.size());
    for (auto& kv : acc) {
        out.r0 = std::max(out.r0, (int)kv.first.size());
        out.support.push_back(kv.first);
        out.prob.push_back(kv.second);
    }
    return out;
}

// --- event accumulation ------------------------------------------------------

namespace {

// Events are encoded as byte strings so a hash map can accumulate exact
// probabilities; the per-audit byte width keeps encodings unambiguous.
struct EventAccumulator {
    std::unordered_map<std::string, Rational> acc;

    void add(const std::string& key, const Rational& p) {
        auto it = acc.find(key);
        if (it == acc.end()) acc.emplace(key, p);
        else it->second += p;
    }
};

std::string encode_pairs(const std::vector<std::pair<int, int>>& pairs, bool nibble) {
    std::string key;
    if (nibble) {
        key.reserve(pairs.size());
        for (auto [x, y] : pairs) key.push_back((char)((x << 4) | y));
    } else {
        key.reserve(2 * pairs.size());
        for (auto [x, y] : pairs) {
            key.push_back((char)x);
            key.push_back((char)y);
        }
    }
    return key;
}

std::vector<std::pair<int, int>> decode_pairs(const std::string& key, bool nibble) {
    std::vector<std::pair<int, int>> pairs;
    if (nibble) {
        for (unsigned char c : key) pairs.push_back({c >> 4, c & 0xf});
    } else {
        for (size_t i = 0; i + 1 < key.size(); i += 2)
            pairs.push_back({(unsigned char)key[i], (unsigned char)key[i + 1]});
    }
    return pairs;
}

std::string encode_edge_set(const std::vector<int>& edges, bool wide) {
    std::string key;
    if (wide) {
        key.reserve(2 * edges.size());
        for (int e : edges) {
            key.push_back((char)(e & 0xff));
            key.push_back((char)(e >> 8));
        }
    } else {
        key.reserve(edges.size());
        for (int e : edges) key.push_back((char)e);
    }
    return key;
}

std::vector<int> decode_edge_set(const std::string& key, bool wide) {
    std::vector<int> edges;
    if (wide) {
        for (size_t i = 0; i + 1 < key.size(); i += 2)
            edges.push_back((unsigned char)key[i] | ((unsigned char)key[i + 1] << 8));
    } else {
        for (unsigned char c : key) edges.push_back(c);
    }
    return edges;
}

// Picks the worst event (max P^(1/exponent)) deterministically: float compare
// with (exponent, key) tie-break.
struct WorstTracker {
    long double best_logq = -std::numeric_limits<long double>::infinity();
    bool have = false;
    Rational prob;
    int exponent = 1;
    std::string key;

    void offer(const Rational& p, int expo, const std::string& k) {
        if (p.is_zero()) return;
        long double lq = log_q_value(p, expo);
        if (!have || lq > best_logq ||
            (lq == best_logq && (expo < exponent || (expo == exponent && k < key)))) {
            have = true;
            best_logq = lq;
            prob = p;
            exponent = expo;
            key = k;
        }
    }
};

void fill_level_stats(SpreadAuditReport& rep, const std::map<int, LevelStat>& stats) {
    for (auto& kv : stats) rep.per_level.push_back(kv.second);
}

void bump_stat(std::map<int, LevelStat>& stats, int expo, const Rational& p) {
    auto it = stats.find(expo);
    if (it == stats.end()) {
        stats.emplace(expo, LevelStat{expo, 1, p, p});
    } else {
        ++it->second.events;
        if (p < it->second.min_prob) it->second.min_prob = p;
        if (p > it->second.max_prob) it->second.max_prob = p;
    }
}

}  // namespace

SpreadAuditReport vertex_spread_audit(const EmbeddingDistribution& d, int s_max,
                                      std::uint64_t budget, std::uint64_t seed,
                                      const std::vector<std::pair<int, int>>* hint) {
    const int v = d.pattern.vertex_count();
    if (s_max < 1 || s_max > v)
        throw std::invalid_argument("vertex_spread_audit: need 1 <= s_max <= v(pattern)");
    const bool nibble = v <= 16 && d.host.vertex_count() <= 16;

    SpreadAuditReport rep;
    rep.notion = SpreadNotion::vertex;

    std::vector<int> verts(v);
    for (int i = 0; i < v; ++i) verts[i] = i;

    const double cost = (double)d.support.size() * subset_count(v, s_max);
    if (cost <= (double)budget) {
        rep.mode = AuditMode::exhaustive;
        EventAccumulator acc;
        std::vector<std::pair<int, int>> pairs;
        for (size_t i = 0; i < d.support.size(); ++i) {
            const auto& psi = d.support[i];
            for (int s = 1; s <= s_max; ++s) {
                for_each_subset(verts, s, [&](const std::vector<int>& xs) {
                    pairs.clear();
                    for (int x : xs) pairs.push_back({x, psi[x]});
                    acc.add(encode_pairs(pairs, nibble), d.prob[i]);
                });
            }
        }
        WorstTracker worst;
        std::map<int, LevelStat> stats;
        for (const auto& kv : acc.acc) {
            int s = (int)(nibble ? kv.first.size() : kv.first.size() / 2);
            worst.offer(kv.second, s, kv.first);
            bump_stat(stats, s, kv.second);
        }
        rep.events_audited = acc.acc.size();
        fill_level_stats(rep, stats);
        if (worst.have) {
            rep.worst_prob = worst.prob;
            rep.worst_exponent = worst.exponent;
            rep.witness_pairs = decode_pairs(worst.key, nibble);
            rep.achieved_q = std::exp((double)worst.best_logq);
        }
        return rep;
    }

    // adversarial sampling: events seeded from high-probability assignments
    rep.mode = AuditMode::sampled;
    SplitMix rng(derive_seed(seed, 0xa0d17ULL));
    std::vector<size_t> order(d.support.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return d.prob[b] < d.prob[a]; });

    auto eval_event = [&](const std::vector<std::pair<int, int>>& pairs) {
        Rational p(0);
        for (size_t i = 0; i < d.support.size(); ++i) {
            bool ok = true;
            for (auto [x, y] : pairs)
                if (d.support[i][x] != y) { ok = false; break; }
            if (ok) p += d.prob[i];
        }
        return p;
    };

    const std::uint64_t scan_cost = std::max<std::uint64_t>(1, d.support.size());
    std::uint64_t max_events = std::max<std::uint64_t>(16, budget / scan_cost);
    std::set<std::string> seen;
    WorstTracker worst;
    std::map<int, LevelStat> stats;

    auto audit_pairs = [&](std::vector<std::pair<int, int>> pairs) {
        if (pairs.empty() || (int)pairs.size() > s_max) return;
        std::sort(pairs.begin(), pairs.end());
        std::string key = encode_pairs(pairs, nibble);
        if (!seen.insert(key).second) return;
        Rational p = eval_event(pairs);
        if (!p.is_zero()) bump_stat(stats, (int)pairs.size(), p);
        worst.offer(p, (int)pairs.size(), key);
    };

    if (hint) audit_pairs(*hint);
    // prefix restrictions of the most probable embeddings
    for (size_t rank = 0; rank < order.size() && seen.size() < max_events; ++rank) {
        if (rank >= 64) break;
        const auto& psi = d.support[order[rank]];
        for (int s = std::min(v, s_max); s >= 1; --s) {
            std::vector<std::pair<int, int>> pairs;
            for (int x = 0; x < s; ++x) pairs.push_back({x, psi[x]});
            audit_pairs(std::move(pairs));
        }
    }
    for (std::uint64_t attempts = 0; seen.size() < max_events && attempts < 64 * max_events; ++attempts) {
        const auto& psi = d.support[rng.below(d.support.size())];
        int s = 1 + (int)rng.below((std::uint64_t)s_max);
        std::vector<int> xs(verts);
        for (int i = 0; i < s; ++i) std::swap(xs[i], xs[i + rng.below((std::uint64_t)(v - i))]);
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < s; ++i) pairs.push_back({xs[i], psi[xs[i]]});
        audit_pairs(std::move(pairs));
    }
    rep.events_audited = seen.size();
    fill_level_stats(rep, stats);
    if (worst.have) {
        rep.worst_prob = worst.prob;
        rep.worst_exponent = worst.exponent;
        rep.witness_pairs = decode_pairs(worst.key, nibble);
        rep.achieved_q = std::exp((double)worst.best_logq);
    }
    return rep;
}

SpreadAuditReport edge_spread_audit(const CopyDistribution& d, int t_max,
                                    std::uint64_t budget, std::uint64_t seed,
                                    const std::vector<int>* hint) {
    if (t_max < 1) throw std::invalid_argument("edge_spread_audit: t_max must be >= 1");
    if (d.support.empty()) throw std::invalid_argument("edge_spread_audit: empty support");
    const bool wide = d.host.edge_count() > 256;

    SpreadAuditReport rep;
    rep.notion = SpreadNotion::edge;

    double cost = 0;
    for (const auto& a : d.support) cost += subset_count((int)a.size(), t_max) + 1;

    if (cost <= (double)budget) {
        rep.mode = AuditMode::exhaustive;
        EventAccumulator acc;
        for (size_t i = 0; i < d.support.size(); ++i) {
            const auto& a = d.support[i];
            for (int j = 1; j <= std::min<int>(t_max, (int)a.size()); ++j)
                for_each_subset(a, j, [&](const std::vector<int>& s) { acc.add(encode_edge_set(s, wide), d.prob[i]); });
            if ((int)a.size() > t_max)  // full support sets are always audited
                acc.add(encode_edge_set(a, wide), d.prob[i]);
        }
        WorstTracker worst;
        std::map<int, LevelStat> stats;
        for (const auto& kv : acc.acc) {
            int t = (int)(wide ? kv.first.size() / 2 : kv.first.size());
            worst.offer(kv.second, t, kv.first);
            bump_stat(stats, t, kv.second);
        }
        rep.events_audited = acc.acc.size();
        fill_level_stats(rep, stats);
        if (worst.have) {
            rep.worst_prob = worst.prob;
            rep.worst_exponent = worst.exponent;
            rep.witness_edges = decode_edge_set(worst.key, wide);
            rep.achieved_q = std::exp((double)worst.best_logq);
        }
        return rep;
    }

    rep.mode = AuditMode::sampled;
    SplitMix rng(derive_seed(seed, 0xed9eULL));
    std::vector<size_t> order(d.support.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return d.prob[b] < d.prob[a]; });

    auto eval_event = [&](const std::vector<int>& s) {
        Rational p(0);
        for (size_t i = 0; i < d.support.size(); ++i)
            if (std::includes(d.support[i].begin(), d.support[i].end(), s.begin(), s.end()))
                p += d.prob[i];
        return p;
    };

    const std::uint64_t scan_cost = std::max<std::uint64_t>(1, d.support.size());
    std::uint64_t max_events = std::max<std::uint64_t>(16, budget / scan_cost);
    std::set<std::string> seen;
    WorstTracker worst;
    std::map<int, LevelStat> stats;

    auto audit_set = [&](std::vector<int> s) {
        if (s.empty()) return;
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        std::string key = encode_edge_set(s, wide);
        if (!seen.insert(key).second) return;
        Rational p = eval_event(s);
        if (!p.is_zero()) bump_stat(stats, (int)s.size(), p);
        worst.offer(p, (int)s.size(), key);
    };

    if (hint) audit_set(*hint);
    for (size_t rank = 0; rank < order.size() && seen.size() < max_events; ++rank) {
        if (rank >= 64) break;
        const auto& a = d.support[order[rank]];
        audit_set(a);  // full set
        for (int j = 1; j <= std::min<int>(t_max, (int)a.size()) && seen.size() < max_events; ++j)
            audit_set(std::vector<int>(a.begin(), a.begin() + j));
    }
    for (std::uint64_t attempts = 0; seen.size() < max_events && attempts < 64 * max_events; ++attempts) {
        const auto& a = d.support[rng.below(d.support.size())];
        int j = 1 + (int)rng.below((std::uint64_t)std::min<int>(t_max, (int)a.size()));
        std::vector<int> pool(a);
        for (int i = 0; i < j; ++i) std::swap(pool[i], pool[i + rng.below((std::uint64_t)(pool.size() - i))]);
        audit_set(std::vector<int>(pool.begin(), pool.begin() + j));
    }
    rep.events_audited = seen.size();
    fill_level_stats(rep, stats);
    if (worst.have) {
        rep.worst_prob = worst.prob;
        rep.worst_exponent = worst.exponent;
        rep.witness_edges = decode_edge_set(worst.key, wide);
        rep.achieved_q = std::exp((double)worst.best_logq);
    }
    return rep;
}

// --- level schedules ---------------------------------------------------------

LevelSchedule LevelSchedule::from_levels(std::vector<long long> levels) {
    if (levels.empty()) throw std::invalid_argument("level schedule: empty");
    for (size_t i = 0; i < levels.size(); ++i) {
        if (levels[i] < 1) throw std::invalid_argument("level schedule: thresholds must be positive");
        if (i > 0 && levels[i] >= levels[i - 1])
            throw std::invalid_argument("level schedule: thresholds must strictly decrease");
    }
    if (levels.back() != 1) throw std::invalid_argument("level schedule: final threshold must be 1");
    LevelSchedule s;
    s.levels = std::move(levels);
    return s;
}

std::string LevelSchedule::str() const {
    std::string out;
    for (size_t i = 0; i < levels.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(levels[i]);
    }
    return out;
}

LevelSchedule level_schedule(long long n, const Rational& d, const Rational& alpha,
                             const Rational& eps, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("level_schedule: need n >= 1, k >= 1");
    if (d <= Rational(0) || alpha <= Rational(0))
        throw std::invalid_argument("level_schedule: d and alpha must be positive");
    if (eps <= Rational(0) || eps >= Rational(1))
        throw std::invalid_argument("level_schedule: eps must lie in (0,1)");

    const long long l = std::max<long long>(2, rational_ceil(Rational(10) * d / (Rational(9) * alpha)).num());
    const long long r0 = rational_ceil(d * Rational(n)).num();
    const long long r1 = rational_ceil(eps * Rational(n) / Rational(k)).num();
    if (r1 <= 1)
        throw std::invalid_argument("level_schedule: n=" + std::to_string(n) +
                                    " too small for (d=" + d.str() + ", alpha=" + alpha.str() +
                                    ", eps=" + eps.str() + ", k=" + std::to_string(k) +
                                    "): r_1 would be " + std::to_string(r1));
    std::vector<long long> raw = {r0, r1};
    const double shrink = std::pow((double)n, 9.0 * alpha.to_double() / (10.0 * d.to_double()));
    for (long long i = 2; i <= l - 1; ++i) {
        double next = (double)raw.back() / shrink;
        long long r = (long long)std::ceil(next);
        raw.push_back(std::max<long long>(r, 1));
    }
    raw.push_back(1);

    std::vector<long long> levels;
    for (long long r : raw)
        if (levels.empty() || r < levels.back()) levels.push_back(r);
    if (levels.back() != 1) levels.push_back(1);
    return LevelSchedule::from_levels(std::move(levels));
}

// --- multilevel / gamma audits -----------------------------------------------

namespace {

struct WindowAudit {
    const CopyDistribution& d;
    double q;
    std::uint64_t budget;
    std::uint64_t seed;
    const std::vector<int>* hint;
    bool wide;

    WorstTracker worst;
    std::map<int, LevelStat> stats;
    std::uint64_t events = 0;
    bool pass = true;
    double max_gamma = 0.0;
    AuditMode mode = AuditMode::exhaustive;

    WindowAudit(const CopyDistribution& dist, double qv, std::uint64_t b, std::uint64_t s,
                const std::vector<int>* h)
        : d(dist), q(qv), budget(b), seed(s), hint(h), wide(dist.host.edge_count() > 256) {}

    // P(|A cap S| >= t) for every t in [lo, hi]
    void eval_set(const std::vector<int>& s, long long lo, long long hi) {
        std::vector<Rational> size_mass((size_t)s.size() + 1, Rational(0));
        for (size_t i = 0; i < d.support.size(); ++i) {
            const auto& a = d.support[i];
            size_t cnt = 0;
            auto it = a.begin();
            for (int e : s) {
                it = std::lower_bound(it, a.end(), e);
                if (it != a.end() && *it == e) { ++cnt; ++it; }
            }
            size_mass[cnt] += d.prob[i];
        }
        std::vector<Rational> tail(size_mass.size() + 1, Rational(0));
        for (int c = (int)size_mass.size() - 1; c >= 0; --c) tail[c] = tail[c + 1] + size_mass[c];
        std::string key = encode_edge_set(s, wide);
        for (long long t = std::max<long long>(lo, 1); t <= hi; ++t) {
            ++events;
            Rational p = t <= (long long)s.size() ? tail[t] : Rational(0);
            if (!p.is_zero()) bump_stat(stats, (int)t, p);
            double bound = std::pow(q, (double)t);
            if (!prob_within(p, bound)) pass = false;
            if (!p.is_zero() && bound > 0) max_gamma = std::max(max_gamma, p.to_double() / bound);
            // worst tracked by q-root with the threshold as exponent
            if (!p.is_zero()) {
                long double lq = log_q_value(p, (int)t);
                if (!worst.have || lq > worst.best_logq ||
                    (lq == worst.best_logq && ((int)t < worst.exponent ||
                                               ((int)t == worst.exponent && key < worst.key)))) {
                    worst.have = true;
                    worst.best_logq = lq;
                    worst.prob = p;
                    worst.exponent = (int)t;
                    worst.key = key;
                }
            }
        }
    }

    // audit all windows [lo_i, hi_i]; S drawn as j-subsets of support sets
    // with j in the same window as t
    void run(const std::vector<std::pair<long long, long long>>& windows) {
        double cost = 0;
        for (const auto& a : d.support)
            for (auto [lo, hi] : windows) {
                long long jl = std::max<long long>(lo, 1), jh = std::min<long long>(hi, (long long)a.size());
                for (long long j = jl; j <= jh; ++j) {
                    cost += subset_count((int)a.size(), (int)j) - subset_count((int)a.size(), (int)j - 1) + 1;
                    if (cost > 1e18) break;
                }
            }
        cost *= (double)d.support.size();  // each candidate set scans the support

        if (cost <= (double)budget) {
            mode = AuditMode::exhaustive;
            for (auto [lo, hi] : windows) {
                std::set<std::string> candidates;
                for (const auto& a : d.support) {
                    long long jl = std::max<long long>(lo, 1), jh = std::min<long long>(hi, (long long)a.size());
                    for (long long j = jl; j <= jh; ++j)
                        for_each_subset(a, (int)j, [&](const std::vector<int>& s) {
                            candidates.insert(encode_edge_set(s, wide));
                        });
                }
                for (const auto& key : candidates) eval_set(decode_edge_set(key, wide), lo, hi);
            }
            return;
        }

        mode = AuditMode::sampled;
        SplitMix rng(derive_seed(seed, 0x9a77aULL));
        std::vector<size_t> order(d.support.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](size_t a, size_t b) { return d.prob[b] < d.prob[a]; });
        const std::uint64_t scan = std::max<std::uint64_t>(1, d.support.size() * windows.size());
        std::uint64_t max_events = std::max<std::uint64_t>(16, budget / scan);
        std::set<std::string> seen;
        auto audit = [&](std::vector<int> s) {
            if (s.empty()) return;
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            std::string key = encode_edge_set(s, wide);
            if (!seen.insert(key).second) return;
            for (auto [lo, hi] : windows)
                if ((long long)s.size() >= std::max<long long>(lo, 1) && (long long)s.size() <= hi)
                    eval_set(s, lo, hi);
        };
        if (hint) audit(*hint);
        for (size_t rank = 0; rank < order.size() && rank < 64 && seen.size() < max_events; ++rank) {
            const auto& a = d.support[order[rank]];
            audit(a);
            for (auto [lo, hi] : windows) {
                long long jl = std::max<long long>(lo, 1), jh = std::min<long long>(hi, (long long)a.size());
                for (long long j = jl; j <= jh && seen.size() < max_events; ++j)
                    audit(std::vector<int>(a.begin(), a.begin() + j));
            }
        }
        for (std::uint64_t attempts = 0; seen.size() < max_events && attempts < 64 * max_events;
             ++attempts) {
            const auto& a = d.support[rng.below(d.support.size())];
            auto [lo, hi] = windows[rng.below(windows.size())];
            long long jl = std::max<long long>(lo, 1), jh = std::min<long long>(hi, (long long)a.size());
            if (jl > jh) continue;
            long long j = jl + (long long)rng.below((std::uint64_t)(jh - jl + 1));
            std::vector<int> pool(a);
            for (long long i = 0; i < j; ++i)
                std::swap(pool[i], pool[i + rng.below((std::uint64_t)(pool.size() - i))]);
            audit(std::vector<int>(pool.begin(), pool.begin() + j));
        }
    }

    void fill(SpreadAuditReport& rep) {
        rep.mode = mode;
        rep.pass = pass;
        rep.events_audited = events;
        fill_level_stats(rep, stats);
        if (worst.have) {
            rep.worst_prob = worst.prob;
            rep.worst_exponent = worst.exponent;
            rep.witness_t = worst.exponent;
            rep.witness_edges = decode_edge_set(worst.key, wide);
            rep.achieved_q = std::exp((double)worst.best_logq);
        }
    }
};

}  // namespace

SpreadAuditReport multilevel_spread_audit(const CopyDistribution& d, double q, const LevelSchedule& schedule,
                                          std::uint64_t budget, std::uint64_t seed,
                                          const std::vector<int>* hint) {
    if (d.support.empty()) throw std::invalid_argument("multilevel_spread_audit: empty support");
    if (schedule.levels.front() < d.r0)
        throw std::invalid_argument("multilevel_spread_audit: r_0=" + std::to_string(schedule.levels.front()) +
                                    " below max support size " + std::to_string(d.r0));
    std::vector<std::pair<long long, long long>> windows;
    if (schedule.levels.size() == 1) {
        windows.push_back({schedule.levels[0], schedule.levels[0]});
    } else {
        for (size_t i = 1; i < schedule.levels.size(); ++i)
            windows.push_back({schedule.levels[i], schedule.levels[i - 1]});
    }
    WindowAudit audit(d, q, budget, seed, hint);
    audit.run(windows);
    SpreadAuditReport rep;
    rep.notion = SpreadNotion::multilevel;
    audit.fill(rep);
    return rep;
}

SpreadAuditReport gamma_spread_audit(const CopyDistribution& d, double q, double gamma,
                                     long long r, long long r_prime,
                                     std::uint64_t budget, std::uint64_t seed,
                                     const std::vector<int>* hint) {
    if (d.support.empty()) throw std::invalid_argument("gamma_spread_audit: empty support");
    if (r <= r_prime || r_prime < 1)
        throw std::invalid_argument("gamma_spread_audit: need r > r_prime >= 1");
    WindowAudit audit(d, q, budget, seed, hint);
    audit.run({{r_prime, r}});
    SpreadAuditReport rep;
    rep.notion = SpreadNotion::gamma;
    audit.fill(rep);
    rep.gamma_achieved = audit.max_gamma;
    rep.pass = audit.max_gamma <= gamma * (1.0 + kRelSlack);
    return rep;
}

}  // namespace spreadlab
