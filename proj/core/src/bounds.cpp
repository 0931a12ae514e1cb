#include "spreadlab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "spreadlab/generators.hpp"
#include "spreadlab/rng.hpp"

namespace spreadlab {

namespace {

double log10_binomial(double n, double k) {
    if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
    return (std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1)) / std::log(10.0);
}

// saturating u128 product chain, capped at 2^63
unsigned long long sat_mul(unsigned long long a, unsigned long long b) {
    const unsigned long long cap = 1ULL << 63;
    __uint128_t p = (__uint128_t)a * b;
    return p >= cap ? cap : (unsigned long long)p;
}

unsigned long long sat_pow(unsigned long long base, unsigned long long e) {
    unsigned long long r = 1;
    for (unsigned long long i = 0; i < e; ++i) {
        r = sat_mul(r, base);
        if (r >= (1ULL << 63)) break;
    }
    return r;
}

unsigned long long sat_binomial(unsigned long long n, unsigned long long k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    __uint128_t r = 1;
    const __uint128_t cap = (__uint128_t)1 << 63;
    for (unsigned long long i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r >= cap) return 1ULL << 63;
    }
    return (unsigned long long)r;
}

int component_count(const Hypergraph& g, const std::vector<int>& edge_ids, int* covered_out = nullptr) {
    std::vector<int> parent(g.vertex_count(), -1);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int covered = 0, comps = 0;
    for (int idx : edge_ids) {
        const auto& e = g.edge(idx);
        for (int v : e)
            if (parent[v] < 0) { parent[v] = v; ++covered; ++comps; }
        for (size_t i = 1; i < e.size(); ++i) {
            int a = find(e[0]), b = find(e[i]);
            if (a != b) { parent[std::max(a, b)] = std::min(a, b); --comps; }
        }
    }
    if (covered_out) *covered_out = covered;
    return comps;
}

void record_violation(SweepResult& sweep, BoundCheck check) {
    if (sweep.violations.size() < 100) sweep.violations.push_back(std::move(check));
}

}  // namespace

// --- lemma31: embedding-restriction counts ------------------------------------

namespace {

struct Lemma31Instance {
    std::vector<int> w;                    // V(F), sorted
    std::vector<std::vector<int>> hw_edges;  // E(H[W]) as sorted vertex sets
};

Lemma31Instance lemma31_setup(const Hypergraph& h, const std::vector<int>& f_edges) {
    Lemma31Instance inst;
    std::set<int> wset;
    for (int idx : f_edges)
        for (int v : h.edge(idx)) wset.insert(v);
    inst.w.assign(wset.begin(), wset.end());
    for (const auto& e : h.edges()) {
        bool inside = true;
        for (int v : e)
            if (!wset.count(v)) { inside = false; break; }
        if (inside) inst.hw_edges.push_back(e);
    }
    return inst;
}

}  // namespace

BoundCheck lemma31_check(const Hypergraph& g, const Hypergraph& h, const std::vector<int>& f_edges,
                         std::uint64_t node_budget) {
    if (g.vertex_count() != h.vertex_count())
        throw std::invalid_argument("lemma31_check: G and H must have the same vertex count");
    if (f_edges.empty()) throw std::invalid_argument("lemma31_check: F must be nonempty");
    const int n = g.vertex_count();
    auto inst = lemma31_setup(h, f_edges);
    const int v = (int)inst.w.size();
    const int c = component_count(h, f_edges);

    // F edges as sorted vertex sets for the coverage test
    std::vector<std::vector<int>> f_sets;
    for (int idx : f_edges) f_sets.push_back(h.edge(idx));
    std::sort(f_sets.begin(), f_sets.end());
    f_sets.erase(std::unique(f_sets.begin(), f_sets.end()), f_sets.end());

    std::set<std::vector<int>> hw(inst.hw_edges.begin(), inst.hw_edges.end());

    unsigned long long count = 0;
    std::uint64_t nodes = 0;
    bool budget_hit = false;

    std::vector<int> xsel;
    auto per_x = [&](const std::vector<int>& x) {
        if (budget_hit) return;
        std::vector<int> perm(x);
        std::sort(perm.begin(), perm.end());
        do {
            if (++nodes > node_budget) { budget_hit = true; return; }
            // psi maps perm[i] -> w[i]
            std::vector<int> pos(n, -1);
            for (int i = 0; i < v; ++i) pos[perm[i]] = inst.w[i];
            bool ok = true;
            std::set<std::vector<int>> image;
            for (const auto& e : g.edges()) {
                bool inside = true;
                for (int u : e)
                    if (pos[u] < 0) { inside = false; break; }
                if (!inside) continue;
                std::vector<int> img;
                for (int u : e) img.push_back(pos[u]);
                std::sort(img.begin(), img.end());
                if (!hw.count(img)) { ok = false; break; }
                image.insert(img);
            }
            if (!ok) continue;
            bool covers = true;
            for (const auto& f : f_sets)
                if (!image.count(f)) { covers = false; break; }
            if (covers) ++count;
        } while (std::next_permutation(perm.begin(), perm.end()));
    };

    // all v-subsets of V(G)
    std::vector<int> idx(v);
    std::iota(idx.begin(), idx.end(), 0);
    if (v <= n) {
        while (true) {
            std::vector<int> x(idx.begin(), idx.end());
            per_x(x);
            if (budget_hit) break;
            int i = v - 1;
            while (i >= 0 && idx[i] == n - v + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < v; ++j) idx[j] = idx[j - 1] + 1;
        }
    }

    BoundCheck check;
    check.name = "lemma31";
    check.inputs = {{"n", (double)n}, {"v", (double)v}, {"c", (double)c},
                    {"k", (double)g.uniformity()}, {"max_degree", (double)g.max_degree()},
                    {"f_edges", (double)f_sets.size()}};
    unsigned long long bound = sat_mul(sat_pow((unsigned long long)n, (unsigned long long)c),
                                       sat_pow((unsigned long long)g.uniformity() * g.max_degree(),
                                               (unsigned long long)(v - c)));
    check.exact_count = count;
    check.lhs = (double)count;
    check.rhs = (double)bound;
    check.log10_lhs = count ? std::log10((double)count) : 0.0;
    check.log10_rhs = bound ? std::log10((double)bound) : 0.0;
    check.pass = count <= bound;
    if (budget_hit) check.note = "budget-exceeded: count is a lower bound";
    return check;
}

SweepResult lemma31_sweep(const Hypergraph& g, const Hypergraph& h) {
    if (g.vertex_count() != h.vertex_count())
        throw std::invalid_argument("lemma31_sweep: G and H must have the same vertex count");
    const int n = g.vertex_count();
    if (n > 16) throw std::invalid_argument("lemma31_sweep: supported for n <= 16");
    SweepResult sweep;
    const int m = h.edge_count();
    if (m == 0) return sweep;

    for (std::uint32_t wmask = 1; wmask < (1u << n); ++wmask) {
        std::vector<int> w;
        for (int i = 0; i < n; ++i)
            if (wmask & (1u << i)) w.push_back(i);
        const int v = (int)w.size();
        if (v < h.uniformity()) continue;
        // edges of H inside W
        std::vector<int> ew;
        for (int idx = 0; idx < m; ++idx) {
            bool inside = true;
            for (int u : h.edge(idx))
                if (!(wmask & (1u << u))) { inside = false; break; }
            if (inside) ew.push_back(idx);
        }
        if (ew.empty()) continue;
        if ((int)ew.size() > 20)
            throw std::invalid_argument("lemma31_sweep: host induces more than 20 edges on a support");
        std::vector<int> ew_pos(m, -1);
        for (int i = 0; i < (int)ew.size(); ++i) ew_pos[ew[i]] = i;

        // accumulate image masks over all (X, psi)
        std::vector<unsigned long long> cnt(1u << ew.size(), 0);
        std::vector<int> idxsel(v);
        std::iota(idxsel.begin(), idxsel.end(), 0);
        std::vector<int> pos(n, -1);
        while (true) {
            std::vector<int> perm(idxsel.begin(), idxsel.end());
            do {
                for (int i = 0; i < v; ++i) pos[perm[i]] = w[i];
                bool ok = true;
                std::uint32_t image = 0;
                for (const auto& e : g.edges()) {
                    bool inside = true;
                    for (int u : e)
                        if (pos[u] < 0) { inside = false; break; }
                    if (!inside) continue;
                    std::vector<int> img;
                    for (int u : e) img.push_back(pos[u]);
                    std::sort(img.begin(), img.end());
                    int hidx = h.edge_index(img);
                    if (hidx < 0 || ew_pos[hidx] < 0) { ok = false; break; }
                    image |= 1u << ew_pos[hidx];
                }
                if (ok) ++cnt[image];
                for (int i = 0; i < v; ++i) pos[perm[i]] = -1;
            } while (std::next_permutation(perm.begin(), perm.end()));
            int i = v - 1;
            while (i >= 0 && idxsel[i] == n - v + i) --i;
            if (i < 0) break;
            ++idxsel[i];
            for (int j = i + 1; j < v; ++j) idxsel[j] = idxsel[j - 1] + 1;
        }
        // superset-sum: cnt[F] = number of (X, psi) whose image covers F
        for (int b = 0; b < (int)ew.size(); ++b)
            for (std::uint32_t mask = 0; mask < (1u << ew.size()); ++mask)
                if (!(mask & (1u << b))) cnt[mask] += cnt[mask | (1u << b)];

        for (std::uint32_t fmask = 1; fmask < (1u << ew.size()); ++fmask) {
            // F must cover exactly W
            std::uint32_t covered = 0;
            std::vector<int> f_edges;
            for (int b = 0; b < (int)ew.size(); ++b)
                if (fmask & (1u << b)) {
                    f_edges.push_back(ew[b]);
                    for (int u : h.edge(ew[b])) covered |= 1u << u;
                }
            if (covered != wmask) continue;
            const int c = component_count(h, f_edges);
            unsigned long long bound = sat_mul(sat_pow((unsigned long long)n, (unsigned long long)c),
                                               sat_pow((unsigned long long)g.uniformity() * g.max_degree(),
                                                       (unsigned long long)(v - c)));
            ++sweep.checked;
            unsigned long long count = cnt[fmask];
            if (bound > 0)
                sweep.worst_ratio = std::max(sweep.worst_ratio, (double)count / (double)bound);
            if (count > bound) {
                BoundCheck check;
                check.name = "lemma31";
                check.inputs = {{"n", (double)n}, {"v", (double)v}, {"c", (double)c},
                                {"f_edges", (double)f_edges.size()}};
                check.exact_count = count;
                check.lhs = (double)count;
                check.rhs = (double)bound;
                check.pass = false;
                record_violation(sweep, std::move(check));
            }
        }
    }
    return sweep;
}

// --- lemma32: bounded-component subgraph counts --------------------------------

BoundCheck lemma32_check(const Hypergraph& g, const std::vector<int>& s_edges, int t, int c,
                         std::uint64_t node_budget) {
    if (s_edges.empty()) throw std::invalid_argument("lemma32_check: S must be nonempty");
    if (c < 1 || c > t || t > (int)s_edges.size())
        throw std::invalid_argument("lemma32_check: need 1 <= c <= t <= |S|");
    const int k = g.uniformity();
    unsigned long long count = 0;
    std::uint64_t nodes = 0;
    bool budget_hit = false;

    std::vector<int> idx(t);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<int> chosen(t);
    while (true) {
        if (++nodes > node_budget) { budget_hit = true; break; }
        for (int i = 0; i < t; ++i) chosen[i] = s_edges[idx[i]];
        if (component_count(g, chosen) == c) ++count;
        int i = t - 1;
        while (i >= 0 && idx[i] == (int)s_edges.size() - t + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }

    unsigned long long bound = sat_mul(
        sat_mul(sat_pow(2, (unsigned long long)(k + 1) * t), sat_pow((unsigned long long)g.max_degree(), t)),
        sat_binomial((unsigned long long)k * s_edges.size(), (unsigned long long)c));

    BoundCheck check;
    check.name = "lemma32";
    check.inputs = {{"k", (double)k}, {"t", (double)t}, {"c", (double)c},
                    {"size_s", (double)s_edges.size()}, {"max_degree", (double)g.max_degree()}};
    check.exact_count = count;
    check.lhs = (double)count;
    check.rhs = (double)bound;
    check.log10_lhs = count ? std::log10((double)count) : 0.0;
    check.log10_rhs = bound ? std::log10((double)bound) : 0.0;
    check.pass = count <= bound;
    if (budget_hit) check.note = "budget-exceeded: count is a lower bound";
    return check;
}

SweepResult lemma32_sweep(const Hypergraph& g) {
    const int m = g.edge_count();
    const int n = g.vertex_count();
    SweepResult sweep;
    if (m == 0) return sweep;
    if (m > 24) throw std::invalid_argument("lemma32_sweep: needs e(G) <= 24");
    const int k = g.uniformity();

    // component count of every edge subset
    std::vector<std::uint8_t> comps(1u << m);
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> ids;
        for (std::uint32_t mm = mask; mm; mm &= mm - 1) ids.push_back(__builtin_ctz(mm));
        comps[mask] = (std::uint8_t)component_count(g, ids);
    }

    // bound table: pass thresholds per (|S|, t, c); bound >= 2^63 always passes
    std::vector<unsigned long long> bound((m + 1) * (m + 1) * (n + 1), 0);
    auto bound_at = [&](int ssz, int t, int c) -> unsigned long long& {
        return bound[(ssz * (m + 1) + t) * (n + 1) + c];
    };
    for (int ssz = 1; ssz <= m; ++ssz)
        for (int t = 1; t <= ssz; ++t)
            for (int c = 1; c <= std::min(t, n); ++c)
                bound_at(ssz, t, c) = sat_mul(
                    sat_mul(sat_pow(2, (unsigned long long)(k + 1) * t),
                            sat_pow((unsigned long long)g.max_degree(), t)),
                    sat_binomial((unsigned long long)k * ssz, (unsigned long long)c));

    std::vector<unsigned long long> hist((m + 1) * (n + 1));
    for (std::uint32_t smask = 1; smask < (1u << m); ++smask) {
        const int ssz = __builtin_popcount(smask);
        std::fill(hist.begin(), hist.end(), 0ULL);
        // all nonempty submasks of S
        for (std::uint32_t t = smask; t; t = (t - 1) & smask)
            ++hist[__builtin_popcount(t) * (n + 1) + comps[t]];
        for (int t = 1; t <= ssz; ++t)
            for (int c = 1; c <= std::min(t, n); ++c) {
                unsigned long long count = hist[t * (n + 1) + c];
                if (!count) continue;
                ++sweep.checked;
                unsigned long long b = bound_at(ssz, t, c);
                if (b > 0) sweep.worst_ratio = std::max(sweep.worst_ratio, (double)count / (double)b);
                if (count > b) {
                    BoundCheck check;
                    check.name = "lemma32";
                    check.inputs = {{"size_s", (double)ssz}, {"t", (double)t}, {"c", (double)c}};
                    check.exact_count = count;
                    check.lhs = (double)count;
                    check.rhs = (double)b;
                    check.pass = false;
                    record_violation(sweep, std::move(check));
                }
            }
    }
    return sweep;
}

// --- inequality (2) --------------------------------------------------------------

BoundCheck ineq2_check(long long size_s, long long t, long long c, long long n, int k,
                       const Rational& d, const Rational& alpha, const Rational& eps) {
    if (c < 1 || c > t || size_s < 1)
        throw std::invalid_argument("ineq2_check: need 1 <= c <= t and |S| >= 1");
    const double window_top = eps.to_double() * (double)n / k;
    if ((double)size_s > window_top || (double)t > window_top)
        throw std::invalid_argument("ineq2_check: |S| and t must be at most eps*n/k");
    const double exponent = 9.0 * alpha.to_double() / (10.0 * d.to_double());
    const double small_cap = eps.to_double() * std::pow((double)n, exponent) / k;
    const bool small_regime = (double)size_s <= small_cap && (double)t <= small_cap;

    const double ln10 = std::log(10.0);
    const double log10_lhs = log10_binomial((double)k * size_s, (double)c);
    double log10_rhs;
    if (small_regime) {
        log10_rhs = (9.0 * alpha.to_double() * c / (10.0 * d.to_double())) * std::log10((double)n);
    } else {
        log10_rhs = t * std::log10(2.0) + (alpha.to_double() * c / d.to_double()) * std::log10((double)n);
    }

    BoundCheck check;
    check.name = "ineq2";
    check.inputs = {{"size_s", (double)size_s}, {"t", (double)t}, {"c", (double)c},
                    {"n", (double)n}, {"k", (double)k}, {"d", d.to_double()},
                    {"alpha", alpha.to_double()}, {"eps", eps.to_double()}};
    check.log10_lhs = log10_lhs;
    check.log10_rhs = log10_rhs;
    check.lhs = log10_lhs < 300 ? std::pow(10.0, log10_lhs) : std::numeric_limits<double>::infinity();
    check.rhs = log10_rhs < 300 ? std::pow(10.0, log10_rhs) : std::numeric_limits<double>::infinity();
    check.pass = log10_lhs <= log10_rhs + 1e-9 / ln10;
    const double c_threshold = std::exp(1.0) * k * (double)size_s / std::pow((double)n, alpha.to_double() / d.to_double());
    check.note = std::string(small_regime ? "small-regime" : "large-regime") + ";" +
                 ((double)c >= c_threshold ? "c>=ek|S|/n^(a/d)" : "c<ek|S|/n^(a/d)");
    return check;
}

SweepResult ineq2_cell_sweep(long long n, int k, const Rational& d, const Rational& alpha,
                             const Rational& eps, int samples, std::uint64_t seed) {
    SweepResult sweep;
    const double window_top = eps.to_double() * (double)n / k;
    if (window_top < 1) return sweep;
    SplitMix rng(derive_seed(seed, 0x1e92ULL, (std::uint64_t)n * 1000003ULL + k));
    const double lmax = std::log(window_top);
    for (int i = 0; i < samples; ++i) {
        long long size_s = (long long)std::floor(std::exp(rng.uniform() * lmax));
        long long t = (long long)std::floor(std::exp(rng.uniform() * lmax));
        size_s = std::max<long long>(1, std::min(size_s, (long long)window_top));
        t = std::max<long long>(1, std::min(t, (long long)window_top));
        long long c = 1 + (long long)rng.below((std::uint64_t)t);
        BoundCheck check = ineq2_check(size_s, t, c, n, k, d, alpha, eps);
        ++sweep.checked;
        sweep.worst_ratio = std::max(sweep.worst_ratio, std::pow(10.0, std::min(300.0, check.log10_lhs - check.log10_rhs)));
        if (!check.pass) record_violation(sweep, std::move(check));
    }
    return sweep;
}

// --- success-probability evaluators ----------------------------------------------

SpiroEval spiro_success_bound(SpiroMode mode, double l, double c_const, double q, double v_size,
                              double r_lminus1, double gamma, double k_const) {
    if (l <= 0 || c_const <= 0 || q < 0 || v_size <= 0)
        throw std::invalid_argument("spiro_success_bound: parameters must be positive");
    SpiroEval out;
    out.mode = mode;
    if (mode == SpiroMode::spiro26) {
        out.bound = std::clamp(1.0 - k_const / (c_const * l), 0.0, 1.0);
        out.sample_size = c_const * l * q * v_size;
    } else {
        if (c_const < 8) throw std::invalid_argument("spiro_success_bound: kelly42 requires C >= 8");
        double term1 = 6.0 * l * l * std::pow(c_const / 4.0, -r_lminus1 / 2.0);
        double term2 = 2.0 * std::exp(-l * c_const * q * v_size / 4.0);
        double term3 = 8.0 * gamma / (c_const * l);
        out.bound = std::clamp(1.0 - term1 - term2 - term3, 0.0, 1.0);
        out.sample_size = 2.0 * l * c_const * q * v_size;
    }
    return out;
}

// --- degeneracy-to-deficiency step -------------------------------------------------

SweepResult deficiency_step_check(const Hypergraph& g, const Rational& d, const Rational& alpha) {
    const int m = g.edge_count();
    if (m > 26) throw std::invalid_argument("deficiency_step_check: needs e(G) <= 26");
    SweepResult sweep;
    std::vector<int> ids;
    for (std::uint64_t mask = 1; mask < (1ULL << m); ++mask) {
        ids.clear();
        for (std::uint64_t mm = mask; mm; mm &= mm - 1) ids.push_back(__builtin_ctzll(mm));
        int covered = 0;
        if (component_count(g, ids, &covered) != 1) continue;
        ++sweep.checked;
        const long long t = (long long)ids.size();
        // v >= t/d + 1 + alpha/d  <=>  d*v - t - d - alpha >= 0
        Rational slack = d * Rational(covered) - Rational(t) - d - alpha;
        if (slack.is_negative()) {
            BoundCheck check;
            check.name = "deficiency-step";
            check.inputs = {{"t", (double)t}, {"v", (double)covered},
                            {"d", d.to_double()}, {"alpha", alpha.to_double()}};
            check.lhs = (double)covered;
            check.rhs = (double)t / d.to_double() + 1.0 + alpha.to_double() / d.to_double();
            check.pass = false;
            record_violation(sweep, std::move(check));
        }
    }
    return sweep;
}

}  // namespace spreadlab
