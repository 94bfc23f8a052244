#include "ecc/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <thread>

#include "ecc/closed_forms.hpp"
#include "ecc/errors.hpp"
#include "ecc/families.hpp"
#include "ecc/polynomial.hpp"
#include "ecc/spectral.hpp"

namespace ecc {

namespace {

// Beyer-Hedetniemi successor of a rooted-tree level sequence, applied at
// position p (auto-detected when p < 0). False when the sequence is the
// last one (the star).
bool next_rooted(std::vector<int>& seq, int p) {
    const int n = static_cast<int>(seq.size());
    if (p < 0) {
        p = n - 1;
        while (p >= 0 && seq[p] == 1) --p;
    }
    if (p <= 0) return false;
    int q = p - 1;
    while (seq[q] != seq[p] - 1) --q;
    for (int i = p; i < n; ++i) seq[i] = seq[i - p + q];
    return true;
}

// left: the root's first subtree, shifted one level up; rest: the tree
// with that subtree removed (virtual root at level 0).
void split_layout(const std::vector<int>& seq, std::vector<int>& left, std::vector<int>& rest) {
    const int n = static_cast<int>(seq.size());
    int m = n;
    bool one_seen = false;
    for (int i = 0; i < n; ++i) {
        if (seq[i] == 1) {
            if (one_seen) {
                m = i;
                break;
            }
            one_seen = true;
        }
    }
    left.assign(seq.begin() + 1, seq.begin() + m);
    for (int& v : left) --v;
    rest.clear();
    rest.push_back(0);
    rest.insert(rest.end(), seq.begin() + m, seq.end());
}

// Centering rule: the first subtree must not be higher than the rest,
// and on equal heights it must not be bigger (or lexicographically
// later). Invalid candidates jump straight to the next valid one.
void fix_to_canonical(std::vector<int>& seq) {
    std::vector<int> left, rest;
    split_layout(seq, left, rest);
    const int left_height = *std::max_element(left.begin(), left.end());
    const int rest_height = *std::max_element(rest.begin(), rest.end());
    bool valid = rest_height >= left_height;
    if (valid && rest_height == left_height) {
        if (left.size() > rest.size())
            valid = false;
        else if (left.size() == rest.size() && left > rest)
            valid = false;
    }
    if (valid) return;
    const int p = static_cast<int>(left.size());
    const int at_p = seq[p];
    next_rooted(seq, p);
    if (at_p > 2) {
        split_layout(seq, left, rest);
        const int suffix_len = *std::max_element(left.begin(), left.end()) + 1;
        const int n = static_cast<int>(seq.size());
        for (int i = 0; i < suffix_len; ++i) seq[n - suffix_len + i] = i + 1;
    }
}

}  // namespace

FreeTreeGenerator::FreeTreeGenerator(int n) : n_(n) {
    if (n_ < 1) throw OrderCapExceeded("tree order must be >= 1");
    if (n_ == 1) return;
    for (int i = 0; i <= n_ / 2; ++i) layout_.push_back(i);
    for (int i = 1; i < (n_ + 1) / 2; ++i) layout_.push_back(i);
}

bool FreeTreeGenerator::next(std::vector<int>& level_seq) {
    if (done_) return false;
    if (n_ == 1) {
        done_ = true;
        level_seq = {0};
        return true;
    }
    if (first_) {
        first_ = false;
    } else if (!next_rooted(layout_, -1)) {
        done_ = true;
        return false;
    }
    fix_to_canonical(layout_);
    level_seq = layout_;
    return true;
}

Graph level_sequence_to_tree(const std::vector<int>& level_seq) {
    const int n = static_cast<int>(level_seq.size());
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    std::vector<int> last_at(n, -1);
    last_at[0] = 0;
    for (int i = 1; i < n; ++i) {
        edges.emplace_back(last_at[level_seq[i] - 1], i);
        last_at[level_seq[i]] = i;
    }
    return from_edge_list(edges, n);
}

void free_trees(int n, const std::function<void(const CanonicalTree&)>& visit, int cap) {
    const int effective_cap = std::min(cap, kHardOrderCap);
    if (n < 1 || n > effective_cap)
        throw OrderCapExceeded("order " + std::to_string(n) + " outside 1.." +
                               std::to_string(effective_cap));
    FreeTreeGenerator gen(n);
    std::vector<int> seq;
    while (gen.next(seq)) {
        CanonicalTree t;
        t.tree = level_sequence_to_tree(seq);
        t.code = canonical_code(t.tree);
        visit(t);
    }
}

std::uint64_t count_free_trees(int n, int cap) {
    const int effective_cap = std::min(cap, kHardOrderCap);
    if (n < 1 || n > effective_cap)
        throw OrderCapExceeded("order " + std::to_string(n) + " outside 1.." +
                               std::to_string(effective_cap));
    FreeTreeGenerator gen(n);
    std::vector<int> seq;
    std::uint64_t count = 0;
    while (gen.next(seq)) ++count;
    return count;
}

Statistic parse_statistic(const std::string& name) {
    if (name == "xi1") return Statistic::Xi1;
    if (name == "xi2") return Statistic::Xi2;
    if (name == "energy") return Statistic::Energy;
    throw ParseError("unknown statistic '" + name + "' (expected xi1, xi2 or energy)");
}

std::string statistic_name(Statistic s) {
    switch (s) {
        case Statistic::Xi1: return "xi1";
        case Statistic::Xi2: return "xi2";
        case Statistic::Energy: return "energy";
    }
    return "?";
}

bool is_star(const Graph& g) {
    if (g.n == 1) return true;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == g.n - 1) return true;
    return false;
}

namespace {

double tree_statistic(const Graph& tree, Statistic stat) {
    const auto spectrum = sym_eigenvalues(eccentricity_matrix(tree));
    switch (stat) {
        case Statistic::Xi1: return xi_k(spectrum, 1);
        case Statistic::Xi2: return xi_k(spectrum, 2);
        case Statistic::Energy: return ecc_energy(spectrum);
    }
    return 0.0;
}

struct Evaluated {
    double value;
    std::string code;
    int diameter;
    std::vector<std::pair<int, int>> edges;
};

constexpr double kTieTol = 1e-9;

// Order-independent min reduction: keeps every candidate within kTieTol
// of the running best (a superset of the final tie cluster) plus the
// running minimum of everything discarded.
class MinReducer {
public:
    void add(Evaluated e) {
        if (e.value > best_ + kTieTol) {
            discarded_min_ = std::min(discarded_min_, e.value);
            return;
        }
        if (e.value < best_) best_ = e.value;
        pool_.push_back(std::move(e));
        if (pool_.size() > 64) prune();
    }

    void merge(MinReducer&& other) {
        discarded_min_ = std::min(discarded_min_, other.discarded_min_);
        for (auto& e : other.pool_) add(std::move(e));
    }

    void finish(ExtremalReport& report) {
        prune();
        double second = discarded_min_;
        for (auto& e : pool_) {
            if (e.value <= best_ + kTieTol)
                report.winners.push_back({std::move(e.code), e.value, e.diameter, std::move(e.edges)});
            else
                second = std::min(second, e.value);
        }
        std::sort(report.winners.begin(), report.winners.end(),
                  [](const ExtremalWinner& l, const ExtremalWinner& r) { return l.code < r.code; });
        report.margin = second - best_;
        report.unique = report.winners.size() == 1 && report.margin > kTieTol;
    }

private:
    void prune() {
        std::vector<Evaluated> kept;
        for (auto& e : pool_) {
            if (e.value <= best_ + kTieTol)
                kept.push_back(std::move(e));
            else
                discarded_min_ = std::min(discarded_min_, e.value);
        }
        pool_ = std::move(kept);
    }

    double best_ = std::numeric_limits<double>::infinity();
    double discarded_min_ = std::numeric_limits<double>::infinity();
    std::vector<Evaluated> pool_;
};

bool passes(const Graph& tree, int diameter, const TreeFilter& filter) {
    if (diameter < filter.min_diameter || diameter > filter.max_diameter) return false;
    if (filter.exclude_star && is_star(tree)) return false;
    return true;
}

// Runs visit_batch over every canonical level sequence, fanning batches
// out to a worker pool. The statistic per tree is computed identically
// on every path, so the reduction result does not depend on the worker
// count.
void parallel_over_trees(int n, int jobs,
                         const std::function<void(const std::vector<std::vector<int>>&)>& visit_batch) {
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;

    FreeTreeGenerator gen(n);
    constexpr size_t kBatch = 64;
    std::mutex gen_mutex;
    auto pull_batch = [&](std::vector<std::vector<int>>& batch) {
        std::scoped_lock lock(gen_mutex);
        batch.clear();
        std::vector<int> seq;
        while (batch.size() < kBatch && gen.next(seq)) batch.push_back(seq);
        return !batch.empty();
    };

    auto worker = [&] {
        std::vector<std::vector<int>> batch;
        while (pull_batch(batch)) visit_batch(batch);
    };

    if (jobs == 1) {
        worker();
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
}

}  // namespace

ExtremalReport extremal_search(int n, Statistic statistic, TreeFilter filter, int jobs, int cap) {
    const int effective_cap = std::min(cap, kHardOrderCap);
    if (n < 1 || n > effective_cap)
        throw OrderCapExceeded("order " + std::to_string(n) + " outside 1.." +
                               std::to_string(effective_cap));
    if (statistic == Statistic::Xi2 && n < 2)
        throw InvalidFamilyParameters("xi2 needs at least two vertices");

    ExtremalReport report;
    report.n = n;
    report.statistic = statistic;

    MinReducer reducer;
    std::mutex reduce_mutex;
    std::uint64_t considered = 0;

    parallel_over_trees(n, jobs, [&](const std::vector<std::vector<int>>& batch) {
        MinReducer local;
        std::uint64_t local_considered = 0;
        for (const auto& seq : batch) {
            Graph tree = level_sequence_to_tree(seq);
            const int diameter = double_sweep_diameter(tree);
            if (!passes(tree, diameter, filter)) continue;
            Evaluated e;
            e.value = tree_statistic(tree, statistic);
            e.code = canonical_code(tree);
            e.diameter = diameter;
            e.edges = std::move(tree.edges);
            local.add(std::move(e));
            ++local_considered;
        }
        std::scoped_lock lock(reduce_mutex);
        reducer.merge(std::move(local));
        considered += local_considered;
    });

    report.trees_considered = considered;
    reducer.finish(report);
    return report;
}

std::vector<RankedTree> rank_trees(int n, Statistic statistic, TreeFilter filter, int top_k,
                                   int jobs, int cap) {
    const int effective_cap = std::min(cap, kHardOrderCap);
    if (n < 1 || n > effective_cap)
        throw OrderCapExceeded("order " + std::to_string(n) + " outside 1.." +
                               std::to_string(effective_cap));
    std::vector<RankedTree> all;
    std::mutex merge_mutex;
    parallel_over_trees(n, jobs, [&](const std::vector<std::vector<int>>& batch) {
        std::vector<RankedTree> local;
        for (const auto& seq : batch) {
            Graph tree = level_sequence_to_tree(seq);
            const int diameter = double_sweep_diameter(tree);
            if (!passes(tree, diameter, filter)) continue;
            local.push_back({canonical_code(tree), diameter, tree_statistic(tree, statistic)});
        }
        std::scoped_lock lock(merge_mutex);
        all.insert(all.end(), std::make_move_iterator(local.begin()),
                   std::make_move_iterator(local.end()));
    });
    std::sort(all.begin(), all.end(), [](const RankedTree& l, const RankedTree& r) {
        if (l.value != r.value) return l.value < r.value;
        return l.code < r.code;
    });
    if (top_k >= 0 && static_cast<int>(all.size()) > top_k) all.resize(top_k);
    return all;
}

bool verify_orderings(int n, int d) {
    constexpr double kMargin = 1e-10;
    if (d == 3) {
        if (n < 6) throw InvalidFamilyParameters("xi2 chain needs n >= 6");
        double prev = xi2_diam3(n, 0);
        for (int a = 1; 2 * a <= n - 4; ++a) {
            const double cur = xi2_diam3(n, a);
            if (cur - prev <= kMargin) return false;
            prev = cur;
        }
        return true;
    }
    if (d < 5 || n < d + 2)
        throw InvalidFamilyParameters("orderings need d = 3 or d >= 5 with n >= d+2");
    const int s = n - d - 1;
    if (d % 2 == 1) {
        double prev = largest_root(xi1_odd_quartic(d, s / 2, s - s / 2));
        for (int a = s / 2 - 1; a >= 0; --a) {
            const double cur = largest_root(xi1_odd_quartic(d, a, s - a));
            if (cur - prev <= kMargin) return false;
            prev = cur;
        }
        return true;
    }
    double prev = largest_root(xi1_even_quartic(d, s / 2, 0, s - s / 2));
    for (int b = 1; b <= s; ++b) {
        const int rest = s - b;
        const double cur = largest_root(xi1_even_quartic(d, rest / 2, b, rest - rest / 2));
        if (cur - prev <= kMargin) return false;
        prev = cur;
    }
    return true;
}

int center_branch_count(const Graph& tree) {
    const auto profile = ecc_profile(tree);
    if (profile.diameter % 2 != 0 || profile.diameter < 4)
        throw Error("center branch count applies to even diameter >= 4");
    const auto centers = tree_centers(tree);
    const int u0 = centers[0];
    const int half = profile.diameter / 2;
    int l = 0;
    for (int ui : tree.adj[u0]) {
        // eccentricity of ui inside its component of T - u0
        std::vector<int> dist(tree.n, -1);
        std::vector<int> queue{ui};
        dist[ui] = 0;
        int far = 0;
        for (size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int w : tree.adj[u]) {
                if (w == u0 || dist[w] >= 0) continue;
                dist[w] = dist[u] + 1;
                far = std::max(far, dist[w]);
                queue.push_back(w);
            }
        }
        if (far == half - 1) ++l;
    }
    return l;
}

InertiaCheck verify_inertia(int n, int cap) {
    InertiaCheck result;
    result.n = n;
    free_trees(
        n,
        [&](const CanonicalTree& t) {
            ++result.checked;
            const auto profile = ecc_profile(t.tree);
            Inertia expected;
            if (profile.diameter == 0) {
                expected = {0, 0, 1};
            } else if (profile.diameter == 1) {
                expected = {1, 1, 0};
            } else if (profile.diameter == 2) {
                expected = {1, n - 1, 0};
            } else if (profile.diameter % 2 == 1) {
                expected = {2, 2, n - 4};
            } else {
                const int l = center_branch_count(t.tree);
                expected = {l, l, n - 2 * l};
            }
            const auto actual = inertia_of(sym_eigenvalues(eccentricity_matrix(t.tree)));
            if (!(actual == expected)) {
                ++result.failures;
                if (result.failing_codes.size() < 10) result.failing_codes.push_back(t.code);
            }
        },
        cap);
    return result;
}

std::vector<ClaimResult> verify_prior_results(int n, int jobs, int cap) {
    std::vector<ClaimResult> results;
    auto expect_argmin = [&](const std::string& claim, TreeFilter filter, const Graph& expected,
                             double expected_value) {
        ClaimResult r;
        r.claim = claim;
        const auto report = extremal_search(n, Statistic::Xi1, filter, jobs, cap);
        const std::string want = canonical_code(expected);
        r.margin = report.margin;
        if (report.winners.size() != 1 || report.winners[0].code != want) {
            r.pass = false;
            r.detail = "argmin is not the expected tree";
        } else if (std::fabs(report.winners[0].value - expected_value) > 1e-8) {
            r.pass = false;
            r.detail = "argmin value deviates from the closed form";
        } else {
            r.pass = true;
        }
        results.push_back(std::move(r));
    };

    if (n >= 4) {
        const Graph best = double_star(n, 0, n - 4);
        const double best_value =
            xi_k(sym_eigenvalues(eccentricity_matrix(best)), 1);
        expect_argmin("diam234-argmin-xi1", TreeFilter{false, 2, 4}, best, best_value);

        const Graph global = n <= 15 ? best
                                     : build(odd_caterpillar(n, 5, (n - 6) / 2, n - 6 - (n - 6) / 2));
        expect_argmin("global-argmin-xi1", TreeFilter{}, global, min_gen_bound(n));
    }

    for (int d = 5; d <= n - 1; d += 2) {
        const int s = n - d - 1;
        expect_argmin("min-xi1-diam" + std::to_string(d), TreeFilter{false, d, d},
                      build(odd_caterpillar(n, d, s / 2, s - s / 2)),
                      largest_root(xi1_odd_quartic(d, s / 2, s - s / 2)));
    }
    for (int d = 6; d <= n - 1; d += 2) {
        const int s = n - d - 1;
        expect_argmin("min-xi1-diam" + std::to_string(d), TreeFilter{false, d, d},
                      build(even_caterpillar(n, d, s / 2, 0, s - s / 2)),
                      largest_root(xi1_even_quartic(d, s / 2, 0, s - s / 2)));
    }

    auto family_xi1 = [](const Graph& g) {
        return xi_k(sym_eigenvalues(eccentricity_matrix(g)), 1);
    };
    for (int d = 7; d <= n - 1; d += 2) {
        ClaimResult r;
        r.claim = "diam-reduction-odd-d" + std::to_string(d);
        r.pass = true;
        r.margin = std::numeric_limits<double>::infinity();
        const int s = n - d - 1;
        for (int a = 0; 2 * a <= s; ++a) {
            const int b = s - a;
            const double shallow = family_xi1(build_unchecked(odd_caterpillar(n, d - 2, a + 1, b + 1)));
            const double deep = family_xi1(build_unchecked(odd_caterpillar(n, d, a, b)));
            r.margin = std::min(r.margin, deep - shallow);
            if (deep - shallow <= 0) r.pass = false;
        }
        results.push_back(std::move(r));
    }
    for (int d = 6; d <= n - 1; d += 2) {
        ClaimResult r;
        r.claim = "diam-reduction-even-d" + std::to_string(d);
        r.pass = true;
        r.margin = std::numeric_limits<double>::infinity();
        const int s = n - d - 1;
        for (int a = 0; a <= s; ++a)
            for (int b = 0; a + b <= s; ++b) {
                const int c = s - a - b;
                if (c < a) continue;
                const double shallow =
                    family_xi1(build_unchecked(odd_caterpillar(n, d - 1, a, b + c + 1)));
                const double deep = family_xi1(build_unchecked(even_caterpillar(n, d, a, b, c)));
                r.margin = std::min(r.margin, deep - shallow);
                if (deep - shallow <= 0) r.pass = false;
            }
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace ecc
