// Acceptance suite: runs every headline check at its stated tolerance and
// prints one pass/fail line per criterion. Exits nonzero if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "ecc/closed_forms.hpp"
#include "ecc/enumeration.hpp"
#include "ecc/families.hpp"
#include "ecc/graph.hpp"
#include "ecc/partitions.hpp"
#include "ecc/polynomial.hpp"
#include "ecc/spectral.hpp"

using namespace ecc;

namespace {

int failures = 0;

struct Criterion {
    const char* label;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    void report(bool pass, const std::string& detail) const {
        std::printf("[%s] %s: %s (%.2f s)\n", pass ? "PASS" : "FAIL", label, detail.c_str(),
                    seconds());
        std::fflush(stdout);
        if (!pass) ++failures;
    }
};

std::vector<double> eig(const Graph& g) {
    return sym_eigenvalues(eccentricity_matrix(g)).values;
}

double max_dev(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return 1e300;
    double dev = 0.0;
    for (size_t i = 0; i < a.size(); ++i) dev = std::max(dev, std::fabs(a[i] - b[i]));
    return dev;
}

char buf[256];

std::string fmt(const char* pattern, double a, double b = 0.0) {
    std::snprintf(buf, sizeof(buf), pattern, a, b);
    return buf;
}

// --- criterion 1: closed-form spectra vs the eigensolver -------------------

void criterion_closed_forms() {
    Criterion c{"criterion 1 closed-form spectra"};
    double dev = 0.0;
    for (int n = 3; n <= 50; ++n)
        dev = std::max(dev, max_dev(star_spectrum(n).values(),
                                    eig(build(FamilySpec{FamilyKind::Star, n}))));
    for (int n = 4; n <= 30; ++n)
        for (int a = 0; 2 * a <= n - 4; ++a)
            dev = std::max(dev, max_dev(double_star_spectrum(n, a, n - 4 - a).values(),
                                        eig(double_star(n, a, n - 4 - a))));
    for (int n = 6; n <= 30; ++n)
        for (int a = 0; 2 * a <= n - 6; ++a)
            dev = std::max(dev, max_dev(t5_spectrum(n, a, n - 6 - a).values(),
                                        eig(build(odd_caterpillar(n, 5, a, n - 6 - a)))));
    for (int n = 9; n <= 30; ++n)
        for (int a = 1; 2 * a <= n - 7; ++a)
            dev = std::max(dev, max_dev(t6_aba_spectrum(n, a, n - 7 - 2 * a).values(),
                                        eig(build(even_caterpillar(n, 6, a, n - 7 - 2 * a, a)))));
    for (int n = 8; n <= 30; ++n)
        for (int a = 0; 2 * a <= n - 8; ++a)
            dev = std::max(dev, max_dev(t7_spectrum(n, a, n - 8 - a).values(),
                                        eig(build(odd_caterpillar(n, 7, a, n - 8 - a)))));
    const bool pass = dev <= 1e-8 && c.seconds() < 30.0;
    c.report(pass, fmt("max deviation %.3e, budget 30 s", dev));
}

// --- criterion 2: inertia of every free tree, 4 <= n <= 12 -----------------

void criterion_inertia() {
    Criterion c{"criterion 2 inertia rules"};
    std::uint64_t trees = 0, bad = 0;
    for (int n = 4; n <= 12; ++n) {
        const auto r = verify_inertia(n);
        trees += r.checked;
        bad += r.failures;
    }
    const bool pass = bad == 0 && c.seconds() < 60.0;
    c.report(pass, std::to_string(trees) + " trees, " + std::to_string(bad) +
                       " mismatches, budget 60 s");
}

// --- criterion 3: exhaustive minimum of xi2 over non-star trees ------------

void criterion_xi2_min() {
    Criterion c{"criterion 3 xi2 minimum"};
    bool pass = true;
    double worst_margin = 1e300, worst_dev = 0.0;
    for (int n = 5; n <= 12; ++n) {
        const auto report = extremal_search(n, Statistic::Xi2, TreeFilter{true, 0, 1 << 30});
        const double formula = xi2_diam3(n, 0);
        const bool ok = report.unique && report.margin > 1e-6 && report.winners.size() == 1 &&
                        report.winners[0].code == canonical_code(double_star(n, 0, n - 4)) &&
                        std::fabs(report.winners[0].value - formula) <= 1e-9;
        if (!report.winners.empty())
            worst_dev = std::max(worst_dev, std::fabs(report.winners[0].value - formula));
        worst_margin = std::min(worst_margin, report.margin);
        pass = pass && ok;
    }
    c.report(pass, fmt("min margin %.3e, max formula deviation %.3e", worst_margin, worst_dev));
}

// --- criterion 4: exhaustive minimum of the energy --------------------------

void criterion_energy_min() {
    Criterion c{"criterion 4 energy minimum"};
    bool pass = true;
    for (int n = 2; n <= 4; ++n) {
        const auto report = extremal_search(n, Statistic::Energy);
        pass = pass && report.winners.size() == 1 &&
               report.winners[0].code == canonical_code(build(FamilySpec{FamilyKind::Star, n}));
        if (n >= 3) pass = pass && report.unique;  // n=2 has a single tree, margin is vacuous
    }
    double worst_dev = 0.0;
    for (int n = 5; n <= 12; ++n) {
        const auto report = extremal_search(n, Statistic::Energy);
        const bool ok = report.unique && report.winners.size() == 1 &&
                        report.winners[0].code == canonical_code(double_star(n, 0, n - 4)) &&
                        std::fabs(report.winners[0].value - energy_T_n3(n)) <= 1e-9;
        if (!report.winners.empty())
            worst_dev = std::max(worst_dev, std::fabs(report.winners[0].value - energy_T_n3(n)));
        pass = pass && ok;
    }
    c.report(pass, fmt("max formula deviation %.3e", worst_dev));
}

// --- criterion 5: energy inequalities of the four families ------------------

void criterion_energy_inequalities() {
    Criterion c{"criterion 5 energy inequalities"};
    bool pass = true;
    double min_gap = 1e300;
    auto take = [&](double family_energy, int n) {
        const double gap = family_energy - energy_T_n3(n);
        min_gap = std::min(min_gap, gap);
        if (gap <= 0.0) pass = false;
    };
    for (int n = 8; n <= 40; ++n)
        for (int a = 0; 2 * a <= n - 6; ++a) take(t5_energy(n, a, n - 6 - a), n);
    for (int n = 9; n <= 40; ++n)
        for (int a = 1; 2 * a <= n - 7; ++a) take(t6_aba_energy(n, a, n - 7 - 2 * a), n);
    for (int n = 8; n <= 40; ++n)
        for (int a = 0; 2 * a <= n - 8; ++a) {
            const int b = n - 8 - 2 * a;
            take(t6_ab_a1_energy(n, a, b), n);
            if (!t6_ab_a1_brackets(n, a, b).holds()) pass = false;
        }
    for (int n = 10; n <= 40; ++n)
        for (int a = 0; 2 * a <= n - 8; ++a) take(t7_energy(n, a, n - 8 - a), n);
    c.report(pass, fmt("smallest energy gap %.4f, all bracket certificates checked", min_gap));
}

// --- criterion 6: quotient machinery over the four partitions ---------------

void criterion_quotients() {
    Criterion c{"criterion 6 quotient machinery"};
    bool pass = true;
    auto run = [&](const FamilySpec& spec, const IntPolynomial& expected_factor) {
        const IntSymMatrix m = eccentricity_matrix(build(spec));
        const auto pi = canonical_partition(spec);
        if (!is_equitable(m, pi)) pass = false;
        const QuotientMatrix q = quotient(m, pi);
        if (!spectrum_contained(q, m)) pass = false;
        const auto cp = char_poly_exact(q);
        if (!(cp.poly.shifted_down(cp.poly.trailing_zero_coeffs()) == expected_factor)) pass = false;
    };
    for (int n = 6; n <= 16; ++n)
        for (int a = 0; 2 * a <= n - 6; ++a) {
            run(odd_caterpillar(n, 5, a, n - 6 - a), xi1_odd_quartic(5, a, n - 6 - a));
            // the x^2 coefficient, exactly
            const auto cp = char_poly_exact(quotient(
                eccentricity_matrix(build(odd_caterpillar(n, 5, a, n - 6 - a))),
                canonical_partition(odd_caterpillar(n, 5, a, n - 6 - a))));
            const auto quartic = cp.poly.shifted_down(cp.poly.trailing_zero_coeffs());
            if (!(quartic.coeff(2) == -(16 * (a + (n - 6 - a)) + 75))) pass = false;
        }
    for (int n = 9; n <= 16; ++n)
        for (int a = 1; 2 * a <= n - 7; ++a)
            run(even_caterpillar(n, 6, a, n - 7 - 2 * a, a),
                xi1_even_quartic(6, a, n - 7 - 2 * a, a));
    for (int n = 8; n <= 16; ++n)
        for (int a = 0; 2 * a <= n - 8; ++a)
            run(even_caterpillar(n, 6, a, n - 8 - 2 * a, a + 1),
                t6_ab_a1_polynomial(n, a, n - 8 - 2 * a));
    for (int n = 10; n <= 16; ++n)
        for (int a = 0; 2 * a <= n - 8; ++a)
            run(odd_caterpillar(n, 7, a, n - 8 - a), xi1_odd_quartic(7, a, n - 8 - a));
    c.report(pass, "equitable + containment + exact quartic factors over n <= 16");
}

// --- criterion 7: bound grids ------------------------------------------------

void criterion_bounds() {
    Criterion c{"criterion 7 bound grids"};
    bool pass = true;
    for (int n = 4; n <= 10000; ++n)
        if (!xi2_sqrt2_bound(n)) pass = false;
    for (int n = 5; n <= 10000; ++n) {
        auto [lo, hi] = xi1_bounds_T_n3(n);
        const double xi1 = double_star_spectrum(n, 0, n - 4).values()[0];
        if (!(lo < xi1 && xi1 < hi)) pass = false;
    }
    for (int d = 4; d <= 1000; ++d)
        if (!(xi2_floor_d_ge_4(d) > std::sqrt(2.0))) pass = false;
    pass = pass && c.seconds() < 5.0;
    c.report(pass, "xi2 < sqrt2 (n <= 1e4), xi1 sandwich (n <= 1e4), corner > sqrt2 (d <= 1e3)");
}

// --- criterion 8: strict orderings -------------------------------------------

void criterion_orderings() {
    Criterion c{"criterion 8 orderings"};
    bool pass = true;
    for (int n = 6; n <= 20; ++n)
        if (!verify_orderings(n, 3)) pass = false;
    for (int d : {5, 6, 7})
        for (int n = d + 2; n <= 20; ++n)
            if (!verify_orderings(n, d)) pass = false;
    c.report(pass, "xi2 chain (d=3) and xi1 chains (d=5,6,7) strict at margin 1e-10");
}

// --- criterion 9: typo adjudication ------------------------------------------

void criterion_typos() {
    Criterion c{"criterion 9 misprint adjudication"};
    const auto verdicts = adjudicate_typos();
    bool pass = verdicts.size() == 3;
    std::string detail;
    for (const auto& v : verdicts) {
        pass = pass && v.decisive && v.instances >= 5 && v.corrected_max_dev <= 1e-8;
        if (!detail.empty()) detail += ", ";
        detail += v.id + "->" + v.winner;
    }
    c.report(pass, detail);
}

// --- criterion 10: free-tree counts vs the Pruefer oracle --------------------

// Lean labeled-tree sweep: decodes every Pruefer sequence and dedupes by
// canonical code. Split across threads; the per-order code sets stay tiny.
std::set<std::string> prufer_code_set(int n, int jobs) {
    std::uint64_t total = 1;
    for (int k = 0; k < n - 2; ++k) total *= n;
    std::mutex merge_mutex;
    std::set<std::string> codes;
    auto worker = [&](std::uint64_t lo, std::uint64_t hi) {
        std::set<std::string> local;
        std::vector<int> seq(std::max(0, n - 2));
        std::vector<int> degree(n);
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            std::uint64_t x = idx;
            for (int k = 0; k < n - 2; ++k) {
                seq[k] = static_cast<int>(x % n);
                x /= n;
            }
            // linear Pruefer decode; the result is always a labeled tree
            Graph g;
            g.n = n;
            g.adj.assign(n, {});
            std::fill(degree.begin(), degree.end(), 1);
            for (int v : seq) ++degree[v];
            int ptr = 0;
            while (degree[ptr] != 1) ++ptr;
            int leaf = ptr;
            auto add_edge = [&](int u, int v) {
                g.edges.emplace_back(std::min(u, v), std::max(u, v));
                g.adj[u].push_back(v);
                g.adj[v].push_back(u);
            };
            for (int v : seq) {
                add_edge(leaf, v);
                if (--degree[v] == 1 && v < ptr) {
                    leaf = v;
                } else {
                    ++ptr;
                    while (degree[ptr] != 1) ++ptr;
                    leaf = ptr;
                }
            }
            add_edge(leaf, n - 1);
            local.insert(canonical_code(g));
        }
        std::scoped_lock lock(merge_mutex);
        codes.merge(local);
    };
    if (n <= 4 || jobs <= 1) {
        worker(0, total);
        return codes;
    }
    std::vector<std::thread> threads;
    const std::uint64_t chunk = (total + jobs - 1) / jobs;
    for (int t = 0; t < jobs; ++t)
        threads.emplace_back(worker, t * chunk, std::min<std::uint64_t>(total, (t + 1) * chunk));
    for (auto& t : threads) t.join();
    return codes;
}

void criterion_counts() {
    Criterion c{"criterion 10 free-tree counts"};
    const std::uint64_t expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301};
    bool pass = true;
    for (int n = 1; n <= 13; ++n)
        if (count_free_trees(n) != expected[n - 1]) pass = false;
    const int jobs = std::max(1u, std::thread::hardware_concurrency());
    for (int n = 2; n <= 9; ++n) {
        std::set<std::string> generated;
        free_trees(n, [&](const CanonicalTree& t) { generated.insert(t.code); });
        if (generated != prufer_code_set(n, jobs)) pass = false;
    }
    pass = pass && c.seconds() < 10.0;
    c.report(pass, "n=1..13 counts, Pruefer cross-validation n <= 9, budget 10 s");
}

}  // namespace

int main() {
    criterion_closed_forms();
    criterion_inertia();
    criterion_xi2_min();
    criterion_energy_min();
    criterion_energy_inequalities();
    criterion_quotients();
    criterion_bounds();
    criterion_orderings();
    criterion_typos();
    criterion_counts();
    if (failures) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all 10 acceptance criteria passed\n");
    return 0;
}
