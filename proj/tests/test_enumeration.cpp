#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "ecc/closed_forms.hpp"
#include "ecc/enumeration.hpp"
#include "ecc/errors.hpp"
#include "ecc/families.hpp"
#include "ecc/graph.hpp"
#include "ecc/spectral.hpp"
#include "helpers.hpp"

using namespace ecc;
using ecc::testing::near;
using ecc::testing::prufer_decode;
using ecc::testing::random_tree;

namespace {

// Brute-force isomorphism for tiny trees: try every vertex bijection.
bool isomorphic_brute(const Graph& g, const Graph& h) {
    if (g.n != h.n || g.edges.size() != h.edges.size()) return false;
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::set<std::pair<int, int>> target(h.edges.begin(), h.edges.end());
    do {
        bool match = true;
        for (auto [u, v] : g.edges) {
            auto e = std::minmax(perm[u], perm[v]);
            if (!target.count({e.first, e.second})) {
                match = false;
                break;
            }
        }
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges) edges.emplace_back(perm[u], perm[v]);
    return from_edge_list(edges, g.n);
}

}  // namespace

TEST_CASE("tree centers") {
    CHECK(tree_centers(build(FamilySpec{FamilyKind::Path, 2})) == std::vector<int>{0, 1});
    CHECK(tree_centers(build(FamilySpec{FamilyKind::Path, 5})) == std::vector<int>{2});
    CHECK(tree_centers(build(FamilySpec{FamilyKind::Path, 4})) == std::vector<int>{1, 2});
    CHECK(tree_centers(build(FamilySpec{FamilyKind::Star, 7})) == std::vector<int>{0});
}

TEST_CASE("canonical codes of tiny trees") {
    CHECK(canonical_code(build(FamilySpec{FamilyKind::Path, 2})) == "E()()");
    CHECK(canonical_code(build(FamilySpec{FamilyKind::Path, 3})) == "C(()())");
    CHECK(canonical_code(build(FamilySpec{FamilyKind::Path, 4})) == "E(())(())");
}

TEST_CASE("canonical code is invariant under relabeling") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + trial % 12;
        const Graph t = random_tree(n, rng);
        const std::string code = canonical_code(t);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_code(relabel(t, perm)) == code);
    }
}

TEST_CASE("code equality decides isomorphism on all pairs up to n = 6") {
    for (int n = 2; n <= 6; ++n) {
        std::vector<CanonicalTree> trees;
        free_trees(n, [&](const CanonicalTree& t) { trees.push_back(t); });
        for (size_t i = 0; i < trees.size(); ++i)
            for (size_t j = i + 1; j < trees.size(); ++j) {
                CHECK(trees[i].code != trees[j].code);
                CHECK_FALSE(isomorphic_brute(trees[i].tree, trees[j].tree));
            }
    }
}

TEST_CASE("free tree counts match the known sequence") {
    const std::uint64_t expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301};
    for (int n = 1; n <= 13; ++n) CHECK(count_free_trees(n) == expected[n - 1]);
}

TEST_CASE("n = 4 yields exactly the path and the star") {
    std::vector<CanonicalTree> trees;
    free_trees(4, [&](const CanonicalTree& t) { trees.push_back(t); });
    REQUIRE(trees.size() == 2);
    std::set<std::string> codes{trees[0].code, trees[1].code};
    CHECK(codes.count(canonical_code(build(FamilySpec{FamilyKind::Path, 4}))));
    CHECK(codes.count(canonical_code(build(FamilySpec{FamilyKind::Star, 4}))));
}

TEST_CASE("generator agrees with the Pruefer-dedup oracle up to n = 8") {
    for (int n = 2; n <= 8; ++n) {
        std::set<std::string> generated;
        free_trees(n, [&](const CanonicalTree& t) {
            CHECK(t.tree.n == n);
            CHECK(t.tree.is_tree());
            CHECK(generated.insert(t.code).second);  // no duplicates
        });

        std::set<std::string> oracle;
        std::vector<int> seq(std::max(0, n - 2), 0);
        std::uint64_t total = 1;
        for (int k = 0; k < n - 2; ++k) total *= n;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            std::uint64_t x = idx;
            for (int k = 0; k < n - 2; ++k) {
                seq[k] = static_cast<int>(x % n);
                x /= n;
            }
            oracle.insert(canonical_code(prufer_decode(seq)));
        }
        CHECK(generated == oracle);
    }
}

TEST_CASE("all 11 trees on 7 vertices have distinct codes") {
    std::set<std::string> codes;
    free_trees(7, [&](const CanonicalTree& t) { codes.insert(t.code); });
    CHECK(codes.size() == 11);
}

TEST_CASE("order cap") {
    CHECK_THROWS_AS(free_trees(17, [](const CanonicalTree&) {}), OrderCapExceeded);
    CHECK_THROWS_AS(free_trees(19, [](const CanonicalTree&) {}, 19), OrderCapExceeded);
    CHECK_THROWS_AS(count_free_trees(0), OrderCapExceeded);
    CHECK_NOTHROW(count_free_trees(14, 18));  // above default, below hard cap
}

TEST_CASE("extremal search: minimum xi2 without the star") {
    const auto report = extremal_search(8, Statistic::Xi2, TreeFilter{true, 0, 1 << 20});
    REQUIRE(report.winners.size() == 1);
    CHECK(report.unique);
    CHECK(report.winners[0].code == canonical_code(double_star(8, 0, 4)));
    CHECK(near(report.winners[0].value, xi2_diam3(8, 0), 1e-9));
    CHECK(report.margin > 1e-6);
    CHECK(report.trees_considered == 22);  // 23 trees minus the star
}

TEST_CASE("extremal search: minimum energy") {
    const auto e8 = extremal_search(8, Statistic::Energy);
    REQUIRE(e8.winners.size() == 1);
    CHECK(e8.unique);
    CHECK(e8.winners[0].code == canonical_code(double_star(8, 0, 4)));
    CHECK(near(e8.winners[0].value, energy_T_n3(8), 1e-9));

    const auto e4 = extremal_search(4, Statistic::Energy);
    REQUIRE(e4.winners.size() == 1);
    CHECK(e4.winners[0].code == canonical_code(build(FamilySpec{FamilyKind::Star, 4})));
}

TEST_CASE("search reports are identical for any worker count") {
    for (Statistic stat : {Statistic::Xi1, Statistic::Xi2, Statistic::Energy}) {
        const auto serial = extremal_search(9, stat, {}, 1);
        const auto parallel = extremal_search(9, stat, {}, 4);
        REQUIRE(serial.winners.size() == parallel.winners.size());
        for (size_t i = 0; i < serial.winners.size(); ++i) {
            CHECK(serial.winners[i].code == parallel.winners[i].code);
            CHECK(serial.winners[i].value == parallel.winners[i].value);  // bit-for-bit
        }
        CHECK(serial.margin == parallel.margin);
        CHECK(serial.trees_considered == parallel.trees_considered);
    }
}

TEST_CASE("ranked enumeration") {
    const auto top = rank_trees(4, Statistic::Energy, {}, 2);
    REQUIRE(top.size() == 2);
    CHECK(top[0].code == canonical_code(build(FamilySpec{FamilyKind::Star, 4})));
    CHECK(top[1].code == canonical_code(build(FamilySpec{FamilyKind::Path, 4})));
    CHECK(near(top[0].value, 2.0 * (2.0 + std::sqrt(7.0)), 1e-9));
    CHECK(near(top[1].value, 10.0, 1e-9));
    CHECK(top[0].diameter == 2);
    CHECK(top[1].diameter == 3);

    const auto xi2_top = rank_trees(7, Statistic::Xi2, TreeFilter{true, 0, 1 << 20}, 1);
    REQUIRE(xi2_top.size() == 1);
    CHECK(xi2_top[0].code == canonical_code(double_star(7, 0, 3)));
}

TEST_CASE("orderings of the families") {
    CHECK(verify_orderings(10, 3));
    CHECK(verify_orderings(14, 5));
    CHECK(verify_orderings(15, 6));
    CHECK(verify_orderings(16, 6));
    CHECK(verify_orderings(18, 7));
    CHECK_THROWS_AS(verify_orderings(10, 4), InvalidFamilyParameters);
    CHECK_THROWS_AS(verify_orderings(5, 3), InvalidFamilyParameters);
}

TEST_CASE("prior extremal results at n = 10") {
    const auto claims = verify_prior_results(10);
    CHECK(claims.size() >= 4);
    for (const auto& c : claims) {
        CAPTURE(c.claim);
        CHECK(c.pass);
    }
}

TEST_CASE("prior extremal results at n = 12 include the d=7 reduction grid") {
    const auto claims = verify_prior_results(12);
    bool saw_d7 = false;
    for (const auto& c : claims) {
        CAPTURE(c.claim);
        CHECK(c.pass);
        if (c.claim == "diam-reduction-odd-d7") {
            saw_d7 = true;
            CHECK(c.margin > 0.0);
        }
    }
    CHECK(saw_d7);
}

TEST_CASE("center branch count and inertia checks") {
    CHECK(center_branch_count(build(FamilySpec{FamilyKind::Path, 5})) == 2);
    const auto p5 =
        inertia_of(sym_eigenvalues(eccentricity_matrix(build(FamilySpec{FamilyKind::Path, 5}))));
    CHECK(p5 == Inertia{2, 2, 1});

    for (int n = 4; n <= 9; ++n) {
        const auto check = verify_inertia(n);
        CHECK(check.failures == 0);
        if (n == 8) CHECK(check.checked == 23);
    }
}
