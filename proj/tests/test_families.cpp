#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ecc/errors.hpp"
#include "ecc/families.hpp"
#include "ecc/graph.hpp"

using namespace ecc;

TEST_CASE("star and degenerate caterpillar") {
    const Graph star = build(FamilySpec{FamilyKind::Star, 5});
    CHECK(star.n == 5);
    CHECK(star.degree(0) == 4);
    for (int leaf = 1; leaf < 5; ++leaf) CHECK(star.degree(leaf) == 1);

    const Graph p4 = build(odd_caterpillar(4, 3, 0, 0));
    const Graph path = build(FamilySpec{FamilyKind::Path, 4});
    CHECK(p4.edges == path.edges);
}

TEST_CASE("odd caterpillar T_{8,5}^{1,1}") {
    const Graph g = build(odd_caterpillar(8, 5, 1, 1));
    CHECK(g.n == 8);
    CHECK(g.is_tree());
    CHECK(ecc_profile(g).diameter == 5);
    int degree3 = 0;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == 3) ++degree3;
    CHECK(degree3 == 2);
    // pendants sit on the two middle path vertices, labeled after the path
    CHECK(g.degree(2) == 3);
    CHECK(g.degree(3) == 3);
    CHECK(g.degree(6) == 1);
    CHECK(g.degree(7) == 1);
}

TEST_CASE("double star") {
    const Graph t = double_star(6, 0, 2);
    CHECK(t.n == 6);
    CHECK(ecc_profile(t).diameter == 3);

    const Graph p4 = double_star(4, 0, 0);
    CHECK(p4.edges == build(FamilySpec{FamilyKind::Path, 4}).edges);

    CHECK_THROWS_AS(double_star(5, 1, 0), InvalidFamilyParameters);  // b >= a violated
    CHECK_THROWS_AS(double_star(6, 1, 2), InvalidFamilyParameters);  // a+b != n-4
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(build(odd_caterpillar(8, 4, 1, 2)), InvalidFamilyParameters);   // even d
    CHECK_THROWS_AS(build(even_caterpillar(8, 5, 1, 0, 1)), InvalidFamilyParameters);
    CHECK_THROWS_AS(build(even_caterpillar(9, 6, 1, 0, 0)), InvalidFamilyParameters);  // c < a
    CHECK_THROWS_AS(build(FamilySpec{FamilyKind::Star, 1}), InvalidFamilyParameters);
    CHECK_NOTHROW(build_unchecked(odd_caterpillar(8, 5, 2, 0)));  // mirrored params allowed
}

TEST_CASE("family grid: order, tree-ness, diameter and determinism") {
    for (int d = 3; d <= 9; ++d) {
        for (int n = d + 1; n <= 24; ++n) {
            const int pendants = n - d - 1;
            if (d % 2 == 1) {
                for (int a = 0; 2 * a <= pendants; ++a) {
                    const Graph g = build(odd_caterpillar(n, d, a, pendants - a));
                    CHECK(g.n == n);
                    CHECK(g.is_tree());
                    CHECK(ecc_profile(g).diameter == d);
                    const Graph again = build(odd_caterpillar(n, d, a, pendants - a));
                    CHECK(g.edges == again.edges);
                }
            } else if (d >= 4) {
                for (int a = 0; a <= pendants; ++a)
                    for (int c = a; a + c <= pendants; ++c) {
                        const Graph g = build(even_caterpillar(n, d, a, pendants - a - c, c));
                        CHECK(g.n == n);
                        CHECK(g.is_tree());
                        CHECK(ecc_profile(g).diameter == d);
                    }
            }
        }
    }
}

TEST_CASE("caterpillar with no pendants equals the path") {
    for (int d = 3; d <= 9; d += 2)
        CHECK(build(odd_caterpillar(d + 1, d, 0, 0)).edges ==
              build(FamilySpec{FamilyKind::Path, d + 1}).edges);
    for (int d = 4; d <= 8; d += 2)
        CHECK(build(even_caterpillar(d + 1, d, 0, 0, 0)).edges ==
              build(FamilySpec{FamilyKind::Path, d + 1}).edges);
}

TEST_CASE("family string parsing") {
    const FamilySpec star = parse_family("star:n=5");
    CHECK(star.kind == FamilyKind::Star);
    CHECK(star.n == 5);

    const FamilySpec odd = parse_family("odd:n=8,d=5,a=1,b=1");
    CHECK(odd.kind == FamilyKind::OddCaterpillar);
    CHECK(odd.n == 8);
    CHECK(odd.d == 5);
    CHECK(odd.a == 1);
    CHECK(odd.b == 1);
    CHECK(family_to_string(odd) == "odd:n=8,d=5,a=1,b=1");

    const FamilySpec even = parse_family("even:n=9,d=6,a=1,b=0,c=1");
    CHECK(even.kind == FamilyKind::EvenCaterpillar);
    CHECK(even.c == 1);

    CHECK(parse_family("path:n=7").kind == FamilyKind::Path);

    CHECK_THROWS_AS(parse_family("odd:n=8,d=5,a=1"), ParseError);        // missing b
    CHECK_THROWS_AS(parse_family("odd:n=8,d=5,a=1,b=1,z=2"), ParseError);
    CHECK_THROWS_AS(parse_family("ring:n=8"), ParseError);
    CHECK_THROWS_AS(parse_family("star:n=abc"), ParseError);
}
