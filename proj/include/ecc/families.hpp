#pragma once

#include <string>
#include <string_view>

#include "ecc/graph.hpp"

namespace ecc {

enum class FamilyKind { Star, Path, OddCaterpillar, EvenCaterpillar };

/// Parameters for the tree families used throughout: stars, paths and the
/// caterpillars T_{n,d}^{a,b} (odd d, pendants at the two middle path
/// vertices) and T_{n,d}^{a,b,c} (even d, pendants at the three middle
/// path vertices).
struct FamilySpec {
    FamilyKind kind = FamilyKind::Path;
    int n = 0;
    int d = 0;
    int a = 0;
    int b = 0;
    int c = 0;
};

/// Canonical labeling: path vertices v0..vd get labels 0..d, then the
/// pendant groups in host order (a, then b, then c).
Graph build(const FamilySpec& spec);

/// Same labeling, but skips the b >= a (and c >= a) ordering conventions;
/// mirrored parameter tuples build the mirrored (isomorphic) tree.
Graph build_unchecked(const FamilySpec& spec);

/// T_{n,3}^{a,b}: two adjacent centers with a and b pendants.
Graph double_star(int n, int a, int b);

FamilySpec odd_caterpillar(int n, int d, int a, int b);
FamilySpec even_caterpillar(int n, int d, int a, int b, int c);

/// Parses "star:n=5", "path:n=7", "odd:n=8,d=5,a=1,b=1",
/// "even:n=9,d=6,a=1,b=0,c=1".
FamilySpec parse_family(std::string_view text);

std::string family_to_string(const FamilySpec& spec);

}  // namespace ecc
