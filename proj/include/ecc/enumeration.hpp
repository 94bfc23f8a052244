#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "ecc/canonical.hpp"
#include "ecc/graph.hpp"

namespace ecc {

inline constexpr int kDefaultOrderCap = 16;
inline constexpr int kHardOrderCap = 18;

struct CanonicalTree {
    Graph tree;
    std::string code;
};

/// Streams the level sequences of all non-isomorphic free trees on n
/// vertices, one representative per class, via the level-sequence
/// successor algorithm (rooted-tree successor plus a centering fix that
/// jumps over non-canonical representatives).
class FreeTreeGenerator {
public:
    explicit FreeTreeGenerator(int n);
    // Fills the next canonical level sequence; false when exhausted.
    bool next(std::vector<int>& level_seq);

private:
    int n_;
    bool first_ = true;
    bool done_ = false;
    std::vector<int> layout_;
};

Graph level_sequence_to_tree(const std::vector<int>& level_seq);

void free_trees(int n, const std::function<void(const CanonicalTree&)>& visit,
                int cap = kDefaultOrderCap);

std::uint64_t count_free_trees(int n, int cap = kHardOrderCap);

enum class Statistic { Xi1, Xi2, Energy };

Statistic parse_statistic(const std::string& name);  // "xi1" | "xi2" | "energy"
std::string statistic_name(Statistic s);

struct TreeFilter {
    bool exclude_star = false;
    int min_diameter = 0;
    int max_diameter = std::numeric_limits<int>::max();
};

struct ExtremalWinner {
    std::string code;
    double value = 0.0;
    int diameter = 0;
    std::vector<std::pair<int, int>> edges;
};

/// Result of an exhaustive minimization over all free trees of one order:
/// the winner(s), the gap to the first strictly larger value, and a
/// uniqueness verdict (single winner with margin above 1e-9).
struct ExtremalReport {
    int n = 0;
    Statistic statistic = Statistic::Energy;
    std::vector<ExtremalWinner> winners;  // sorted by code
    double margin = 0.0;
    bool unique = false;
    std::uint64_t trees_considered = 0;
};

ExtremalReport extremal_search(int n, Statistic statistic, TreeFilter filter = {}, int jobs = 0,
                               int cap = kDefaultOrderCap);

struct RankedTree {
    std::string code;
    int diameter = 0;
    double value = 0.0;
};

// Top-k trees by ascending statistic (ties broken by code).
std::vector<RankedTree> rank_trees(int n, Statistic statistic, TreeFilter filter, int top_k,
                                   int jobs = 0, int cap = kDefaultOrderCap);

// Strict xi2 chain for diameter 3, or strict xi1 chains (via quartic
// largest roots) for d >= 5; adjacent margins must exceed 1e-10.
bool verify_orderings(int n, int d);

struct ClaimResult {
    std::string claim;
    bool pass = false;
    double margin = 0.0;
    std::string detail;
};

// Diameter-restricted and global spectral-radius argmins plus the
// diameter-reduction inequalities, checked exhaustively at order n.
std::vector<ClaimResult> verify_prior_results(int n, int jobs = 0, int cap = kDefaultOrderCap);

struct InertiaCheck {
    int n = 0;
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::vector<std::string> failing_codes;  // first few
};

// Inertia of every free tree on n vertices against the odd/even diameter
// rules ((2,2,n-4), resp. (l,l,n-2l) from the center decomposition;
// diameter-2 stars against (1,n-1,0)).
InertiaCheck verify_inertia(int n, int cap = kDefaultOrderCap);

// Expected inertia-defining count l for an even-diameter tree.
int center_branch_count(const Graph& tree);

bool is_star(const Graph& g);

}  // namespace ecc
