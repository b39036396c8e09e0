#ifndef PIN_STEINER_HPP
#define PIN_STEINER_HPP

#include <utility>
#include <vector>

#include "pin/caps.hpp"
#include "pin/multigraph.hpp"
#include "pin/rational.hpp"

namespace pin {

// A tree subgraph of the support simple graph whose vertex set contains A.
struct SteinerTree {
    std::vector<std::pair<int, int>> edges; // (i < j), lexicographic
    TerminalSet vertices;

    bool operator==(const SteinerTree&) const = default;
};

// Edge-disjoint packing in the multigraph: usage counts against the
// multiplicities e_ij. Only trees with positive usage are listed.
struct IntegerPacking {
    std::vector<SteinerTree> trees;
    std::vector<long long> usage; // aligned with trees
};

// Rational tree weights indexed by the full enumerated tree list.
struct FractionalPacking {
    std::vector<SteinerTree> trees;
    std::vector<Rational> weights; // aligned with trees
};

struct MuResult {
    long long value = 0;
    IntegerPacking packing;
};

struct MuFResult {
    Rational value;
    FractionalPacking packing;
};

// All distinct Steiner trees for A of the support simple graph, grouped by
// vertex set (by size then lexicographic), trees within a vertex set in
// lexicographic edge order. Throws CapExceededError past the tree cap.
std::vector<SteinerTree> enumerate_steiner_trees(const Multigraph& g, const TerminalSet& a,
                                                 const Caps& caps = {});

// Exact maximum number of edge-disjoint Steiner trees, by depth-first branch
// and bound over tree usage counts with the fractional optimum as bound.
MuResult mu(const Multigraph& g, const TerminalSet& a, const Caps& caps = {});

// Exact LP maximum of fractional Steiner tree packing.
MuFResult mu_f(const Multigraph& g, const TerminalSet& a, const Caps& caps = {});

// For Eulerian G: floor of half the minimum cut separating some of A.
// Throws GraphError when some degree is odd.
long long eulerian_lower_bound(const Multigraph& g, const TerminalSet& a);

struct PackingRateTable {
    std::vector<std::pair<long long, Rational>> ratios; // (n, mu(A, G^(n)) / n)
    Rational fractional;                                // mu_f(A, G)
};

// Exact per-n packing ratios next to their fractional limit value.
PackingRateTable packing_rate(const Multigraph& g, const TerminalSet& a, long long n_max,
                              const Caps& caps = {});

// True when the edge set is a tree covering A (acyclic, connected, vertex
// set contains A). Used to re-verify every witness before return.
bool is_steiner_tree(const Multigraph& g, const TerminalSet& a, const SteinerTree& t);

} // namespace pin

#endif
