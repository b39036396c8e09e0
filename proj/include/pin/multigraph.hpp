#ifndef PIN_MULTIGRAPH_HPP
#define PIN_MULTIGRAPH_HPP

#include <cstdint>
#include <functional>
#include <set>
#include <tuple>
#include <vector>

namespace pin {

// Terminals are 1-based indices 1..m.
using TerminalSet = std::set<int>;

// A set partition of {1..m}; atoms are disjoint, nonempty, and cover.
struct Partition {
    std::vector<std::vector<int>> atoms;
};

struct EdgeEntry {
    int i = 0;
    int j = 0;
    long long multiplicity = 0;
};

// Undirected multigraph on terminals {1..m} with no self-loops; the
// multiplicity e_ij is stored once per unordered pair, so reciprocity is
// structural. Immutable after construction.
class Multigraph {
public:
    // Canonicalizes and validates an edge list. Entries for the same pair
    // accumulate. Throws GraphError on self-loops, out-of-range indices, or
    // negative multiplicities. Disconnected support is accepted and flagged.
    static Multigraph validate(int m, const std::vector<EdgeEntry>& edges);

    explicit Multigraph(int m);

    int terminal_count() const { return m_; }
    long long multiplicity(int i, int j) const;
    // |E|: total number of edges counted with multiplicity.
    long long total_edges() const;
    // Whether the support graph connects all m terminals.
    bool is_connected() const { return connected_; }

    // Pairs (i < j) with positive multiplicity, lexicographic.
    std::vector<std::pair<int, int>> support_pairs() const;

    bool operator==(const Multigraph& other) const = default;

private:
    friend Multigraph blow_up(const Multigraph&, long long);
    friend Multigraph split_off(const Multigraph&, int, int, int);

    int pair_index(int i, int j) const;
    void recompute_connectivity();

    int m_ = 0;
    std::vector<long long> mult_; // upper triangle, pair (i<j)
    bool connected_ = false;
};

// G^{(n)}: every multiplicity multiplied by n; n >= 1.
Multigraph blow_up(const Multigraph& g, long long n);

// d_i = sum of multiplicities incident to terminal i.
long long degree(const Multigraph& g, int i);

// e_G(B): edges with both endpoints in B, counted with multiplicity.
long long internal_edges(const Multigraph& g, const TerminalSet& b);
long long internal_edges_mask(const Multigraph& g, std::uint32_t mask);

// Edges whose endpoints lie in different atoms of the partition.
long long crossing_count(const Multigraph& g, const Partition& p);

// Edges with exactly one endpoint in the masked set.
long long cut_edges_mask(const Multigraph& g, std::uint32_t mask);

// Every nonempty proper subset B of {1..m} with B not containing A, ordered
// by size then lexicographically. Requires |A| >= 2.
std::vector<TerminalSet> enumerate_constraint_sets(int m, const TerminalSet& a);
std::vector<std::uint32_t> constraint_set_masks(int m, std::uint32_t a_mask);

// G^{uv}: replaces one u-h edge and one v-h edge by a direct u-v edge.
// Throws GraphError when either helper edge is missing.
Multigraph split_off(const Multigraph& g, int u, int v, int h);

// Enumerates all set partitions of {1..m} in restricted-growth-string order.
// Returning false from the visitor stops the enumeration.
void for_each_partition(int m, const std::function<bool(const Partition&)>& visit);

void check_partition(int m, const Partition& p); // throws GraphError if invalid

std::uint32_t mask_of(const TerminalSet& s);
TerminalSet set_of_mask(std::uint32_t mask);

} // namespace pin

#endif
