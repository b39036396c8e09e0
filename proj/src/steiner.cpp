#include "pin/steiner.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "pin/errors.hpp"
#include "pin/linear_program.hpp"

namespace pin {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n + 1) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

// Spanning trees of (verts, edge list), emitted in lexicographic edge-subset
// order via include/exclude recursion with connectivity pruning.
void spanning_trees(const std::vector<int>& verts,
                    const std::vector<std::pair<int, int>>& edges, long long cap,
                    long long& count, const std::function<void(const std::vector<int>&)>& emit) {
    const int need = static_cast<int>(verts.size()) - 1;
    if (need == 0) return; // single-vertex trees carry no edges; not used
    std::vector<int> chosen;

    std::function<bool(const std::vector<int>&, size_t)> connectable =
        [&](const std::vector<int>& have, size_t next) {
            UnionFind uf(verts.empty() ? 0 : *std::max_element(verts.begin(), verts.end()));
            for (int e : have) uf.unite(edges[e].first, edges[e].second);
            for (size_t k = next; k < edges.size(); ++k)
                uf.unite(edges[k].first, edges[k].second);
            int root = uf.find(verts[0]);
            for (int v : verts)
                if (uf.find(v) != root) return false;
            return true;
        };

    std::function<void(size_t, UnionFind&)> rec = [&](size_t idx, UnionFind& uf) {
        if (static_cast<int>(chosen.size()) == need) {
            if (++count > cap) throw CapExceededError("Steiner tree count exceeds cap");
            emit(chosen);
            return;
        }
        if (idx == edges.size()) return;
        if (!connectable(chosen, idx)) return;
        auto [x, y] = edges[idx];
        if (uf.find(x) != uf.find(y)) {
            UnionFind uf2 = uf;
            uf2.unite(x, y);
            chosen.push_back(static_cast<int>(idx));
            rec(idx + 1, uf2);
            chosen.pop_back();
        }
        rec(idx + 1, uf);
    };
    UnionFind uf(verts.empty() ? 0 : *std::max_element(verts.begin(), verts.end()));
    rec(0, uf);
}

} // namespace

bool is_steiner_tree(const Multigraph& g, const TerminalSet& a, const SteinerTree& t) {
    if (t.edges.empty()) return false;
    TerminalSet verts;
    UnionFind uf(g.terminal_count());
    for (auto [i, j] : t.edges) {
        if (i >= j || i < 1 || j > g.terminal_count()) return false;
        if (g.multiplicity(i, j) < 1) return false;
        if (!uf.unite(i, j)) return false; // cycle
        verts.insert(i);
        verts.insert(j);
    }
    if (verts != t.vertices) return false;
    if (t.edges.size() + 1 != verts.size()) return false; // with acyclicity => connected
    for (int v : a)
        if (!verts.count(v)) return false;
    return true;
}

std::vector<SteinerTree> enumerate_steiner_trees(const Multigraph& g, const TerminalSet& a,
                                                 const Caps& caps) {
    if (a.size() < 2) throw GraphError("secrecy-seeking set needs at least 2 terminals");
    const int m = g.terminal_count();
    for (int v : a)
        if (v < 1 || v > m) throw GraphError("set member out of range");

    auto support = g.support_pairs();
    std::vector<SteinerTree> out;
    long long count = 0;

    // Every Steiner tree spans exactly one vertex superset W of A; walk the
    // supersets by size then lexicographic.
    std::vector<int> extra; // terminals outside A
    for (int v = 1; v <= m; ++v)
        if (!a.count(v)) extra.push_back(v);

    std::vector<std::vector<int>> supersets;
    for (size_t size = 0; size <= extra.size(); ++size) {
        std::vector<int> comb;
        std::function<void(size_t, size_t)> gen = [&](size_t start, size_t need) {
            if (need == 0) {
                std::vector<int> w(a.begin(), a.end());
                w.insert(w.end(), comb.begin(), comb.end());
                std::sort(w.begin(), w.end());
                supersets.push_back(std::move(w));
                return;
            }
            for (size_t k = start; k + need <= extra.size(); ++k) {
                comb.push_back(extra[k]);
                gen(k + 1, need - 1);
                comb.pop_back();
            }
        };
        gen(0, size);
    }

    for (const auto& w : supersets) {
        std::vector<bool> in_w(m + 1, false);
        for (int v : w) in_w[v] = true;
        std::vector<std::pair<int, int>> edges;
        for (auto [i, j] : support)
            if (in_w[i] && in_w[j]) edges.emplace_back(i, j);
        if (edges.size() + 1 < w.size()) continue;
        spanning_trees(w, edges, caps.max_steiner_trees, count,
                       [&](const std::vector<int>& chosen) {
                           SteinerTree t;
                           for (int e : chosen) t.edges.push_back(edges[e]);
                           std::sort(t.edges.begin(), t.edges.end());
                           t.vertices = TerminalSet(w.begin(), w.end());
                           out.push_back(std::move(t));
                       });
    }
    return out;
}

namespace {

struct PairIndexer {
    std::vector<std::pair<int, int>> pairs;
    std::map<std::pair<int, int>, int> index;

    explicit PairIndexer(const Multigraph& g) {
        pairs = g.support_pairs();
        for (size_t k = 0; k < pairs.size(); ++k) index[pairs[k]] = static_cast<int>(k);
    }
};

MuFResult mu_f_with_trees(const Multigraph& g, const std::vector<SteinerTree>& trees) {
    MuFResult res;
    res.packing.trees = trees;
    res.packing.weights.assign(trees.size(), Rational(0));
    res.value = 0;
    if (trees.empty()) return res;

    PairIndexer px(g);
    LinearProgram p;
    p.sense = Sense::maximize;
    p.objective.assign(trees.size(), Rational(1));
    p.rows.assign(px.pairs.size(), {});
    for (size_t r = 0; r < px.pairs.size(); ++r) {
        p.rows[r].coeffs.assign(trees.size(), Rational(0));
        p.rows[r].rel = Relation::leq;
        p.rows[r].rhs = Rational(g.multiplicity(px.pairs[r].first, px.pairs[r].second));
    }
    for (size_t l = 0; l < trees.size(); ++l)
        for (auto e : trees[l].edges) p.rows[px.index.at(e)].coeffs[l] = 1;

    OptResult opt = solve_lp(p);
    if (opt.status != SolveStatus::optimal)
        throw std::logic_error("fractional packing LP must have an optimum");
    if (!satisfies(p, opt.witness))
        throw std::logic_error("fractional packing witness failed exact feasibility check");
    res.value = opt.value;
    res.packing.weights = opt.witness;
    return res;
}

// Depth-first branch and bound over usage counts, greedy-high-first, pruned
// by the fractional optimum, residual totals, per-A-vertex residual degrees,
// and the smallest remaining tree size.
struct MuSearch {
    const std::vector<SteinerTree>* trees;
    std::vector<int> tree_size;
    std::vector<int> suffix_min_size;
    std::vector<std::vector<int>> tree_pairs;                     // pair indices per tree
    std::vector<std::vector<std::pair<int, int>>> tree_vdegrees; // (vertex, degree in tree)
    std::vector<long long> residual;                              // per pair
    std::vector<long long> res_degree;                            // per terminal 1..m
    std::vector<int> a_members;
    long long res_total = 0;
    long long target = 0; // floor of fractional optimum
    long long best = 0;
    std::vector<long long> usage, best_usage;
    bool done = false;

    // Every further tree covers each member of A with at least one edge and
    // uses at least suffix_min_size edges overall.
    long long bound_remaining(size_t l) const {
        if (l >= trees->size()) return 0;
        long long bound = res_total / suffix_min_size[l];
        for (int v : a_members) bound = std::min(bound, res_degree[v]);
        return bound;
    }

    void dfs(size_t l, long long current) {
        if (current > best) {
            best = current;
            best_usage = usage;
            if (best == target) { done = true; return; }
        }
        if (l >= trees->size()) return;
        if (current + bound_remaining(l) <= best) return;

        long long max_use = res_total; // shrinks below
        for (int pidx : tree_pairs[l]) max_use = std::min(max_use, residual[pidx]);
        for (long long u = max_use; u >= 0 && !done; --u) {
            for (int pidx : tree_pairs[l]) residual[pidx] -= u;
            res_total -= u * tree_size[l];
            for (auto [v, d] : tree_vdegrees[l]) res_degree[v] -= u * d;
            usage[l] = u;
            dfs(l + 1, current + u);
            usage[l] = 0;
            for (auto [v, d] : tree_vdegrees[l]) res_degree[v] += u * d;
            res_total += u * tree_size[l];
            for (int pidx : tree_pairs[l]) residual[pidx] += u;
        }
    }
};

} // namespace

MuResult mu(const Multigraph& g, const TerminalSet& a, const Caps& caps) {
    auto trees = enumerate_steiner_trees(g, a, caps);
    MuResult res;
    if (trees.empty()) return res; // disconnected support or no tree covers A

    MuFResult frac = mu_f_with_trees(g, trees);
    PairIndexer px(g);

    MuSearch s;
    s.trees = &trees;
    s.tree_size.resize(trees.size());
    s.tree_pairs.resize(trees.size());
    s.tree_vdegrees.resize(trees.size());
    for (size_t l = 0; l < trees.size(); ++l) {
        s.tree_size[l] = static_cast<int>(trees[l].edges.size());
        std::map<int, int> vdeg;
        for (auto e : trees[l].edges) {
            s.tree_pairs[l].push_back(px.index.at(e));
            ++vdeg[e.first];
            ++vdeg[e.second];
        }
        s.tree_vdegrees[l].assign(vdeg.begin(), vdeg.end());
    }
    s.suffix_min_size.assign(trees.size() + 1, 1 << 30);
    for (size_t l = trees.size(); l-- > 0;)
        s.suffix_min_size[l] = std::min(s.suffix_min_size[l + 1], s.tree_size[l]);
    s.residual.resize(px.pairs.size());
    for (size_t r = 0; r < px.pairs.size(); ++r)
        s.residual[r] = g.multiplicity(px.pairs[r].first, px.pairs[r].second);
    s.res_total = std::accumulate(s.residual.begin(), s.residual.end(), 0LL);
    s.res_degree.assign(g.terminal_count() + 1, 0);
    for (int v = 1; v <= g.terminal_count(); ++v) s.res_degree[v] = degree(g, v);
    s.a_members.assign(a.begin(), a.end());
    s.target = static_cast<long long>(floor_rational(frac.value));
    s.usage.assign(trees.size(), 0);
    s.best_usage.assign(trees.size(), 0);
    s.dfs(0, 0);

    res.value = s.best;
    for (size_t l = 0; l < trees.size(); ++l) {
        if (s.best_usage[l] == 0) continue;
        if (!is_steiner_tree(g, a, trees[l]))
            throw std::logic_error("packing witness tree failed re-verification");
        res.packing.trees.push_back(trees[l]);
        res.packing.usage.push_back(s.best_usage[l]);
    }
    // Re-verify edge-disjointness of the witness against multiplicities.
    std::map<std::pair<int, int>, long long> used;
    for (size_t k = 0; k < res.packing.trees.size(); ++k)
        for (auto e : res.packing.trees[k].edges) used[e] += res.packing.usage[k];
    for (auto& [e, u] : used)
        if (u > g.multiplicity(e.first, e.second))
            throw std::logic_error("packing witness exceeds edge multiplicity");
    return res;
}

MuFResult mu_f(const Multigraph& g, const TerminalSet& a, const Caps& caps) {
    auto trees = enumerate_steiner_trees(g, a, caps);
    return mu_f_with_trees(g, trees);
}

long long eulerian_lower_bound(const Multigraph& g, const TerminalSet& a) {
    const int m = g.terminal_count();
    if (a.size() < 2) throw GraphError("secrecy-seeking set needs at least 2 terminals");
    for (int v = 1; v <= m; ++v)
        if (degree(g, v) % 2 != 0)
            throw GraphError("graph is not Eulerian: terminal " + std::to_string(v) +
                             " has odd degree");
    std::uint32_t a_mask = mask_of(a);
    long long best = -1;
    for (std::uint32_t mask = 1; mask + 1 < (1u << m); ++mask) {
        if (!(mask & a_mask)) continue;
        long long cut = cut_edges_mask(g, mask);
        if (best < 0 || cut < best) best = cut;
    }
    return best / 2;
}

PackingRateTable packing_rate(const Multigraph& g, const TerminalSet& a, long long n_max,
                              const Caps& caps) {
    if (n_max < 1) throw GraphError("n_max must be positive");
    PackingRateTable table;
    for (long long n = 1; n <= n_max; ++n) {
        long long v = mu(blow_up(g, n), a, caps).value;
        table.ratios.emplace_back(n, make_rational(v, n));
    }
    table.fractional = mu_f(g, a, caps).value;
    return table;
}

} // namespace pin
