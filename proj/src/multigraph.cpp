#include "pin/multigraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "pin/errors.hpp"

namespace pin {

Multigraph::Multigraph(int m) : m_(m) {
    if (m < 2) throw GraphError("terminal count must be at least 2, got " + std::to_string(m));
    mult_.assign(static_cast<size_t>(m) * (m - 1) / 2, 0);
    connected_ = false;
}

int Multigraph::pair_index(int i, int j) const {
    // precondition: 1 <= i < j <= m_
    return (i - 1) * (2 * m_ - i) / 2 + (j - i - 1);
}

Multigraph Multigraph::validate(int m, const std::vector<EdgeEntry>& edges) {
    Multigraph g(m);
    for (const auto& e : edges) {
        if (e.i == e.j)
            throw GraphError("self-loop at terminal " + std::to_string(e.i));
        if (e.i < 1 || e.i > m || e.j < 1 || e.j > m)
            throw GraphError("terminal index out of range: (" + std::to_string(e.i) + "," +
                             std::to_string(e.j) + ") with m=" + std::to_string(m));
        if (e.multiplicity < 0)
            throw GraphError("negative multiplicity on pair (" + std::to_string(e.i) + "," +
                             std::to_string(e.j) + ")");
        int a = std::min(e.i, e.j), b = std::max(e.i, e.j);
        g.mult_[g.pair_index(a, b)] += e.multiplicity;
    }
    g.recompute_connectivity();
    return g;
}

void Multigraph::recompute_connectivity() {
    std::vector<int> parent(m_ + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 1; i <= m_; ++i)
        for (int j = i + 1; j <= m_; ++j)
            if (mult_[pair_index(i, j)] > 0) parent[find(i)] = find(j);
    int root = find(1);
    connected_ = true;
    for (int i = 2; i <= m_; ++i)
        if (find(i) != root) { connected_ = false; break; }
}

long long Multigraph::multiplicity(int i, int j) const {
    if (i < 1 || i > m_ || j < 1 || j > m_ || i == j)
        throw GraphError("invalid pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
    int a = std::min(i, j), b = std::max(i, j);
    return mult_[pair_index(a, b)];
}

long long Multigraph::total_edges() const {
    return std::accumulate(mult_.begin(), mult_.end(), 0LL);
}

std::vector<std::pair<int, int>> Multigraph::support_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= m_; ++i)
        for (int j = i + 1; j <= m_; ++j)
            if (mult_[pair_index(i, j)] > 0) out.emplace_back(i, j);
    return out;
}

Multigraph blow_up(const Multigraph& g, long long n) {
    if (n < 1) throw GraphError("blow-up factor must be positive, got " + std::to_string(n));
    Multigraph out = g;
    for (auto& v : out.mult_) v *= n;
    return out; // support unchanged, connectivity flag carries over
}

long long degree(const Multigraph& g, int i) {
    if (i < 1 || i > g.terminal_count())
        throw GraphError("terminal index out of range: " + std::to_string(i));
    long long d = 0;
    for (int j = 1; j <= g.terminal_count(); ++j)
        if (j != i) d += g.multiplicity(i, j);
    return d;
}

long long internal_edges_mask(const Multigraph& g, std::uint32_t mask) {
    long long total = 0;
    int m = g.terminal_count();
    for (int i = 1; i <= m; ++i) {
        if (!(mask & (1u << (i - 1)))) continue;
        for (int j = i + 1; j <= m; ++j)
            if (mask & (1u << (j - 1))) total += g.multiplicity(i, j);
    }
    return total;
}

long long internal_edges(const Multigraph& g, const TerminalSet& b) {
    for (int i : b)
        if (i < 1 || i > g.terminal_count())
            throw GraphError("subset member out of range: " + std::to_string(i));
    return internal_edges_mask(g, mask_of(b));
}

void check_partition(int m, const Partition& p) {
    std::vector<bool> seen(m + 1, false);
    if (p.atoms.empty()) throw GraphError("partition has no atoms");
    for (const auto& atom : p.atoms) {
        if (atom.empty()) throw GraphError("partition atom is empty");
        for (int v : atom) {
            if (v < 1 || v > m) throw GraphError("partition member out of range");
            if (seen[v]) throw GraphError("partition atoms are not disjoint");
            seen[v] = true;
        }
    }
    for (int v = 1; v <= m; ++v)
        if (!seen[v]) throw GraphError("partition does not cover terminal " + std::to_string(v));
}

long long crossing_count(const Multigraph& g, const Partition& p) {
    int m = g.terminal_count();
    check_partition(m, p);
    std::vector<int> atom_of(m + 1, -1);
    for (size_t a = 0; a < p.atoms.size(); ++a)
        for (int v : p.atoms[a]) atom_of[v] = static_cast<int>(a);
    long long cross = 0;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            if (atom_of[i] != atom_of[j]) cross += g.multiplicity(i, j);
    return cross;
}

long long cut_edges_mask(const Multigraph& g, std::uint32_t mask) {
    int m = g.terminal_count();
    long long cross = 0;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            bool a = mask & (1u << (i - 1)), b = mask & (1u << (j - 1));
            if (a != b) cross += g.multiplicity(i, j);
        }
    return cross;
}

std::vector<std::uint32_t> constraint_set_masks(int m, std::uint32_t a_mask) {
    // Nonempty proper subsets B with B not containing A, by size then set-lex.
    std::vector<std::uint32_t> out;
    std::vector<int> comb;
    std::function<void(int, int)> gen = [&](int start, int need) {
        if (need == 0) {
            std::uint32_t mask = 0;
            for (int v : comb) mask |= 1u << (v - 1);
            if ((mask & a_mask) != a_mask) out.push_back(mask);
            return;
        }
        for (int v = start; v <= m - need + 1; ++v) {
            comb.push_back(v);
            gen(v + 1, need - 1);
            comb.pop_back();
        }
    };
    for (int size = 1; size <= m - 1; ++size) gen(1, size);
    return out;
}

std::vector<TerminalSet> enumerate_constraint_sets(int m, const TerminalSet& a) {
    if (a.size() < 2) throw GraphError("secrecy-seeking set needs at least 2 terminals");
    for (int v : a)
        if (v < 1 || v > m) throw GraphError("set member out of range: " + std::to_string(v));
    std::vector<TerminalSet> out;
    for (std::uint32_t mask : constraint_set_masks(m, mask_of(a)))
        out.push_back(set_of_mask(mask));
    return out;
}

Multigraph split_off(const Multigraph& g, int u, int v, int h) {
    int m = g.terminal_count();
    if (u < 1 || u > m || v < 1 || v > m || h < 1 || h > m || u == v || u == h || v == h)
        throw GraphError("split-off needs three distinct terminals in range");
    if (g.multiplicity(u, h) < 1)
        throw GraphError("no edge between " + std::to_string(u) + " and helper " + std::to_string(h));
    if (g.multiplicity(v, h) < 1)
        throw GraphError("no edge between " + std::to_string(v) + " and helper " + std::to_string(h));
    Multigraph out = g;
    auto dec = [&](int a, int b) { out.mult_[out.pair_index(std::min(a, b), std::max(a, b))] -= 1; };
    auto inc = [&](int a, int b) { out.mult_[out.pair_index(std::min(a, b), std::max(a, b))] += 1; };
    dec(u, h);
    dec(v, h);
    inc(u, v);
    out.recompute_connectivity();
    return out;
}

void for_each_partition(int m, const std::function<bool(const Partition&)>& visit) {
    // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
    std::vector<int> rgs(m, 0);
    bool stop = false;
    std::function<void(int, int)> rec = [&](int pos, int max_used) {
        if (stop) return;
        if (pos == m) {
            Partition p;
            p.atoms.assign(max_used + 1, {});
            for (int i = 0; i < m; ++i) p.atoms[rgs[i]].push_back(i + 1);
            if (!visit(p)) stop = true;
            return;
        }
        for (int c = 0; c <= max_used + 1 && !stop; ++c) {
            rgs[pos] = c;
            rec(pos + 1, std::max(max_used, c));
        }
    };
    if (m <= 0) return;
    rgs[0] = 0;
    rec(1, 0);
}

std::uint32_t mask_of(const TerminalSet& s) {
    std::uint32_t mask = 0;
    for (int v : s) mask |= 1u << (v - 1);
    return mask;
}

TerminalSet set_of_mask(std::uint32_t mask) {
    TerminalSet s;
    for (int v = 1; mask; ++v, mask >>= 1)
        if (mask & 1u) s.insert(v);
    return s;
}

} // namespace pin
