#include <algorithm>
#include <stdexcept>
#include <vector>

#include "pin/errors.hpp"
#include "pin/linear_program.hpp"

namespace pin {

Rational LinearProgram::lower_bound(int var) const {
    if (lower_bounds.empty()) return Rational(0);
    return lower_bounds.at(var);
}

std::optional<Rational> LinearProgram::upper_bound(int var) const {
    if (upper_bounds.empty()) return std::nullopt;
    return upper_bounds.at(var);
}

void LinearProgram::check_well_formed() const {
    const size_t n = objective.size();
    if (n == 0) throw std::invalid_argument("program has no variables");
    for (const auto& row : rows)
        if (row.coeffs.size() != n)
            throw std::invalid_argument("constraint arity differs from objective arity");
    if (!lower_bounds.empty() && lower_bounds.size() != n)
        throw std::invalid_argument("lower bound vector arity mismatch");
    if (!upper_bounds.empty() && upper_bounds.size() != n)
        throw std::invalid_argument("upper bound vector arity mismatch");
}

bool satisfies(const LinearProgram& p, const std::vector<Rational>& x) {
    if (x.size() != p.objective.size()) return false;
    for (int i = 0; i < p.arity(); ++i) {
        if (x[i] < p.lower_bound(i)) return false;
        if (auto ub = p.upper_bound(i); ub && x[i] > *ub) return false;
    }
    for (const auto& row : p.rows) {
        Rational lhs(0);
        for (int i = 0; i < p.arity(); ++i) lhs += row.coeffs[i] * x[i];
        if (row.rel == Relation::geq ? lhs < row.rhs : lhs > row.rhs) return false;
    }
    return true;
}

Rational objective_value(const LinearProgram& p, const std::vector<Rational>& x) {
    Rational v(0);
    for (int i = 0; i < p.arity(); ++i) v += p.objective[i] * x[i];
    return v;
}

namespace {

// Dense tableau over exact rationals. Column layout: structural variables
// (shifted to lower bound 0), slacks, artificials, rhs last. One cost row.
struct Tableau {
    std::vector<std::vector<Rational>> t; // rows x cols, last col = rhs
    std::vector<Rational> cost;           // reduced-cost row, last = -objective value
    std::vector<int> basis;               // basic variable per row
    int cols = 0;                         // excluding rhs
    long pivots = 0;

    void pivot(int row, int col) {
        Rational inv = Rational(1) / t[row][col];
        for (int c = 0; c <= cols; ++c) t[row][c] *= inv;
        for (size_t r = 0; r < t.size(); ++r) {
            if (static_cast<int>(r) == row || t[r][col] == 0) continue;
            Rational f = t[r][col];
            for (int c = 0; c <= cols; ++c) t[r][c] -= f * t[row][c];
        }
        if (cost[col] != 0) {
            Rational f = cost[col];
            for (int c = 0; c <= cols; ++c) cost[c] -= f * t[row][c];
        }
        basis[row] = col;
        ++pivots;
    }

    // Bland's rule: entering column is the lowest-index negative reduced
    // cost; leaving row breaks ratio ties by lowest basic variable index.
    // Returns optimal = true, or false when unbounded.
    bool run(int usable_cols) {
        for (;;) {
            int enter = -1;
            for (int c = 0; c < usable_cols; ++c)
                if (cost[c] < 0) { enter = c; break; }
            if (enter < 0) return true;
            int leave = -1;
            Rational best;
            for (size_t r = 0; r < t.size(); ++r) {
                if (t[r][enter] <= 0) continue;
                Rational ratio = t[r][cols] / t[r][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[r] < basis[leave])) {
                    leave = static_cast<int>(r);
                    best = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }
};

} // namespace

OptResult solve_lp(const LinearProgram& p) {
    p.check_well_formed();
    const int n = p.arity();

    // Work on y = x - lb >= 0 and fold every constraint into a*y <= b form.
    std::vector<Rational> lb(n);
    for (int i = 0; i < n; ++i) lb[i] = p.lower_bound(i);

    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    auto add_leq = [&](std::vector<Rational> coeffs, Rational rhs) {
        a.push_back(std::move(coeffs));
        b.push_back(std::move(rhs));
    };
    for (const auto& row : p.rows) {
        Rational shift(0);
        for (int i = 0; i < n; ++i) shift += row.coeffs[i] * lb[i];
        Rational rhs = row.rhs - shift;
        std::vector<Rational> coeffs = row.coeffs;
        if (row.rel == Relation::geq) {
            for (auto& c : coeffs) c = -c;
            rhs = -rhs;
        }
        add_leq(std::move(coeffs), std::move(rhs));
    }
    for (int i = 0; i < n; ++i) {
        if (auto ub = p.upper_bound(i)) {
            std::vector<Rational> coeffs(n, Rational(0));
            coeffs[i] = 1;
            add_leq(std::move(coeffs), *ub - lb[i]);
        }
    }

    const int rows = static_cast<int>(a.size());
    int n_art = 0;
    for (int r = 0; r < rows; ++r)
        if (b[r] < 0) ++n_art;

    Tableau tab;
    tab.cols = n + rows + n_art;
    tab.t.assign(rows, std::vector<Rational>(tab.cols + 1, Rational(0)));
    tab.basis.assign(rows, -1);

    int art = n + rows;
    for (int r = 0; r < rows; ++r) {
        bool neg = b[r] < 0;
        for (int c = 0; c < n; ++c) tab.t[r][c] = neg ? -a[r][c] : a[r][c];
        tab.t[r][n + r] = neg ? Rational(-1) : Rational(1);
        tab.t[r][tab.cols] = neg ? -b[r] : b[r];
        if (neg) {
            tab.t[r][art] = 1;
            tab.basis[r] = art++;
        } else {
            tab.basis[r] = n + r;
        }
    }

    long total_pivots = 0;
    if (n_art > 0) {
        // Phase 1: minimize the artificial sum.
        tab.cost.assign(tab.cols + 1, Rational(0));
        for (int r = 0; r < rows; ++r)
            if (tab.basis[r] >= n + rows)
                for (int c = 0; c <= tab.cols; ++c) tab.cost[c] -= tab.t[r][c];
        if (!tab.run(tab.cols))
            throw std::logic_error("phase-1 objective unbounded"); // cannot happen: bounded below by 0
        if (-tab.cost[tab.cols] != 0) {
            OptResult res;
            res.status = SolveStatus::infeasible;
            res.stats.pivots = tab.pivots;
            return res;
        }
        // Drive leftover degenerate artificials out of the basis.
        for (int r = 0; r < rows; ++r) {
            if (tab.basis[r] < n + rows) continue;
            int c = 0;
            while (c < n + rows && tab.t[r][c] == 0) ++c;
            if (c < n + rows) tab.pivot(r, c);
            // else: redundant all-zero row; harmless to keep
        }
        total_pivots = tab.pivots;
    }

    // Phase 2 over the real objective (min sense; negate for max).
    std::vector<Rational> c_min(n);
    for (int i = 0; i < n; ++i)
        c_min[i] = p.sense == Sense::maximize ? -p.objective[i] : p.objective[i];
    tab.cost.assign(tab.cols + 1, Rational(0));
    for (int i = 0; i < n; ++i) tab.cost[i] = c_min[i];
    for (int r = 0; r < rows; ++r) {
        int bv = tab.basis[r];
        if (bv < n && tab.cost[bv] != 0) {
            Rational f = tab.cost[bv];
            for (int c = 0; c <= tab.cols; ++c) tab.cost[c] -= f * tab.t[r][c];
        }
    }
    bool optimal = tab.run(n + rows); // artificial columns frozen out

    OptResult res;
    res.stats.pivots = total_pivots + tab.pivots;
    if (!optimal) {
        res.status = SolveStatus::unbounded;
        return res;
    }
    std::vector<Rational> y(n, Rational(0));
    for (int r = 0; r < rows; ++r)
        if (tab.basis[r] < n) y[tab.basis[r]] = tab.t[r][tab.cols];
    res.witness.resize(n);
    for (int i = 0; i < n; ++i) res.witness[i] = y[i] + lb[i];
    res.value = objective_value(p, res.witness);
    res.status = SolveStatus::optimal;
    return res;
}

namespace {

struct BnbState {
    const LinearProgram* base = nullptr;
    std::vector<bool> integral;
    std::vector<Rational> extra_lb, extra_ub; // branching bounds layered on base
    std::vector<bool> has_extra_ub;
    bool have_best = false;
    OptResult best;
    long nodes = 0;
    long pivots = 0;

    LinearProgram materialize() const {
        LinearProgram q = *base;
        q.sense = Sense::minimize; // caller pre-negated for max
        if (q.lower_bounds.empty()) q.lower_bounds.assign(q.arity(), Rational(0));
        if (q.upper_bounds.empty()) q.upper_bounds.assign(q.arity(), std::nullopt);
        for (int i = 0; i < q.arity(); ++i) {
            q.lower_bounds[i] = std::max(q.lower_bounds[i], extra_lb[i]);
            if (has_extra_ub[i]) {
                if (!q.upper_bounds[i] || *q.upper_bounds[i] > extra_ub[i])
                    q.upper_bounds[i] = extra_ub[i];
            }
        }
        return q;
    }

    void dive() {
        LinearProgram node = materialize();
        OptResult rel = solve_lp(node);
        ++nodes;
        pivots += rel.stats.pivots;
        if (rel.status == SolveStatus::infeasible) return;
        if (rel.status == SolveStatus::unbounded)
            throw std::logic_error("unbounded relaxation in branch and bound; "
                                   "integral variables need finite bounds");
        if (have_best && rel.value >= best.value) return;

        int frac = -1;
        for (int i = 0; i < node.arity(); ++i)
            if (integral[i] && !is_integer(rel.witness[i])) { frac = i; break; }
        if (frac < 0) {
            best = rel;
            have_best = true;
            return;
        }
        // The fractional witness value v satisfies lb <= v <= ub, so both
        // floor(v) and floor(v)+1 strictly tighten their side.
        BigInt fl = floor_rational(rel.witness[frac]);
        Rational save_ub = extra_ub[frac];
        bool save_has = has_extra_ub[frac];
        extra_ub[frac] = Rational(fl);
        has_extra_ub[frac] = true;
        dive();
        extra_ub[frac] = save_ub;
        has_extra_ub[frac] = save_has;

        Rational save_lb = extra_lb[frac];
        extra_lb[frac] = Rational(fl + 1);
        dive();
        extra_lb[frac] = save_lb;
    }
};

} // namespace

OptResult solve_ilp(const LinearProgram& p, const std::vector<bool>& integral) {
    p.check_well_formed();
    if (integral.size() != p.objective.size())
        throw std::invalid_argument("integrality mask arity mismatch");

    LinearProgram q = p;
    if (p.sense == Sense::maximize)
        for (auto& c : q.objective) c = -c;
    q.sense = Sense::minimize;

    BnbState state;
    state.base = &q;
    state.integral = integral;
    state.extra_lb.assign(q.arity(), Rational(0));
    for (int i = 0; i < q.arity(); ++i) state.extra_lb[i] = q.lower_bound(i);
    state.extra_ub.assign(q.arity(), Rational(0));
    state.has_extra_ub.assign(q.arity(), false);

    // Rounding the root relaxation up often yields a feasible incumbent for
    // covering-type programs; it only tightens pruning, never the result.
    OptResult root = solve_lp(q);
    state.nodes = 0;
    if (root.status == SolveStatus::optimal) {
        std::vector<Rational> rounded = root.witness;
        bool changed = false;
        for (int i = 0; i < q.arity(); ++i)
            if (integral[i] && !is_integer(rounded[i])) {
                rounded[i] = Rational(ceil_rational(rounded[i]));
                changed = true;
            }
        if (satisfies(q, rounded)) {
            state.best.status = SolveStatus::optimal;
            state.best.witness = rounded;
            state.best.value = objective_value(q, rounded);
            state.have_best = true;
        }
        (void)changed;
    }

    state.dive();

    OptResult res;
    res.stats.nodes = state.nodes;
    res.stats.pivots = state.pivots;
    if (!state.have_best) {
        res.status = SolveStatus::infeasible;
        return res;
    }
    res.status = SolveStatus::optimal;
    res.witness = state.best.witness;
    res.value = objective_value(p, res.witness); // original sense
    return res;
}

std::vector<std::vector<long long>> enumerate_integer_points(
    const LinearProgram& p, const std::vector<std::pair<long long, long long>>& bounds,
    long long volume_cap) {
    p.check_well_formed();
    if (bounds.size() != p.objective.size())
        throw std::invalid_argument("bounds arity mismatch");
    long long volume = 1;
    for (const auto& [lo, hi] : bounds) {
        if (hi < lo) return {};
        long long width = hi - lo + 1;
        if (volume > volume_cap / width)
            throw CapExceededError("integer enumeration box volume exceeds cap");
        volume *= width;
    }
    std::vector<std::vector<long long>> out;
    std::vector<long long> pt(bounds.size());
    for (size_t i = 0; i < bounds.size(); ++i) pt[i] = bounds[i].first;
    std::vector<Rational> x(bounds.size());
    for (;;) {
        for (size_t i = 0; i < pt.size(); ++i) x[i] = Rational(pt[i]);
        if (satisfies(p, x)) out.push_back(pt);
        size_t k = pt.size();
        while (k > 0 && pt[k - 1] == bounds[k - 1].second) {
            pt[k - 1] = bounds[k - 1].first;
            --k;
        }
        if (k == 0) break;
        ++pt[k - 1];
    }
    return out;
}

} // namespace pin
