#include "pin/omniscience.hpp"

#include <stdexcept>
#include <string>

#include "pin/errors.hpp"

namespace pin {

namespace {

void check_inputs(const Multigraph& g, const TerminalSet& a, const Caps& caps) {
    if (g.terminal_count() > caps.max_terminals)
        throw CapExceededError("terminal count " + std::to_string(g.terminal_count()) +
                               " exceeds cap " + std::to_string(caps.max_terminals) +
                               " (constraint count is ~2^m)");
    if (a.size() < 2) throw GraphError("secrecy-seeking set needs at least 2 terminals");
    for (int v : a)
        if (v < 1 || v > g.terminal_count())
            throw GraphError("set member out of range: " + std::to_string(v));
}

} // namespace

LinearProgram omniscience_program(const Multigraph& g, const TerminalSet& a,
                                  bool prune_vacuous) {
    const int m = g.terminal_count();
    LinearProgram p;
    p.sense = Sense::minimize;
    p.objective.assign(m, Rational(1));
    for (std::uint32_t mask : constraint_set_masks(m, mask_of(a))) {
        Rational rhs(internal_edges_mask(g, mask));
        if (prune_vacuous && rhs == 0) continue;
        LinearConstraint row;
        row.coeffs.assign(m, Rational(0));
        for (int i = 1; i <= m; ++i)
            if (mask & (1u << (i - 1))) row.coeffs[i - 1] = 1;
        row.rel = Relation::geq;
        row.rhs = rhs;
        p.rows.push_back(std::move(row));
    }
    return p;
}

OmniscienceSolution omn(const Multigraph& g, const TerminalSet& a, bool prune_vacuous,
                        const Caps& caps) {
    check_inputs(g, a, caps);
    LinearProgram p = omniscience_program(g, a, prune_vacuous);
    OptResult res = solve_lp(p);
    if (res.status != SolveStatus::optimal)
        throw std::logic_error("omniscience LP must have an optimum");
    // The witness is part of the contract: re-verify feasibility exactly.
    if (!satisfies(p, res.witness) || objective_value(p, res.witness) != res.value)
        throw std::logic_error("omniscience witness failed exact feasibility check");
    return OmniscienceSolution{res.value, res.witness, g, a};
}

IntOmniscienceSolution int_omn(const Multigraph& g, const TerminalSet& a, long long n,
                               bool prune_vacuous, const Caps& caps) {
    check_inputs(g, a, caps);
    if (n < 1) throw GraphError("observation length n must be positive");
    Multigraph gn = blow_up(g, n);
    LinearProgram p = omniscience_program(gn, a, prune_vacuous);
    // Any optimum satisfies I_i <= d_i on the blown-up graph; finite bounds
    // keep branch and bound on firm ground.
    p.upper_bounds.assign(p.arity(), std::nullopt);
    for (int i = 1; i <= gn.terminal_count(); ++i)
        p.upper_bounds[i - 1] = Rational(degree(gn, i));
    OptResult res = solve_ilp(p, std::vector<bool>(p.arity(), true));
    if (res.status != SolveStatus::optimal)
        throw std::logic_error("omniscience ILP must have an optimum");
    if (!satisfies(p, res.witness) || objective_value(p, res.witness) != res.value)
        throw std::logic_error("omniscience ILP witness failed exact feasibility check");
    IntOmniscienceSolution sol;
    sol.graph = gn;
    sol.seekers = a;
    sol.n = n;
    sol.value = static_cast<long long>(numerator(res.value));
    for (const Rational& w : res.witness) {
        if (!is_integer(w)) throw std::logic_error("ILP witness not integral");
        sol.lengths.push_back(static_cast<long long>(numerator(w)));
    }
    return sol;
}

Rational capacity(const Multigraph& g, const TerminalSet& a, const Caps& caps) {
    return Rational(g.total_edges()) - omn(g, a, false, caps).value;
}

Rational partition_bound(const Multigraph& g, const TerminalSet& a) {
    if (a.size() < 2) throw GraphError("secrecy-seeking set needs at least 2 terminals");
    const int m = g.terminal_count();
    bool found = false;
    Rational best;
    for_each_partition(m, [&](const Partition& p) {
        if (p.atoms.size() < 2) return true;
        for (const auto& atom : p.atoms) {
            bool meets = false;
            for (int v : atom)
                if (a.count(v)) { meets = true; break; }
            if (!meets) return true;
        }
        Rational ratio = make_rational(crossing_count(g, p),
                                       static_cast<long long>(p.atoms.size()) - 1);
        if (!found || ratio < best) {
            best = ratio;
            found = true;
        }
        return true;
    });
    if (!found) throw std::logic_error("no admissible partition; |A| >= 2 guarantees one");
    return best;
}

long long nash_williams(const Multigraph& g) {
    const int m = g.terminal_count();
    bool found = false;
    Rational best;
    for_each_partition(m, [&](const Partition& p) {
        if (p.atoms.size() < 2) return true;
        Rational ratio = make_rational(crossing_count(g, p),
                                       static_cast<long long>(p.atoms.size()) - 1);
        if (!found || ratio < best) {
            best = ratio;
            found = true;
        }
        return true;
    });
    return static_cast<long long>(floor_rational(best));
}

} // namespace pin
