#ifndef PIN_LINEAR_PROGRAM_HPP
#define PIN_LINEAR_PROGRAM_HPP

#include <optional>
#include <vector>

#include "pin/rational.hpp"

namespace pin {

enum class Relation { geq, leq };
enum class Sense { minimize, maximize };

struct LinearConstraint {
    std::vector<Rational> coeffs;
    Relation rel = Relation::geq;
    Rational rhs;
};

// All entries exact rationals; no floating point anywhere in feasibility
// logic. Variables default to lower bound 0 and no upper bound.
struct LinearProgram {
    Sense sense = Sense::minimize;
    std::vector<Rational> objective;
    std::vector<LinearConstraint> rows;
    std::vector<Rational> lower_bounds;                // empty means all zero
    std::vector<std::optional<Rational>> upper_bounds; // empty means none

    int arity() const { return static_cast<int>(objective.size()); }
    Rational lower_bound(int var) const;
    std::optional<Rational> upper_bound(int var) const;
    void check_well_formed() const; // throws std::invalid_argument
};

enum class SolveStatus { optimal, infeasible, unbounded };

struct SolveStats {
    long pivots = 0;
    long nodes = 0;
};

struct OptResult {
    SolveStatus status = SolveStatus::infeasible;
    Rational value;
    std::vector<Rational> witness;
    SolveStats stats;
};

// Exact two-phase tableau simplex with Bland's rule; deterministic for a
// fixed input ordering.
OptResult solve_lp(const LinearProgram& p);

// Depth-first branch and bound over the LP relaxation; branches on the
// lowest-index fractional variable in the mask, floor branch first. Marked
// variables need finite implied bounds for termination.
OptResult solve_ilp(const LinearProgram& p, const std::vector<bool>& integral);

// Every integer point of the box satisfying all constraints, in
// lexicographic order. Throws CapExceededError when the box volume exceeds
// the limit.
std::vector<std::vector<long long>> enumerate_integer_points(
    const LinearProgram& p, const std::vector<std::pair<long long, long long>>& bounds,
    long long volume_cap = 4'000'000);

// Exact feasibility check by substitution (bounds and rows).
bool satisfies(const LinearProgram& p, const std::vector<Rational>& x);

Rational objective_value(const LinearProgram& p, const std::vector<Rational>& x);

} // namespace pin

#endif
