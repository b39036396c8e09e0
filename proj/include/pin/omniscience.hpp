#ifndef PIN_OMNISCIENCE_HPP
#define PIN_OMNISCIENCE_HPP

#include <vector>

#include "pin/caps.hpp"
#include "pin/linear_program.hpp"
#include "pin/multigraph.hpp"
#include "pin/rational.hpp"

namespace pin {

// Minimum total rate of linear communication for perfect omniscience, with
// an exact optimal rate vector.
struct OmniscienceSolution {
    Rational value;
    std::vector<Rational> rates; // R*_1..R*_m
    Multigraph graph;
    TerminalSet seekers;
};

// Integer analogue on the n-fold blow-up: minimum total communication
// length in bits.
struct IntOmniscienceSolution {
    long long value = 0;
    std::vector<long long> lengths; // I*_1..I*_m
    Multigraph graph;               // the blown-up graph G^{(n)}
    TerminalSet seekers;
    long long n = 1;
};

// Builds the covering program: one row per constraint set B (every nonempty
// proper B not containing A), sum_{i in B} R_i >= e_G(B). With prune_vacuous
// the rows with zero right-hand side are dropped (they are implied by
// R_i >= 0).
LinearProgram omniscience_program(const Multigraph& g, const TerminalSet& a,
                                  bool prune_vacuous = false);

OmniscienceSolution omn(const Multigraph& g, const TerminalSet& a,
                        bool prune_vacuous = false, const Caps& caps = {});

IntOmniscienceSolution int_omn(const Multigraph& g, const TerminalSet& a, long long n,
                               bool prune_vacuous = false, const Caps& caps = {});

// Perfect secret key capacity C(A) = |E| - OMN_G(A).
Rational capacity(const Multigraph& g, const TerminalSet& a, const Caps& caps = {});

// Minimum over partitions with >= 2 atoms, each atom meeting A, of
// crossing / (atoms - 1). Upper-bounds C(A).
Rational partition_bound(const Multigraph& g, const TerminalSet& a);

// Spanning tree packing number by the partition formula: floor of the
// minimum over all partitions with >= 2 atoms of crossing / (atoms - 1).
long long nash_williams(const Multigraph& g);

} // namespace pin

#endif
