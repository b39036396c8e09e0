#ifndef PIN_PROTOCOL_HPP
#define PIN_PROTOCOL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "pin/bitmatrix.hpp"
#include "pin/caps.hpp"
#include "pin/multigraph.hpp"
#include "pin/rational.hpp"
#include "pin/steiner.hpp"

namespace pin {

// Canonical coordinate order for the global pairwise-bit vector of n
// observations on G: support pairs (i < j) lexicographic, then bit index
// 0..n*e_ij-1 within the pair. Terminal i's observation concatenates its
// incident pairs ordered by the other endpoint, preserving bit order; the
// reciprocity X_ij = X_ji is structural because both endpoints read the same
// global coordinates.
class SourceLayout {
public:
    SourceLayout(const Multigraph& g, long long n);

    long long n() const { return n_; }
    int total_bits() const { return total_; }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    int pair_offset(int i, int j) const;
    int pair_width(int i, int j) const;

    int obs_dim(int terminal) const;
    // Global coordinates of terminal i's observation, in canonical order.
    const std::vector<size_t>& observation_coords(int terminal) const;
    BitVector observation(int terminal, const BitVector& global) const;

private:
    long long n_ = 1;
    int total_ = 0;
    std::vector<std::pair<int, int>> pairs_;
    std::map<std::pair<int, int>, int> offset_;
    std::vector<std::vector<size_t>> obs_; // per terminal, index 1..m
};

// One realization of the global source vector.
struct SourceRealization {
    long long n = 1;
    BitVector bits; // layout order
};

// Linear noninteractive communication: per-terminal matrices acting on that
// terminal's observation.
struct LinearScheme {
    Multigraph graph;
    long long n = 1;
    std::vector<BitMatrix> per_terminal; // [i-1] is L_i, b_i x obs_dim(i)

    long long length(int terminal) const { return per_terminal[terminal - 1].row_count(); }
    long long total_length() const;
    // All rows globalized against the layout, stacked in terminal order.
    BitMatrix stacked(const SourceLayout& layout) const;
};

struct Transcript {
    std::vector<BitVector> per_terminal;
    BitVector concat() const;
};

// Extracts the key bits from the global pairwise-bit vector. Valid when its
// rows are independent and its row space meets the scheme's stacked row
// space only at zero.
struct KeyMap {
    BitMatrix map; // key_length x total_bits
    size_t key_length() const { return map.row_count(); }
};

struct SecrecyWitness {
    enum class Kind { realization_pair, skewed_transcript };
    Kind kind = Kind::realization_pair;
    int terminal = 0;      // realization_pair: the terminal that cannot decide
    BitVector x1, x2;      // realization_pair: same (observation, transcript), different key
    BitVector transcript;  // skewed_transcript: conditional key distribution not uniform
};

struct SecrecyReport {
    std::map<int, bool> recoverable; // per terminal in A
    bool uniform_conditional = false;
    bool key_length_consistent = false;
    bool security_index_zero = false;
    std::optional<SecrecyWitness> witness;
    std::optional<double> security_index_estimate; // diagnostic, failures only
};

// One parity bit per adjacent-edge pair, broadcast by the shared vertex.
struct ParityCheck {
    int vertex = 0;
    std::pair<int, int> edge_a; // summed edge bits
    std::pair<int, int> edge_b;
};

// Lemma-style tree communication of |T| - 1 bits whose null space over edge
// labelings is exactly {all-zero, all-one}. Throws GraphError on a malformed
// tree. A single edge yields no checks.
std::vector<ParityCheck> tree_lc(const SteinerTree& t);

struct PackingProtocol {
    LinearScheme scheme;
    KeyMap key_map;
    long long key_length = 0;
    IntegerPacking packing; // witness packing of G^{(n)}
};

// Tree-XOR packing protocol: tree parities for every packed tree plus raw
// broadcast of leftover edge bits; the key takes one designated bit per
// packed tree (its lexicographically smallest edge copy). Scheme length is
// n|E| - mu, key length mu.
PackingProtocol packing_protocol(const Multigraph& g, const TerminalSet& a, long long n,
                                 const Caps& caps = {});

struct LcoViolation {
    int terminal = 0;
    BitVector kernel_vector; // nonzero, vanishes on the terminal's coordinates
};

struct IsLcoResult {
    bool ok = false;
    std::optional<LcoViolation> violation;
};

// Perfect-omniscience test: for every j in A no nonzero global vector that
// vanishes on j's coordinates may lie in the kernel of the stacked map.
IsLcoResult is_lco(const LinearScheme& scheme, const TerminalSet& a);

struct RandomLcoResult {
    std::optional<LinearScheme> scheme; // accepted scheme
    std::optional<LcoViolation> violation;
    bool accepted() const { return scheme.has_value(); }
};

// Draws each L_i with fair-coin entries from a seeded mt19937_64 (one low
// bit per draw, row-major, terminals ascending) and accepts iff is_lco does.
RandomLcoResult random_lco(const Multigraph& g, const TerminalSet& a, long long n,
                           const std::vector<long long>& lengths, std::uint64_t seed);

// b_i = ceil(n (R_i + epsilon)), the random-scheme length choice.
std::vector<long long> lco_lengths_from_rates(const std::vector<Rational>& rates,
                                              long long n,
                                              const Rational& epsilon = Rational(1, 10));

// Coset-index key: completes the stacked row space by unit vectors on its
// non-pivot coordinates; key length = total bits - rank.
KeyMap extract_key(const LinearScheme& scheme);

// Exact validity check for a key map against a scheme.
bool key_map_valid(const LinearScheme& scheme, const KeyMap& km);

struct RunResult {
    Transcript transcript;
    BitVector key;
    std::map<int, BitVector> decoded; // per terminal in A
};

// Applies the scheme and key map to a realization and decodes at every
// terminal of A by exact elimination. Throws on decoding ambiguity, which
// cannot happen for accepted schemes.
RunResult run(const LinearScheme& scheme, const KeyMap& km, const TerminalSet& a,
              const SourceRealization& x);

// Exhaustive verification over all 2^total equiprobable realizations:
// perfect recoverability at each terminal of A and exact conditional
// uniformity of the key given the transcript.
SecrecyReport verify_perfect_secrecy(const LinearScheme& scheme, const KeyMap& km,
                                     const TerminalSet& a, const Caps& caps = {});

// Text serialization of scheme plus key map (header with dimensions and the
// canonical pair order, then 0/1 rows).
std::string serialize_scheme(const LinearScheme& scheme, const KeyMap& km);

} // namespace pin

#endif
