#ifndef PIN_CAPS_HPP
#define PIN_CAPS_HPP

namespace pin {

// Safety limits for the exponential enumerations. Exceeding a cap raises
// CapExceededError; there is no sampling fallback.
struct Caps {
    int max_terminals = 12;                  // constraint sets grow as 2^m
    long long max_steiner_trees = 1'000'000; // distinct Steiner trees k(G)
    int max_bruteforce_bits = 24;            // exhaustive secrecy verification
    long long max_box_volume = 4'000'000;    // integer-point enumeration boxes
};

} // namespace pin

#endif
