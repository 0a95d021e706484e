#pragma once

/**
 * @file zmod.hpp
 * @brief Residues mod n, canonical jump sets and circulant graphs.
 *
 * A circulant graph C_n(R) has vertex set Z_n and an edge {v, v+r} for every
 * r in the connection set.  Jump sets are kept in canonical form: sorted,
 * duplicate-free values in [1, floor(n/2)].  The full (symmetric) connection
 * set {r, n-r : r in R} is what the adjacency relation and the transform maps
 * operate on.
 */

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "circulant/errors.hpp"

namespace circulant {

using i64 = std::int64_t;

/// Modulus n >= 3 of a residue ring Z_n.
class Modulus {
public:
    explicit Modulus(i64 n);
    i64 value() const { return n_; }
    friend auto operator<=>(const Modulus&, const Modulus&) = default;

private:
    i64 n_;
};

/// x mod n normalized into [0, n).
i64 mod(i64 x, i64 n);

/// Non-negative gcd; gcd_i64(0, n) = n.
i64 gcd_i64(i64 a, i64 b);

/// Fold arbitrary integers into canonical jumps in [1, floor(n/2)].
/// Values are reduced mod n and values above n/2 are replaced by n - value;
/// duplicates collapse.  Throws ZeroJumpError if any value is 0 mod n.
std::vector<i64> reflexive_reduce(const std::vector<i64>& values, const Modulus& n);

/// Canonical set of jumps in [1, floor(n/2)] attached to a modulus.
class JumpSet {
public:
    JumpSet(const Modulus& n, const std::vector<i64>& values);
    const std::vector<i64>& jumps() const { return jumps_; }
    std::size_t size() const { return jumps_.size(); }
    bool contains(i64 r) const;
    friend auto operator<=>(const JumpSet&, const JumpSet&) = default;

private:
    std::vector<i64> jumps_;
};

/// Symmetric closure {r, n-r : r in jumps}, sorted ascending.
/// For even n the jump n/2 contributes one element, not two.
std::vector<i64> expand_full(const JumpSet& jumps, const Modulus& n);

/// Undirected Cayley graph of Z_n with connection set expand_full(jumps).
class CirculantGraph {
public:
    CirculantGraph(const Modulus& n, const JumpSet& jumps);
    CirculantGraph(i64 n, const std::vector<i64>& values);

    const Modulus& modulus() const { return n_; }
    i64 order() const { return n_.value(); }
    const std::vector<i64>& jumps() const { return jumps_.jumps(); }
    const JumpSet& jump_set() const { return jumps_; }

    /// Full symmetric connection set, ascending.
    std::vector<i64> full_set() const;

    /// Degree of every vertex (the graph is regular).
    i64 degree() const;

    /// True iff (u - v) mod n is in the full connection set.
    bool adjacent(i64 u, i64 v) const;

    /// Connected iff gcd(n, r_1, ..., r_k) = 1.
    bool is_connected() const;

    /// Canonical text form "C<n>(<j1>,<j2>,...)".
    std::string to_text() const;

    friend auto operator<=>(const CirculantGraph&, const CirculantGraph&) = default;

private:
    Modulus n_;
    JumpSet jumps_;
};

/// Multiset of gcd(n, r) over the jumps, sorted ascending.
std::vector<i64> gcd_profile(const CirculantGraph& g);

/// Additive order n / gcd(n, r) of a residue r: the length of the cycle
/// 0, r, 2r, ... back to 0.
i64 periodic_cycle_length(const Modulus& n, i64 r);

/// Units of Z_n in ascending order.
std::vector<i64> units(const Modulus& n);

/// Adjacency spectrum lambda_k = sum_{s in full set} cos(2 pi k s / n),
/// sorted descending, each value quantized to the comparison tolerance.
/// Equal spectra are necessary (not sufficient) for isomorphism.
std::vector<double> spectrum_invariant(const CirculantGraph& g);

/// Tolerance used to quantize spectrum entries before comparison.
inline constexpr double kSpectrumTolerance = 1e-9;

}  // namespace circulant
