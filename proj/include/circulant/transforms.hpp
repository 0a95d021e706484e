#pragma once

/**
 * @file transforms.hpp
 * @brief The two jump-set maps: multiplier images and the Theta residue map.
 *
 * Multiplying a connection set by a unit a always yields an isomorphic
 * circulant graph.  The map Theta_{n,r,t} with m = gcd(n, r) > 1 sends
 * x = qm + j (0 <= j < m) to x + j*t*m mod n; it fixes multiples of m and is
 * a bijection on Z_n, but the image of a symmetric set need not be symmetric.
 * When it is, the image is again a circulant graph, possibly one that no
 * multiplier reaches.
 */

#include <optional>
#include <set>
#include <vector>

#include "circulant/zmod.hpp"

namespace circulant {

/// Parameters of a Theta map on Z_n: requires gcd(n, r) = m > 1.
/// t is stored reduced mod n/m (Theta is periodic in t with period n/m).
struct ThetaParams {
    ThetaParams(const Modulus& n, i64 r, i64 t);

    i64 n;
    i64 r;
    i64 t;
    i64 m;  ///< gcd(n, r)
};

/// Image of the jump set under x -> a*x mod n.  Throws NotAUnitError
/// unless gcd(n, a) = 1.
CirculantGraph adams_image(const CirculantGraph& g, i64 a);

/// Theta_{n,r,t}(x) = x + (x mod m)*t*m mod n.
i64 theta_residue(i64 x, const ThetaParams& p);

/// Pointwise Theta image of a set of residues.  Always the same cardinality
/// as the input (Theta is a bijection); not necessarily symmetric.
std::set<i64> theta_set(const std::set<i64>& s, const ThetaParams& p);

/// True iff s = {n - x : x in s}; such a set is the full connection set of
/// a circulant graph.  Requires 0 not in s.
bool is_symmetric(const std::set<i64>& s, const Modulus& n);

/// Applies Theta to the full connection set of g.  Returns the image graph
/// when the image set is symmetric, std::nullopt otherwise.
/// r may be any residue with gcd(n, r) > 1; it need not be a jump of g.
std::optional<CirculantGraph> theta_graph(const CirculantGraph& g, i64 r, i64 t);

}  // namespace circulant
