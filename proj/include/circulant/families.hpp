#pragma once

/**
 * @file families.hpp
 * @brief Parametric families of order-np^3 circulant graphs that the Theta
 *        maps cycle through.
 *
 * For a prime p, n >= 1, 1 <= x <= p-1 and 0 <= y <= np-1, the base jumps
 * d_i = (i-1)xpn + x + yp (1 <= i <= p) spawn p connection sets
 *
 *   R_i = {p, np^3 - p} ∪ {k np^2 + d_i : 0 <= k < p} ∪ {k np^2 - d_i : 1 <= k <= p}
 *
 * of size 2p+2 each.  Theta_{np^3, p, jn} maps R_i onto R_{i+j} (index mod p),
 * and no multiplier does, so the p graphs form a cyclic group of order p
 * under the Theta maps.  The extended variant replaces the pair
 * {p, np^3 - p} by multiples p*p_j for a list of p_j with gcd 1.
 */

#include <string>
#include <vector>

#include "circulant/orbits.hpp"
#include "circulant/zmod.hpp"

namespace circulant {

bool is_prime(i64 p);

/// Parameters (p, n, x, y) of one family; validated on construction.
struct FamilyParams {
    FamilyParams(i64 p, i64 n, i64 x, i64 y);

    i64 p;
    i64 n;
    i64 x;
    i64 y;

    i64 graph_order() const { return n * p * p * p; }
    i64 block_step() const { return n * p * p; }
    /// x + y p, the base jump of the first member.
    i64 seed() const { return x + y * p; }

    friend auto operator<=>(const FamilyParams&, const FamilyParams&) = default;
};

/// Extended variant: the multiples block {p p_j, np^3 - p p_j}.
/// Lists of two or more multiples must have gcd 1; a single multiple may be
/// anything nonzero mod np^2 (the probe pattern for substituted jumps).
struct ExtendedParams {
    ExtendedParams(FamilyParams base, std::vector<i64> multiples);

    FamilyParams base;
    std::vector<i64> multiples;
};

/// d_i = (i-1) x p n + x + y p mod np^3.  Throws BadIndexError unless
/// 1 <= i <= p.
i64 family_base_jump(const FamilyParams& fp, i64 i);

/// The i-th member graph.  Throws DegenerateSetError if the construction
/// yields fewer than 2p+2 connection-set elements.
CirculantGraph family_set(const FamilyParams& fp, i64 i);

/// All p members in index order; throws TheoremViolationError if any two
/// coincide.
std::vector<CirculantGraph> family_all(const FamilyParams& fp);

/// The i-th member of the extended family.  Throws DegenerateSetError when
/// multiples collide with each other or with the non-multiple elements.
CirculantGraph extended_family_set(const ExtendedParams& ep, i64 i);

/// The parameter tuple with seed np^2 - (x + y p), which generates the same
/// member sets.  A tuple may be its own complement; that is legal.
FamilyParams complement_params(const FamilyParams& fp);

bool is_complement_fixed_point(const FamilyParams& fp);

/// Checks run by verify_family, with the scan sizes for the report.
struct FamilyReport {
    bool extended = false;
    FamilyParams params;
    std::vector<i64> multiples;
    std::vector<CirculantGraph> members;
    i64 t2_order = 0;
    i64 units_scanned = 0;
    bool theta_cycles = false;
    bool pairwise_non_adams = false;
    bool t2_group_matches = false;
    bool invariants_agree = false;
};

/// Verifies the structure of a family end to end: Theta_{p, jn} cycles the
/// members, no unit maps one member onto another, the Theta group of the
/// first member has order p with exactly the members as elements, and gcd
/// profiles and spectra agree across members.  Throws TheoremViolationError
/// on the first failed check.
FamilyReport verify_family(const FamilyParams& fp);
FamilyReport verify_family(const ExtendedParams& ep);

/// Text listing of every family block at (p, n): y in [0, n-1] outer,
/// x in [1, p-1] inner.  Each block is a header line followed by the p
/// member connection sets, blocks separated by blank lines.
std::string annexure_listing(i64 p, i64 n);

/// One member pair of a substituted-jump probe.
struct ProbePair {
    i64 i = 0, j = 0;  ///< member indices, i < j
    CirculantGraph gi, gj;
    bool equal_sets = false;
    i64 theta_t = -1;  ///< smallest t >= 1 with Theta_{p,t}(gi) = gj, -1 if none
    i64 adams_a = 0;   ///< smallest unit mapping gi to gj, 0 if none
    std::string label;  ///< "Type-2", "Type-1", "Equal" or "Unrelated"
};

/// Observed behaviour of the family at (p, n, x, y) after substituting the
/// multiples pair {p, -p} by {qp, -qp}.  m1 = gcd(np^3, qp) / p measures how
/// the substituted jump interacts with p; the report records verdicts only,
/// it asserts nothing.
struct ProbeReport {
    FamilyParams params;
    i64 q = 1;
    i64 m = 0;         ///< p
    i64 m1 = 0;        ///< gcd(np^3, qp) / p
    i64 gcd_m_m1 = 0;
    std::vector<CirculantGraph> members;
    std::vector<ProbePair> pairs;
};

ProbeReport conjecture_probe(const FamilyParams& fp, i64 q);

}  // namespace circulant
