#pragma once

/**
 * @file orbits.hpp
 * @brief Orbits and groups of the two map families, and pair classification.
 *
 * The multiplier maps x -> ax partition connection sets into orbits; the
 * Theta maps generate cyclic groups whose non-trivial members are circulant
 * images not reachable by any multiplier.  classify_pair stacks the two
 * (multiplier scan, then Theta scan, then bounded composition search, then
 * the brute-force oracle) into a single verdict.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "circulant/oracle.hpp"
#include "circulant/transforms.hpp"
#include "circulant/zmod.hpp"

namespace circulant {

/// Orbit of a graph under all multiplier maps, with the smallest unit
/// reaching each member.  Members are sorted canonically.
struct AdamsOrbit {
    CirculantGraph base;
    std::vector<std::pair<CirculantGraph, i64>> members;

    std::size_t size() const { return members.size(); }
    bool contains(const CirculantGraph& g) const;
    /// Smallest unit a with a*base = g; nullopt if g is not a member.
    std::optional<i64> witness(const CirculantGraph& g) const;
};

AdamsOrbit adams_orbit(const CirculantGraph& g);

/// One circulant image of the Theta scan, tagged with the smallest t
/// producing it.
struct VOrbitEntry {
    i64 t;
    CirculantGraph graph;
};

/// Distinct circulant graphs among Theta_{r,t}(g) for t in [0, n/m),
/// each with its smallest t, in order of first appearance.
/// Throws InvalidRError if gcd(n, r) = 1.
std::vector<VOrbitEntry> v_orbit(const CirculantGraph& g, i64 r);

/// Cyclic group generated by the first Theta map whose image is circulant
/// but reachable by no multiplier.  order() == 1 means no such map exists.
struct Type2Group {
    CirculantGraph base;
    i64 r;
    i64 m;   ///< gcd(n, r)
    i64 t1;  ///< generator step; 0 when the group is trivial
    /// Distinct member graphs in generation order (base first).
    std::vector<CirculantGraph> members;

    i64 order() const { return static_cast<i64>(members.size()); }
};

/// Builds the group for (g, r).  Throws InvalidRError if gcd(n, r) = 1 and
/// NoMultipleOfMError if no jump of g is divisible by gcd(n, r).
/// Verifies closure (every generated image circulant, non-base members not
/// multiplier-images of the base) and throws TheoremViolationError if that
/// fails.
Type2Group type2_group(const CirculantGraph& g, i64 r);

/// One step of a composite isomorphism chain.
struct IsoStep {
    enum class Kind { Adams, Theta };
    Kind kind;
    i64 a = 0;  ///< multiplier (Adams steps)
    i64 r = 0;  ///< Theta parameters (Theta steps)
    i64 t = 0;

    static IsoStep adams(i64 a) { return {Kind::Adams, a, 0, 0}; }
    static IsoStep theta(i64 r, i64 t) { return {Kind::Theta, 0, r, t}; }
};

/// Outcome of classify_pair.  Exactly one of the witness fields is
/// meaningful, selected by kind.
struct IsoVerdict {
    enum class Kind { NotIsomorphic, Adams, Type2, Composite, Unknown };
    Kind kind = Kind::Unknown;
    i64 a = 0;          ///< Adams
    i64 r = 0, t = 0;   ///< Type2
    std::vector<IsoStep> path;  ///< Composite; may be empty when the proof
                                ///< is an oracle certificate only
    std::optional<oracle::IsoCertificate> oracle_certificate;

    static IsoVerdict not_isomorphic();
    static IsoVerdict adams(i64 a);
    static IsoVerdict type2(i64 r, i64 t);
    static IsoVerdict composite(std::vector<IsoStep> path);
    static IsoVerdict unknown();
};

std::string to_string(IsoVerdict::Kind kind);

/// Budgets for the classification pipeline.
struct SearchLimits {
    int max_depth = 3;              ///< composition search depth
    i64 node_budget = 10'000'000;   ///< oracle backtracking nodes
};

/// Full classification of an ordered pair of graphs of equal order:
/// multiplier scan (smallest a), then Theta scan over shared jumps with a
/// common factor (smallest r, then t; only for jump sets of size >= 3),
/// then breadth-first composition search, then the oracle.
/// Verdict preference: Adams over Type2 over Composite.
/// Throws OrderMismatchError if the orders differ.
IsoVerdict classify_pair(const CirculantGraph& g1, const CirculantGraph& g2,
                         const SearchLimits& limits = {});

/// Shortest chain of moves from g1 to g2, at most max_depth long, where a
/// move is any Theta map with r a jump of the current graph (circulant
/// image required) or any non-identity multiplier.  Breadth-first with
/// deterministic expansion (Theta moves by ascending r then t, before
/// multiplier moves by ascending a), so ties resolve to the smallest
/// witness.  nullopt if no chain exists within the depth.
std::optional<std::vector<IsoStep>> composite_search(const CirculantGraph& g1,
                                                     const CirculantGraph& g2,
                                                     int max_depth);

/// An isomorphic same-order graph outside the multiplier orbit of the base.
struct CiViolation {
    CirculantGraph graph;
    oracle::IsoCertificate certificate;
};

struct CiScanReport {
    CirculantGraph base;
    std::vector<i64> profile;
    i64 candidates_considered = 0;  ///< same-size, same-profile jump sets
    i64 oracle_calls = 0;
    i64 oracle_exceeded = 0;
    std::vector<CiViolation> violations;

    /// True iff every isomorphic candidate was a multiplier image and no
    /// oracle call ran out of budget.
    bool ci_holds() const { return violations.empty() && oracle_exceeded == 0; }
};

/// Scans every jump set of the same size and gcd profile as g, asking the
/// oracle whether it is isomorphic to g without being a multiplier image.
/// Throws BudgetExceededError if more than max_candidates sets match the
/// profile.
CiScanReport ci_scan(const CirculantGraph& g, i64 max_candidates = 100'000,
                     const oracle::OracleOptions& oracle_options = {});

/// One row of a Theta scan table.
struct ThetaTableRow {
    i64 t;
    std::vector<i64> values;  ///< raw Theta images, one per column
    std::string label;        ///< "Identity", "Type-1", "Type-2" or "NS"
};

struct ThetaTable {
    CirculantGraph base;
    i64 r;
    i64 m;
    i64 period;  ///< smallest P >= 1 with Theta_P(S) = S; divides n/m
    std::vector<i64> columns;  ///< full connection set of the base
    std::vector<ThetaTableRow> rows;  ///< one per t in [0, period)
};

/// Tabulates Theta_{r,t} on the full connection set for t in [0, P) where
/// P is the set-period of the scan.  Labels: identity row, symmetric image
/// reachable by a multiplier ("Type-1"), symmetric image reachable by no
/// multiplier ("Type-2"), non-symmetric image ("NS").
ThetaTable theta_table(const CirculantGraph& g, i64 r);

}  // namespace circulant
