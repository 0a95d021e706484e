#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force isomorphism decision for circulant graphs.
 *
 * Deliberately independent of the structured transforms: the search knows
 * only the adjacency relation.  A Yes always carries a vertex bijection that
 * verify_certificate re-checks edge by edge, and a No means the pruned
 * search space was exhausted.  Running out of budget is its own outcome,
 * never silently converted to No.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "circulant/zmod.hpp"

// structured verdicts convertible to certificates live in orbits.hpp
namespace circulant {
struct IsoVerdict;
}

namespace circulant::oracle {

/// Vertex bijection perm[v] on Z_n mapping a graph onto another.
struct IsoCertificate {
    std::vector<i64> perm;
};

struct OracleOptions {
    i64 node_budget = 10'000'000;  ///< backtracking nodes before giving up
    bool use_spectrum_filter = true;
};

struct OracleResult {
    enum class Outcome { Yes, No, Exceeded };
    Outcome outcome;
    std::optional<IsoCertificate> certificate;  ///< present iff Yes
    i64 nodes_explored = 0;
};

/// Decides whether g1 and g2 are isomorphic by backtracking over vertex
/// maps with perm[0] = 0 (sound for vertex-transitive graphs), pruning on
/// per-pair difference invariants (adjacency, graph distance, common
/// neighbour counts).  Deterministic: candidates are tried in ascending
/// order, so node counts are reproducible.
/// Throws OrderMismatchError if the orders differ.
OracleResult brute_force_isomorphic(const CirculantGraph& g1, const CirculantGraph& g2,
                                    const OracleOptions& options = {});

/// Checks that cert.perm is a bijection on Z_n and maps edges of g1 exactly
/// onto edges of g2.  Throws NotABijectionError; returns false on any
/// adjacency mismatch.
bool verify_certificate(const CirculantGraph& g1, const CirculantGraph& g2,
                        const IsoCertificate& cert);

/// Converts a structured verdict (multiplier, Theta parameters, or a
/// composite chain) into an explicit vertex bijection.  Throws
/// NotAWitnessVerdictError for verdict kinds that carry no witness.
IsoCertificate witness_to_certificate(const IsoVerdict& verdict, const Modulus& n);

}  // namespace circulant::oracle
