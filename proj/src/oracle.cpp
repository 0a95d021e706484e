#include "circulant/oracle.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>

#include "circulant/orbits.hpp"

namespace circulant::oracle {

namespace {

/// Difference-indexed adjacency: adj[d] = 1 iff d is in the full
/// connection set.
std::vector<char> difference_adjacency(const CirculantGraph& g) {
    std::vector<char> adj(static_cast<std::size_t>(g.order()), 0);
    for (i64 s : g.full_set()) {
        adj[static_cast<std::size_t>(s)] = 1;
    }
    return adj;
}

/// Graph distance from vertex 0 to each difference class (-1 when
/// unreachable); in a circulant graph dist(u, v) depends only on u - v.
std::vector<i64> difference_distances(i64 n, const std::vector<char>& adj) {
    std::vector<i64> dist(static_cast<std::size_t>(n), -1);
    dist[0] = 0;
    std::deque<i64> queue{0};
    while (!queue.empty()) {
        const i64 u = queue.front();
        queue.pop_front();
        for (i64 s = 1; s < n; ++s) {
            if (!adj[static_cast<std::size_t>(s)]) {
                continue;
            }
            const i64 v = mod(u + s, n);
            if (dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

/// Common neighbour counts |N(0) ∩ N(d)| per difference class.
std::vector<i64> common_neighbour_counts(i64 n, const std::vector<char>& adj) {
    std::vector<i64> cn(static_cast<std::size_t>(n), 0);
    for (i64 d = 0; d < n; ++d) {
        i64 count = 0;
        for (i64 s = 1; s < n; ++s) {
            if (adj[static_cast<std::size_t>(s)] && adj[static_cast<std::size_t>(mod(s - d, n))]) {
                ++count;
            }
        }
        cn[static_cast<std::size_t>(d)] = count;
    }
    return cn;
}

/// Walks of the given length from 0 to each difference class, by repeated
/// convolution with the connection set.
std::vector<i64> walk_counts(i64 n, const std::vector<char>& adj, int length) {
    std::vector<i64> cur(static_cast<std::size_t>(n), 0);
    cur[0] = 1;
    for (int l = 0; l < length; ++l) {
        std::vector<i64> next(static_cast<std::size_t>(n), 0);
        for (i64 d = 0; d < n; ++d) {
            if (!cur[static_cast<std::size_t>(d)]) {
                continue;
            }
            for (i64 s = 1; s < n; ++s) {
                if (adj[static_cast<std::size_t>(s)]) {
                    next[static_cast<std::size_t>(mod(d + s, n))] += cur[static_cast<std::size_t>(d)];
                }
            }
        }
        cur = std::move(next);
    }
    return cur;
}

struct DifferenceProfile {
    std::vector<char> adj;
    std::vector<i64> dist;
    std::vector<i64> cn;
    std::vector<i64> w3;
    std::vector<i64> w4;

    explicit DifferenceProfile(const CirculantGraph& g)
        : adj(difference_adjacency(g)),
          dist(difference_distances(g.order(), adj)),
          cn(common_neighbour_counts(g.order(), adj)),
          w3(walk_counts(g.order(), adj, 3)),
          w4(walk_counts(g.order(), adj, 4)) {}

    std::array<i64, 5> signature(i64 d) const {
        const auto i = static_cast<std::size_t>(d);
        return {static_cast<i64>(adj[i]), dist[i], cn[i], w3[i], w4[i]};
    }
};

/// Assignment order: breadth-first from 0 so each vertex (component seeds
/// aside) has an already-assigned neighbour to anchor its candidates.
struct VertexOrder {
    std::vector<i64> order;
    std::vector<i64> anchor;  ///< earlier-assigned neighbour, -1 for seeds
};

VertexOrder assignment_order(i64 n, const std::vector<char>& adj) {
    VertexOrder vo;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::deque<i64> queue;
    auto push = [&](i64 v, i64 parent) {
        seen[static_cast<std::size_t>(v)] = 1;
        vo.order.push_back(v);
        vo.anchor.push_back(parent);
        queue.push_back(v);
    };
    for (i64 seed = 0; seed < n; ++seed) {
        if (seen[static_cast<std::size_t>(seed)]) {
            continue;
        }
        push(seed, -1);
        while (!queue.empty()) {
            const i64 u = queue.front();
            queue.pop_front();
            for (i64 s = 1; s < n; ++s) {
                if (!adj[static_cast<std::size_t>(s)]) {
                    continue;
                }
                const i64 v = mod(u + s, n);
                if (!seen[static_cast<std::size_t>(v)]) {
                    push(v, u);
                }
            }
        }
    }
    return vo;
}

struct Searcher {
    i64 n;
    const DifferenceProfile& p1;
    const DifferenceProfile& p2;
    const VertexOrder& vo;
    i64 budget;
    i64 nodes = 0;
    bool exceeded = false;
    std::vector<i64> perm;
    std::vector<char> used;
    std::vector<i64> neighbours2;  ///< full set of g2, for anchored candidates

    Searcher(i64 n, const DifferenceProfile& p1, const DifferenceProfile& p2,
             const VertexOrder& vo, i64 budget)
        : n(n), p1(p1), p2(p2), vo(vo), budget(budget),
          perm(static_cast<std::size_t>(n), -1), used(static_cast<std::size_t>(n), 0) {
        for (i64 s = 1; s < n; ++s) {
            if (p2.adj[static_cast<std::size_t>(s)]) {
                neighbours2.push_back(s);
            }
        }
    }

    bool consistent(i64 level, i64 u, i64 w) const {
        for (i64 l = 0; l < level; ++l) {
            const i64 v = vo.order[static_cast<std::size_t>(l)];
            const i64 pv = perm[static_cast<std::size_t>(v)];
            if (p1.signature(mod(u - v, n)) != p2.signature(mod(w - pv, n))) {
                return false;
            }
        }
        return true;
    }

    bool extend(i64 level) {
        if (level == n) {
            return true;
        }
        const i64 u = vo.order[static_cast<std::size_t>(level)];
        const i64 a = vo.anchor[static_cast<std::size_t>(level)];

        std::vector<i64> candidates;
        if (a >= 0) {
            const i64 pa = perm[static_cast<std::size_t>(a)];
            candidates.reserve(neighbours2.size());
            for (i64 s : neighbours2) {
                candidates.push_back(mod(pa + s, n));
            }
            std::sort(candidates.begin(), candidates.end());
        } else {
            for (i64 w = 0; w < n; ++w) {
                if (!used[static_cast<std::size_t>(w)]) {
                    candidates.push_back(w);
                }
            }
        }

        for (i64 w : candidates) {
            if (++nodes > budget) {
                exceeded = true;
                return false;
            }
            if (used[static_cast<std::size_t>(w)] || !consistent(level, u, w)) {
                continue;
            }
            perm[static_cast<std::size_t>(u)] = w;
            used[static_cast<std::size_t>(w)] = 1;
            if (extend(level + 1)) {
                return true;
            }
            used[static_cast<std::size_t>(w)] = 0;
            perm[static_cast<std::size_t>(u)] = -1;
            if (exceeded) {
                return false;
            }
        }
        return false;
    }
};

}  // namespace

OracleResult brute_force_isomorphic(const CirculantGraph& g1, const CirculantGraph& g2,
                                    const OracleOptions& options) {
    if (g1.order() != g2.order()) {
        throw OrderMismatchError("oracle needs equal orders: " + g1.to_text() + " vs " +
                                 g2.to_text());
    }
    const i64 n = g1.order();

    if (g1.degree() != g2.degree()) {
        return {OracleResult::Outcome::No, std::nullopt, 0};
    }
    if (options.use_spectrum_filter && spectrum_invariant(g1) != spectrum_invariant(g2)) {
        return {OracleResult::Outcome::No, std::nullopt, 0};
    }

    DifferenceProfile p1(g1);
    DifferenceProfile p2(g2);

    // Any isomorphism fixing vertex 0 maps the pair class of (0, d) to some
    // (0, d') with the same invariants, so the class multisets must agree.
    {
        std::vector<std::array<i64, 5>> s1, s2;
        for (i64 d = 1; d < n; ++d) {
            s1.push_back(p1.signature(d));
            s2.push_back(p2.signature(d));
        }
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) {
            return {OracleResult::Outcome::No, std::nullopt, 0};
        }
    }

    const VertexOrder vo = assignment_order(n, p1.adj);
    Searcher search(n, p1, p2, vo, options.node_budget);

    // Vertex transitivity makes fixing 0 -> 0 sound.
    search.perm[0] = 0;
    search.used[0] = 1;
    const bool found = search.extend(1);

    if (search.exceeded) {
        return {OracleResult::Outcome::Exceeded, std::nullopt, search.nodes};
    }
    if (!found) {
        return {OracleResult::Outcome::No, std::nullopt, search.nodes};
    }
    IsoCertificate cert{search.perm};
    if (!verify_certificate(g1, g2, cert)) {
        throw TheoremViolationError("oracle produced a map that fails verification");
    }
    return {OracleResult::Outcome::Yes, std::move(cert), search.nodes};
}

bool verify_certificate(const CirculantGraph& g1, const CirculantGraph& g2,
                        const IsoCertificate& cert) {
    if (g1.order() != g2.order()) {
        throw OrderMismatchError("certificate spans graphs of different order");
    }
    const i64 n = g1.order();
    if (static_cast<i64>(cert.perm.size()) != n) {
        throw NotABijectionError("certificate has " + std::to_string(cert.perm.size()) +
                                 " entries for order " + std::to_string(n));
    }
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (i64 v : cert.perm) {
        if (v < 0 || v >= n || hit[static_cast<std::size_t>(v)]) {
            throw NotABijectionError("certificate is not a bijection on Z_" + std::to_string(n));
        }
        hit[static_cast<std::size_t>(v)] = 1;
    }

    const auto full1 = g1.full_set();
    const auto full2 = g2.full_set();
    if (full1.size() != full2.size()) {
        return false;
    }
    // Equal edge counts plus forward edge preservation pin down a perfect
    // correspondence.
    for (i64 u = 0; u < n; ++u) {
        for (i64 s : full1) {
            const i64 v = mod(u + s, n);
            if (!g2.adjacent(cert.perm[static_cast<std::size_t>(u)],
                             cert.perm[static_cast<std::size_t>(v)])) {
                return false;
            }
        }
    }
    return true;
}

IsoCertificate witness_to_certificate(const IsoVerdict& verdict, const Modulus& n) {
    const i64 N = n.value();
    auto identity = [N] {
        std::vector<i64> perm(static_cast<std::size_t>(N));
        std::iota(perm.begin(), perm.end(), 0);
        return perm;
    };
    auto multiplier_map = [N](std::vector<i64>& perm, i64 a) {
        if (std::gcd(mod(a, N), N) != 1) {
            throw NotAUnitError("witness multiplier " + std::to_string(a) +
                                " is not a unit mod " + std::to_string(N));
        }
        for (auto& v : perm) {
            v = mod(a * v, N);
        }
    };
    auto theta_map = [N](std::vector<i64>& perm, i64 r, i64 t) {
        const i64 m = std::gcd(mod(r, N), N);
        if (m <= 1) {
            throw InvalidRError("witness Theta parameter r=" + std::to_string(r) +
                                " shares no factor with " + std::to_string(N));
        }
        for (auto& v : perm) {
            v = mod(v + (v % m) * t * m, N);
        }
    };

    switch (verdict.kind) {
        case IsoVerdict::Kind::Adams: {
            std::vector<i64> perm = identity();
            multiplier_map(perm, verdict.a);
            return {std::move(perm)};
        }
        case IsoVerdict::Kind::Type2: {
            std::vector<i64> perm = identity();
            theta_map(perm, verdict.r, verdict.t);
            return {std::move(perm)};
        }
        case IsoVerdict::Kind::Composite: {
            if (verdict.path.empty()) {
                if (verdict.oracle_certificate) {
                    return *verdict.oracle_certificate;
                }
                throw NotAWitnessVerdictError(
                    "composite verdict carries neither steps nor a certificate");
            }
            std::vector<i64> perm = identity();
            for (const IsoStep& step : verdict.path) {
                if (step.kind == IsoStep::Kind::Adams) {
                    multiplier_map(perm, step.a);
                } else {
                    theta_map(perm, step.r, step.t);
                }
            }
            return {std::move(perm)};
        }
        case IsoVerdict::Kind::NotIsomorphic:
        case IsoVerdict::Kind::Unknown:
            break;
    }
    throw NotAWitnessVerdictError("verdict kind " + to_string(verdict.kind) +
                                  " carries no witness");
}

}  // namespace circulant::oracle
