#include "circulant/orbits.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace circulant {

bool AdamsOrbit::contains(const CirculantGraph& g) const {
    return witness(g).has_value();
}

std::optional<i64> AdamsOrbit::witness(const CirculantGraph& g) const {
    auto it = std::lower_bound(members.begin(), members.end(), g,
                               [](const auto& m, const CirculantGraph& v) { return m.first < v; });
    if (it != members.end() && it->first == g) {
        return it->second;
    }
    return std::nullopt;
}

AdamsOrbit adams_orbit(const CirculantGraph& g) {
    std::map<CirculantGraph, i64> witness;
    for (i64 a : units(g.modulus())) {
        witness.emplace(adams_image(g, a), a);  // keeps the smallest a
    }
    AdamsOrbit orbit{g, {witness.begin(), witness.end()}};
    return orbit;
}

std::vector<VOrbitEntry> v_orbit(const CirculantGraph& g, i64 r) {
    ThetaParams probe(g.modulus(), r, 0);  // validates gcd(n, r) > 1
    const i64 span = g.order() / probe.m;
    std::set<CirculantGraph> seen;
    std::vector<VOrbitEntry> out;
    for (i64 t = 0; t < span; ++t) {
        if (auto img = theta_graph(g, r, t); img && seen.insert(*img).second) {
            out.push_back({t, *img});
        }
    }
    return out;
}

Type2Group type2_group(const CirculantGraph& g, i64 r) {
    ThetaParams probe(g.modulus(), r, 0);
    const i64 m = probe.m;
    const i64 n = g.order();
    if (std::none_of(g.jumps().begin(), g.jumps().end(),
                     [m](i64 j) { return j % m == 0; })) {
        throw NoMultipleOfMError("no jump of " + g.to_text() + " is a multiple of " +
                                 std::to_string(m));
    }

    const AdamsOrbit orbit = adams_orbit(g);
    const i64 span = n / m;
    i64 t1 = 0;
    for (i64 t = 1; t < span; ++t) {
        if (auto img = theta_graph(g, r, t); img && !orbit.contains(*img)) {
            t1 = t;
            break;
        }
    }

    Type2Group group{g, mod(r, n), m, t1, {}};
    if (t1 == 0) {
        group.members.push_back(g);
        return group;
    }

    const i64 steps = span / std::gcd(t1, span);  // size of <t1> in Z_{n/m}
    std::set<CirculantGraph> seen;
    i64 t = 0;
    for (i64 j = 0; j < steps; ++j, t = mod(t + t1, span)) {
        auto img = theta_graph(g, r, t);
        if (!img) {
            throw TheoremViolationError("group closure failed: Theta image at t=" +
                                        std::to_string(t) + " of " + g.to_text() +
                                        " is not circulant");
        }
        if (j > 0 && *img != g && orbit.contains(*img)) {
            throw TheoremViolationError("group closure failed: Theta image at t=" +
                                        std::to_string(t) + " of " + g.to_text() +
                                        " is a multiplier image of the base");
        }
        if (seen.insert(*img).second) {
            group.members.push_back(*img);
        }
    }
    return group;
}

IsoVerdict IsoVerdict::not_isomorphic() { return {Kind::NotIsomorphic, 0, 0, 0, {}, {}}; }
IsoVerdict IsoVerdict::adams(i64 a) { return {Kind::Adams, a, 0, 0, {}, {}}; }
IsoVerdict IsoVerdict::type2(i64 r, i64 t) { return {Kind::Type2, 0, r, t, {}, {}}; }
IsoVerdict IsoVerdict::composite(std::vector<IsoStep> path) {
    return {Kind::Composite, 0, 0, 0, std::move(path), {}};
}
IsoVerdict IsoVerdict::unknown() { return {Kind::Unknown, 0, 0, 0, {}, {}}; }

std::string to_string(IsoVerdict::Kind kind) {
    switch (kind) {
        case IsoVerdict::Kind::NotIsomorphic: return "NotIsomorphic";
        case IsoVerdict::Kind::Adams: return "Adams";
        case IsoVerdict::Kind::Type2: return "Type2";
        case IsoVerdict::Kind::Composite: return "Composite";
        case IsoVerdict::Kind::Unknown: return "Unknown";
    }
    return "Unknown";
}

IsoVerdict classify_pair(const CirculantGraph& g1, const CirculantGraph& g2,
                         const SearchLimits& limits) {
    if (g1.order() != g2.order()) {
        throw OrderMismatchError("cannot classify graphs of different order: " + g1.to_text() +
                                 " vs " + g2.to_text());
    }
    const i64 n = g1.order();

    // Cheap necessary conditions first.
    if (g1.jumps().size() != g2.jumps().size() || gcd_profile(g1) != gcd_profile(g2) ||
        spectrum_invariant(g1) != spectrum_invariant(g2)) {
        return IsoVerdict::not_isomorphic();
    }

    for (i64 a : units(g1.modulus())) {
        if (adams_image(g1, a) == g2) {
            return IsoVerdict::adams(a);
        }
    }

    // A Type-2 verdict needs at least three jumps and a shared jump with a
    // common factor with n.
    if (g1.jumps().size() >= 3) {
        for (i64 r : g1.jumps()) {
            const i64 m = std::gcd(n, r);
            if (m <= 1 || !g2.jump_set().contains(r)) {
                continue;
            }
            for (i64 t = 1; t < n / m; ++t) {
                if (auto img = theta_graph(g1, r, t); img && *img == g2) {
                    return IsoVerdict::type2(r, t);
                }
            }
        }
    }

    if (auto path = composite_search(g1, g2, limits.max_depth)) {
        return IsoVerdict::composite(std::move(*path));
    }

    oracle::OracleOptions opts;
    opts.node_budget = limits.node_budget;
    auto res = oracle::brute_force_isomorphic(g1, g2, opts);
    switch (res.outcome) {
        case oracle::OracleResult::Outcome::Yes: {
            IsoVerdict v = IsoVerdict::composite({});
            v.oracle_certificate = std::move(res.certificate);
            return v;
        }
        case oracle::OracleResult::Outcome::No:
            return IsoVerdict::not_isomorphic();
        case oracle::OracleResult::Outcome::Exceeded:
            return IsoVerdict::unknown();
    }
    return IsoVerdict::unknown();
}

std::optional<std::vector<IsoStep>> composite_search(const CirculantGraph& g1,
                                                     const CirculantGraph& g2, int max_depth) {
    if (g1.order() != g2.order()) {
        throw OrderMismatchError("composite search needs equal orders");
    }
    if (g1 == g2) {
        return std::vector<IsoStep>{};
    }
    const i64 n = g1.order();
    const std::vector<i64> all_units = units(g1.modulus());

    struct Node {
        CirculantGraph g;
        int depth;
        int parent;
        IsoStep step;
        bool via_adams;
    };
    std::vector<Node> nodes;
    nodes.push_back({g1, 0, -1, IsoStep::adams(1), false});
    std::set<CirculantGraph> visited{g1};
    std::deque<int> queue{0};

    auto unwind = [&nodes](int idx) {
        std::vector<IsoStep> path;
        for (int i = idx; nodes[i].parent >= 0; i = nodes[i].parent) {
            path.push_back(nodes[i].step);
        }
        std::reverse(path.begin(), path.end());
        return path;
    };

    while (!queue.empty()) {
        const int idx = queue.front();
        queue.pop_front();
        const Node node = nodes[idx];
        if (node.depth == max_depth) {
            continue;
        }
        auto visit = [&](const CirculantGraph& child, const IsoStep& step, bool via_adams)
            -> std::optional<std::vector<IsoStep>> {
            if (!visited.insert(child).second) {
                return std::nullopt;
            }
            nodes.push_back({child, node.depth + 1, idx, step, via_adams});
            if (child == g2) {
                return unwind(static_cast<int>(nodes.size()) - 1);
            }
            queue.push_back(static_cast<int>(nodes.size()) - 1);
            return std::nullopt;
        };

        // Theta moves first, then multipliers; within each family ascending,
        // so the first goal hit carries the smallest witness.
        for (i64 r : node.g.jumps()) {
            const i64 m = std::gcd(n, r);
            if (m <= 1) {
                continue;
            }
            for (i64 t = 1; t < n / m; ++t) {
                if (auto img = theta_graph(node.g, r, t)) {
                    if (auto path = visit(*img, IsoStep::theta(r, t), false)) {
                        return path;
                    }
                }
            }
        }
        // Consecutive multiplier steps compose into one, so a shortest path
        // never needs a multiplier move right after another.
        if (!node.via_adams) {
            for (i64 a : all_units) {
                if (a == 1) {
                    continue;
                }
                if (auto path = visit(adams_image(node.g, a), IsoStep::adams(a), true)) {
                    return path;
                }
            }
        }
    }
    return std::nullopt;
}

namespace {

/// Enumerates k-subsets of [1, half] in lexicographic order, invoking fn on
/// each; fn returns false to abort the scan.
template <typename Fn>
bool for_each_jump_set(i64 half, std::size_t k, std::vector<i64>& current, i64 next, Fn&& fn) {
    if (current.size() == k) {
        return fn(current);
    }
    for (i64 v = next; v <= half; ++v) {
        current.push_back(v);
        const bool keep_going = for_each_jump_set(half, k, current, v + 1, fn);
        current.pop_back();
        if (!keep_going) {
            return false;
        }
    }
    return true;
}

}  // namespace

CiScanReport ci_scan(const CirculantGraph& g, i64 max_candidates,
                     const oracle::OracleOptions& oracle_options) {
    CiScanReport report{g, gcd_profile(g), 0, 0, 0, {}};
    const i64 n = g.order();
    const i64 half = n / 2;
    const std::size_t k = g.jumps().size();
    const AdamsOrbit orbit = adams_orbit(g);

    std::vector<i64> current;
    for_each_jump_set(half, k, current, 1, [&](const std::vector<i64>& jumps) {
        CirculantGraph candidate(n, jumps);
        if (candidate.jumps().size() != k || gcd_profile(candidate) != report.profile) {
            return true;
        }
        if (++report.candidates_considered > max_candidates) {
            throw BudgetExceededError("ci_scan: more than " + std::to_string(max_candidates) +
                                      " candidate sets match the profile of " + g.to_text());
        }
        if (orbit.contains(candidate)) {
            return true;  // multiplier image, isomorphic by construction
        }
        ++report.oracle_calls;
        auto res = oracle::brute_force_isomorphic(g, candidate, oracle_options);
        switch (res.outcome) {
            case oracle::OracleResult::Outcome::Yes:
                report.violations.push_back({candidate, std::move(*res.certificate)});
                break;
            case oracle::OracleResult::Outcome::No:
                break;
            case oracle::OracleResult::Outcome::Exceeded:
                ++report.oracle_exceeded;
                break;
        }
        return true;
    });
    return report;
}

ThetaTable theta_table(const CirculantGraph& g, i64 r) {
    ThetaParams probe(g.modulus(), r, 0);
    const i64 n = g.order();
    const i64 span = n / probe.m;
    ThetaTable table{g, mod(r, n), probe.m, span, g.full_set(), {}};
    const std::set<i64> base_set(table.columns.begin(), table.columns.end());

    for (i64 t = 1; t <= span; ++t) {
        if (theta_set(base_set, ThetaParams(g.modulus(), r, t)) == base_set) {
            table.period = t;
            break;
        }
    }
    if (span % table.period != 0) {
        throw TheoremViolationError("set period " + std::to_string(table.period) +
                                    " does not divide " + std::to_string(span));
    }

    const AdamsOrbit orbit = adams_orbit(g);
    for (i64 t = 0; t < table.period; ++t) {
        ThetaParams p(g.modulus(), r, t);
        ThetaTableRow row{t, {}, ""};
        row.values.reserve(table.columns.size());
        for (i64 x : table.columns) {
            row.values.push_back(theta_residue(x, p));
        }
        if (t == 0) {
            row.label = "Identity";
        } else {
            const std::set<i64> image(row.values.begin(), row.values.end());
            if (!is_symmetric(image, g.modulus())) {
                row.label = "NS";
            } else {
                CirculantGraph h(n, row.values);
                if (h == g) {
                    row.label = "Identity";
                } else if (orbit.contains(h)) {
                    row.label = "Type-1";
                } else {
                    row.label = "Type-2";
                }
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace circulant
