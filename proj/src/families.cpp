#include "circulant/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "circulant/transforms.hpp"

namespace circulant {

bool is_prime(i64 p) {
    if (p < 2) {
        return false;
    }
    for (i64 d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

FamilyParams::FamilyParams(i64 p_in, i64 n_in, i64 x_in, i64 y_in)
    : p(p_in), n(n_in), x(x_in), y(y_in) {
    if (!is_prime(p)) {
        throw Error("family parameter p must be prime, got " + std::to_string(p));
    }
    if (n < 1) {
        throw Error("family parameter n must be positive, got " + std::to_string(n));
    }
    if (x < 1 || x > p - 1) {
        throw Error("family parameter x must lie in [1, p-1], got " + std::to_string(x));
    }
    if (y < 0 || y > n * p - 1) {
        throw Error("family parameter y must lie in [0, np-1], got " + std::to_string(y));
    }
}

ExtendedParams::ExtendedParams(FamilyParams base_in, std::vector<i64> multiples_in)
    : base(base_in), multiples(std::move(multiples_in)) {
    if (multiples.empty()) {
        throw Error("extended family needs at least one multiple");
    }
    for (i64 pj : multiples) {
        if (pj < 1) {
            throw Error("extended family multiples must be positive, got " + std::to_string(pj));
        }
    }
    // A single multiple is the substituted-jump probe pattern and may be
    // anything; the joint-gcd condition only constrains genuine lists.
    if (multiples.size() >= 2) {
        i64 g = 0;
        for (i64 pj : multiples) {
            g = std::gcd(g, pj);
        }
        if (g != 1) {
            throw GcdNotOneError("extended family multiples have gcd " + std::to_string(g));
        }
    }
}

i64 family_base_jump(const FamilyParams& fp, i64 i) {
    if (i < 1 || i > fp.p) {
        throw BadIndexError("family index " + std::to_string(i) + " outside [1, " +
                            std::to_string(fp.p) + "]");
    }
    return mod((i - 1) * fp.x * fp.p * fp.n + fp.seed(), fp.graph_order());
}

namespace {

/// The 2p elements {k np^2 + d : 0 <= k < p} ∪ {k np^2 - d : 1 <= k <= p}.
std::vector<i64> offset_classes(const FamilyParams& fp, i64 d) {
    const i64 order = fp.graph_order();
    const i64 step = fp.block_step();
    std::vector<i64> out;
    out.reserve(static_cast<std::size_t>(2 * fp.p));
    for (i64 k = 0; k < fp.p; ++k) {
        out.push_back(mod(k * step + d, order));
    }
    for (i64 k = 1; k <= fp.p; ++k) {
        out.push_back(mod(k * step - d, order));
    }
    return out;
}

CirculantGraph assemble_family_set(const FamilyParams& fp, i64 i,
                                   const std::vector<i64>& multiples) {
    const i64 order = fp.graph_order();
    const i64 d = family_base_jump(fp, i);

    std::set<i64> full;
    for (i64 v : offset_classes(fp, d)) {
        full.insert(v);
    }
    if (static_cast<i64>(full.size()) != 2 * fp.p) {
        throw DegenerateSetError("offset classes of d=" + std::to_string(d) + " collide mod " +
                                 std::to_string(order));
    }

    std::set<i64> multiple_jumps;
    for (i64 pj : multiples) {
        const i64 v = mod(fp.p * pj, order);
        if (v == 0) {
            throw ZeroJumpError("multiple " + std::to_string(pj) + " makes p*p_j vanish mod " +
                                std::to_string(order));
        }
        if (!multiple_jumps.insert(std::min(v, order - v)).second) {
            throw DegenerateSetError("multiples collide after reduction mod " +
                                     std::to_string(order));
        }
        if (full.count(v) || full.count(order - v)) {
            throw DegenerateSetError("multiple " + std::to_string(pj) +
                                     " collides with an offset element");
        }
        full.insert(v);
        full.insert(order - v);  // no-op when v is self-paired
    }

    return CirculantGraph(order, std::vector<i64>(full.begin(), full.end()));
}

}  // namespace

CirculantGraph family_set(const FamilyParams& fp, i64 i) {
    return assemble_family_set(fp, i, {1});
}

std::vector<CirculantGraph> family_all(const FamilyParams& fp) {
    std::vector<CirculantGraph> members;
    members.reserve(static_cast<std::size_t>(fp.p));
    for (i64 i = 1; i <= fp.p; ++i) {
        members.push_back(family_set(fp, i));
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (members[i] == members[j]) {
                throw TheoremViolationError("family members " + std::to_string(i + 1) + " and " +
                                            std::to_string(j + 1) + " coincide");
            }
        }
    }
    return members;
}

CirculantGraph extended_family_set(const ExtendedParams& ep, i64 i) {
    return assemble_family_set(ep.base, i, ep.multiples);
}

FamilyParams complement_params(const FamilyParams& fp) {
    const i64 v = fp.n * fp.p * fp.p - fp.seed();
    const i64 x2 = mod(v, fp.p);
    return FamilyParams(fp.p, fp.n, x2, (v - x2) / fp.p);
}

bool is_complement_fixed_point(const FamilyParams& fp) {
    return complement_params(fp) == fp;
}

namespace {

FamilyReport verify_members(const FamilyParams& fp, std::vector<CirculantGraph> members,
                            bool extended, std::vector<i64> multiples) {
    FamilyReport report{extended, fp, std::move(multiples), std::move(members)};
    const i64 p = fp.p;
    const i64 n = fp.n;
    const auto& ms = report.members;

    // Theta_{p, jn} must send member i to member i+j (indices mod p).
    for (i64 i = 0; i < p; ++i) {
        for (i64 j = 0; j < p; ++j) {
            auto img = theta_graph(ms[static_cast<std::size_t>(i)], p, j * n);
            if (!img || *img != ms[static_cast<std::size_t>((i + j) % p)]) {
                throw TheoremViolationError("Theta cycling failed at member " +
                                            std::to_string(i + 1) + ", step " + std::to_string(j));
            }
        }
    }
    report.theta_cycles = true;

    const std::vector<i64> us = units(ms[0].modulus());
    report.units_scanned = static_cast<i64>(us.size());
    for (i64 i = 0; i < p; ++i) {
        for (i64 j = i + 1; j < p; ++j) {
            for (i64 a : us) {
                if (adams_image(ms[static_cast<std::size_t>(i)], a) ==
                    ms[static_cast<std::size_t>(j)]) {
                    throw TheoremViolationError(
                        "members " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                        " are multiplier images under a=" + std::to_string(a));
                }
            }
        }
    }
    report.pairwise_non_adams = true;

    const Type2Group group = type2_group(ms[0], p);
    report.t2_order = group.order();
    const std::set<CirculantGraph> expected(ms.begin(), ms.end());
    const std::set<CirculantGraph> actual(group.members.begin(), group.members.end());
    if (group.order() != p || actual != expected) {
        throw TheoremViolationError("Theta group of the first member has order " +
                                    std::to_string(group.order()) + ", expected " +
                                    std::to_string(p) + " with exactly the family members");
    }
    report.t2_group_matches = true;

    for (i64 i = 1; i < p; ++i) {
        if (gcd_profile(ms[static_cast<std::size_t>(i)]) != gcd_profile(ms[0]) ||
            spectrum_invariant(ms[static_cast<std::size_t>(i)]) != spectrum_invariant(ms[0])) {
            throw TheoremViolationError("member " + std::to_string(i + 1) +
                                        " disagrees with member 1 on gcd profile or spectrum");
        }
    }
    report.invariants_agree = true;
    return report;
}

}  // namespace

FamilyReport verify_family(const FamilyParams& fp) {
    return verify_members(fp, family_all(fp), false, {1});
}

FamilyReport verify_family(const ExtendedParams& ep) {
    std::vector<CirculantGraph> members;
    members.reserve(static_cast<std::size_t>(ep.base.p));
    for (i64 i = 1; i <= ep.base.p; ++i) {
        members.push_back(extended_family_set(ep, i));
    }
    return verify_members(ep.base, std::move(members), true, ep.multiples);
}

std::string annexure_listing(i64 p, i64 n) {
    if (!is_prime(p)) {
        throw Error("annexure listing needs a prime p, got " + std::to_string(p));
    }
    if (n < 1) {
        throw Error("annexure listing needs n >= 1, got " + std::to_string(n));
    }
    std::ostringstream os;
    bool first = true;
    for (i64 y = 0; y < n; ++y) {
        for (i64 x = 1; x <= p - 1; ++x) {
            if (!first) {
                os << '\n';
            }
            first = false;
            FamilyParams fp(p, n, x, y);
            const i64 order = fp.graph_order();
            os << "T2_{" << order << ',' << p << "}(C_{" << order << "}(R^{" << order << ','
               << fp.seed() << "}_i)), p = " << p << ", x = " << x << ", y = " << y
               << " and n = " << n << ".\n";
            for (i64 i = 1; i <= p; ++i) {
                const auto full = family_set(fp, i).full_set();
                os << "C" << order << '(';
                for (std::size_t k = 0; k < full.size(); ++k) {
                    if (k) {
                        os << ',';
                    }
                    os << full[k];
                }
                os << ")\n";
            }
        }
    }
    return os.str();
}

ProbeReport conjecture_probe(const FamilyParams& fp, i64 q) {
    if (q < 1) {
        throw Error("probe multiplier q must be positive, got " + std::to_string(q));
    }
    ProbeReport report{fp, q, fp.p, 0, 0, {}, {}};
    const i64 order = fp.graph_order();
    report.m1 = std::gcd(order, q * fp.p) / fp.p;
    report.gcd_m_m1 = std::gcd(report.m, report.m1);

    ExtendedParams ep(fp, {q});
    for (i64 i = 1; i <= fp.p; ++i) {
        report.members.push_back(extended_family_set(ep, i));
    }

    const std::vector<i64> us = units(report.members[0].modulus());
    const i64 span = order / fp.p;
    for (i64 i = 0; i < fp.p; ++i) {
        for (i64 j = i + 1; j < fp.p; ++j) {
            ProbePair pair{i + 1, j + 1, report.members[static_cast<std::size_t>(i)],
                           report.members[static_cast<std::size_t>(j)]};
            pair.equal_sets = pair.gi == pair.gj;
            for (i64 t = 1; t < span && pair.theta_t < 0; ++t) {
                if (auto img = theta_graph(pair.gi, fp.p, t); img && *img == pair.gj) {
                    pair.theta_t = t;
                }
            }
            for (i64 a : us) {
                if (adams_image(pair.gi, a) == pair.gj) {
                    pair.adams_a = a;
                    break;
                }
            }
            if (pair.equal_sets) {
                pair.label = "Equal";
            } else if (pair.adams_a != 0) {
                pair.label = "Type-1";
            } else if (pair.theta_t >= 0) {
                pair.label = "Type-2";
            } else {
                pair.label = "Unrelated";
            }
            report.pairs.push_back(std::move(pair));
        }
    }
    return report;
}

}  // namespace circulant
