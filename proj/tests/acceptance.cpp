// Acceptance gate: one criterion per numbered block, one PASS/FAIL line
// each, exit code = number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "circulant/families.hpp"
#include "circulant/oracle.hpp"
#include "circulant/orbits.hpp"
#include "circulant/report.hpp"
#include "property_suite.hpp"

using namespace circulant;

namespace {

struct CriterionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) {
        throw CriterionFailure(what);
    }
}

int g_failures = 0;

void criterion(int id, const std::string& title, double max_seconds,
               const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string reason;
    bool ok = true;
    try {
        body();
    } catch (const std::exception& e) {
        ok = false;
        reason = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && max_seconds > 0 && secs > max_seconds) {
        ok = false;
        reason = "exceeded time limit of " + std::to_string(max_seconds) + " s";
    }
    if (!ok) {
        ++g_failures;
    }
    std::printf("[%s] criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", id, title.c_str(),
                secs, reason.empty() ? "" : " -- ", reason.c_str());
    std::fflush(stdout);
}

void require_golden(const std::string& actual, const std::string& path) {
    const auto diffs = golden_compare_text(actual, path);
    if (!diffs.empty()) {
        throw CriterionFailure("golden mismatch vs " + path + ": " + diffs.front() + " (" +
                               std::to_string(diffs.size()) + " lines differ)");
    }
}

/// Verdicts produced while running the earlier criteria, revalidated by
/// criterion 11.
struct CollectedVerdict {
    CirculantGraph g1, g2;
    IsoVerdict verdict;
};
std::vector<CollectedVerdict> g_verdicts;

IsoVerdict classify_and_collect(const CirculantGraph& g1, const CirculantGraph& g2) {
    IsoVerdict v = classify_pair(g1, g2);
    g_verdicts.push_back({g1, g2, v});
    return v;
}

std::vector<CirculantGraph> pool_families(i64 p, i64 n) {
    std::set<CirculantGraph> seen;
    std::vector<CirculantGraph> out;
    for (i64 x = 1; x <= p - 1; ++x) {
        for (i64 y = 0; y <= n * p - 1; ++y) {
            for (const auto& g : family_all(FamilyParams(p, n, x, y))) {
                if (seen.insert(g).second) {
                    out.push_back(g);
                }
            }
        }
    }
    return out;
}

}  // namespace

int main() {
    criterion(1, "shift table of C81(1,3,26,28) at r=3 matches its golden", 1.0, [] {
        const auto table = theta_table(CirculantGraph(81, {1, 3, 26, 28}), 3);
        require(table.period == 9, "expected 9 rows, got " + std::to_string(table.period));
        for (const auto& row : table.rows) {
            const std::string want = row.t == 0                  ? "Identity"
                                     : (row.t == 3 || row.t == 6) ? "Type-2"
                                                                  : "NS";
            require(row.label == want, "row t=" + std::to_string(row.t) + " labelled " +
                                           row.label + ", expected " + want);
        }
        require_golden(format_theta_table(table), GOLDEN_DIR "/theta_table_c81_1_3_26_28_r3.txt");
    });

    criterion(2, "shift table of C54(1,3,17,19) at r=3 matches its golden", 5.0, [] {
        const auto table = theta_table(CirculantGraph(54, {1, 3, 17, 19}), 3);
        require(table.period == 6, "expected 6 rows, got " + std::to_string(table.period));
        for (const auto& row : table.rows) {
            const std::string want = row.t == 0                  ? "Identity"
                                     : (row.t == 2 || row.t == 4) ? "Type-2"
                                                                  : "NS";
            require(row.label == want, "row t=" + std::to_string(row.t) + " labelled " +
                                           row.label + ", expected " + want);
        }
        require_golden(format_theta_table(table), GOLDEN_DIR "/theta_table_c54_1_3_17_19_r3.txt");
    });

    criterion(3, "multiplier orbit of C54(1,17,18,19) has exactly the three known members", 5.0,
              [] {
                  const auto orbit = adams_orbit(CirculantGraph(54, {1, 17, 18, 19}));
                  const std::vector<CirculantGraph> expect{
                      CirculantGraph(54, {1, 17, 18, 19}),
                      CirculantGraph(54, {5, 13, 18, 23}),
                      CirculantGraph(54, {7, 11, 18, 25}),
                  };
                  require(orbit.size() == 3,
                          "orbit size " + std::to_string(orbit.size()) + ", expected 3");
                  for (std::size_t i = 0; i < expect.size(); ++i) {
                      require(orbit.members[i].first == expect[i],
                              "member " + std::to_string(i + 1) + " is " +
                                  orbit.members[i].first.to_text() + ", expected " +
                                  expect[i].to_text());
                  }
              });

    criterion(4, "the three reference Theta groups have order 3 with the exact member lists", 10.0,
              [] {
                  const struct {
                      CirculantGraph base;
                      std::vector<CirculantGraph> members;
                  } cases[] = {
                      {CirculantGraph(81, {1, 3, 26, 28}),
                       {CirculantGraph(81, {1, 3, 26, 28}), CirculantGraph(81, {3, 10, 17, 37}),
                        CirculantGraph(81, {3, 8, 19, 35})}},
                      {CirculantGraph(81, {3, 7, 20, 34}),
                       {CirculantGraph(81, {3, 7, 20, 34}), CirculantGraph(81, {3, 11, 16, 38}),
                        CirculantGraph(81, {2, 3, 25, 29})}},
                      {CirculantGraph(54, {1, 3, 17, 19}),
                       {CirculantGraph(54, {1, 3, 17, 19}), CirculantGraph(54, {3, 7, 11, 25}),
                        CirculantGraph(54, {3, 5, 13, 23})}},
                  };
                  for (const auto& c : cases) {
                      const auto grp = type2_group(c.base, 3);
                      require(grp.order() == 3, c.base.to_text() + ": group order " +
                                                    std::to_string(grp.order()) + ", expected 3");
                      require(grp.members == c.members,
                              c.base.to_text() + ": member list differs from the reference");
                  }
              });

    criterion(5, "C54(1,3,17,19) vs C54(5,13,21,23): depth-2 composite, oracle Yes, no direct witness",
              30.0, [] {
                  const CirculantGraph g1(54, {1, 3, 17, 19});
                  const CirculantGraph g2(54, {5, 13, 21, 23});

                  const IsoVerdict v = classify_and_collect(g1, g2);
                  require(v.kind == IsoVerdict::Kind::Composite,
                          "verdict " + to_string(v.kind) + ", expected Composite");
                  require(v.path.size() == 2,
                          "path length " + std::to_string(v.path.size()) + ", expected 2");

                  const auto res = oracle::brute_force_isomorphic(g1, g2);
                  require(res.outcome == oracle::OracleResult::Outcome::Yes,
                          "oracle did not confirm the isomorphism");
                  require(oracle::verify_certificate(g1, g2, *res.certificate),
                          "oracle certificate failed verification");

                  for (i64 a : units(g1.modulus())) {
                      require(adams_image(g1, a) != g2,
                              "unexpected multiplier witness a=" + std::to_string(a));
                  }
                  for (i64 r : {3, 18, 21, 27}) {
                      const i64 m = std::gcd<i64>(54, r);
                      require(m > 1, "scan r must share a factor with 54");
                      for (i64 t = 1; t < 54 / m; ++t) {
                          const auto img = theta_graph(g1, r, t);
                          require(!img || *img != g2, "unexpected shift witness r=" +
                                                          std::to_string(r) +
                                                          " t=" + std::to_string(t));
                      }
                  }
              });

    criterion(6, "annexure listings match the goldens for (p=3,n=1..3) and (p=5,n=1)", 30.0, [] {
        require_golden(annexure_listing(3, 1), GOLDEN_DIR "/annexure_p3_n1.txt");
        require_golden(annexure_listing(3, 2), GOLDEN_DIR "/annexure_p3_n2.txt");
        require_golden(annexure_listing(3, 3), GOLDEN_DIR "/annexure_p3_n3.txt");
        require_golden(annexure_listing(5, 1), GOLDEN_DIR "/annexure_p5_n1.txt");
    });

    criterion(7, "verify_family passes for every (x,y) at the six reference (p,n) shapes", 300.0,
              [] {
                  const std::pair<i64, i64> shapes[] = {{3, 1}, {3, 2}, {3, 3},
                                                        {5, 1}, {5, 2}, {7, 1}};
                  int verified = 0;
                  for (const auto& [p, n] : shapes) {
                      for (i64 x = 1; x <= p - 1; ++x) {
                          for (i64 y = 0; y <= n * p - 1; ++y) {
                              const auto report = verify_family(FamilyParams(p, n, x, y));
                              require(report.t2_order == p,
                                      "group order " + std::to_string(report.t2_order) +
                                          " at (p=" + std::to_string(p) + ",n=" +
                                          std::to_string(n) + ",x=" + std::to_string(x) +
                                          ",y=" + std::to_string(y) + ")");
                              ++verified;
                          }
                      }
                  }
                  require(verified == 6 + 12 + 18 + 20 + 40 + 42,
                          "unexpected tuple count " + std::to_string(verified));
              });

    criterion(8, "the p=2 family at order 48 reproduces the known pair and its Type-2 verdict",
              10.0, [] {
                  const auto ms = family_all(FamilyParams(2, 6, 1, 0));
                  require(ms.size() == 2 && ms[0] == CirculantGraph(48, {1, 2, 23}) &&
                              ms[1] == CirculantGraph(48, {2, 11, 13}),
                          "family members differ from C48(1,2,23) / C48(2,11,13)");
                  const IsoVerdict v = classify_and_collect(ms[0], ms[1]);
                  require(v.kind == IsoVerdict::Kind::Type2,
                          "verdict " + to_string(v.kind) + ", expected Type2");
                  require(v.r == 2 && (v.t == 6 || v.t == 18),
                          "witness (r=" + std::to_string(v.r) + ",t=" + std::to_string(v.t) +
                              "), expected r=2 with t in {6,18}");
              });

    criterion(9, "complemented parameters rebuild the same members for 50 random tuples", 60.0, [] {
        std::mt19937 rng(0xc0117u);
        const i64 ps[] = {3, 5, 7};
        std::uniform_int_distribution<int> pick_p(0, 2);
        std::uniform_int_distribution<i64> pick_n(1, 3);
        for (int c = 0; c < 50; ++c) {
            const i64 p = ps[pick_p(rng)];
            const i64 n = pick_n(rng);
            std::uniform_int_distribution<i64> pick_x(1, p - 1), pick_y(0, n * p - 1);
            const FamilyParams fp(p, n, pick_x(rng), pick_y(rng));
            const FamilyParams cp = complement_params(fp);
            require(complement_params(cp) == fp, "complement is not an involution at seed " +
                                                     std::to_string(fp.seed()));
            for (i64 i = 1; i <= p; ++i) {
                require(family_set(fp, i) == family_set(cp, i),
                        "member " + std::to_string(i) + " differs between seeds " +
                            std::to_string(fp.seed()) + " and " + std::to_string(cp.seed()));
            }
        }
    });

    criterion(10, "oracle agrees with classify_pair over the pooled pairs, no budget hit", 0.0, [] {
        std::mt19937 rng(0xacc3du);
        const std::pair<i64, i64> shapes[] = {{3, 1}, {3, 2}, {3, 3}, {5, 1}};
        long long pairs = 0;
        for (const auto& [p, n] : shapes) {
            std::vector<CirculantGraph> pool = pool_families(p, n);
            const i64 order = pool.front().order();
            const std::size_t k = pool.front().jumps().size();
            const std::set<CirculantGraph> members(pool.begin(), pool.end());

            std::uniform_int_distribution<i64> jump(1, order - 1);
            while (pool.size() < members.size() + 5) {
                std::set<i64> jumps;
                while (jumps.size() < k) {
                    jumps.insert(jump(rng));
                }
                CirculantGraph candidate(order, std::vector<i64>(jumps.begin(), jumps.end()));
                if (candidate.jumps().size() == k && !members.count(candidate)) {
                    pool.push_back(candidate);
                }
            }

            for (const auto& a : pool) {
                for (const auto& b : pool) {
                    const IsoVerdict v = classify_and_collect(a, b);
                    require(v.kind != IsoVerdict::Kind::Unknown,
                            "classify ran out of budget on " + a.to_text() + " vs " + b.to_text());
                    const auto res = oracle::brute_force_isomorphic(a, b);
                    require(res.outcome != oracle::OracleResult::Outcome::Exceeded,
                            "oracle ran out of budget on " + a.to_text() + " vs " + b.to_text());
                    const bool classified_iso = v.kind != IsoVerdict::Kind::NotIsomorphic;
                    const bool oracle_iso = res.outcome == oracle::OracleResult::Outcome::Yes;
                    require(classified_iso == oracle_iso,
                            "disagreement on " + a.to_text() + " vs " + b.to_text() +
                                ": classify says " + to_string(v.kind) + ", oracle says " +
                                (oracle_iso ? "Yes" : "No"));
                    ++pairs;
                }
            }
        }
        require(pairs >= 600, "expected at least 600 ordered pairs, ran " + std::to_string(pairs));
    });

    criterion(11, "every collected witness verdict converts to a verified certificate", 30.0, [] {
        int converted = 0;
        for (const auto& [g1, g2, v] : g_verdicts) {
            if (v.kind == IsoVerdict::Kind::NotIsomorphic || v.kind == IsoVerdict::Kind::Unknown) {
                continue;
            }
            const auto cert = oracle::witness_to_certificate(v, g1.modulus());
            require(oracle::verify_certificate(g1, g2, cert),
                    "certificate from " + format_verdict(v) + " fails on " + g1.to_text() +
                        " vs " + g2.to_text());
            ++converted;
        }
        require(converted >= 100,
                "only " + std::to_string(converted) + " witness verdicts were collected");
    });

    criterion(12, "randomized group-law suite: 1000+ cases, zero failures", 120.0, [] {
        long long total = 0;
        for (const auto& result : props::run_property_suite()) {
            require(result.tally.failures == 0,
                    result.name + ": " + std::to_string(result.tally.failures) + " failures, first: " +
                        (result.tally.notes.empty() ? std::string("n/a") : result.tally.notes[0]));
            total += result.tally.cases;
        }
        require(total >= 1000, "only " + std::to_string(total) + " cases ran");
    });

    std::printf("%d of 12 criteria passed\n", 12 - g_failures);
    return g_failures;
}
