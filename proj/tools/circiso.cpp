// Command-line front end for the circulant isomorphism library.
//
// Exit codes: 0 success, 1 domain error (bad math input, violated check),
// 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "circulant/families.hpp"
#include "circulant/oracle.hpp"
#include "circulant/orbits.hpp"
#include "circulant/report.hpp"
#include "circulant/text.hpp"
#include "circulant/zmod.hpp"

namespace {

using circulant::i64;
using circulant::json;

struct GlobalOptions {
    std::string format = "text";
    i64 budget = 10'000'000;
    int depth = 3;
    i64 seed = 0;  // reserved for future randomized modes
};

circulant::CirculantGraph parse_arg(const std::string& text) {
    auto parsed = circulant::parse_graph_verbose(text);
    for (const auto& w : parsed.warnings) {
        std::cerr << "warning: " << text << ": " << w << '\n';
    }
    return parsed.graph;
}

void emit(const GlobalOptions& opts, const std::string& command, const json& inputs,
          const json& result, const json& parameters, const std::string& text_form) {
    if (opts.format == "json") {
        std::cout << circulant::make_report(command, inputs, result, parameters).dump(2) << '\n';
    } else {
        std::cout << text_form;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"circulant graph isomorphisms: multiplier and Theta maps, their groups,"
                 " parametric families and a brute-force oracle"};
    app.require_subcommand(1);

    GlobalOptions opts;
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--budget", opts.budget, "node budget for oracle search / candidate budget for scans")
        ->capture_default_str();
    app.add_option("--depth", opts.depth, "composition search depth")->capture_default_str();
    app.add_option("--seed", opts.seed, "reserved");

    std::string g_text, g1_text, g2_text, grid_path;
    i64 r = 0, p = 0, n = 0, x = 0, y = 0, q = 1, member_index = 0;
    std::vector<i64> multiples;
    bool no_spectrum_filter = false;

    auto* classify = app.add_subcommand("classify", "classify an ordered pair of graphs");
    classify->add_option("g1", g1_text, "first graph, e.g. C48(1,2,23)")->required();
    classify->add_option("g2", g2_text, "second graph")->required();

    auto* orbit = app.add_subcommand("orbit", "multiplier orbit of a graph");
    orbit->add_option("g", g_text, "graph")->required();

    auto* t2group = app.add_subcommand("t2group", "Theta group of (graph, r)");
    t2group->add_option("g", g_text, "graph")->required();
    t2group->add_option("r", r, "jump r with gcd(n, r) > 1")->required();

    auto* table = app.add_subcommand("theta-table", "Theta scan table of (graph, r)");
    table->add_option("g", g_text, "graph")->required();
    table->add_option("r", r, "jump r with gcd(n, r) > 1")->required();

    auto* family = app.add_subcommand("family", "member sets of a family (p, n, x, y)");
    family->add_option("p", p, "prime p")->required();
    family->add_option("n", n, "n >= 1")->required();
    family->add_option("x", x, "x in [1, p-1]")->required();
    family->add_option("y", y, "y in [0, np-1]")->required();
    family->add_option("i", member_index, "member index in [1, p]; all members when omitted");

    auto* verify = app.add_subcommand("verify-family", "check the structure of a family");
    verify->add_option("p", p, "prime p")->required();
    verify->add_option("n", n, "n >= 1")->required();
    verify->add_option("x", x, "x in [1, p-1]")->required();
    verify->add_option("y", y, "y in [0, np-1]")->required();
    verify->add_option("--multiples", multiples, "extended family multiples p_j");

    auto* annexure = app.add_subcommand("annexure", "listing of every family block at (p, n)");
    annexure->add_option("p", p, "prime p")->required();
    annexure->add_option("n", n, "n >= 1")->required();

    auto* ci = app.add_subcommand("ci-scan", "scan same-profile jump sets for isomorphs"
                                             " outside the multiplier orbit");
    ci->add_option("g", g_text, "graph")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force isomorphism decision");
    oracle_cmd->add_option("g1", g1_text, "first graph")->required();
    oracle_cmd->add_option("g2", g2_text, "second graph")->required();
    oracle_cmd->add_flag("--no-spectrum-filter", no_spectrum_filter,
                         "skip the spectrum short-circuit");

    auto* probe = app.add_subcommand("conjecture-probe",
                                     "substitute q*p for the multiples pair and report verdicts");
    probe->add_option("p", p, "prime p")->required();
    probe->add_option("n", n, "n >= 1")->required();
    probe->add_option("x", x, "x in [1, p-1]")->required();
    probe->add_option("y", y, "y in [0, np-1]")->required();
    probe->add_option("q", q, "substitution factor")->required();

    auto* grid = app.add_subcommand("grid", "run a JSON array of op entries");
    grid->add_option("file", grid_path, "grid spec path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*classify) {
            const auto g1 = parse_arg(g1_text);
            const auto g2 = parse_arg(g2_text);
            circulant::SearchLimits limits{opts.depth, opts.budget};
            const auto verdict = classify_pair(g1, g2, limits);
            emit(opts, "classify", {{"g1", g1.to_text()}, {"g2", g2.to_text()}},
                 circulant::verdict_to_json(verdict),
                 {{"depth", opts.depth}, {"budget", opts.budget}},
                 g1.to_text() + " vs " + g2.to_text() + ": " +
                     circulant::format_verdict(verdict) + "\n");
        } else if (*orbit) {
            const auto g = parse_arg(g_text);
            const auto orb = circulant::adams_orbit(g);
            std::ostringstream os;
            os << "orbit of " << g.to_text() << ": " << orb.size() << " members\n";
            for (const auto& [member, a] : orb.members) {
                os << "a=" << a << ": " << member.to_text() << '\n';
            }
            emit(opts, "orbit", {{"g", g.to_text()}}, circulant::orbit_to_json(orb),
                 json::object(), os.str());
        } else if (*t2group) {
            const auto g = parse_arg(g_text);
            const auto group = circulant::type2_group(g, r);
            const auto v = circulant::v_orbit(g, r);
            std::ostringstream os;
            os << "Theta group of " << g.to_text() << " with r=" << r << ": order "
               << group.order() << ", t1=" << group.t1 << '\n';
            for (std::size_t j = 0; j < group.members.size(); ++j) {
                os << "j=" << j << ": " << group.members[j].to_text() << '\n';
            }
            os << "v-orbit size: " << v.size() << '\n';
            emit(opts, "t2group", {{"g", g.to_text()}, {"r", r}},
                 circulant::type2_group_to_json(group, static_cast<i64>(v.size())),
                 json::object(), os.str());
        } else if (*table) {
            const auto g = parse_arg(g_text);
            const auto t = circulant::theta_table(g, r);
            emit(opts, "theta-table", {{"g", g.to_text()}, {"r", r}},
                 circulant::theta_table_to_json(t), json::object(),
                 circulant::format_theta_table(t));
        } else if (*family) {
            circulant::FamilyParams fp(p, n, x, y);
            std::ostringstream os;
            json members = json::array();
            if (family->count("i")) {
                const auto g = circulant::family_set(fp, member_index);
                os << "i=" << member_index << ": " << g.to_text() << '\n';
                members.push_back(g.to_text());
            } else {
                const auto all = circulant::family_all(fp);
                for (std::size_t i = 0; i < all.size(); ++i) {
                    os << "i=" << (i + 1) << ": " << all[i].to_text() << '\n';
                    members.push_back(all[i].to_text());
                }
            }
            emit(opts, "family", {{"p", p}, {"n", n}, {"x", x}, {"y", y}},
                 {{"p", p}, {"n", n}, {"x", x}, {"y", y}, {"members", members}}, json::object(),
                 os.str());
        } else if (*verify) {
            circulant::FamilyParams fp(p, n, x, y);
            circulant::FamilyReport report =
                multiples.empty() ? circulant::verify_family(fp)
                                  : circulant::verify_family(circulant::ExtendedParams(fp, multiples));
            std::ostringstream os;
            os << "family p=" << p << " n=" << n << " x=" << x << " y=" << y << ": "
               << report.members.size() << " members of order " << fp.graph_order() << '\n';
            os << "members:";
            for (const auto& m : report.members) {
                os << ' ' << m.to_text();
            }
            os << '\n';
            os << "theta cycling: ok\n";
            os << "pairwise non-multiplier: ok (" << report.units_scanned << " units scanned)\n";
            os << "theta group: order " << report.t2_order << ", members match\n";
            os << "invariants: gcd profiles and spectra agree\n";
            os << "ok\n";
            emit(opts, "verify-family", {{"p", p}, {"n", n}, {"x", x}, {"y", y},
                                          {"multiples", multiples}},
                 circulant::family_report_to_json(report), json::object(), os.str());
        } else if (*annexure) {
            const std::string listing = circulant::annexure_listing(p, n);
            emit(opts, "annexure", {{"p", p}, {"n", n}},
                 {{"p", p}, {"n", n}, {"listing", listing}}, json::object(), listing);
        } else if (*ci) {
            const auto g = parse_arg(g_text);
            const auto report = circulant::ci_scan(g, opts.budget);
            std::ostringstream os;
            os << "ci-scan " << g.to_text() << ": profile [";
            for (std::size_t i = 0; i < report.profile.size(); ++i) {
                os << (i ? "," : "") << report.profile[i];
            }
            os << "], " << report.candidates_considered << " candidates, " << report.oracle_calls
               << " oracle calls\n";
            for (const auto& v : report.violations) {
                os << "violation: " << v.graph.to_text() << '\n';
            }
            os << "ci holds: " << (report.ci_holds() ? "yes" : "no") << '\n';
            emit(opts, "ci-scan", {{"g", g.to_text()}}, circulant::ci_scan_to_json(report),
                 {{"budget", opts.budget}}, os.str());
        } else if (*oracle_cmd) {
            const auto g1 = parse_arg(g1_text);
            const auto g2 = parse_arg(g2_text);
            circulant::oracle::OracleOptions oracle_opts;
            oracle_opts.node_budget = opts.budget;
            oracle_opts.use_spectrum_filter = !no_spectrum_filter;
            const auto res = circulant::oracle::brute_force_isomorphic(g1, g2, oracle_opts);
            const char* outcome = res.outcome == circulant::oracle::OracleResult::Outcome::Yes
                                      ? "Yes"
                                  : res.outcome == circulant::oracle::OracleResult::Outcome::No
                                      ? "No"
                                      : "Exceeded";
            std::ostringstream os;
            os << g1.to_text() << " vs " << g2.to_text() << ": " << outcome
               << " (nodes=" << res.nodes_explored << ")\n";
            emit(opts, "oracle", {{"g1", g1.to_text()}, {"g2", g2.to_text()}},
                 circulant::oracle_result_to_json(res),
                 {{"budget", oracle_opts.node_budget},
                  {"spectrum_filter", oracle_opts.use_spectrum_filter}},
                 os.str());
        } else if (*probe) {
            circulant::FamilyParams fp(p, n, x, y);
            const auto report = circulant::conjecture_probe(fp, q);
            std::ostringstream os;
            os << "probe p=" << p << " n=" << n << " x=" << x << " y=" << y << " q=" << q
               << ": m=" << report.m << " m1=" << report.m1 << " gcd=" << report.gcd_m_m1 << '\n';
            os << "members:";
            for (const auto& m : report.members) {
                os << ' ' << m.to_text();
            }
            os << '\n';
            for (const auto& pr : report.pairs) {
                os << "pair (" << pr.i << "," << pr.j << "): " << pr.label;
                if (pr.theta_t >= 0) {
                    os << " (theta t=" << pr.theta_t << ")";
                }
                if (pr.adams_a != 0) {
                    os << " (unit a=" << pr.adams_a << ")";
                }
                os << '\n';
            }
            emit(opts, "conjecture-probe",
                 {{"p", p}, {"n", n}, {"x", x}, {"y", y}, {"q", q}},
                 circulant::probe_report_to_json(report), json::object(), os.str());
        } else if (*grid) {
            std::ifstream in(grid_path);
            if (!in) {
                throw circulant::Error("cannot open grid file " + grid_path);
            }
            json spec = json::parse(in);
            std::cout << circulant::run_grid(spec).dump(2) << '\n';
        }
    } catch (const circulant::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
