#include "circulant/report.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "circulant/text.hpp"

namespace circulant {

json make_report(const std::string& command, const json& inputs, const json& result,
                 const json& parameters) {
    json report;
    report["command"] = command;
    report["inputs"] = inputs;
    report["result"] = result;
    report["provenance"] = {
        {"tool", kToolName}, {"version", kToolVersion}, {"parameters", parameters}};
    return report;
}

json verdict_to_json(const IsoVerdict& verdict) {
    json out;
    out["kind"] = to_string(verdict.kind);
    switch (verdict.kind) {
        case IsoVerdict::Kind::Adams:
            out["witness"] = {{"a", verdict.a}};
            break;
        case IsoVerdict::Kind::Type2:
            out["witness"] = {{"r", verdict.r}, {"t", verdict.t}};
            break;
        default:
            out["witness"] = nullptr;
            break;
    }
    json path = json::array();
    for (const IsoStep& step : verdict.path) {
        if (step.kind == IsoStep::Kind::Adams) {
            path.push_back({{"kind", "Adams"}, {"a", step.a}});
        } else {
            path.push_back({{"kind", "Theta"}, {"r", step.r}, {"t", step.t}});
        }
    }
    out["path"] = std::move(path);
    out["oracle_certificate"] =
        verdict.oracle_certificate ? json(verdict.oracle_certificate->perm) : json(nullptr);
    return out;
}

json orbit_to_json(const AdamsOrbit& orbit) {
    json members = json::array();
    for (const auto& [graph, a] : orbit.members) {
        members.push_back({{"graph", graph.to_text()}, {"a", a}});
    }
    return {{"base", orbit.base.to_text()},
            {"size", orbit.members.size()},
            {"members", std::move(members)}};
}

json type2_group_to_json(const Type2Group& group, i64 v_orbit_size) {
    json members = json::array();
    for (const auto& g : group.members) {
        members.push_back(g.to_text());
    }
    return {{"base", group.base.to_text()}, {"r", group.r},       {"m", group.m},
            {"t1", group.t1},              {"order", group.order()},
            {"members", std::move(members)}, {"v_orbit_size", v_orbit_size}};
}

json theta_table_to_json(const ThetaTable& table) {
    json rows = json::array();
    for (const auto& row : table.rows) {
        rows.push_back({{"t", row.t}, {"values", row.values}, {"label", row.label}});
    }
    return {{"base", table.base.to_text()}, {"r", table.r},
            {"m", table.m},                 {"period", table.period},
            {"columns", table.columns},     {"rows", std::move(rows)}};
}

json family_report_to_json(const FamilyReport& report) {
    json members = json::array();
    for (const auto& g : report.members) {
        members.push_back(g.to_text());
    }
    return {{"extended", report.extended},
            {"p", report.params.p},
            {"n", report.params.n},
            {"x", report.params.x},
            {"y", report.params.y},
            {"multiples", report.multiples},
            {"members", std::move(members)},
            {"t2_order", report.t2_order},
            {"units_scanned", report.units_scanned},
            {"checks",
             {{"theta_cycles", report.theta_cycles},
              {"pairwise_non_adams", report.pairwise_non_adams},
              {"t2_group_matches", report.t2_group_matches},
              {"invariants_agree", report.invariants_agree}}}};
}

json ci_scan_to_json(const CiScanReport& report) {
    json violations = json::array();
    for (const auto& v : report.violations) {
        violations.push_back(
            {{"graph", v.graph.to_text()}, {"certificate", v.certificate.perm}});
    }
    return {{"base", report.base.to_text()},
            {"profile", report.profile},
            {"candidates_considered", report.candidates_considered},
            {"oracle_calls", report.oracle_calls},
            {"oracle_exceeded", report.oracle_exceeded},
            {"violations", std::move(violations)},
            {"ci_holds", report.ci_holds()}};
}

json oracle_result_to_json(const oracle::OracleResult& result) {
    const char* outcome = result.outcome == oracle::OracleResult::Outcome::Yes   ? "Yes"
                          : result.outcome == oracle::OracleResult::Outcome::No ? "No"
                                                                                : "Exceeded";
    return {{"outcome", outcome},
            {"nodes_explored", result.nodes_explored},
            {"certificate", result.certificate ? json(result.certificate->perm) : json(nullptr)}};
}

json probe_report_to_json(const ProbeReport& report) {
    json members = json::array();
    for (const auto& g : report.members) {
        members.push_back(g.to_text());
    }
    json pairs = json::array();
    for (const auto& p : report.pairs) {
        pairs.push_back({{"i", p.i},
                         {"j", p.j},
                         {"label", p.label},
                         {"equal_sets", p.equal_sets},
                         {"theta_t", p.theta_t},
                         {"adams_a", p.adams_a}});
    }
    return {{"p", report.params.p},
            {"n", report.params.n},
            {"x", report.params.x},
            {"y", report.params.y},
            {"q", report.q},
            {"m", report.m},
            {"m1", report.m1},
            {"gcd_m_m1", report.gcd_m_m1},
            {"members", std::move(members)},
            {"pairs", std::move(pairs)}};
}

std::string format_verdict(const IsoVerdict& verdict) {
    switch (verdict.kind) {
        case IsoVerdict::Kind::NotIsomorphic:
            return "NotIsomorphic";
        case IsoVerdict::Kind::Adams:
            return "Adams(a=" + std::to_string(verdict.a) + ")";
        case IsoVerdict::Kind::Type2:
            return "Type2(r=" + std::to_string(verdict.r) + ", t=" + std::to_string(verdict.t) +
                   ")";
        case IsoVerdict::Kind::Composite: {
            if (verdict.path.empty()) {
                return "Composite[oracle certificate]";
            }
            std::string out = "Composite[";
            for (std::size_t i = 0; i < verdict.path.size(); ++i) {
                const IsoStep& step = verdict.path[i];
                if (i) {
                    out += "; ";
                }
                if (step.kind == IsoStep::Kind::Adams) {
                    out += "Adams(a=" + std::to_string(step.a) + ")";
                } else {
                    out += "Theta(r=" + std::to_string(step.r) + ",t=" + std::to_string(step.t) +
                           ")";
                }
            }
            return out + "]";
        }
        case IsoVerdict::Kind::Unknown:
            return "Unknown";
    }
    return "Unknown";
}

std::string format_theta_table(const ThetaTable& table) {
    std::ostringstream os;
    os << "x:";
    for (i64 x : table.columns) {
        os << ' ' << x;
    }
    os << '\n';
    for (const auto& row : table.rows) {
        os << "t=" << row.t << ':';
        for (i64 v : row.values) {
            os << ' ' << v;
        }
        os << " | " << row.label << '\n';
    }
    return os.str();
}

namespace {

std::string error_kind(const std::exception& e) {
    if (dynamic_cast<const ZeroJumpError*>(&e)) return "ZeroJump";
    if (dynamic_cast<const NotAUnitError*>(&e)) return "NotAUnit";
    if (dynamic_cast<const InvalidRError*>(&e)) return "InvalidR";
    if (dynamic_cast<const NoMultipleOfMError*>(&e)) return "NoMultipleOfM";
    if (dynamic_cast<const BadIndexError*>(&e)) return "BadIndex";
    if (dynamic_cast<const DegenerateSetError*>(&e)) return "DegenerateSet";
    if (dynamic_cast<const GcdNotOneError*>(&e)) return "GcdNotOne";
    if (dynamic_cast<const TheoremViolationError*>(&e)) return "TheoremViolation";
    if (dynamic_cast<const OrderMismatchError*>(&e)) return "OrderMismatch";
    if (dynamic_cast<const NotABijectionError*>(&e)) return "NotABijection";
    if (dynamic_cast<const NotAWitnessVerdictError*>(&e)) return "NotAWitnessVerdict";
    if (dynamic_cast<const BudgetExceededError*>(&e)) return "BudgetExceeded";
    if (dynamic_cast<const ParseError*>(&e)) return "Parse";
    if (dynamic_cast<const MissingGoldenError*>(&e)) return "MissingGolden";
    if (dynamic_cast<const Error*>(&e)) return "Error";
    return "Internal";
}

json dispatch_op(const std::string& op, const json& entry, json& parameters) {
    if (op == "classify") {
        SearchLimits limits;
        limits.max_depth = entry.value("depth", limits.max_depth);
        limits.node_budget = entry.value("budget", limits.node_budget);
        parameters = {{"depth", limits.max_depth}, {"budget", limits.node_budget}};
        const auto g1 = parse_graph(entry.at("g1").get<std::string>());
        const auto g2 = parse_graph(entry.at("g2").get<std::string>());
        return verdict_to_json(classify_pair(g1, g2, limits));
    }
    if (op == "orbit") {
        return orbit_to_json(adams_orbit(parse_graph(entry.at("g").get<std::string>())));
    }
    if (op == "t2group") {
        const auto g = parse_graph(entry.at("g").get<std::string>());
        const i64 r = entry.at("r").get<i64>();
        const auto group = type2_group(g, r);
        return type2_group_to_json(group, static_cast<i64>(v_orbit(g, r).size()));
    }
    if (op == "theta-table") {
        const auto g = parse_graph(entry.at("g").get<std::string>());
        return theta_table_to_json(theta_table(g, entry.at("r").get<i64>()));
    }
    if (op == "family") {
        FamilyParams fp(entry.at("p").get<i64>(), entry.at("n").get<i64>(),
                        entry.at("x").get<i64>(), entry.at("y").get<i64>());
        json members = json::array();
        if (entry.contains("i")) {
            members.push_back(family_set(fp, entry.at("i").get<i64>()).to_text());
        } else {
            for (const auto& g : family_all(fp)) {
                members.push_back(g.to_text());
            }
        }
        return {{"p", fp.p}, {"n", fp.n}, {"x", fp.x}, {"y", fp.y}, {"members", members}};
    }
    if (op == "verify-family") {
        FamilyParams fp(entry.at("p").get<i64>(), entry.at("n").get<i64>(),
                        entry.at("x").get<i64>(), entry.at("y").get<i64>());
        if (entry.contains("multiples")) {
            ExtendedParams ep(fp, entry.at("multiples").get<std::vector<i64>>());
            return family_report_to_json(verify_family(ep));
        }
        return family_report_to_json(verify_family(fp));
    }
    if (op == "annexure") {
        return {{"p", entry.at("p").get<i64>()},
                {"n", entry.at("n").get<i64>()},
                {"listing", annexure_listing(entry.at("p").get<i64>(), entry.at("n").get<i64>())}};
    }
    if (op == "ci-scan") {
        const i64 budget = entry.value("budget", static_cast<i64>(100'000));
        parameters = {{"budget", budget}};
        return ci_scan_to_json(ci_scan(parse_graph(entry.at("g").get<std::string>()), budget));
    }
    if (op == "oracle") {
        oracle::OracleOptions opts;
        opts.node_budget = entry.value("budget", opts.node_budget);
        opts.use_spectrum_filter = entry.value("spectrum_filter", true);
        parameters = {{"budget", opts.node_budget},
                      {"spectrum_filter", opts.use_spectrum_filter}};
        const auto g1 = parse_graph(entry.at("g1").get<std::string>());
        const auto g2 = parse_graph(entry.at("g2").get<std::string>());
        return oracle_result_to_json(oracle::brute_force_isomorphic(g1, g2, opts));
    }
    if (op == "conjecture-probe") {
        FamilyParams fp(entry.at("p").get<i64>(), entry.at("n").get<i64>(),
                        entry.at("x").get<i64>(), entry.at("y").get<i64>());
        return probe_report_to_json(conjecture_probe(fp, entry.at("q").get<i64>()));
    }
    throw Error("unknown grid op '" + op + "'");
}

}  // namespace

json run_grid_entry(const json& entry) {
    std::string op = entry.value("op", "");
    json parameters = json::object();
    json result;
    try {
        result = dispatch_op(op, entry, parameters);
    } catch (const std::exception& e) {
        result = {{"error", {{"kind", error_kind(e)}, {"message", e.what()}}}};
    }
    return make_report(op.empty() ? "unknown" : op, entry, result, parameters);
}

json run_grid(const json& grid, const GridOptions& options) {
    if (!grid.is_array()) {
        throw Error("grid spec must be a JSON array of op entries");
    }
    const std::size_t count = grid.size();
    std::vector<json> results(count);

    int threads = options.threads;
    if (threads <= 0) {
        if (const char* env = std::getenv("CIRC_ISO_THREADS")) {
            threads = std::max(1, std::atoi(env));
        } else {
            threads = std::clamp(static_cast<int>(std::thread::hardware_concurrency()), 1, 8);
        }
    }
    threads = std::min<int>(threads, std::max<std::size_t>(count, 1));

    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            results[i] = run_grid_entry(grid[i]);
        }
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                results[i] = run_grid_entry(grid[i]);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int i = 0; i < threads; ++i) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }

    // Sort by input key so output is independent of execution order.
    std::vector<std::size_t> index(count);
    for (std::size_t i = 0; i < count; ++i) {
        index[i] = i;
    }
    std::stable_sort(index.begin(), index.end(), [&](std::size_t a, std::size_t b) {
        return grid[a].dump() < grid[b].dump();
    });
    json out = json::array();
    for (std::size_t i : index) {
        out.push_back(std::move(results[i]));
    }
    return out;
}

namespace {

std::vector<std::string> normalize_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string line;
    std::istringstream is(text);
    while (std::getline(is, line)) {
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) {
            line.pop_back();
        }
        lines.push_back(line);
    }
    // Collapse blank runs, trim blank edges.
    std::vector<std::string> out;
    for (const auto& l : lines) {
        if (l.empty() && (out.empty() || out.back().empty())) {
            continue;
        }
        out.push_back(l);
    }
    while (!out.empty() && out.back().empty()) {
        out.pop_back();
    }
    return out;
}

std::string read_file(const std::string& path) {
    if (!std::filesystem::exists(path)) {
        throw MissingGoldenError("golden file missing: " + path);
    }
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void json_diff(const json& a, const json& b, const std::string& path,
               std::vector<std::string>& out) {
    // Signed/unsigned integer representations compare by value below.
    if (a.type() != b.type() && !(a.is_number() && b.is_number())) {
        out.push_back(path + ": type " + std::string(a.type_name()) + " vs " +
                      std::string(b.type_name()));
        return;
    }
    if (a.is_object()) {
        for (auto it = a.begin(); it != a.end(); ++it) {
            if (!b.contains(it.key())) {
                out.push_back(path + "/" + it.key() + ": missing in golden");
            } else {
                json_diff(it.value(), b.at(it.key()), path + "/" + it.key(), out);
            }
        }
        for (auto it = b.begin(); it != b.end(); ++it) {
            if (!a.contains(it.key())) {
                out.push_back(path + "/" + it.key() + ": missing in actual");
            }
        }
        return;
    }
    if (a.is_array()) {
        const std::size_t common = std::min(a.size(), b.size());
        for (std::size_t i = 0; i < common; ++i) {
            json_diff(a[i], b[i], path + "/" + std::to_string(i), out);
        }
        if (a.size() != b.size()) {
            out.push_back(path + ": length " + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()));
        }
        return;
    }
    if (a != b) {
        out.push_back(path + ": " + a.dump() + " vs " + b.dump());
    }
}

}  // namespace

std::vector<std::string> golden_compare_text(const std::string& actual,
                                             const std::string& golden_path) {
    const auto got = normalize_lines(actual);
    const auto want = normalize_lines(read_file(golden_path));
    std::vector<std::string> diffs;
    const std::size_t common = std::min(got.size(), want.size());
    for (std::size_t i = 0; i < common; ++i) {
        if (got[i] != want[i]) {
            diffs.push_back("line " + std::to_string(i + 1) + ": expected \"" + want[i] +
                            "\", got \"" + got[i] + "\"");
        }
    }
    for (std::size_t i = common; i < want.size(); ++i) {
        diffs.push_back("line " + std::to_string(i + 1) + ": missing \"" + want[i] + "\"");
    }
    for (std::size_t i = common; i < got.size(); ++i) {
        diffs.push_back("line " + std::to_string(i + 1) + ": unexpected \"" + got[i] + "\"");
    }
    return diffs;
}

std::vector<std::string> golden_compare_json(const json& actual, const std::string& golden_path) {
    json golden;
    try {
        golden = json::parse(read_file(golden_path));
    } catch (const nlohmann::json::exception& e) {
        throw Error("golden file " + golden_path + " is not valid JSON: " + e.what());
    }
    std::vector<std::string> diffs;
    json_diff(actual, golden, "", diffs);
    return diffs;
}

}  // namespace circulant
