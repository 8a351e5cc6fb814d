// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria with stated runtime budgets are timed with the wall
// clock and fail when over budget.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "reference_table.hpp"
#include "tutte/contracted_graph.hpp"
#include "tutte/dfs.hpp"
#include "tutte/harness.hpp"
#include "tutte/recurrence.hpp"
#include "tutte/serialize.hpp"

using namespace tutte;

namespace {

int failures = 0;

void criterion(int idx, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << idx << ": " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++failures;
}

double seconds_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << s << " s";
    return os.str();
}

UniPoly upoly(std::vector<long long> cs) {
    std::vector<Int> v(cs.begin(), cs.end());
    return UniPoly(std::move(v));
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(TUTTECLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    RunResult res;
    if (!pipe) return res;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) res.out.append(buf, got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

// 1. Table reproduction: all 15 reference polynomials, under a second.
void criterion_1() {
    const auto start = std::chrono::steady_clock::now();
    const TutteTable table(5);
    bool ok = true;
    for (const auto& [key, expected] : testing::reference_table())
        ok = ok && table.entry(key.first, key.second) == expected;
    const double elapsed = seconds_since(start);
    ok = ok && elapsed < 1.0;
    criterion(1, "triangular table matches all 15 reference entries", ok, fmt_seconds(elapsed));
}

// 2. Oracle equivalence up to n = 7, single-threaded, under a minute.
void criterion_2() {
    const auto start = std::chrono::steady_clock::now();
    EnumerationOptions opts;
    opts.workers = 1;
    const TutteTable table(7);
    bool ok = true;
    for (int n = 1; n <= 7; ++n)
        for (int r = 1; r <= n; ++r)
            ok = ok && table.entry(n, r) == brute_tutte(ContractedGraph(n, r), opts);
    const double elapsed = seconds_since(start);
    ok = ok && elapsed < 60.0;
    criterion(2, "recurrence equals brute expansion for all n <= 7", ok, fmt_seconds(elapsed));
}

// 3. Neighbor-set decomposition matches the three case formulas.
void criterion_3() {
    bool ok = true;
    const BiPoly xm1 = BiPoly::x() - BiPoly::one();
    for (int n = 2; n <= 6; ++n)
        for (int r = 1; r < n; ++r) {
            const int outer = n - r;
            const TutteTable table(outer);
            const auto parts = brute_tutte_by_neighbor_set(ContractedGraph(n, r));

            ok = ok && parts.at(0) == xm1 * table.entry(outer, 1);

            BiPoly singletons;
            for (int k = 0; k < outer; ++k) singletons = singletons + parts.at(1u << k);
            ok = ok && singletons == BiPoly::from_y_poly(q_analogue(r)).scaled(outer) *
                                         table.entry(outer, 1);

            for (const auto& [sset, poly] : parts) {
                const int s = std::popcount(sset);
                if (s < 2) continue;
                ok = ok && poly == BiPoly::monomial(0, s * (s - 1) / 2) *
                                       BiPoly::from_y_poly(q_analogue(r)).pow(
                                           static_cast<unsigned>(s)) *
                                       table.entry(outer, s);
            }
        }
    criterion(3, "per-neighbor-set decomposition satisfies the case formulas", ok);
}

// 4. J value and the connected-enumerator identity for all n <= 7.
void criterion_4() {
    const TutteTable table(7);
    bool ok = j_poly(table, 4, 2) == upoly({2, 3, 2, 1});
    for (int n = 1; n <= 7; ++n)
        for (int r = 1; r <= n; ++r) {
            const UniPoly expected =
                j_poly(table, n, r).shifted_arg(1).times_monomial(static_cast<std::size_t>(n - r));
            ok = ok && brute_connected_enumerator(ContractedGraph(n, r)) == expected;
        }
    criterion(4, "J golden value and connected-enumerator identity up to n = 7", ok);
}

// 5. The worked four-vertex classification, under a second.
void criterion_5() {
    const auto start = std::chrono::steady_clock::now();
    const auto report = classify_all(4);
    const UniPoly* p31 = nullptr;
    const UniPoly* p22 = nullptr;
    for (const auto& b : report.classes) {
        if (b.lambda == Partition({3, 1})) p31 = &b.enumerator;
        if (b.lambda == Partition({2, 2})) p22 = &b.enumerator;
    }
    bool ok = p31 && p22;
    if (ok) {
        ok = ok && *p31 == upoly({0, 0, 0, 0, 36, 76, 60, 24, 4});
        ok = ok && *p22 == upoly({0, 0, 0, 0, 12, 32, 30, 12, 2});
        ok = ok && p31->eval(1) == 200 && p22->eval(1) == 88;
        ok = ok && p31->eval(1) + p22->eval(1) == 288;
    }
    const double elapsed = seconds_since(start);
    ok = ok && elapsed < 1.0;
    criterion(5, "worked classification of the 288 root-degree-2 subgraphs of K_5", ok,
              fmt_seconds(elapsed));
}

// 6. Verification at n = 5 and n = 6 (new ground); n = 6 under 30 s.
// 7. Property suite on the derived J for all weights <= 6.
void criteria_6_and_7() {
    std::string detail6;
    std::vector<VerificationReport> reports;
    for (int n = 1; n <= 6; ++n) {
        const auto start = std::chrono::steady_clock::now();
        reports.push_back(verify(n));
        const double elapsed = seconds_since(start);
        if (n == 6) detail6 = "n=6 in " + fmt_seconds(elapsed) + (elapsed < 30.0 ? "" : " OVER BUDGET");
    }

    const TutteTable table(6);
    bool degree_sums = true, grand_totals = true, closed_families = true;
    bool j_aggregates = true, verdicts = true;
    for (int n = 5; n <= 6; ++n) {
        const auto& report = reports[static_cast<std::size_t>(n - 1)];
        verdicts = verdicts && report.verified;
        grand_totals = grand_totals && report.grand_total_ok;
        j_aggregates = j_aggregates && report.j_total_ok;
        for (const auto& c : report.degree_checks) degree_sums = degree_sums && c.ok;
        for (const auto& c : report.length_checks) j_aggregates = j_aggregates && c.ok;
        auto bucket = [&](const Partition& p) -> const UniPoly* {
            const auto* rec = report.find(p);
            return rec ? &rec->dfs_poly : nullptr;
        };
        const UniPoly* top = bucket(Partition({n}));
        const UniPoly* ones = bucket(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
        std::vector<int> v{2};
        v.insert(v.end(), static_cast<std::size_t>(n - 2), 1);
        const UniPoly* onetwo = bucket(Partition(v));
        closed_families = closed_families && top && *top == p_poly_ns(table, n, 1) && ones &&
                          *ones == p_poly_ns(table, n, n) && onetwo &&
                          *onetwo == p_poly_ns(table, n, n - 1);
    }
    std::ostringstream sub;
    sub << detail6 << "; degree sums " << (degree_sums ? "ok" : "FAIL") << ", grand totals "
        << (grand_totals ? "ok" : "FAIL") << ", closed families "
        << (closed_families ? "ok" : "FAIL") << ", derived-J aggregation "
        << (j_aggregates ? "ok" : "FAIL: two-part classes at n=5 and six classes at n=6 admit "
                                  "no integer J (see verify output)");
    const bool ok6 = verdicts && degree_sums && grand_totals && closed_families && j_aggregates &&
                     detail6.find("OVER") == std::string::npos;
    criterion(6, "verification passes at n = 5 and n = 6 with all aggregates exact", ok6,
              sub.str());

    int pass7 = 0, classes = 0;
    for (const auto& report : reports)
        for (const auto& rec : report.per_lambda) {
            ++classes;
            if (rec.derived_j.has_value() && rec.degree_ok && rec.positive && rec.log_concave_ok)
                ++pass7;
        }
    // p(1)+...+p(6) = 1+2+3+5+7+11 = 29 classes
    criterion(7, "derived J classes pass order/degree/positivity/log-concavity",
              pass7 == classes && classes == 29,
              std::to_string(pass7) + "/" + std::to_string(classes) + " classes");
}

// 8. Determinism across worker counts; cached vs fresh CLI output.
void criterion_8() {
    bool ok = true;

    EnumerationOptions one, two, many;
    one.workers = 1;
    two.workers = 2;
    many.workers = 0;
    const auto a = classify_all(5, one);
    const auto b = classify_all(5, two);
    const auto c = classify_all(5, many);
    ok = ok && classification_to_json(a).dump() == classification_to_json(b).dump();
    ok = ok && classification_to_json(a).dump() == classification_to_json(c).dump();

    const ContractedGraph g(6, 2);
    ok = ok && brute_tutte(g, one) == brute_tutte(g, two) &&
         brute_tutte(g, one) == brute_tutte(g, many);

    const auto dir = std::filesystem::temp_directory_path() / "tuttecli-acceptance-cache";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    for (const std::string base :
         {std::string("classify --n 4 --format json --cache-dir "),
          std::string("verify --n 3 --format json --cache-dir ")}) {
        const auto fresh = run_cli(base + dir.string());
        const auto cached = run_cli(base + dir.string());
        ok = ok && fresh.exit_code == 0 && cached.exit_code == 0 && fresh.out == cached.out &&
             !fresh.out.empty();
    }
    std::filesystem::remove_all(dir);

    criterion(8, "enumeration deterministic across worker counts; cache byte-identical", ok);
}

// Optional extended run: the 2^28-mask classification at weight 7.
// Informational; reports the same aggregate checks and the derivation tally.
void extended_run() {
    const auto start = std::chrono::steady_clock::now();
    const auto report = verify(7);
    const double elapsed = seconds_since(start);
    const TutteTable table(7);
    bool aggregates = report.grand_total_ok;
    for (const auto& c : report.degree_checks) aggregates = aggregates && c.ok;
    bool closed = true;
    for (const auto& rec : report.per_lambda)
        if (rec.expected_poly) closed = closed && rec.match;
    int derived = 0;
    for (const auto& rec : report.per_lambda)
        if (rec.derived_j) ++derived;
    std::cout << "INFO  extended n=7 (" << fmt_seconds(elapsed) << "): degree sums and grand total "
              << (aggregates ? "ok" : "FAIL") << ", closed families "
              << (closed ? "ok" : "FAIL") << ", derived J for " << derived << "/"
              << report.per_lambda.size() << " classes" << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
    const bool extended = argc > 1 && std::string(argv[1]) == "--extended";
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criteria_6_and_7();
    criterion_8();
    if (extended) extended_run();
    if (failures > 0) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
}
