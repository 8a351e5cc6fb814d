// Command-line front end for the contracted-complete-graph Tutte engine:
// recurrence table, J/C/P polynomial families, brute-force cross-checks,
// DFS classification of spanning connected subgraphs, and the full
// verification harness. Results go to stdout; progress goes to stderr.
//
// Exit codes: 0 ok/verified, 1 finding/mismatch, 2 usage or scale refusal.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tutte/contracted_graph.hpp"
#include "tutte/dfs.hpp"
#include "tutte/harness.hpp"
#include "tutte/recurrence.hpp"
#include "tutte/serialize.hpp"

namespace {

using namespace tutte;

constexpr int kExitOk = 0;
constexpr int kExitFinding = 1;
constexpr int kExitUsage = 2;

struct CommonConfig {
    unsigned threads = 0;
    int bit_limit = 30;
    std::string format = "text";
    std::string cache_dir;
    bool no_cache = false;
};

void add_common_options(CLI::App* cmd, CommonConfig& cfg) {
    cmd->add_option("--threads", cfg.threads, "worker count (default: available parallelism)")
        ->envname("TUTTE_THREADS");
    cmd->add_option("--bit-limit", cfg.bit_limit,
                    "refuse enumerations wider than this many mask bits (hard cap 40)")
        ->envname("TUTTE_BIT_LIMIT");
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "text", "csv"}))
        ->envname("TUTTE_FORMAT");
    cmd->add_option("--cache-dir", cfg.cache_dir, "cache directory for enumeration results")
        ->envname("TUTTE_CACHE_DIR");
    cmd->add_flag("--no-cache", cfg.no_cache, "disable the cache even if a directory is set")
        ->envname("TUTTE_NO_CACHE");
}

EnumerationOptions enumeration_options(const CommonConfig& cfg) {
    EnumerationOptions opts;
    opts.workers = cfg.threads;
    opts.bit_limit = cfg.bit_limit;
    // Coarse progress on the diagnostic stream for big runs.
    auto last_decile = std::make_shared<int>(-1);
    opts.progress = [last_decile](std::uint64_t done, std::uint64_t total) {
        if (total < (std::uint64_t(1) << 22)) return;
        const int decile = static_cast<int>(10 * done / total);
        if (decile > *last_decile) {
            *last_decile = decile;
            std::cerr << "progress: " << 10 * decile << "%\n";
        }
    };
    return opts;
}

void emit(const std::string& body) { std::cout << body; }

std::string json_body(const Json& doc) { return doc.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// caching (classification and verification documents, keyed by n + version)

std::optional<std::filesystem::path> cache_path(const CommonConfig& cfg, const std::string& kind,
                                                int n) {
    if (cfg.no_cache || cfg.cache_dir.empty()) return std::nullopt;
    return std::filesystem::path(cfg.cache_dir) /
           (kind + "-n" + std::to_string(n) + "-v" + kToolVersion + ".json");
}

std::optional<Json> load_cached(const std::optional<std::filesystem::path>& path, int n) {
    if (!path) return std::nullopt;
    std::ifstream in(*path);
    if (!in) return std::nullopt;
    try {
        Json doc = Json::parse(in);
        if (doc.at("n").get<int>() != n ||
            doc.at("tool_version").get<std::string>() != kToolVersion)
            return std::nullopt;
        return doc;
    } catch (const std::exception&) {
        std::cerr << "cache: ignoring corrupt entry " << path->string() << "\n";
        return std::nullopt;  // corrupt entries are recomputed, never trusted
    }
}

void store_cached(const std::optional<std::filesystem::path>& path, const Json& doc) {
    if (!path) return;
    std::error_code ec;
    std::filesystem::create_directories(path->parent_path(), ec);
    std::ofstream out(*path);
    if (out) out << json_body(doc);
}

// ---------------------------------------------------------------------------
// subcommands

int cmd_tutte(int n, int r, bool brute, const CommonConfig& cfg) {
    const TutteTable table(n);
    const BiPoly& entry = table.entry(n, r);
    std::optional<BiPoly> brute_poly;
    if (brute) {
        std::cerr << "enumerating 2^" << ContractedGraph(n, r).edge_count()
                  << " spanning subgraphs\n";
        brute_poly = brute_tutte(ContractedGraph(n, r), enumeration_options(cfg));
    }
    const bool equal = !brute_poly || *brute_poly == entry;

    if (cfg.format == "json") {
        Json doc;
        doc["n"] = n;
        doc["r"] = r;
        doc["tutte"] = poly_to_json(entry);
        if (brute_poly) {
            doc["brute"] = poly_to_json(*brute_poly);
            doc["equal"] = equal;
        }
        emit(json_body(doc));
    } else if (cfg.format == "csv") {
        std::ostringstream os;
        os << "source,xexp,yexp,coefficient\n";
        for (const auto& [key, c] : entry.terms())
            os << "recurrence," << key.first << ',' << key.second << ',' << c << '\n';
        if (brute_poly)
            for (const auto& [key, c] : brute_poly->terms())
                os << "brute," << key.first << ',' << key.second << ',' << c << '\n';
        emit(os.str());
    } else {
        std::ostringstream os;
        os << poly_text(entry) << '\n';
        if (brute_poly) {
            os << "brute: " << poly_text(*brute_poly) << '\n';
            os << "equal: " << (equal ? "yes" : "NO") << '\n';
        }
        emit(os.str());
    }
    return equal ? kExitOk : kExitFinding;
}

int cmd_table(int n_max, const CommonConfig& cfg) {
    const TutteTable table(n_max);
    if (cfg.format == "json") {
        Json doc;
        doc["n_max"] = n_max;
        Json rows = Json::array();
        for (int n = 1; n <= n_max; ++n) {
            Json row;
            row["n"] = n;
            Json entries = Json::array();
            for (int r = 1; r <= n; ++r) {
                Json e;
                e["r"] = r;
                e["tutte"] = poly_to_json(table.entry(n, r));
                entries.push_back(std::move(e));
            }
            row["entries"] = std::move(entries);
            rows.push_back(std::move(row));
        }
        doc["rows"] = std::move(rows);
        emit(json_body(doc));
    } else if (cfg.format == "csv") {
        std::ostringstream os;
        os << "n,r,xexp,yexp,coefficient\n";
        for (int n = 1; n <= n_max; ++n)
            for (int r = 1; r <= n; ++r)
                for (const auto& [key, c] : table.entry(n, r).terms())
                    os << n << ',' << r << ',' << key.first << ',' << key.second << ',' << c
                       << '\n';
        emit(os.str());
    } else {
        emit(table_text(table));
    }
    return kExitOk;
}

int cmd_family(const std::string& family, int n, int rs, const CommonConfig& cfg) {
    const TutteTable table(n);
    UniPoly poly;
    char var = 't';
    if (family == "j") {
        poly = j_poly(table, n, rs);
        var = 'q';
    } else if (family == "c") {
        poly = c_poly(table, n, rs);
    } else {
        poly = p_poly_ns(table, n, rs);
    }
    if (cfg.format == "json") {
        Json doc;
        doc["n"] = n;
        doc[family == "p" ? "s" : "r"] = rs;
        doc[family] = poly_to_json(poly, std::string(1, var));
        emit(json_body(doc));
    } else if (cfg.format == "csv") {
        emit(poly_csv(poly));
    } else {
        emit(poly_text(poly, var) + "\n");
    }
    return kExitOk;
}

int cmd_classify(int n, const CommonConfig& cfg) {
    const auto path = cache_path(cfg, "classify", n);
    Json doc;
    if (auto cached = load_cached(path, n)) {
        doc = std::move(*cached);
    } else {
        std::cerr << "classifying 2^" << (n + 1) * n / 2 << " edge subsets of K_" << (n + 1)
                  << "\n";
        const auto started = std::chrono::steady_clock::now();
        const auto report = classify_all(n, enumeration_options(cfg));
        const auto elapsed = std::chrono::duration<double>(
                                 std::chrono::steady_clock::now() - started)
                                 .count();
        std::cerr << "classification finished in " << elapsed << " s\n";
        doc = classification_to_json(report);
        store_cached(path, doc);
    }
    if (cfg.format == "json") {
        emit(json_body(doc));
    } else if (cfg.format == "csv") {
        emit(classification_csv(classification_from_json(doc)));
    } else {
        emit(classification_text(classification_from_json(doc)));
    }
    return kExitOk;
}

int cmd_verify(int n, const CommonConfig& cfg) {
    const auto path = cache_path(cfg, "verify", n);
    Json doc;
    if (auto cached = load_cached(path, n)) {
        doc = std::move(*cached);
    } else {
        std::cerr << "verifying weight " << n << " over 2^" << (n + 1) * n / 2
                  << " edge subsets of K_" << (n + 1) << "\n";
        const auto started = std::chrono::steady_clock::now();
        const auto report = verify(n, enumeration_options(cfg));
        const auto elapsed = std::chrono::duration<double>(
                                 std::chrono::steady_clock::now() - started)
                                 .count();
        std::cerr << "verification finished in " << elapsed << " s\n";
        doc = verification_to_json(report);
        store_cached(path, doc);
    }
    const bool verified = doc.at("verdict").get<std::string>() == "verified";
    if (cfg.format == "json") {
        emit(json_body(doc));
    } else if (cfg.format == "csv") {
        const auto report = verification_from_json(doc);
        std::ostringstream os;
        os << "record,key,exponent,coefficient\n";
        auto rows = [&os](const std::string& record, const std::string& key, const UniPoly& p) {
            const auto& cs = p.coeffs();
            for (std::size_t i = 0; i < cs.size(); ++i)
                if (cs[i] != 0) os << record << ',' << key << ',' << i << ',' << cs[i] << '\n';
        };
        for (const auto& rec : report.per_lambda) {
            rows("dfs", format_reduced(rec.lambda), rec.dfs_poly);
            if (rec.derived_j) rows("derived_j", format_reduced(rec.lambda), *rec.derived_j);
        }
        emit(os.str());
    } else {
        emit(verification_text(verification_from_json(doc)));
    }
    return verified ? kExitOk : kExitFinding;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tutte polynomials of contracted complete graphs: recurrence engine, "
                 "exhaustive oracles, DFS classification, and verification harness"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    CommonConfig cfg;

    int n = 0, r = 1, s = 1, n_max = 1;
    bool brute = false;

    auto* tutte_cmd = app.add_subcommand("tutte", "Tutte polynomial of one contracted graph");
    tutte_cmd->add_option("--n", n, "total vertex count of K_n")->required();
    tutte_cmd->add_option("--r", r, "contracted subset size");
    tutte_cmd->add_flag("--brute", brute, "cross-check against the subgraph expansion");
    add_common_options(tutte_cmd, cfg);

    auto* table_cmd = app.add_subcommand("table", "full triangular table");
    table_cmd->add_option("--n-max", n_max, "largest row")->required();
    add_common_options(table_cmd, cfg);

    auto* jpoly_cmd = app.add_subcommand("jpoly", "inversion enumerator J_n^(r)(q)");
    jpoly_cmd->add_option("--n", n)->required();
    jpoly_cmd->add_option("--r", r);
    add_common_options(jpoly_cmd, cfg);

    auto* cpoly_cmd =
        app.add_subcommand("cpoly", "connected spanning subgraph enumerator C_n^(r)(t)");
    cpoly_cmd->add_option("--n", n)->required();
    cpoly_cmd->add_option("--r", r);
    add_common_options(cpoly_cmd, cfg);

    auto* ppoly_cmd =
        app.add_subcommand("ppoly", "root-degree enumerator P_n^(s)(t) over K_{n+1}");
    ppoly_cmd->add_option("--n", n)->required();
    ppoly_cmd->add_option("--s", s);
    add_common_options(ppoly_cmd, cfg);

    auto* classify_cmd = app.add_subcommand(
        "classify", "classify spanning connected subgraphs of K_{n+1} by DFS statistic");
    classify_cmd->add_option("--n", n)->required();
    add_common_options(classify_cmd, cfg);

    auto* verify_cmd =
        app.add_subcommand("verify", "full verification harness at weight n");
    verify_cmd->add_option("--n", n)->required();
    add_common_options(verify_cmd, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (tutte_cmd->parsed()) return cmd_tutte(n, r, brute, cfg);
        if (table_cmd->parsed()) return cmd_table(n_max, cfg);
        if (jpoly_cmd->parsed()) return cmd_family("j", n, r, cfg);
        if (cpoly_cmd->parsed()) return cmd_family("c", n, r, cfg);
        if (ppoly_cmd->parsed()) return cmd_family("p", n, s, cfg);
        if (classify_cmd->parsed()) return cmd_classify(n, cfg);
        if (verify_cmd->parsed()) return cmd_verify(n, cfg);
    } catch (const enumeration_limit_error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFinding;
    }
    return kExitUsage;
}
