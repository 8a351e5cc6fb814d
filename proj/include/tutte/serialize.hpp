#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "tutte/bipoly.hpp"
#include "tutte/dfs.hpp"
#include "tutte/harness.hpp"
#include "tutte/partition.hpp"
#include "tutte/recurrence.hpp"
#include "tutte/unipoly.hpp"

namespace tutte {

inline constexpr const char* kToolVersion = "1.0.0";

// Keys appear in documented order; nlohmann's ordered_json preserves
// insertion order, so serialized documents are byte-stable.
using Json = nlohmann::ordered_json;

inline std::string int_to_string(const Int& v) { return v.str(); }

// Canonical polynomial JSON:
//   {"vars":["q"],"terms":[{"e":[i],"c":"<decimal>"}]}
// with terms sorted by exponent; coefficients as decimal strings so
// consumers never hit integer-width limits.
inline Json poly_to_json(const UniPoly& p, const std::string& var) {
    Json doc;
    doc["vars"] = Json::array({var});
    Json terms = Json::array();
    const auto& cs = p.coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (cs[i] == 0) continue;
        Json term;
        term["e"] = Json::array({i});
        term["c"] = int_to_string(cs[i]);
        terms.push_back(std::move(term));
    }
    doc["terms"] = std::move(terms);
    return doc;
}

inline Json poly_to_json(const BiPoly& p) {
    Json doc;
    doc["vars"] = Json::array({"x", "y"});
    Json terms = Json::array();
    for (const auto& [key, c] : p.terms()) {
        Json term;
        term["e"] = Json::array({key.first, key.second});
        term["c"] = int_to_string(c);
        terms.push_back(std::move(term));
    }
    doc["terms"] = std::move(terms);
    return doc;
}

inline UniPoly unipoly_from_json(const Json& doc) {
    if (!doc.contains("vars") || !doc.contains("terms") || doc["vars"].size() != 1)
        throw std::invalid_argument("unipoly_from_json: not a univariate polynomial document");
    std::vector<Int> coeffs;
    for (const auto& term : doc["terms"]) {
        const auto& e = term.at("e");
        if (e.size() != 1) throw std::invalid_argument("unipoly_from_json: bad exponent arity");
        const std::size_t i = e[0].get<std::size_t>();
        if (coeffs.size() <= i) coeffs.resize(i + 1, Int(0));
        coeffs[i] = Int(term.at("c").get<std::string>());
    }
    return UniPoly(std::move(coeffs));
}

inline BiPoly bipoly_from_json(const Json& doc) {
    if (!doc.contains("vars") || !doc.contains("terms") || doc["vars"].size() != 2)
        throw std::invalid_argument("bipoly_from_json: not a bivariate polynomial document");
    BiPoly out;
    for (const auto& term : doc["terms"]) {
        const auto& e = term.at("e");
        if (e.size() != 2) throw std::invalid_argument("bipoly_from_json: bad exponent arity");
        out.add_term(e[0].get<int>(), e[1].get<int>(), Int(term.at("c").get<std::string>()));
    }
    return out;
}

inline Json partition_to_json(const Partition& p) {
    Json arr = Json::array();
    for (int part : p.parts()) arr.push_back(part);
    return arr;
}

inline Partition partition_from_json(const Json& arr) {
    std::vector<int> parts;
    for (const auto& v : arr) parts.push_back(v.get<int>());
    return Partition(std::move(parts));
}

inline Json classification_to_json(const ClassificationReport& report) {
    Json doc;
    doc["tool_version"] = kToolVersion;
    doc["n"] = report.n;
    doc["masks"] = std::to_string(report.mask_count);
    Json classes = Json::array();
    for (const auto& bucket : report.classes) {
        Json entry;
        entry["lambda"] = partition_to_json(bucket.lambda);
        entry["poly"] = poly_to_json(bucket.enumerator, "t");
        entry["count"] = int_to_string(bucket.enumerator.eval(1));
        classes.push_back(std::move(entry));
    }
    doc["classes"] = std::move(classes);
    Json degrees = Json::array();
    for (std::size_t s = 1; s <= report.by_degree.size(); ++s) {
        Json entry;
        entry["s"] = s;
        entry["poly"] = poly_to_json(report.by_degree[s - 1], "t");
        degrees.push_back(std::move(entry));
    }
    doc["by_degree"] = std::move(degrees);
    return doc;
}

inline ClassificationReport classification_from_json(const Json& doc) {
    ClassificationReport report;
    report.n = doc.at("n").get<int>();
    report.mask_count = std::stoull(doc.at("masks").get<std::string>());
    for (const auto& entry : doc.at("classes"))
        report.classes.push_back(ClassBucket{partition_from_json(entry.at("lambda")),
                                             unipoly_from_json(entry.at("poly"))});
    for (const auto& entry : doc.at("by_degree"))
        report.by_degree.push_back(unipoly_from_json(entry.at("poly")));
    return report;
}

inline Json verification_to_json(const VerificationReport& report) {
    Json doc;
    doc["tool_version"] = kToolVersion;
    doc["n"] = report.n;
    doc["masks"] = std::to_string(report.mask_count);
    Json lambdas = Json::array();
    for (const auto& rec : report.per_lambda) {
        Json entry;
        entry["lambda"] = partition_to_json(rec.lambda);
        entry["dfs_poly"] = poly_to_json(rec.dfs_poly, "t");
        if (rec.expected_poly) entry["expected_poly"] = poly_to_json(*rec.expected_poly, "t");
        entry["match"] = rec.match;
        if (rec.derived_j)
            entry["derived_j"] = poly_to_json(*rec.derived_j, "q");
        else
            entry["derive_failure"] = rec.derive_failure;
        entry["degree_ok"] = rec.degree_ok;
        entry["positive"] = rec.positive;
        entry["log_concave"] = rec.log_concave_ok;
        lambdas.push_back(std::move(entry));
    }
    doc["lambdas"] = std::move(lambdas);
    Json degree_checks = Json::array();
    for (const auto& c : report.degree_checks)
        degree_checks.push_back(Json{{"s", c.s}, {"ok", c.ok}});
    doc["by_degree_checks"] = std::move(degree_checks);
    doc["grand_total_ok"] = report.grand_total_ok;
    Json length_checks = Json::array();
    for (const auto& c : report.length_checks)
        length_checks.push_back(Json{{"r", c.r}, {"evaluable", c.evaluable}, {"ok", c.ok}});
    doc["length_aggregation_checks"] = std::move(length_checks);
    doc["j_total_evaluable"] = report.j_total_evaluable;
    doc["j_total_ok"] = report.j_total_ok;
    doc["notes"] = report.notes;
    doc["verdict"] = report.verified ? "verified" : "finding";
    return doc;
}

inline VerificationReport verification_from_json(const Json& doc) {
    VerificationReport report;
    report.n = doc.at("n").get<int>();
    report.mask_count = std::stoull(doc.at("masks").get<std::string>());
    for (const auto& entry : doc.at("lambdas")) {
        LambdaVerification rec;
        rec.lambda = partition_from_json(entry.at("lambda"));
        rec.dfs_poly = unipoly_from_json(entry.at("dfs_poly"));
        if (entry.contains("expected_poly"))
            rec.expected_poly = unipoly_from_json(entry.at("expected_poly"));
        rec.match = entry.at("match").get<bool>();
        if (entry.contains("derived_j"))
            rec.derived_j = unipoly_from_json(entry.at("derived_j"));
        if (entry.contains("derive_failure"))
            rec.derive_failure = entry.at("derive_failure").get<std::string>();
        rec.degree_ok = entry.at("degree_ok").get<bool>();
        rec.positive = entry.at("positive").get<bool>();
        rec.log_concave_ok = entry.at("log_concave").get<bool>();
        report.per_lambda.push_back(std::move(rec));
    }
    for (const auto& c : doc.at("by_degree_checks"))
        report.degree_checks.push_back(DegreeCheck{c.at("s").get<int>(), c.at("ok").get<bool>()});
    report.grand_total_ok = doc.at("grand_total_ok").get<bool>();
    for (const auto& c : doc.at("length_aggregation_checks"))
        report.length_checks.push_back(LengthAggregateCheck{
            c.at("r").get<int>(), c.at("evaluable").get<bool>(), c.at("ok").get<bool>()});
    report.j_total_evaluable = doc.at("j_total_evaluable").get<bool>();
    report.j_total_ok = doc.at("j_total_ok").get<bool>();
    report.notes = doc.at("notes").get<std::string>();
    report.verified = doc.at("verdict").get<std::string>() == "verified";
    return report;
}

// Plain-text renderings for visual diffing.

inline std::string table_text(const TutteTable& table) {
    std::ostringstream os;
    for (int n = 1; n <= table.n_max(); ++n)
        for (int r = 1; r <= n; ++r)
            os << "T[" << n << ',' << r << "] = " << poly_text(table.entry(n, r)) << '\n';
    return os.str();
}

inline std::string classification_text(const ClassificationReport& report) {
    std::ostringstream os;
    os << "classification n=" << report.n << " over K_" << (report.n + 1) << " ("
       << report.mask_count << " masks)\n";
    for (const auto& bucket : report.classes)
        os << format_parts(bucket.lambda) << " : " << poly_text(bucket.enumerator, 't')
           << "  [count " << bucket.enumerator.eval(1) << "]\n";
    for (std::size_t s = 1; s <= report.by_degree.size(); ++s)
        os << "degree s=" << s << " : " << poly_text(report.by_degree[s - 1], 't') << "  [count "
           << report.by_degree[s - 1].eval(1) << "]\n";
    return os.str();
}

inline std::string verification_text(const VerificationReport& report) {
    std::ostringstream os;
    os << "verification n=" << report.n << " (" << report.mask_count << " masks)\n";
    for (const auto& rec : report.per_lambda) {
        os << format_parts(rec.lambda) << " : " << poly_text(rec.dfs_poly, 't');
        if (rec.expected_poly) os << (rec.match ? "  match" : "  MISMATCH");
        if (rec.derived_j)
            os << "  J=" << poly_text(*rec.derived_j, 'q');
        else
            os << "  derivation failed: " << rec.derive_failure;
        os << (rec.degree_ok ? "  degree ok" : "  degree BAD")
           << (rec.positive ? ", positive" : ", NOT positive")
           << (rec.log_concave_ok ? ", log-concave" : ", NOT log-concave") << '\n';
    }
    for (const auto& c : report.degree_checks)
        os << "degree aggregation s=" << c.s << ": " << (c.ok ? "ok" : "FAIL") << '\n';
    os << "grand total: " << (report.grand_total_ok ? "ok" : "FAIL") << '\n';
    for (const auto& c : report.length_checks)
        os << "length aggregation r=" << c.r << ": "
           << (c.ok ? "ok" : (c.evaluable ? "FAIL" : "not evaluable (derivation failed)"))
           << '\n';
    os << "full aggregation: "
       << (report.j_total_ok
               ? "ok"
               : (report.j_total_evaluable ? "FAIL" : "not evaluable (derivation failed)"))
       << '\n';
    os << "note: " << report.notes << '\n';
    os << "verdict: " << (report.verified ? "verified" : "finding") << '\n';
    return os.str();
}

// CSV flattening: polynomials become exponent,coefficient rows.

inline std::string poly_csv(const UniPoly& p) {
    std::ostringstream os;
    os << "exponent,coefficient\n";
    const auto& cs = p.coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i)
        if (cs[i] != 0) os << i << ',' << cs[i] << '\n';
    return os.str();
}

inline std::string poly_csv(const BiPoly& p) {
    std::ostringstream os;
    os << "xexp,yexp,coefficient\n";
    for (const auto& [key, c] : p.terms())
        os << key.first << ',' << key.second << ',' << c << '\n';
    return os.str();
}

inline std::string classification_csv(const ClassificationReport& report) {
    std::ostringstream os;
    os << "key,exponent,coefficient\n";
    auto rows = [&os](const std::string& key, const UniPoly& p) {
        const auto& cs = p.coeffs();
        for (std::size_t i = 0; i < cs.size(); ++i)
            if (cs[i] != 0) os << key << ',' << i << ',' << cs[i] << '\n';
    };
    for (const auto& bucket : report.classes) rows(format_reduced(bucket.lambda), bucket.enumerator);
    for (std::size_t s = 1; s <= report.by_degree.size(); ++s)
        rows("s" + std::to_string(s), report.by_degree[s - 1]);
    return os.str();
}

}  // namespace tutte
