#pragma once

#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "boolsum/asymptotics.hpp"
#include "boolsum/bitcombinatorics.hpp"
#include "boolsum/error.hpp"
#include "boolsum/expsum.hpp"
#include "boolsum/parse.hpp"
#include "boolsum/real.hpp"
#include "boolsum/recurrence.hpp"
#include "boolsum/sequence.hpp"

namespace boolsum::cli {

using json = nlohmann::json;

inline constexpr const char* kVersion = "1.0.0";

namespace detail {

/// Integers within double's exact range stay numbers; the rest become strings.
inline json big(const mpz_class& v) {
    static const mpz_class limit = mpz_class(1) << 53;
    if (abs(v) < limit) return json(v.get_si());
    return json(v.get_str());
}

inline json big(const Degree& d) {
    if (d.top_bit() < 53) return json(d.to_u64());
    return json(d.to_string());
}

inline json rational(const mpq_class& q) { return json(q.get_str()); }

inline json big_list(const std::vector<mpz_class>& values) {
    json arr = json::array();
    for (const auto& v : values) arr.push_back(big(v));
    return arr;
}

inline json factored(const FactoredCharPoly& f) {
    return json{{"x_minus_2", f.has_x_minus_2},
                {"levels", std::vector<std::uint64_t>(f.levels.begin(), f.levels.end())},
                {"degree", big(f.degree())}};
}

inline json recurrence_json(const LinearRecurrence& rec) {
    json j{{"coefficients", big_list(rec.coeffs)}, {"order", rec.order()}, {"valid_from", rec.valid_from}};
    if (rec.scale != 1) j["scale"] = big(rec.scale);
    return j;
}

inline std::string csv_cell(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

/// key,value rows for reports that are not naturally tabular.
inline void write_flat_csv(std::ostream& out, const json& result, const std::string& prefix = "") {
    for (const auto& [key, value] : result.items()) {
        const std::string name = prefix.empty() ? key : prefix + "." + key;
        if (value.is_object())
            write_flat_csv(out, value, name);
        else
            out << name << "," << (value.is_array() ? "\"" + value.dump() + "\"" : csv_cell(value)) << "\n";
    }
}

inline std::vector<std::uint64_t> parse_rows(const std::string& text) {
    std::vector<std::uint64_t> rows;
    for (auto part : boolsum::detail::split(text, ',')) {
        const auto t = boolsum::detail::trim(part);
        if (!boolsum::detail::all_digits(t) || t.size() > 18) throw parse_error("bad row '" + std::string(t) + "'");
        rows.push_back(std::stoull(std::string(t)));
    }
    return rows;
}

}  // namespace detail

/// Runs one command line (without the program name). Data goes to `out`,
/// diagnostics to `err`. Exit codes: 0 ok, 2 bad input, 3 infeasible.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact exponential sums of symmetric Boolean functions", "boolsum"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    std::string format;
    unsigned r_max = Limits{}.r_max;
    unsigned max_brute = Limits{}.n_max_bruteforce;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--r-max", r_max, "Largest r for 2^r enumerations")->capture_default_str();
    app.add_option("--max-brute", max_brute, "Largest n for the exhaustive oracle")->capture_default_str();
    app.fallthrough();

    std::string degrees_text;
    auto add_degrees = [&](CLI::App* sub) {
        sub->add_option("--degrees,-k", degrees_text, "Comma-separated degrees, e.g. 3,5 or 2^1000+5")
            ->required();
    };

    std::uint64_t n = 0;
    bool oracle = false;
    unsigned threads = 1;
    auto* sum = app.add_subcommand("sum", "S(n) by the binomial formula");
    add_degrees(sum);
    sum->add_option("--n", n, "Number of variables")->required();
    sum->add_flag("--oracle", oracle, "Also run the exhaustive 2^n oracle");
    sum->add_option("--threads", threads, "Oracle threads");

    bool full = false;
    std::uint64_t verify_terms = 0;
    auto* rec = app.add_subcommand("recurrence", "Minimal characteristic polynomial and recurrence");
    add_degrees(rec);
    rec->add_flag("--full", full, "Also print the full P_r");
    rec->add_option("--verify", verify_terms, "Verify the recurrence on S(0..M)");

    auto* c0 = app.add_subcommand("c0", "Exact limit of S(n)/2^n");
    add_degrees(c0);

    std::optional<unsigned> precision;
    unsigned digits = 15;
    auto* asym = app.add_subcommand("asym", "Main term, asymptotic value and Error_n");
    add_degrees(asym);
    asym->add_option("--n", n, "Number of variables")->required();
    asym->add_option("--precision", precision, "Working precision in bits");
    asym->add_option("--digits", digits, "Significant digits printed");

    std::string rows_text;
    auto* table = app.add_subcommand("error-table", "Error_n for a list of n");
    add_degrees(table);
    table->add_option("--rows", rows_text, "Comma-separated n values")->required();
    table->add_option("--precision", precision, "Working precision in bits");
    table->add_option("--digits", digits, "Significant digits printed");

    std::uint64_t max_n = 0;
    auto* bal = app.add_subcommand("balanced", "All n <= N with S(n) = 0");
    add_degrees(bal);
    bal->add_option("--max-n", max_n, "Upper end of the search")->required();

    std::vector<std::string> argv_store{"boolsum"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        const Limits limits{r_max, max_brute, Limits{}.crossover};
        PrecisionConfig prec = PrecisionConfig::from_environment();
        if (precision) prec = PrecisionConfig(*precision, digits);
        prec.output_digits = digits;

        const DegreeSet K = parse_degrees(degrees_text);
        const auto* chosen = app.get_subcommands().front();
        const std::string command = chosen->get_name();

        json report{{"command", command},
                    {"arguments", args},
                    {"degrees", K.to_strings()},
                    {"precision", prec.bits},
                    {"version", kVersion}};
        json result;
        std::string csv_table;  // set by commands with a natural table

        if (chosen == sum) {
            const mpz_class value = exp_sum(n, K);
            result = {{"n", n}, {"value", detail::big(value)}, {"correlation", detail::rational(correlation(n, K))}};
            if (oracle) {
                const mpz_class brute = exp_sum_bruteforce(n, K, limits, threads);
                result["oracle"] = detail::big(brute);
                result["match"] = brute == value;
            }
            csv_table = "n,value\n" + std::to_string(n) + "," + value.get_str() + "\n";
        } else if (chosen == rec) {
            const auto params = structure_params(K);
            const auto minimal = minimal_charpoly(K, limits);
            const auto poly = expand(minimal);
            const auto recurrence = sequence_recurrence(K, limits);
            const auto bounds = degree_bounds(K);
            result = {{"r", params.r},
                      {"minimal", detail::factored(minimal)},
                      {"polynomial", detail::big_list(poly.coeffs)},
                      {"recurrence", detail::recurrence_json(recurrence)},
                      {"bounds", {{"lower", detail::big(bounds.lower)}, {"upper", detail::big(bounds.upper)}}}};
            if (full) {
                const auto p = full_charpoly(static_cast<unsigned>(params.r), limits);
                result["full"] = {{"polynomial", detail::big_list(p.coeffs)},
                                  {"recurrence", detail::recurrence_json(to_recurrence(p))}};
            }
            if (verify_terms > 0) {
                const auto seq = sequence(K, 0, verify_terms, limits);
                const auto v = verify(seq, recurrence);
                result["verify"] = {{"terms", verify_terms},
                                    {"ok", v.ok},
                                    {"checked", v.checked},
                                    {"first_failure", v.first_failure ? json(*v.first_failure) : json()}};
            }
        } else if (chosen == c0) {
            const auto params = structure_params(K);
            const mpq_class value = c0_exact(K);
            result = {{"c0", detail::rational(value)},
                      {"asymptotically_balanced", value == 0},
                      {"nested", params.is_nested}};
            if (params.is_nested) result["c0_nested"] = detail::rational(c0_nested(K));
            if (params.r <= limits.r_max) result["c0_enumerated"] = detail::rational(c0_enumerated(K, limits));
            const DegreeSet compact = compact_bits(K);
            if (compact.largest().top_bit() + 1 <= limits.r_max) {
                result["c0_relabeled_enumeration"] = detail::rational(c0_enumerated(compact, limits));
                result["relabeled_degrees"] = compact.to_strings();
            }
        } else if (chosen == asym) {
            const mpq_class c0v = c0_exact(K);
            const auto m = main_term(K, n, prec, limits);
            const auto a = asymptotic_eval(K, n, prec, limits);
            result = {{"n", n},
                      {"c0", detail::rational(c0v)},
                      {"exact", detail::big(exp_sum(n, K))},
                      {"main_term", m.to_string(digits)},
                      {"asymptotic", a.to_string(digits)}};
            if (c0v == 0) result["error"] = error_term(K, n, prec, limits).to_string(digits);
        } else if (chosen == table) {
            const auto rows = detail::parse_rows(rows_text);
            json records = json::array();
            csv_table = "n,error\n";
            for (auto row : rows) {
                const std::string e = error_term(K, row, prec, limits).to_string(digits);
                records.push_back({{"n", row}, {"error", e}});
                csv_table += std::to_string(row) + "," + e + "\n";
            }
            result = {{"rows", records}};
            if (format.empty()) format = "csv";
        } else if (chosen == bal) {
            const auto zeros = find_balanced(K, max_n, limits);
            result = {{"max_n", max_n}, {"balanced", zeros}};
            csv_table = "n\n";
            for (auto z : zeros) csv_table += std::to_string(z) + "\n";
        }

        if (format == "csv") {
            if (!csv_table.empty())
                out << csv_table;
            else
                detail::write_flat_csv(out, result);
        } else {
            report["result"] = std::move(result);
            out << report.dump(2) << "\n";
        }
        return 0;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const infeasible_error& e) {
        err << "infeasible: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace boolsum::cli
