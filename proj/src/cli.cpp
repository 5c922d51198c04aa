#include "compavoid/cli.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "compavoid/errors.hpp"
#include "compavoid/oracle.hpp"
#include "compavoid/runs.hpp"
#include "compavoid/series_io.hpp"
#include "compavoid/solver.hpp"
#include "compavoid/words.hpp"

namespace compavoid::cli {

namespace {

// Raised when two computation routes that must agree do not.
class InvariantViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void print_series(std::ostream& out, const Series& s, const std::string& format)
{
    if (format == "csv") {
        out << to_csv(s);
    } else if (format == "json") {
        out << to_json(s) << '\n';
    } else {
        out << render_text(s) << '\n';
    }
}

std::string log2_fixed4(unsigned n)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", std::log2(double(n)));
    return buf;
}

void print_distribution(std::ostream& out, const RunDistribution& d, const std::string& format)
{
    struct Row {
        unsigned L;
        std::string count, probability, cumulative;
    };
    std::vector<Row> rows;
    BigInt running = 0;
    for (const auto& [L, c] : d.counts) {
        running += c;
        rows.push_back({L, c.str(), binary_fraction_decimal(c, d.n - 1),
                        binary_fraction_decimal(running, d.n - 1)});
    }
    const std::string mean = d.mean.str();

    if (format == "json") {
        nlohmann::ordered_json doc;
        doc["n"] = d.n;
        doc["total"] = d.total.str();
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            nlohmann::ordered_json row;
            row["L"] = r.L;
            row["count"] = r.count;
            row["probability"] = r.probability;
            row["cumulative"] = r.cumulative;
            arr.push_back(std::move(row));
        }
        doc["rows"] = std::move(arr);
        doc["mean"] = mean;
        doc["log2_n"] = log2_fixed4(d.n);
        out << doc.dump() << '\n';
    } else if (format == "csv") {
        out << "L,count,probability,cumulative\n";
        for (const auto& r : rows) {
            out << r.L << ',' << r.count << ',' << r.probability << ',' << r.cumulative << '\n';
        }
    } else {
        out << "L\tcount\tprobability\tcumulative\n";
        for (const auto& r : rows) {
            out << r.L << '\t' << r.count << '\t' << r.probability << '\t' << r.cumulative << '\n';
        }
        out << "total " << d.total.str() << "; mean " << mean << "; log2(n) " << log2_fixed4(d.n)
            << '\n';
    }
}

} // namespace

std::string binary_fraction_decimal(const BigInt& numerator, unsigned exponent)
{
    BigInt scaled = numerator;
    for (unsigned i = 0; i < exponent; ++i) {
        scaled *= 5;
    }
    std::string digits = scaled.str();
    if (digits.size() <= exponent) {
        digits.insert(0, exponent + 1 - digits.size(), '0');
    }
    std::string whole = digits.substr(0, digits.size() - exponent);
    std::string frac = digits.substr(digits.size() - exponent);
    while (!frac.empty() && frac.back() == '0') {
        frac.pop_back();
    }
    return frac.empty() ? whole : whole + '.' + frac;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact enumeration of compositions avoiding forbidden factors", "compavoid"};
    app.require_subcommand(1);

    const std::vector<std::string> formats{"text", "csv", "json"};
    unsigned max_weight = 10;
    std::string format = "text";

    auto* carlitz = app.add_subcommand("carlitz", "Carlitz compositions by weight and length");
    carlitz->add_option("--max-weight,-N", max_weight, "Truncation bound on the weight");
    carlitz->add_option("--format", format)->check(CLI::IsMember(formats));

    unsigned r = 2;
    auto* runs = app.add_subcommand("runs", "Compositions with every run shorter than r");
    runs->add_option("--r", r, "Run bound")->required()->check(CLI::Range(1U, 1U << 30));
    runs->add_option("--max-weight,-N", max_weight);
    runs->add_option("--format", format)->check(CLI::IsMember(formats));

    unsigned n = 1;
    unsigned k = 0;
    auto* count_cmd = app.add_subcommand("count", "C(n,k,r) as a single integer");
    count_cmd->add_option("--n", n)->required();
    count_cmd->add_option("--k", k)->required();
    count_cmd->add_option("--r", r)->required()->check(CLI::Range(1U, 1U << 30));

    std::string words_spec;
    std::string method = "auto";
    auto* avoid = app.add_subcommand("avoid", "Compositions avoiding a finite list of factors");
    avoid->add_option("--words", words_spec, "Forbidden words, e.g. \"1 1;2 2\"")->required();
    avoid->add_option("--max-weight,-N", max_weight);
    avoid->add_option("--format", format)->check(CLI::IsMember(formats));
    avoid->add_option("--method", method)->check(CLI::IsMember({"auto", "system", "easy"}));

    std::string x_spec;
    std::string y_spec;
    std::optional<unsigned> corr_bound;
    auto* correlate = app.add_subcommand("correlate", "Correlation vector and polynomial of x on y");
    correlate->add_option("--x", x_spec)->required();
    correlate->add_option("--y", y_spec)->required();
    correlate->add_option("--max-weight,-N", corr_bound, "Defaults to the weight of x");
    correlate->add_option("--format", format)->check(CLI::IsMember(formats));

    auto* longest = app.add_subcommand("longest-run", "Distribution of the longest run over compositions of n");
    longest->add_option("--n", n)->required()->check(CLI::Range(1U, 1U << 20));
    longest->add_option("--format", format)->check(CLI::IsMember(formats));

    std::optional<unsigned> oracle_k;
    std::optional<unsigned> run_below;
    std::string oracle_avoid;
    OracleOptions oracle_opts;
    auto* oracle = app.add_subcommand("oracle", "Brute-force count by enumeration");
    oracle->add_option("--n", n)->required()->check(CLI::Range(1U, 64U));
    oracle->add_option("--k", oracle_k, "Number of parts (default: any)");
    auto* below_opt = oracle->add_option("--max-run-below", run_below)->check(CLI::Range(1U, 1U << 30));
    oracle->add_option("--avoid", oracle_avoid, "Forbidden words")->excludes(below_opt);
    oracle->add_flag("--force", oracle_opts.force, "Enumerate beyond n = " + std::to_string(oracle_opts.cap));
    oracle->add_option("--threads", oracle_opts.threads);

    std::vector<const char*> argv{"compavoid"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? ok : usage_error;
    }

    try {
        if (carlitz->parsed()) {
            print_series(out, carlitz_series(max_weight), format);
        } else if (runs->parsed()) {
            print_series(out, bounded_run_series(r, max_weight), format);
        } else if (count_cmd->parsed()) {
            out << count(n, k, r).str() << '\n';
        } else if (avoid->parsed()) {
            const ForbiddenList list = make_forbidden_list(parse_word_list(words_spec));
            Series result;
            if (method == "easy") {
                result = easy_case_series(list, max_weight);
            } else if (method == "system" || !list.easy_case()) {
                result = solve_f(build_system(list, max_weight));
            } else {
                result = easy_case_series(list, max_weight);
                if (result != solve_f(build_system(list, max_weight))) {
                    throw InvariantViolation("closed form and linear system disagree for \"" +
                                             list.to_string() + "\"");
                }
            }
            print_series(out, result, format);
        } else if (correlate->parsed()) {
            const Word x = Word::parse(x_spec);
            const Word y = Word::parse(y_spec);
            const unsigned bound = corr_bound.value_or(unsigned(x.weight()));
            const std::string vec = correlation_vector(x, y).to_string();
            const Series poly = correlation_polynomial(x, y, bound);
            if (format == "json") {
                nlohmann::ordered_json doc;
                doc["x"] = x.to_string();
                doc["y"] = y.to_string();
                doc["vector"] = vec;
                doc["polynomial"] = render_by_length(poly);
                doc["series"] = nlohmann::ordered_json::parse(to_json(poly));
                out << doc.dump() << '\n';
            } else if (format == "csv") {
                out << "vector," << vec << '\n' << to_csv(poly);
            } else {
                out << "vector: " << vec << '\n' << "polynomial: " << render_by_length(poly) << '\n';
            }
        } else if (longest->parsed()) {
            print_distribution(out, longest_run_distribution(n), format);
        } else if (oracle->parsed()) {
            CompositionFilter filter = CompositionFilter::all();
            if (run_below) {
                filter = CompositionFilter::max_run_below(*run_below);
            } else if (!oracle_avoid.empty()) {
                filter = CompositionFilter::avoid_factors(make_forbidden_list(parse_word_list(oracle_avoid)));
            }
            out << oracle_count(n, oracle_k, filter, oracle_opts).str() << '\n';
        }
    } catch (const PivotError& e) {
        err << "internal error: " << e.what() << '\n';
        return internal_error;
    } catch (const InvariantViolation& e) {
        err << "internal error: " << e.what() << '\n';
        return internal_error;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return internal_error;
    }
    return ok;
}

} // namespace compavoid::cli
