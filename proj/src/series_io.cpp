#include "compavoid/series_io.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "compavoid/errors.hpp"

namespace compavoid {

namespace {

std::string power(char var, unsigned e)
{
    if (e == 0) {
        return {};
    }
    std::string s(1, var);
    if (e > 1) {
        s += '^' + std::to_string(e);
    }
    return s;
}

// Appends a signed monomial. `first` suppresses the leading '+'.
void append_monomial(std::string& out, const BigInt& c, const std::string& vars, bool first)
{
    BigInt mag = c;
    if (c < 0) {
        out += '-';
        mag = -c;
    } else if (!first) {
        out += '+';
    }
    if (mag != 1 || vars.empty()) {
        out += mag.str();
    }
    out += vars;
}

using QPoly = std::vector<std::pair<unsigned, BigInt>>;

std::string render_qpoly(const QPoly& p)
{
    std::string out;
    bool first = true;
    for (const auto& [k, c] : p) {
        append_monomial(out, c, power('q', k), first);
        first = false;
    }
    return out;
}

} // namespace

std::string render_text(const Series& s)
{
    if (s.is_zero()) {
        return "0";
    }
    // Group terms by n; the map is already sorted by (n, k).
    std::vector<std::pair<unsigned, QPoly>> groups;
    for (const auto& [e, c] : s.terms()) {
        if (groups.empty() || groups.back().first != e.n) {
            groups.emplace_back(e.n, QPoly{});
        }
        groups.back().second.emplace_back(e.k, c);
    }

    std::string out;
    bool first = true;
    for (auto& [n, poly] : groups) {
        const std::string xpart = power('x', n);
        if (n == 0) {
            out += render_qpoly(poly);
        } else if (poly.size() == 1) {
            append_monomial(out, poly.front().second, power('q', poly.front().first) + xpart, first);
        } else {
            // -(q+2q^2)x^3 reads better than +(-q-2q^2)x^3.
            if (poly.front().second < 0) {
                out += '-';
                for (auto& [k, c] : poly) {
                    c = -c;
                }
            } else if (!first) {
                out += '+';
            }
            out += '(' + render_qpoly(poly) + ')' + xpart;
        }
        first = false;
    }
    return out;
}

std::string render_by_length(const Series& s)
{
    if (s.is_zero()) {
        return "0";
    }
    std::vector<Term> terms;
    for (const auto& [e, c] : s.terms()) {
        terms.push_back({e, c});
    }
    std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return a.exp.k != b.exp.k ? a.exp.k < b.exp.k : a.exp.n < b.exp.n;
    });
    std::string out;
    bool first = true;
    for (const auto& t : terms) {
        append_monomial(out, t.coeff, power('x', t.exp.n) + power('q', t.exp.k), first);
        first = false;
    }
    return out;
}

std::string to_csv(const Series& s)
{
    std::ostringstream os;
    os << "n,k,coefficient\n";
    for (const auto& [e, c] : s.terms()) {
        os << e.n << ',' << e.k << ',' << c.str() << '\n';
    }
    return os.str();
}

std::string to_json(const Series& s)
{
    nlohmann::ordered_json doc;
    doc["max_weight"] = s.max_weight();
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [e, c] : s.terms()) {
        nlohmann::ordered_json t;
        t["n"] = e.n;
        t["k"] = e.k;
        t["c"] = c.str();
        terms.push_back(std::move(t));
    }
    doc["terms"] = std::move(terms);
    return doc.dump();
}

Series from_json(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("series JSON: ") + e.what());
    }
    try {
        const auto bound = doc.at("max_weight").get<unsigned>();
        std::vector<Term> terms;
        for (const auto& t : doc.at("terms")) {
            const auto n = t.at("n").get<unsigned>();
            const auto k = t.at("k").get<unsigned>();
            if (n > bound || k > bound) {
                throw ParseError("series JSON: term (" + std::to_string(n) + "," + std::to_string(k) +
                                 ") exceeds max_weight " + std::to_string(bound));
            }
            terms.push_back({{n, k}, BigInt(t.at("c").get<std::string>())});
        }
        return Series::from_terms(bound, terms);
    } catch (const ParseError&) {
        throw;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("series JSON: ") + e.what());
    } catch (const std::runtime_error& e) {
        // cpp_int rejects non-numeric coefficient strings with runtime_error.
        throw ParseError(std::string("series JSON: bad coefficient: ") + e.what());
    }
}

} // namespace compavoid
