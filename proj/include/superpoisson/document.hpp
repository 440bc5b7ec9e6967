/*
 * document.hpp -- the structure-definition document.
 *
 * A document is a JSON object with schema_version 1 describing either a
 * graded Poisson structure (generator table or one of the builders) or
 * raw algebroid data (anchor and bracket entry maps).  All mathematical
 * values are expression strings in the expr grammar, evaluated under the
 * declared signature.  Any malformed document raises DocumentError; the
 * constructors' own consistency errors (degree, parity, symmetry,
 * conflicting entries) are rewrapped so callers can treat every load
 * failure uniformly.
 */
#pragma once

#include "gerstenhaber.hpp"

#include "json.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace superpoisson {

class DocumentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

using json = nlohmann::json;

inline json parse_json_text(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw DocumentError(std::string("document is not valid JSON: ") + e.what());
    }
}

inline void reject_unknown_keys(const json& j, std::initializer_list<std::string_view> allowed,
                                const char* where)
{
    for (const auto& item : j.items()) {
        bool known = false;
        for (const auto& k : allowed)
            if (item.key() == k)
                known = true;
        if (!known)
            throw DocumentError(std::string("unknown field \"") + item.key() + "\" in "
                                + where);
    }
}

inline const json& require_field(const json& j, const char* key, const char* where)
{
    const auto it = j.find(key);
    if (it == j.end())
        throw DocumentError(std::string("missing field \"") + key + "\" in " + where);
    return *it;
}

inline std::int64_t require_int(const json& j, const char* what)
{
    if (!j.is_number_integer())
        throw DocumentError(std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
}

inline std::string require_string(const json& j, const char* what)
{
    if (!j.is_string())
        throw DocumentError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

inline Signature load_signature(const json& j)
{
    if (!j.is_object())
        throw DocumentError("\"signature\" must be an object");
    reject_unknown_keys(j, {"m", "n", "de_rham"}, "\"signature\"");
    const std::int64_t m = require_int(require_field(j, "m", "\"signature\""), "signature.m");
    const std::int64_t n = require_int(require_field(j, "n", "\"signature\""), "signature.n");
    bool de_rham = false;
    if (const auto it = j.find("de_rham"); it != j.end()) {
        if (!it->is_boolean())
            throw DocumentError("signature.de_rham must be a boolean");
        de_rham = it->get<bool>();
    }
    if (m < 0 || n < 0)
        throw DocumentError("signature dimensions must be nonnegative");
    try {
        return Signature(static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(n),
                         de_rham);
    } catch (const std::invalid_argument& e) {
        throw DocumentError(std::string("bad signature: ") + e.what());
    }
}

// generator key: x<i> or th<j>, optionally with a leading d
inline GenId parse_gen_key(const Signature& sig, std::string_view s, bool differential)
{
    const std::string_view full = s;
    const auto fail = [&]() -> GenId {
        throw DocumentError(std::string("bad generator key \"") + std::string(full) + "\"");
    };
    if (differential) {
        if (s.empty() || s.front() != 'd')
            fail();
        s.remove_prefix(1);
    }
    bool odd = false;
    if (s.size() >= 2 && s.substr(0, 2) == "th") {
        odd = true;
        s.remove_prefix(2);
    } else if (!s.empty() && s.front() == 'x') {
        s.remove_prefix(1);
    } else {
        fail();
    }
    if (s.empty() || s.size() > 6)
        fail();
    std::uint64_t idx = 0;
    for (const char c : s) {
        if (c < '0' || c > '9')
            fail();
        idx = idx * 10 + static_cast<std::uint64_t>(c - '0');
    }
    const std::uint64_t bound = odd ? sig.n : sig.m;
    if (idx < 1 || idx > bound)
        throw DocumentError(std::string("generator key \"") + std::string(full)
                            + "\" is out of range for the signature");
    return odd ? odd_gen(static_cast<std::uint32_t>(idx - 1))
               : even_gen(static_cast<std::uint32_t>(idx - 1));
}

inline std::pair<GenId, GenId> parse_pair_key(const Signature& sig, std::string_view s,
                                              bool differential)
{
    const auto comma = s.find(',');
    if (comma == std::string_view::npos)
        throw DocumentError(std::string("bracket key \"") + std::string(s)
                            + "\" must name two generators separated by a comma");
    const auto trim = [](std::string_view v) {
        while (!v.empty() && v.front() == ' ')
            v.remove_prefix(1);
        while (!v.empty() && v.back() == ' ')
            v.remove_suffix(1);
        return v;
    };
    return {parse_gen_key(sig, trim(s.substr(0, comma)), differential),
            parse_gen_key(sig, trim(s.substr(comma + 1)), differential)};
}

inline AlgebraElement load_element(const Signature& sig, const json& j, const std::string& where)
{
    const std::string text = require_string(j, where.c_str());
    try {
        return parse_element(text, sig);
    } catch (const ParseError& e) {
        throw DocumentError(where + ": " + e.what() + " in \"" + text + "\"");
    }
}

inline SuperForm load_form(const Signature& sig, const json& j, const std::string& where)
{
    const std::string text = require_string(j, where.c_str());
    try {
        return parse_form(text, sig);
    } catch (const ParseError& e) {
        throw DocumentError(where + ": " + e.what() + " in \"" + text + "\"");
    }
}

inline Polynomial element_polynomial(const AlgebraElement& a, const std::string& where)
{
    for (const auto& [mono, poly] : a.terms)
        if (mono != 0)
            throw DocumentError(where + ": entry must be a polynomial in the even variables");
    if (a.terms.empty())
        return Polynomial::zero();
    return a.terms.begin()->second;
}

inline Rational element_rational(const AlgebraElement& a, const std::string& where)
{
    const Polynomial p = element_polynomial(a, where);
    if (p.is_zero())
        return Rational(0);
    if (!p.is_constant())
        throw DocumentError(where + ": entry must be a rational constant");
    return p.constant_value();
}

inline std::vector<std::vector<AlgebraElement>> load_matrix(const Signature& sig,
                                                            const json& j)
{
    if (!j.is_array() || j.empty())
        throw DocumentError("\"matrix\" must be a nonempty array of rows");
    std::vector<std::vector<AlgebraElement>> rows;
    for (std::size_t r = 0; r < j.size(); ++r) {
        const json& row = j[r];
        if (!row.is_array() || row.size() != j.size())
            throw DocumentError("\"matrix\" must be square");
        std::vector<AlgebraElement> out;
        for (std::size_t c = 0; c < row.size(); ++c)
            out.push_back(load_element(sig, row[c],
                                       "matrix[" + std::to_string(r) + "]["
                                           + std::to_string(c) + "]"));
        rows.push_back(std::move(out));
    }
    return rows;
}

inline GradedPoissonStructure load_builder(const Signature& sig, const std::string& name,
                                           const json& matrix_json)
{
    const auto entries = load_matrix(sig, matrix_json);
    const std::size_t dim = entries.size();
    try {
        if (name == "pseudoeuclidean") {
            std::vector<std::vector<Rational>> g(dim, std::vector<Rational>(dim));
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j)
                    g[i][j] = element_rational(entries[i][j],
                                               "matrix[" + std::to_string(i) + "]["
                                                   + std::to_string(j) + "]");
            return from_pseudoeuclidean(g);
        }
        std::vector<std::vector<Polynomial>> p(dim, std::vector<Polynomial>(dim));
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                p[i][j] = element_polynomial(entries[i][j],
                                             "matrix[" + std::to_string(i) + "]["
                                                 + std::to_string(j) + "]");
        if (name == "metric")
            return from_metric_cosharp(p);
        if (name == "bivector")
            return from_bivector(p);
        if (name == "classical")
            return from_classical(p);
    } catch (const std::invalid_argument& e) {
        throw DocumentError(std::string("builder \"") + name + "\": " + e.what());
    }
    throw DocumentError("unknown builder \"" + name + "\"");
}

} // namespace detail

// Load a structure document.  Returns the Poisson structure or the raw
// algebroid data it describes; throws DocumentError on any defect.
inline GerstenhaberBracketSource load_document(const std::string& text)
{
    using detail::json;
    const json j = detail::parse_json_text(text);
    if (!j.is_object())
        throw DocumentError("document root must be an object");
    detail::reject_unknown_keys(j,
                                {"schema_version", "signature", "kind", "degree", "builder",
                                 "matrix", "table", "anchor", "bracket"},
                                "the document");
    if (detail::require_int(detail::require_field(j, "schema_version", "the document"),
                            "schema_version")
        != 1)
        throw DocumentError("unsupported schema_version (expected 1)");
    const Signature sig =
        detail::load_signature(detail::require_field(j, "signature", "the document"));
    const std::string kind = detail::require_string(
        detail::require_field(j, "kind", "the document"), "\"kind\"");

    if (kind == "poisson") {
        for (const char* banned : {"anchor", "bracket"})
            if (j.contains(banned))
                throw DocumentError(std::string("field \"") + banned
                                    + "\" is not allowed for kind \"poisson\"");
        if (j.contains("builder")) {
            if (j.contains("table"))
                throw DocumentError("\"builder\" and \"table\" are mutually exclusive");
            const std::string name =
                detail::require_string(j.at("builder"), "\"builder\"");
            GradedPoissonStructure P = detail::load_builder(
                sig, name, detail::require_field(j, "matrix", "the document"));
            if (!(P.sig == sig))
                throw DocumentError("declared signature does not match builder \"" + name
                                    + "\"");
            if (j.contains("degree")
                && detail::require_int(j.at("degree"), "\"degree\"") != P.degree)
                throw DocumentError("declared degree does not match builder \"" + name
                                    + "\"");
            return P;
        }
        if (j.contains("matrix"))
            throw DocumentError("\"matrix\" requires \"builder\"");
        const std::int64_t k =
            detail::require_int(detail::require_field(j, "degree", "the document"),
                                "\"degree\"");
        if (k < -64 || k > 64)
            throw DocumentError("\"degree\" is out of range");
        GradedPoissonStructure P(sig, static_cast<int>(k));
        if (const auto it = j.find("table"); it != j.end()) {
            if (!it->is_object())
                throw DocumentError("\"table\" must be an object");
            for (const auto& item : it->items()) {
                const auto [u, v] = detail::parse_pair_key(sig, item.key(), false);
                const AlgebraElement value =
                    detail::load_element(sig, item.value(), "table[\"" + item.key() + "\"]");
                try {
                    P.set_bracket(u, v, value);
                } catch (const std::invalid_argument& e) {
                    throw DocumentError("table[\"" + item.key() + "\"]: " + e.what());
                }
            }
        }
        return P;
    }

    if (kind == "algebroid") {
        for (const char* banned : {"degree", "builder", "matrix", "table"})
            if (j.contains(banned))
                throw DocumentError(std::string("field \"") + banned
                                    + "\" is not allowed for kind \"algebroid\"");
        AlgebroidData D(sig);
        if (const auto it = j.find("anchor"); it != j.end()) {
            if (!it->is_object())
                throw DocumentError("\"anchor\" must be an object");
            for (const auto& item : it->items()) {
                const GenId u = detail::parse_gen_key(sig, item.key(), true);
                if (!item.value().is_object())
                    throw DocumentError("anchor[\"" + item.key() + "\"] must be an object");
                Derivation d = Derivation::zero(sig, gen_parity(u));
                for (const auto& entry : item.value().items()) {
                    const GenId target = detail::parse_gen_key(sig, entry.key(), false);
                    const AlgebraElement value = detail::load_element(
                        sig, entry.value(),
                        "anchor[\"" + item.key() + "\"][\"" + entry.key() + "\"]");
                    try {
                        d.set_value(target, value);
                    } catch (const std::invalid_argument& e) {
                        throw DocumentError("anchor[\"" + item.key() + "\"][\""
                                            + entry.key() + "\"]: " + e.what());
                    }
                }
                try {
                    D.set_anchor(u, d);
                } catch (const std::invalid_argument& e) {
                    throw DocumentError("anchor[\"" + item.key() + "\"]: " + e.what());
                }
            }
        }
        if (const auto it = j.find("bracket"); it != j.end()) {
            if (!it->is_object())
                throw DocumentError("\"bracket\" must be an object");
            for (const auto& item : it->items()) {
                const auto [u, v] = detail::parse_pair_key(sig, item.key(), true);
                const SuperForm value =
                    detail::load_form(sig, item.value(), "bracket[\"" + item.key() + "\"]");
                try {
                    D.set_bracket(u, v, value);
                } catch (const std::invalid_argument& e) {
                    throw DocumentError("bracket[\"" + item.key() + "\"]: " + e.what());
                }
            }
        }
        return D;
    }

    throw DocumentError("\"kind\" must be \"poisson\" or \"algebroid\"");
}

} // namespace superpoisson
