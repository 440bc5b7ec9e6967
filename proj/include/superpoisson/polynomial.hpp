/*
 * polynomial.hpp -- sparse multivariate polynomials over Rational.
 *
 * A Polynomial is a map from exponent vectors (fixed length = number of
 * even generators) to nonzero rational coefficients.  The map is ordered
 * graded-lexicographically, which fixes the canonical term order used for
 * printing and equality.
 */
#pragma once

#include "rational.hpp"

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace superpoisson {

using ExpVec = std::vector<std::uint32_t>;

inline std::uint64_t total_degree(const ExpVec& e)
{
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

// Graded lexicographic: lower total degree first, then lexicographic.
struct GradedLexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const
    {
        const auto da = total_degree(a), db = total_degree(b);
        if (da != db)
            return da < db;
        return a < b;
    }
};

class Polynomial {
public:
    std::map<ExpVec, Rational, GradedLexLess> terms; // no zero coefficients stored

    Polynomial() = default;

    static Polynomial zero() { return Polynomial{}; }

    static Polynomial constant(std::size_t nvars, const Rational& c)
    {
        Polynomial p;
        if (c != 0)
            p.terms.emplace(ExpVec(nvars, 0), c);
        return p;
    }

    static Polynomial variable(std::size_t nvars, std::size_t i, const Rational& c = 1)
    {
        if (i >= nvars)
            throw std::out_of_range("polynomial variable index");
        Polynomial p;
        if (c != 0) {
            ExpVec e(nvars, 0);
            e[i] = 1;
            p.terms.emplace(std::move(e), c);
        }
        return p;
    }

    bool is_zero() const { return terms.empty(); }

    bool is_constant() const
    {
        return terms.empty() || (terms.size() == 1 && total_degree(terms.begin()->first) == 0);
    }

    Rational constant_value() const
    {
        if (terms.empty())
            return 0;
        if (!is_constant())
            throw std::logic_error("polynomial is not constant");
        return terms.begin()->second;
    }

    std::uint64_t degree() const // degree of 0 reported as 0
    {
        std::uint64_t d = 0;
        for (const auto& [e, c] : terms)
            d = std::max(d, total_degree(e));
        return d;
    }

    void add_term(const ExpVec& e, const Rational& c)
    {
        if (c == 0)
            return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0)
                terms.erase(it);
        }
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b)
    {
        Polynomial r = a;
        for (const auto& [e, c] : b.terms)
            r.add_term(e, c);
        return r;
    }

    friend Polynomial operator-(const Polynomial& a)
    {
        Polynomial r = a;
        for (auto& [e, c] : r.terms)
            c = -c;
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        Polynomial r;
        for (const auto& [ea, ca] : a.terms)
            for (const auto& [eb, cb] : b.terms) {
                ExpVec e = ea;
                for (std::size_t i = 0; i < e.size() && i < eb.size(); ++i)
                    e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    friend Polynomial operator*(const Rational& c, const Polynomial& a)
    {
        Polynomial r;
        if (c == 0)
            return r;
        for (const auto& [e, ca] : a.terms)
            r.terms.emplace(e, c * ca);
        return r;
    }

    Polynomial& operator+=(const Polynomial& b)
    {
        for (const auto& [e, c] : b.terms)
            add_term(e, c);
        return *this;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms == b.terms; }

    Polynomial partial(std::size_t i) const
    {
        Polynomial r;
        for (const auto& [e, c] : terms) {
            if (i < e.size() && e[i] > 0) {
                ExpVec d = e;
                d[i] -= 1;
                r.add_term(d, c * Rational(e[i]));
            }
        }
        return r;
    }
};

} // namespace superpoisson
