/*
 * algebra.hpp -- elements of the free supercommutative algebra A.
 *
 * An element is a sum p_I(x) * th_I over subsets I of the odd generators,
 * stored as a map from index bitmask to polynomial coefficient.  Odd
 * monomials keep strictly increasing index order; reordering signs are the
 * Koszul signs counted by transpositions.  th_j * th_j == 0.
 */
#pragma once

#include "polynomial.hpp"
#include "signature.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace superpoisson {

using OddMono = std::uint64_t; // bit j set == factor th_{j+1} present

// Canonical order: by Z-degree (popcount), then by mask value.
struct OddMonoLess {
    bool operator()(OddMono a, OddMono b) const
    {
        const int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb)
            return pa < pb;
        return a < b;
    }
};

// Sign of merging th_I * th_J into increasing order, as exponent mod 2.
// Counts pairs (i in I, j in J) with i > j.
inline int koszul_inversions(OddMono I, OddMono J)
{
    int inv = 0;
    OddMono j = J;
    while (j) {
        const int bit = std::countr_zero(j);
        inv += std::popcount(I >> (bit + 1));
        j &= j - 1;
    }
    return inv & 1;
}

class AlgebraElement {
public:
    Signature sig;
    std::map<OddMono, Polynomial, OddMonoLess> terms; // no zero polynomials stored

    AlgebraElement() = default;
    explicit AlgebraElement(const Signature& s) : sig(s) {}

    static AlgebraElement zero(const Signature& s) { return AlgebraElement(s); }

    static AlgebraElement constant(const Signature& s, const Rational& c)
    {
        AlgebraElement a(s);
        a.add_term(0, Polynomial::constant(s.m, c));
        return a;
    }

    static AlgebraElement one(const Signature& s) { return constant(s, 1); }

    static AlgebraElement from_polynomial(const Signature& s, const Polynomial& p)
    {
        AlgebraElement a(s);
        a.add_term(0, p);
        return a;
    }

    static AlgebraElement x(const Signature& s, std::uint32_t i)
    {
        check_gen(s, even_gen(i));
        return from_polynomial(s, Polynomial::variable(s.m, i));
    }

    static AlgebraElement theta(const Signature& s, std::uint32_t j)
    {
        check_gen(s, odd_gen(j));
        AlgebraElement a(s);
        a.add_term(OddMono{1} << j, Polynomial::constant(s.m, 1));
        return a;
    }

    static AlgebraElement generator(const Signature& s, const GenId& u)
    {
        return u.odd ? theta(s, u.index) : x(s, u.index);
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(OddMono mono, const Polynomial& p)
    {
        if (p.is_zero())
            return;
        auto it = terms.find(mono);
        if (it == terms.end()) {
            terms.emplace(mono, p);
        } else {
            it->second += p;
            if (it->second.is_zero())
                terms.erase(it);
        }
    }

    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b)
    {
        require_same_sig(a, b);
        AlgebraElement r = a;
        for (const auto& [mono, p] : b.terms)
            r.add_term(mono, p);
        return r;
    }

    friend AlgebraElement operator-(const AlgebraElement& a)
    {
        AlgebraElement r = a;
        for (auto& [mono, p] : r.terms)
            p = -p;
        return r;
    }

    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b)
    {
        return a + (-b);
    }

    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b)
    {
        require_same_sig(a, b);
        AlgebraElement r(a.sig);
        for (const auto& [ma, pa] : a.terms)
            for (const auto& [mb, pb] : b.terms) {
                if (ma & mb)
                    continue; // repeated odd factor
                const Polynomial prod = pa * pb;
                r.add_term(ma | mb, koszul_inversions(ma, mb) ? -prod : prod);
            }
        return r;
    }

    friend AlgebraElement operator*(const Rational& c, const AlgebraElement& a)
    {
        AlgebraElement r(a.sig);
        for (const auto& [mono, p] : a.terms)
            r.add_term(mono, c * p);
        return r;
    }

    AlgebraElement& operator+=(const AlgebraElement& b)
    {
        if (terms.empty() && sig == Signature{})
            sig = b.sig;
        require_same_sig(*this, b);
        for (const auto& [mono, p] : b.terms)
            add_term(mono, p);
        return *this;
    }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b)
    {
        return a.sig == b.sig && a.terms == b.terms;
    }

    bool is_homogeneous() const
    {
        if (terms.empty())
            return true;
        const int d = std::popcount(terms.begin()->first);
        for (const auto& [mono, p] : terms)
            if (std::popcount(mono) != d)
                return false;
        return true;
    }

    // Z-degree (number of odd factors).  Zero reports degree 0.
    int degree() const
    {
        if (terms.empty())
            return 0;
        if (!is_homogeneous())
            throw std::logic_error("inhomogeneous element queried for exact degree");
        return std::popcount(terms.begin()->first);
    }

    bool has_homogeneous_parity() const
    {
        if (terms.empty())
            return true;
        const int p = std::popcount(terms.begin()->first) & 1;
        for (const auto& [mono, poly] : terms)
            if ((std::popcount(mono) & 1) != p)
                return false;
        return true;
    }

    int parity() const // 0 for zero
    {
        if (terms.empty())
            return 0;
        if (!has_homogeneous_parity())
            throw std::logic_error("inhomogeneous element queried for parity");
        return std::popcount(terms.begin()->first) & 1;
    }

    // (even part, odd part)
    std::pair<AlgebraElement, AlgebraElement> parity_components() const
    {
        AlgebraElement even(sig), odd(sig);
        for (const auto& [mono, p] : terms)
            (std::popcount(mono) & 1 ? odd : even).terms.emplace(mono, p);
        return {even, odd};
    }

private:
    static void require_same_sig(const AlgebraElement& a, const AlgebraElement& b)
    {
        if (!(a.sig == b.sig))
            throw std::invalid_argument("signature mismatch");
    }
};

// Left partial derivative along a generator.  For an odd generator the sign
// is (-1)^(number of odd factors preceding th_j in the monomial).
inline AlgebraElement partial(const AlgebraElement& a, const GenId& u)
{
    check_gen(a.sig, u);
    AlgebraElement r(a.sig);
    if (!u.odd) {
        for (const auto& [mono, p] : a.terms)
            r.add_term(mono, p.partial(u.index));
        return r;
    }
    const OddMono bit = OddMono{1} << u.index;
    for (const auto& [mono, p] : a.terms) {
        if (!(mono & bit))
            continue;
        const int preceding = std::popcount(mono & (bit - 1));
        r.add_term(mono & ~bit, (preceding & 1) ? -p : p);
    }
    return r;
}

// de Rham differential d: x_i -> th_i, th_j -> 0, extended as an odd
// derivation; concretely d(a) = sum_i th_i * dx_i(a).
inline AlgebraElement de_rham_d(const AlgebraElement& a)
{
    if (!a.sig.de_rham)
        throw std::logic_error("d requested on a signature without de Rham pairing");
    AlgebraElement r(a.sig);
    for (std::uint32_t i = 0; i < a.sig.m; ++i)
        r += AlgebraElement::theta(a.sig, i) * partial(a, even_gen(i));
    return r;
}

} // namespace superpoisson
