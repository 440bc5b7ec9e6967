/*
 * derivation.hpp -- superderivations of A, given by their generator values.
 *
 * A derivation D of declared parity p satisfies
 *   D(ab) = D(a) b + (-1)^(p * parity(a)) a D(b)
 * and is applied through D(a) = sum_u D(u) * partial_u(a) with the left
 * partial convention.  D(u) must be zero or homogeneous of parity
 * parity(u) + p for every generator u.
 */
#pragma once

#include "algebra.hpp"

#include <vector>

namespace superpoisson {

class Derivation {
public:
    Signature sig;
    int parity = 0;
    std::vector<AlgebraElement> even_values; // size m, value on x_i
    std::vector<AlgebraElement> odd_values;  // size n, value on th_j

    Derivation() = default;

    Derivation(const Signature& s, int par)
        : sig(s),
          parity(par & 1),
          even_values(s.m, AlgebraElement::zero(s)),
          odd_values(s.n, AlgebraElement::zero(s))
    {
    }

    static Derivation zero(const Signature& s, int par = 0) { return Derivation(s, par); }

    const AlgebraElement& value(const GenId& u) const
    {
        check_gen(sig, u);
        return u.odd ? odd_values[u.index] : even_values[u.index];
    }

    void set_value(const GenId& u, const AlgebraElement& a)
    {
        check_gen(sig, u);
        if (!a.is_zero() && (!a.has_homogeneous_parity()
                             || a.parity() != ((gen_parity(u) + parity) & 1)))
            throw std::invalid_argument("derivation value has wrong parity on " + gen_name(u));
        (u.odd ? odd_values[u.index] : even_values[u.index]) = a;
    }

    bool is_zero() const
    {
        for (const auto& v : even_values)
            if (!v.is_zero())
                return false;
        for (const auto& v : odd_values)
            if (!v.is_zero())
                return false;
        return true;
    }

    friend bool operator==(const Derivation& a, const Derivation& b)
    {
        if (!(a.sig == b.sig))
            return false;
        if (a.even_values != b.even_values || a.odd_values != b.odd_values)
            return false;
        // parities of nonzero derivations must agree; zero compares equal
        return a.is_zero() || b.is_zero() || a.parity == b.parity;
    }

    friend Derivation operator+(const Derivation& a, const Derivation& b)
    {
        if (!(a.sig == b.sig))
            throw std::invalid_argument("signature mismatch");
        if (!a.is_zero() && !b.is_zero() && a.parity != b.parity)
            throw std::invalid_argument("parity mismatch in derivation sum");
        Derivation r(a.sig, a.is_zero() ? b.parity : a.parity);
        for (std::uint32_t i = 0; i < a.sig.m; ++i)
            r.even_values[i] = a.even_values[i] + b.even_values[i];
        for (std::uint32_t j = 0; j < a.sig.n; ++j)
            r.odd_values[j] = a.odd_values[j] + b.odd_values[j];
        return r;
    }

    // Left multiple a*D, again a derivation; parity(a) must be homogeneous.
    friend Derivation operator*(const AlgebraElement& a, const Derivation& d)
    {
        Derivation r(d.sig, a.is_zero() ? d.parity : (a.parity() + d.parity) & 1);
        for (std::uint32_t i = 0; i < d.sig.m; ++i)
            r.even_values[i] = a * d.even_values[i];
        for (std::uint32_t j = 0; j < d.sig.n; ++j)
            r.odd_values[j] = a * d.odd_values[j];
        return r;
    }
};

inline AlgebraElement apply(const Derivation& d, const AlgebraElement& a)
{
    AlgebraElement r(d.sig);
    for (std::uint32_t i = 0; i < d.sig.m; ++i)
        if (!d.even_values[i].is_zero())
            r += d.even_values[i] * partial(a, even_gen(i));
    for (std::uint32_t j = 0; j < d.sig.n; ++j)
        if (!d.odd_values[j].is_zero())
            r += d.odd_values[j] * partial(a, odd_gen(j));
    return r;
}

// Supercommutator [D1,D2] = D1 D2 - (-1)^(p1 p2) D2 D1, a derivation of
// parity p1 + p2, returned by its generator values.
inline Derivation commutator(const Derivation& d1, const Derivation& d2)
{
    if (!(d1.sig == d2.sig))
        throw std::invalid_argument("signature mismatch");
    const int sign = (d1.parity * d2.parity) & 1;
    Derivation r(d1.sig, (d1.parity + d2.parity) & 1);
    for (std::uint32_t k = 0; k < gen_count(d1.sig); ++k) {
        const GenId u = gen_at(d1.sig, k);
        AlgebraElement v = apply(d1, d2.value(u));
        AlgebraElement w = apply(d2, d1.value(u));
        r.set_value(u, sign ? v + w : v - w);
    }
    return r;
}

} // namespace superpoisson
