/*
 * poisson.hpp -- graded Poisson structures of degree k on A.
 *
 * Conventions, for parity-homogeneous f, g, h and writing s(f) = parity(f)+k:
 *   degree   {A^a, A^b} subset A^(a+b+k)
 *   skew     {f,g} = -(-1)^(s(f) s(g)) {g,f}
 *   jacobi   {f,{g,h}} = {{f,g},h} + (-1)^(s(f) s(g)) {g,{f,h}}
 *   leibniz  {f,gh} = {f,g} h + (-1)^(s(f) parity(g)) g {f,h}
 *
 * A structure is determined by its values on generator pairs (stored on
 * canonically oriented pairs, even generators before odd ones) and the
 * Leibniz extension.  The extension recursion can split factor strings at
 * the front or at the back; both must produce the same bracket, which the
 * test suite exercises.
 */
#pragma once

#include "expr.hpp"
#include "random.hpp"
#include "report.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace superpoisson {

enum class SplitStrategy { Front, Back };

class GradedPoissonStructure {
public:
    Signature sig;
    int degree = 0; // the k above
    SplitStrategy split = SplitStrategy::Front;
    std::map<std::pair<GenId, GenId>, AlgebraElement> table;

    GradedPoissonStructure() = default;
    GradedPoissonStructure(const Signature& s, int k) : sig(s), degree(k) {}

    // {u,v} on generators; missing entries are zero
    AlgebraElement generator_bracket(const GenId& u, const GenId& v) const
    {
        check_gen(sig, u);
        check_gen(sig, v);
        const bool flip = v < u;
        const auto key = flip ? std::make_pair(v, u) : std::make_pair(u, v);
        const auto it = table.find(key);
        if (it == table.end())
            return AlgebraElement::zero(sig);
        if (!flip)
            return it->second;
        const int s = ((gen_parity(u) + degree) & 1) & ((gen_parity(v) + degree) & 1);
        return s ? it->second : -it->second;
    }

    // Record {u,v} = value.  The pair is stored canonically oriented, with
    // the skew factor -(-1)^(s(u) s(v)) applied when (u,v) arrives flipped;
    // re-setting an entry must agree with the stored value.
    void set_bracket(const GenId& u, const GenId& v, AlgebraElement value)
    {
        check_gen(sig, u);
        check_gen(sig, v);
        if (!(value.sig == sig))
            throw std::invalid_argument("signature mismatch");
        const int target = gen_degree(u) + gen_degree(v) + degree;
        if (!value.is_zero()
            && (target < 0 || !value.is_homogeneous() || value.degree() != target))
            throw std::invalid_argument("bracket value for " + gen_name(u) + "," + gen_name(v)
                                        + " must be homogeneous of degree "
                                        + std::to_string(target));
        GenId a = u, b = v;
        if (b < a) {
            std::swap(a, b);
            const int s = ((gen_parity(u) + degree) & 1) & ((gen_parity(v) + degree) & 1);
            if (!s)
                value = -value;
        }
        if (a == b && ((gen_parity(a) + degree) & 1) == 0 && !value.is_zero())
            throw std::invalid_argument("{" + gen_name(a) + "," + gen_name(a)
                                        + "} must vanish for parity reasons");
        const auto it = table.find({a, b});
        if (it != table.end()) {
            if (!(it->second == value))
                throw std::invalid_argument("conflicting bracket value for " + gen_name(a)
                                            + "," + gen_name(b));
            return;
        }
        table.emplace(std::make_pair(a, b), std::move(value));
    }
};

namespace detail {

// factors of a monomial x^e th_J in canonical order
inline std::vector<GenId> monomial_factors(const ExpVec& e, OddMono mono)
{
    std::vector<GenId> f;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::uint32_t c = 0; c < e[i]; ++c)
            f.push_back(even_gen(static_cast<std::uint32_t>(i)));
    for (OddMono s = mono; s; s &= s - 1)
        f.push_back(odd_gen(static_cast<std::uint32_t>(std::countr_zero(s))));
    return f;
}

inline int list_parity(const std::vector<GenId>& f, std::size_t lo, std::size_t hi)
{
    int p = 0;
    for (std::size_t i = lo; i < hi; ++i)
        p ^= gen_parity(f[i]);
    return p;
}

inline AlgebraElement list_product(const Signature& sig, const std::vector<GenId>& f,
                                   std::size_t lo, std::size_t hi)
{
    AlgebraElement r = AlgebraElement::one(sig);
    for (std::size_t i = lo; i < hi; ++i)
        r = r * AlgebraElement::generator(sig, f[i]);
    return r;
}

// {u, V[lo..hi)} by Leibniz in the second slot
inline AlgebraElement bracket_single(const GradedPoissonStructure& P, const GenId& u,
                                     const std::vector<GenId>& V, std::size_t lo,
                                     std::size_t hi)
{
    if (hi == lo)
        return AlgebraElement::zero(P.sig);
    if (hi - lo == 1)
        return P.generator_bracket(u, V[lo]);
    const int su = (gen_parity(u) + P.degree) & 1;
    if (P.split == SplitStrategy::Front) {
        // {u, v R} = {u,v} R + (-1)^(s(u) parity(v)) v {u,R}
        const GenId& v = V[lo];
        AlgebraElement t1 =
            P.generator_bracket(u, v) * list_product(P.sig, V, lo + 1, hi);
        AlgebraElement t2 =
            AlgebraElement::generator(P.sig, v) * bracket_single(P, u, V, lo + 1, hi);
        const int s = su & gen_parity(v);
        return s ? t1 - t2 : t1 + t2;
    }
    // {u, R w} = {u,R} w + (-1)^(s(u) parity(R)) R {u,w}
    const GenId& w = V[hi - 1];
    AlgebraElement t1 =
        bracket_single(P, u, V, lo, hi - 1) * AlgebraElement::generator(P.sig, w);
    AlgebraElement t2 = list_product(P.sig, V, lo, hi - 1) * P.generator_bracket(u, w);
    const int s = su & list_parity(V, lo, hi - 1);
    return s ? t1 - t2 : t1 + t2;
}

// {U[ulo..uhi), V[vlo..vhi)} by Leibniz in the first slot
inline AlgebraElement bracket_factors(const GradedPoissonStructure& P,
                                      const std::vector<GenId>& U, std::size_t ulo,
                                      std::size_t uhi, const std::vector<GenId>& V,
                                      std::size_t vlo, std::size_t vhi)
{
    if (uhi == ulo || vhi == vlo)
        return AlgebraElement::zero(P.sig);
    if (uhi - ulo == 1)
        return bracket_single(P, U[ulo], V, vlo, vhi);
    const int sh = (list_parity(V, vlo, vhi) + P.degree) & 1;
    if (P.split == SplitStrategy::Front) {
        // {u R, h} = u {R,h} + (-1)^(parity(R) s(h)) {u,h} R
        const GenId& u = U[ulo];
        AlgebraElement t1 = AlgebraElement::generator(P.sig, u)
                            * bracket_factors(P, U, ulo + 1, uhi, V, vlo, vhi);
        AlgebraElement t2 =
            bracket_single(P, u, V, vlo, vhi) * list_product(P.sig, U, ulo + 1, uhi);
        const int s = list_parity(U, ulo + 1, uhi) & sh;
        return s ? t1 - t2 : t1 + t2;
    }
    // {R w, h} = R {w,h} + (-1)^(parity(w) s(h)) {R,h} w
    const GenId& w = U[uhi - 1];
    AlgebraElement t1 =
        list_product(P.sig, U, ulo, uhi - 1) * bracket_single(P, w, V, vlo, vhi);
    AlgebraElement t2 = bracket_factors(P, U, ulo, uhi - 1, V, vlo, vhi)
                        * AlgebraElement::generator(P.sig, w);
    const int s = gen_parity(w) & sh;
    return s ? t1 - t2 : t1 + t2;
}

} // namespace detail

inline AlgebraElement bracket(const GradedPoissonStructure& P, const AlgebraElement& a,
                              const AlgebraElement& b)
{
    if (!(a.sig == P.sig) || !(b.sig == P.sig))
        throw std::invalid_argument("signature mismatch");
    AlgebraElement r(P.sig);
    for (const auto& [ma, pa] : a.terms)
        for (const auto& [ea, ca] : pa.terms) {
            const std::vector<GenId> U = detail::monomial_factors(ea, ma);
            for (const auto& [mb, pb] : b.terms)
                for (const auto& [eb, cb] : pb.terms) {
                    const std::vector<GenId> V = detail::monomial_factors(eb, mb);
                    AlgebraElement t =
                        detail::bracket_factors(P, U, 0, U.size(), V, 0, V.size());
                    if (!t.is_zero())
                        r += (ca * cb) * t;
                }
        }
    return r;
}

// {f,{g,h}} - {{f,g},h} - (-1)^(s(f) s(g)) {g,{f,h}}, summed over the
// parity components of f and g; identically zero iff Jacobi holds there.
inline AlgebraElement jacobiator(const GradedPoissonStructure& P, const AlgebraElement& f,
                                 const AlgebraElement& g, const AlgebraElement& h)
{
    AlgebraElement r(P.sig);
    const auto [fe, fo] = f.parity_components();
    const auto [ge, go] = g.parity_components();
    const AlgebraElement* fs[2] = {&fe, &fo};
    const AlgebraElement* gs[2] = {&ge, &go};
    for (int pf = 0; pf < 2; ++pf)
        for (int pg = 0; pg < 2; ++pg) {
            const AlgebraElement& fp = *fs[pf];
            const AlgebraElement& gp = *gs[pg];
            if (fp.is_zero() || gp.is_zero())
                continue;
            r += bracket(P, fp, bracket(P, gp, h));
            r += -bracket(P, bracket(P, fp, gp), h);
            const int s = ((pf + P.degree) & 1) & ((pg + P.degree) & 1);
            const AlgebraElement t = bracket(P, gp, bracket(P, fp, h));
            r += s ? t : -t;
        }
    return r;
}

// {f, .} as a derivation of parity parity(f)+k
inline Derivation hamiltonian(const GradedPoissonStructure& P, const AlgebraElement& f)
{
    if (!f.has_homogeneous_parity())
        throw std::invalid_argument("hamiltonian derivation needs a parity-homogeneous argument");
    Derivation d(P.sig, (f.parity() + P.degree) & 1);
    for (std::uint32_t i = 0; i < gen_count(P.sig); ++i) {
        const GenId u = gen_at(P.sig, i);
        d.set_value(u, bracket(P, f, AlgebraElement::generator(P.sig, u)));
    }
    return d;
}

// ---------------------------------------------------------------- builders

namespace detail {

inline Polynomial resize_polynomial(const Polynomial& p, std::size_t nvars)
{
    Polynomial r;
    for (const auto& [e, c] : p.terms) {
        ExpVec d(nvars, 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (i >= nvars)
                throw std::invalid_argument("polynomial references x" + std::to_string(i + 1)
                                            + " outside the signature");
            d[i] = e[i];
        }
        r.add_term(d, c);
    }
    return r;
}

inline void require_square(std::size_t n, const std::vector<std::vector<Polynomial>>& mat)
{
    for (const auto& row : mat)
        if (row.size() != n)
            throw std::invalid_argument("matrix must be square");
}

} // namespace detail

// Odd symplectic pairing on n odd generators: {th_i, th_j} = g_ij with g a
// symmetric matrix of scalars; degree -2.
inline GradedPoissonStructure from_pseudoeuclidean(const std::vector<std::vector<Rational>>& g)
{
    const std::size_t n = g.size();
    for (const auto& row : g)
        if (row.size() != n)
            throw std::invalid_argument("matrix must be square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (g[i][j] != g[j][i])
                throw std::invalid_argument("pseudoeuclidean matrix must be symmetric");
    const Signature sig(0, static_cast<std::uint32_t>(n), false);
    GradedPoissonStructure P(sig, -2);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i; j < n; ++j)
            P.set_bracket(odd_gen(i), odd_gen(j), AlgebraElement::constant(sig, g[i][j]));
    return P;
}

// Cometric g^ij(x) on the de Rham signature (m even, m odd):
// {th_i, th_j} = g^ij, the x_i central; degree -2.
inline GradedPoissonStructure
from_metric_cosharp(const std::vector<std::vector<Polynomial>>& gij)
{
    const std::size_t m = gij.size();
    detail::require_square(m, gij);
    const Signature sig(static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(m), true);
    std::vector<std::vector<Polynomial>> norm(m, std::vector<Polynomial>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            norm[i][j] = detail::resize_polynomial(gij[i][j], m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (!(norm[i][j] == norm[j][i]))
                throw std::invalid_argument("cometric matrix must be symmetric");
    GradedPoissonStructure P(sig, -2);
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = i; j < m; ++j)
            P.set_bracket(odd_gen(i), odd_gen(j),
                          AlgebraElement::from_polynomial(sig, norm[i][j]));
    return P;
}

// Bivector pi^ij(x) on the de Rham signature: {th_i, x_j} = pi^ij and
// {th_i, th_j} = d(pi^ij); degree -1.  The x_i commute among themselves.
inline GradedPoissonStructure from_bivector(const std::vector<std::vector<Polynomial>>& pij)
{
    const std::size_t m = pij.size();
    detail::require_square(m, pij);
    const Signature sig(static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(m), true);
    std::vector<std::vector<Polynomial>> norm(m, std::vector<Polynomial>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            norm[i][j] = detail::resize_polynomial(pij[i][j], m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (!(norm[i][j] == -norm[j][i]))
                throw std::invalid_argument("bivector matrix must be antisymmetric");
    GradedPoissonStructure P(sig, -1);
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < m; ++j) {
            const AlgebraElement p = AlgebraElement::from_polynomial(sig, norm[i][j]);
            P.set_bracket(odd_gen(i), even_gen(j), p);
            P.set_bracket(odd_gen(i), odd_gen(j), de_rham_d(p));
        }
    return P;
}

// Classical Poisson bracket on m even generators: {x_i, x_j} = pi^ij(x),
// pi antisymmetric; degree 0, no odd part.
inline GradedPoissonStructure from_classical(const std::vector<std::vector<Polynomial>>& pij)
{
    const std::size_t m = pij.size();
    detail::require_square(m, pij);
    const Signature sig(static_cast<std::uint32_t>(m), 0, false);
    std::vector<std::vector<Polynomial>> norm(m, std::vector<Polynomial>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            norm[i][j] = detail::resize_polynomial(pij[i][j], m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (!(norm[i][j] == -norm[j][i]))
                throw std::invalid_argument("classical matrix must be antisymmetric");
    GradedPoissonStructure P(sig, 0);
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < m; ++j)
            P.set_bracket(even_gen(i), even_gen(j),
                          AlgebraElement::from_polynomial(sig, norm[i][j]));
    return P;
}

// ---------------------------------------------------------------- checking

namespace detail {

inline bool skew_pair_ok(const GradedPoissonStructure& P, const AlgebraElement& f,
                         const AlgebraElement& g)
{
    if (f.is_zero() || g.is_zero())
        return true;
    const int s = ((f.parity() + P.degree) & 1) & ((g.parity() + P.degree) & 1);
    const AlgebraElement lhs = bracket(P, f, g);
    const AlgebraElement rhs = bracket(P, g, f);
    return (s ? lhs - rhs : lhs + rhs).is_zero();
}

} // namespace detail

// Verify the four axioms on the generator table plus sampled elements.
inline Report check_axioms(const GradedPoissonStructure& P, std::uint64_t seed,
                           std::uint32_t samples, std::uint32_t max_poly_degree = 2)
{
    Report rep;
    const std::uint32_t ngens = gen_count(P.sig);

    {
        bool ok = true;
        std::string witness;
        for (const auto& [key, value] : P.table) {
            if (value.is_zero())
                continue;
            const int target = gen_degree(key.first) + gen_degree(key.second) + P.degree;
            if (target < 0 || !value.is_homogeneous() || value.degree() != target) {
                ok = false;
                witness = "{" + gen_name(key.first) + "," + gen_name(key.second) + "} = "
                          + print_element(value) + " is not homogeneous of degree "
                          + std::to_string(target);
                break;
            }
        }
        rep.add("bracket-degree", ok, witness);
    }

    {
        bool ok = true;
        std::string witness;
        for (std::uint32_t i = 0; i < ngens && ok; ++i)
            for (std::uint32_t j = 0; j < ngens && ok; ++j) {
                const AlgebraElement f = AlgebraElement::generator(P.sig, gen_at(P.sig, i));
                const AlgebraElement g = AlgebraElement::generator(P.sig, gen_at(P.sig, j));
                if (!detail::skew_pair_ok(P, f, g)) {
                    ok = false;
                    witness = "skew fails at f = " + gen_name(gen_at(P.sig, i))
                              + ", g = " + gen_name(gen_at(P.sig, j));
                }
            }
        Sampler smp(P.sig, seed);
        for (std::uint32_t t = 0; t < samples && ok; ++t) {
            const AlgebraElement f =
                smp.parity_homogeneous(static_cast<int>(smp.next(2)), max_poly_degree);
            const AlgebraElement g =
                smp.parity_homogeneous(static_cast<int>(smp.next(2)), max_poly_degree);
            if (!detail::skew_pair_ok(P, f, g)) {
                ok = false;
                witness = "skew fails at f = " + print_element(f) + ", g = " + print_element(g);
            }
        }
        rep.add("skew", ok, witness);
    }

    {
        bool ok = true;
        std::string witness;
        for (std::uint32_t i = 0; i < ngens && ok; ++i)
            for (std::uint32_t j = 0; j < ngens && ok; ++j)
                for (std::uint32_t l = 0; l < ngens && ok; ++l) {
                    const AlgebraElement f =
                        AlgebraElement::generator(P.sig, gen_at(P.sig, i));
                    const AlgebraElement g =
                        AlgebraElement::generator(P.sig, gen_at(P.sig, j));
                    const AlgebraElement h =
                        AlgebraElement::generator(P.sig, gen_at(P.sig, l));
                    const AlgebraElement jac = jacobiator(P, f, g, h);
                    if (!jac.is_zero()) {
                        ok = false;
                        witness = "jacobiator(" + gen_name(gen_at(P.sig, i)) + ","
                                  + gen_name(gen_at(P.sig, j)) + ","
                                  + gen_name(gen_at(P.sig, l)) + ") = " + print_element(jac);
                    }
                }
        rep.add("jacobi-generators", ok, witness);
    }

    {
        bool ok = true;
        std::string witness;
        Sampler smp(P.sig, seed + 1);
        for (std::uint32_t t = 0; t < samples && ok; ++t) {
            const AlgebraElement f = smp.element(max_poly_degree);
            const AlgebraElement g = smp.element(max_poly_degree);
            const AlgebraElement h = smp.element(max_poly_degree);
            const AlgebraElement jac = jacobiator(P, f, g, h);
            if (!jac.is_zero()) {
                ok = false;
                witness = "jacobiator(" + print_element(f) + ", " + print_element(g) + ", "
                          + print_element(h) + ") = " + print_element(jac);
            }
        }
        rep.add("jacobi-samples", ok, witness);
    }

    {
        bool ok = true;
        std::string witness;
        Sampler smp(P.sig, seed + 2);
        for (std::uint32_t t = 0; t < samples && ok; ++t) {
            const AlgebraElement f =
                smp.parity_homogeneous(static_cast<int>(smp.next(2)), max_poly_degree);
            const AlgebraElement g =
                smp.parity_homogeneous(static_cast<int>(smp.next(2)), max_poly_degree);
            const AlgebraElement h =
                smp.parity_homogeneous(static_cast<int>(smp.next(2)), max_poly_degree);
            if (f.is_zero() || g.is_zero() || h.is_zero())
                continue;
            const int sf = (f.parity() + P.degree) & 1;
            const int sh = (h.parity() + P.degree) & 1;
            const AlgebraElement second =
                bracket(P, f, g * h) - bracket(P, f, g) * h
                - ((sf & g.parity()) ? -(g * bracket(P, f, h)) : g * bracket(P, f, h));
            const AlgebraElement first =
                bracket(P, f * g, h) - f * bracket(P, g, h)
                - ((g.parity() & sh) ? -(bracket(P, f, h) * g) : bracket(P, f, h) * g);
            if (!second.is_zero() || !first.is_zero()) {
                ok = false;
                witness = std::string("leibniz fails in the ")
                          + (second.is_zero() ? "first" : "second") + " slot at f = "
                          + print_element(f) + ", g = " + print_element(g) + ", h = "
                          + print_element(h);
            }
        }
        rep.add("leibniz", ok, witness);
    }

    return rep;
}

} // namespace superpoisson
