/*
 * gerstenhaber.hpp -- the odd superbracket on the full form algebra.
 *
 * On degrees <= 1 the bracket is defined by relations from a source:
 * a graded Poisson structure gives [f,g] = 0, [f,dg] = [df,g] = {f,g},
 * [df,dg] = d{f,g}; raw algebroid data gives [df,g] = rho(df)(g) and
 * [df,dg] = [[df,dg]], extended by skew.  Higher degrees follow from the
 * graded Leibniz rule
 *   [alpha, beta ^ gamma] = [alpha,beta] ^ gamma
 *                           + (-1)^((|alpha|-1)|beta| + p(alpha)p(beta))
 *                             beta ^ [alpha,gamma]
 * applied to the factors of each term, and bilinearity.  A second,
 * independent route evaluates the closed double-sum formula for
 * decomposable arguments; the two must agree (and do, in the tests).
 *
 * Degrees shift by -1: a bracket of an r-form and an s-form is an
 * (r+s-1)-form.  All identities here use that shifted degree in their
 * signs, with parity entering separately.
 */
#pragma once

#include "algebroid.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace superpoisson {

using GerstenhaberBracketSource = std::variant<GradedPoissonStructure, AlgebroidData>;

namespace detail {

inline const Signature& source_sig(const GradedPoissonStructure& P) { return P.sig; }

// one wedge factor of a term: either a degree-0 coefficient or d(gen)
struct GerstFactor {
    bool is_gen = false;
    GenId gen{};
    AlgebraElement coeff;
    int par = 0;

    int deg() const { return is_gen ? 1 : 0; }
};

inline SuperForm factor_form(const Signature& sig, const GerstFactor& f)
{
    return f.is_gen ? SuperForm::d_generator(sig, f.gen) : SuperForm::from_algebra(f.coeff);
}

inline SuperForm list_form(const Signature& sig, const std::vector<GerstFactor>& fs)
{
    SuperForm r = SuperForm::from_algebra(AlgebraElement::one(sig));
    for (const auto& f : fs)
        r = wedge(r, factor_form(sig, f));
    return r;
}

inline int list_degree(const std::vector<GerstFactor>& fs)
{
    int d = 0;
    for (const auto& f : fs)
        d += f.deg();
    return d;
}

inline int list_parity(const std::vector<GerstFactor>& fs)
{
    int p = 0;
    for (const auto& f : fs)
        p += f.par;
    return p & 1;
}

// the defining relations on a pair of single factors
inline SuperForm gerst_primitive(const GradedPoissonStructure& P, const GerstFactor& x,
                                 const GerstFactor& y)
{
    const Signature& sig = P.sig;
    if (!x.is_gen && !y.is_gen)
        return SuperForm::zero(sig);
    if (!x.is_gen)
        return SuperForm::from_algebra(
            bracket(P, x.coeff, AlgebraElement::generator(sig, y.gen)));
    if (!y.is_gen)
        return SuperForm::from_algebra(
            bracket(P, AlgebraElement::generator(sig, x.gen), y.coeff));
    return delta(bracket(P, AlgebraElement::generator(sig, x.gen),
                         AlgebraElement::generator(sig, y.gen)));
}

inline SuperForm gerst_primitive(const AlgebroidData& A, const GerstFactor& x,
                                 const GerstFactor& y)
{
    const Signature& sig = A.sig;
    if (!x.is_gen && !y.is_gen)
        return SuperForm::zero(sig);
    if (x.is_gen && !y.is_gen)
        return SuperForm::from_algebra(apply(A.anchor_value(x.gen), y.coeff));
    if (!x.is_gen) {
        // [f, du] = -(-1)^(p(f)p(u)) rho(du)(f), forced by skew
        const AlgebraElement t = apply(A.anchor_value(y.gen), x.coeff);
        const int s = x.par & gen_parity(y.gen);
        return SuperForm::from_algebra(s ? t : -t);
    }
    return A.bracket_value(x.gen, y.gen);
}

// recursion over factor lists; F keeps its coefficient at the front and is
// peeled from the back, G is peeled from the front
template <class Source>
SuperForm gerst_pair(const Source& S, const std::vector<GerstFactor>& F,
                     const std::vector<GerstFactor>& G)
{
    const Signature& sig = source_sig(S);
    if (F.size() == 1 && G.size() == 1)
        return gerst_primitive(S, F.front(), G.front());
    if (F.size() > 1) {
        // [A ^ b, g] = (-1)^((|g|-1)|b| + p(b)p(g)) [A,g] ^ b + A ^ [b,g]
        const GerstFactor b = F.back();
        const std::vector<GerstFactor> A(F.begin(), F.end() - 1);
        const int e = ((((list_degree(G) + 1) & 1) * b.deg()) + (b.par & list_parity(G))) & 1;
        const SuperForm t1 = wedge(gerst_pair(S, A, G), factor_form(sig, b));
        const SuperForm t2 = wedge(list_form(sig, A), gerst_pair(S, {b}, G));
        return (e ? -t1 : t1) + t2;
    }
    // [a, b ^ C] = [a,b] ^ C + (-1)^((|a|-1)|b| + p(a)p(b)) b ^ [a, C]
    const GerstFactor& a = F.front();
    const GerstFactor b = G.front();
    const std::vector<GerstFactor> C(G.begin() + 1, G.end());
    const int e = ((((a.deg() + 1) & 1) * b.deg()) + (a.par & b.par)) & 1;
    const SuperForm t1 = wedge(gerst_primitive(S, a, b), list_form(sig, C));
    const SuperForm t2 = wedge(factor_form(sig, b), gerst_pair(S, F, C));
    return t1 + (e ? -t2 : t2);
}

// term -> factor lists, one per parity component of the coefficient
inline void term_factor_lists(const Signature& sig, const FormMonomial& mono,
                              const AlgebraElement& coeff,
                              std::vector<std::vector<GerstFactor>>& out)
{
    std::vector<GerstFactor> gens;
    for (std::uint32_t i = 0; i < sig.m; ++i)
        if (mono.dx_mask & (std::uint64_t{1} << i))
            gens.push_back(GerstFactor{true, even_gen(i), AlgebraElement::zero(sig), 0});
    for (std::uint32_t j = 0; j < mono.dtheta.size(); ++j)
        for (std::uint32_t c = 0; c < mono.dtheta[j]; ++c)
            gens.push_back(GerstFactor{true, odd_gen(j), AlgebraElement::zero(sig), 1});
    const auto [ce, co] = coeff.parity_components();
    const AlgebraElement* comps[2] = {&ce, &co};
    for (int p = 0; p < 2; ++p) {
        if (comps[p]->is_zero())
            continue;
        std::vector<GerstFactor> F;
        F.push_back(GerstFactor{false, GenId{}, *comps[p], p});
        F.insert(F.end(), gens.begin(), gens.end());
        out.push_back(std::move(F));
    }
}

} // namespace detail

// Bilinear extension over terms and coefficient parity components.
template <class Source>
SuperForm gerst_bracket(const Source& S, const SuperForm& alpha, const SuperForm& beta)
{
    const Signature& sig = detail::source_sig(S);
    if (!(alpha.sig == sig) || !(beta.sig == sig))
        throw std::invalid_argument("signature mismatch");
    std::vector<std::vector<detail::GerstFactor>> fs, gs;
    for (const auto& [mono, coeff] : alpha.terms)
        detail::term_factor_lists(sig, mono, coeff, fs);
    for (const auto& [mono, coeff] : beta.terms)
        detail::term_factor_lists(sig, mono, coeff, gs);
    SuperForm r(sig);
    for (const auto& F : fs)
        for (const auto& G : gs)
            r += detail::gerst_pair(S, F, G);
    return r;
}

inline SuperForm gerst_bracket(const GerstenhaberBracketSource& S, const SuperForm& alpha,
                               const SuperForm& beta)
{
    return std::visit([&](const auto& s) { return gerst_bracket(s, alpha, beta); }, S);
}

// Closed double-sum formula for decomposable arguments
//   [A, B] = sum_{i,j} (-1)^(a_i + b_j + k - 1) A_i ^ [alpha_i, beta_j] ^ B_j
// with a_i = p(alpha_i) sum_{p>i} p(alpha_p) + i and
//      b_j = p(beta_j) sum_{q<j} p(beta_q) + j  (1-based),
// where k is the number of factors of A.  (That k is the wedge length,
// not the bracket degree of a Poisson source; the two uses of the letter
// are unrelated.)  Factors must be parity-homogeneous 1-forms.  With
// k = l = 1 the formula collapses to the plain bracket of the two factors.
template <class Source>
SuperForm gerst_bracket_decomposable(const Source& S, const std::vector<SuperForm>& as,
                                     const std::vector<SuperForm>& bs)
{
    const Signature& sig = detail::source_sig(S);
    if (as.empty() || bs.empty())
        throw std::invalid_argument("decomposable bracket requires at least one factor");
    std::vector<int> pa, pb;
    for (const auto& a : as) {
        detail::require_one_form(a, "decomposable bracket factor");
        pa.push_back(a.is_zero() ? 0 : a.parity());
    }
    for (const auto& b : bs) {
        detail::require_one_form(b, "decomposable bracket factor");
        pb.push_back(b.is_zero() ? 0 : b.parity());
    }
    const std::size_t k = as.size(), l = bs.size();
    SuperForm r(sig);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < l; ++j) {
            int ai = static_cast<int>(i) + 1;
            for (std::size_t p = i + 1; p < k; ++p)
                ai += pa[i] * pa[p];
            int bj = static_cast<int>(j) + 1;
            for (std::size_t q = 0; q < j; ++q)
                bj += pb[j] * pb[q];
            const int e = (ai + bj + static_cast<int>(k) - 1) & 1;
            SuperForm term = SuperForm::from_algebra(AlgebraElement::one(sig));
            for (std::size_t p = 0; p < k; ++p)
                if (p != i)
                    term = wedge(term, as[p]);
            term = wedge(term, gerst_bracket(S, as[i], bs[j]));
            for (std::size_t q = 0; q < l; ++q)
                if (q != j)
                    term = wedge(term, bs[q]);
            r += e ? -term : term;
        }
    return r;
}

inline SuperForm gerst_bracket_decomposable(const GerstenhaberBracketSource& S,
                                            const std::vector<SuperForm>& as,
                                            const std::vector<SuperForm>& bs)
{
    return std::visit(
        [&](const auto& s) { return gerst_bracket_decomposable(s, as, bs); }, S);
}

// {f,g} recovered as [f, delta(g)]
template <class Source>
AlgebraElement poisson_from_gerstenhaber(const Source& S, const AlgebraElement& f,
                                         const AlgebraElement& g)
{
    return to_algebra(gerst_bracket(S, SuperForm::from_algebra(f), delta(g)));
}

inline AlgebraElement poisson_from_gerstenhaber(const GerstenhaberBracketSource& S,
                                                const AlgebraElement& f,
                                                const AlgebraElement& g)
{
    return std::visit(
        [&](const auto& s) { return poisson_from_gerstenhaber(s, f, g); }, S);
}

// Super skew, super Jacobi and the Leibniz rule on sampled bihomogeneous
// forms of form degree up to max_degree.
template <class Source>
Report check_gerstenhaber(const Source& S, std::uint64_t seed, std::uint32_t samples,
                          std::uint32_t max_degree = 3, std::uint32_t max_poly_degree = 2)
{
    if (max_degree < 2)
        throw std::invalid_argument("gerstenhaber checks need max_degree >= 2");
    const Signature& sig = detail::source_sig(S);
    Report rep;

    const auto sample_form = [&](Sampler& smp, int& deg, int& par) {
        deg = static_cast<int>(smp.next(max_degree + 1));
        par = static_cast<int>(smp.next(2));
        return smp.form(static_cast<std::uint32_t>(deg), par, max_poly_degree);
    };

    {
        bool ok = true;
        std::string witness;
        Sampler smp(sig, seed);
        for (std::uint32_t t = 0; t < samples && ok; ++t) {
            int da, pa, db, pb;
            const SuperForm a = sample_form(smp, da, pa);
            const SuperForm b = sample_form(smp, db, pb);
            // [a,b] + (-1)^((|a|-1)(|b|-1) + p(a)p(b)) [b,a] = 0
            const int e = ((((da + 1) & 1) & ((db + 1) & 1)) + (pa & pb)) & 1;
            const SuperForm lhs = gerst_bracket(S, a, b);
            const SuperForm rhs = gerst_bracket(S, b, a);
            if (!((e ? lhs - rhs : lhs + rhs).is_zero())) {
                ok = false;
                witness = "skew fails at alpha = " + print_form(a) + ", beta = "
                          + print_form(b);
            }
        }
        rep.add("gerstenhaber-skew", ok, witness);
    }

    {
        bool ok = true;
        std::string witness;
        const auto jacobi_defect = [&](const SuperForm& a, int da, int pa, const SuperForm& b,
                                       int db, int pb, const SuperForm& c) {
            // [a,[b,c]] - [[a,b],c] - (-1)^((|a|-1)(|b|-1)+p(a)p(b)) [b,[a,c]]
            SuperForm jac = gerst_bracket(S, a, gerst_bracket(S, b, c));
            jac += -gerst_bracket(S, gerst_bracket(S, a, b), c);
            const int e = ((((da + 1) & 1) & ((db + 1) & 1)) + (pa & pb)) & 1;
            const SuperForm t3 = gerst_bracket(S, b, gerst_bracket(S, a, c));
            jac += e ? t3 : -t3;
            return jac;
        };
        // triples (u, dv, dw) first: they reduce to the Jacobi identity of
        // the inducing bracket on A and pin down a broken source
        for (std::uint32_t i = 0; i < gen_count(sig) && ok; ++i)
            for (std::uint32_t j = 0; j < gen_count(sig) && ok; ++j)
                for (std::uint32_t l = 0; l < gen_count(sig) && ok; ++l) {
                    const GenId u = gen_at(sig, i), v = gen_at(sig, j), w = gen_at(sig, l);
                    const SuperForm jac = jacobi_defect(
                        SuperForm::from_algebra(AlgebraElement::generator(sig, u)), 0,
                        gen_parity(u), SuperForm::d_generator(sig, v), 1, gen_parity(v),
                        SuperForm::d_generator(sig, w));
                    if (!jac.is_zero()) {
                        ok = false;
                        witness = "jacobi fails at (" + gen_name(u) + ", d" + gen_name(v)
                                  + ", d" + gen_name(w) + "): defect " + print_form(jac);
                    }
                }
        Sampler smp(sig, seed + 1);
        for (std::uint32_t t = 0; t < samples && ok; ++t) {
            int da, pa, db, pb, dc, pc;
            const SuperForm a = sample_form(smp, da, pa);
            const SuperForm b = sample_form(smp, db, pb);
            const SuperForm c = sample_form(smp, dc, pc);
            const SuperForm jac = jacobi_defect(a, da, pa, b, db, pb, c);
            if (!jac.is_zero()) {
                ok = false;
                witness = "jacobi fails at alpha = " + print_form(a) + ", beta = "
                          + print_form(b) + ", gamma = " + print_form(c);
            }
        }
        rep.add("gerstenhaber-jacobi", ok, witness);
    }

    {
        bool ok = true;
        std::string witness;
        Sampler smp(sig, seed + 2);
        for (std::uint32_t t = 0; t < samples && ok; ++t) {
            int da, pa, db, pb, dc, pc;
            const SuperForm a = sample_form(smp, da, pa);
            const SuperForm b = sample_form(smp, db, pb);
            const SuperForm c = sample_form(smp, dc, pc);
            // [a, b^c] = [a,b]^c + (-1)^((|a|-1)|b| + p(a)p(b)) b^[a,c]
            const SuperForm lhs = gerst_bracket(S, a, wedge(b, c));
            SuperForm rhs = wedge(gerst_bracket(S, a, b), c);
            const int e = ((((da + 1) & 1) * db) + (pa & pb)) & 1;
            const SuperForm t2 = wedge(b, gerst_bracket(S, a, c));
            rhs += e ? -t2 : t2;
            if (!(lhs == rhs)) {
                ok = false;
                witness = "leibniz fails at alpha = " + print_form(a) + ", beta = "
                          + print_form(b) + ", gamma = " + print_form(c);
            }
        }
        rep.add("gerstenhaber-leibniz", ok, witness);
    }

    return rep;
}

inline Report check_gerstenhaber(const GerstenhaberBracketSource& S, std::uint64_t seed,
                                 std::uint32_t samples, std::uint32_t max_degree = 3,
                                 std::uint32_t max_poly_degree = 2)
{
    return std::visit(
        [&](const auto& s) {
            return check_gerstenhaber(s, seed, samples, max_degree, max_poly_degree);
        },
        S);
}

// Compatibility of delta with the bracket.  The raw identity
//   delta([a,b]) = [delta(a), b] + (-1)^(|a|-1) [a, delta(b)]
// holds for any source by construction, so a verdict that can fail for a
// broken source also needs the Jacobi instances that reduce to the Jacobi
// identity of the inducing bracket on A; those triples (f, dg, dh) are
// checked here on all generator triples and on samples.
template <class Source>
Report check_differential(const Source& S, std::uint64_t seed, std::uint32_t samples,
                          std::uint32_t max_poly_degree = 2)
{
    const Signature& sig = detail::source_sig(S);
    Report rep;

    const auto identity_holds = [&](const SuperForm& a, int da, const SuperForm& b) {
        const SuperForm lhs = delta(gerst_bracket(S, a, b));
        SuperForm rhs = gerst_bracket(S, delta(a), b);
        const int e = (da + 1) & 1;
        const SuperForm t = gerst_bracket(S, a, delta(b));
        rhs += e ? -t : t;
        return lhs == rhs;
    };

    {
        bool ok = true;
        std::string witness;
        Sampler smp(sig, seed);
        // degree-0 pairs and the proof's reduction shape alpha = d(f), beta = g d(h)
        for (std::uint32_t t = 0; t < samples && ok; ++t) {
            const AlgebraElement f =
                smp.parity_homogeneous(static_cast<int>(smp.next(2)), max_poly_degree);
            const AlgebraElement g =
                smp.parity_homogeneous(static_cast<int>(smp.next(2)), max_poly_degree);
            const AlgebraElement h =
                smp.parity_homogeneous(static_cast<int>(smp.next(2)), max_poly_degree);
            if (!identity_holds(SuperForm::from_algebra(f), 0, SuperForm::from_algebra(g))) {
                ok = false;
                witness = "fails at alpha = " + print_element(f) + ", beta = "
                          + print_element(g);
                break;
            }
            const SuperForm a = delta(f);
            const SuperForm b = detail::left_mult(g, delta(h));
            if (!identity_holds(a, 1, b)) {
                ok = false;
                witness = "fails at alpha = " + print_form(a) + ", beta = " + print_form(b);
            }
        }
        Sampler smp2(sig, seed + 1);
        for (std::uint32_t t = 0; t < samples && ok; ++t) {
            const int da = static_cast<int>(smp2.next(3));
            const int db = static_cast<int>(smp2.next(3));
            const SuperForm a = smp2.form(static_cast<std::uint32_t>(da),
                                          static_cast<int>(smp2.next(2)), max_poly_degree);
            const SuperForm b = smp2.form(static_cast<std::uint32_t>(db),
                                          static_cast<int>(smp2.next(2)), max_poly_degree);
            if (!identity_holds(a, da, b)) {
                ok = false;
                witness = "fails at alpha = " + print_form(a) + ", beta = " + print_form(b);
            }
        }
        rep.add("differential-identity", ok, witness);
    }

    {
        bool ok = true;
        std::string witness;
        // triples (f, dg, dh) reduce Gerstenhaber Jacobi to the Jacobi
        // identity of the inducing bracket on A
        const auto triple_ok = [&](const AlgebraElement& f, const AlgebraElement& g,
                                   const AlgebraElement& h) {
            const SuperForm F = SuperForm::from_algebra(f);
            const SuperForm dg = delta(g), dh = delta(h);
            SuperForm jac = gerst_bracket(S, F, gerst_bracket(S, dg, dh));
            jac += -gerst_bracket(S, gerst_bracket(S, F, dg), dh);
            const int e = f.is_zero() || g.is_zero() ? 0 : f.parity() & g.parity();
            const SuperForm t = gerst_bracket(S, dg, gerst_bracket(S, F, dh));
            jac += e ? t : -t;
            return jac.is_zero();
        };
        for (std::uint32_t i = 0; i < gen_count(sig) && ok; ++i)
            for (std::uint32_t j = 0; j < gen_count(sig) && ok; ++j)
                for (std::uint32_t l = 0; l < gen_count(sig) && ok; ++l) {
                    const GenId u = gen_at(sig, i), v = gen_at(sig, j), w = gen_at(sig, l);
                    if (!triple_ok(AlgebraElement::generator(sig, u),
                                   AlgebraElement::generator(sig, v),
                                   AlgebraElement::generator(sig, w))) {
                        ok = false;
                        witness = "jacobi fails at (" + gen_name(u) + ", d" + gen_name(v)
                                  + ", d" + gen_name(w) + ")";
                    }
                }
        Sampler smp(sig, seed + 2);
        for (std::uint32_t t = 0; t < samples && ok; ++t) {
            const AlgebraElement f =
                smp.parity_homogeneous(static_cast<int>(smp.next(2)), max_poly_degree);
            const AlgebraElement g =
                smp.parity_homogeneous(static_cast<int>(smp.next(2)), max_poly_degree);
            const AlgebraElement h =
                smp.parity_homogeneous(static_cast<int>(smp.next(2)), max_poly_degree);
            if (!triple_ok(f, g, h)) {
                ok = false;
                witness = "jacobi fails at (" + print_element(f) + ", delta("
                          + print_element(g) + "), delta(" + print_element(h) + "))";
            }
        }
        rep.add("differential-jacobi", ok, witness);
    }

    return rep;
}

inline Report check_differential(const GerstenhaberBracketSource& S, std::uint64_t seed,
                                 std::uint32_t samples, std::uint32_t max_poly_degree = 2)
{
    return std::visit(
        [&](const auto& s) { return check_differential(s, seed, samples, max_poly_degree); },
        S);
}

} // namespace superpoisson
