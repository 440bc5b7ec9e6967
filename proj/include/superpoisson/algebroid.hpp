/*
 * algebroid.hpp -- Lie superalgebroid structures on the 1-forms of A.
 *
 * Two sources are supported.  A PoissonAlgebroid derives everything from a
 * graded Poisson structure: the anchor sends delta(f) to {f,.} and the
 * bracket is computed literally from
 *   [[alpha,beta]] = rho(alpha) _| delta(beta)
 *                    - (-1)^((p(alpha)+k)(p(beta)+k)) rho(beta) _| delta(alpha)
 *                    + delta(beta(rho(alpha))).
 * An AlgebroidData carries an anchor and a generator bracket table as raw
 * data (signs with k = 0) and extends them by the Leibniz axiom
 *   [[X, f Y]] = rho(X)(f) Y + (-1)^(p(X) p(f)) f [[X,Y]]
 * together with graded skew-symmetry.  The checkers verify which axioms
 * the data actually satisfies; nothing is assumed.
 */
#pragma once

#include "poisson.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace superpoisson {

struct PoissonAlgebroid {
    GradedPoissonStructure P;
};

class AlgebroidData {
public:
    Signature sig;

    explicit AlgebroidData(const Signature& s) : sig(s)
    {
        anchors.reserve(gen_count(s));
        for (std::uint32_t i = 0; i < gen_count(s); ++i)
            anchors.push_back(Derivation::zero(s, gen_parity(gen_at(s, i))));
    }

    // rho(delta(u)); its parity must equal the parity of u
    const Derivation& anchor_value(const GenId& u) const
    {
        check_gen(sig, u);
        return anchors[slot(u)];
    }

    void set_anchor(const GenId& u, const Derivation& d)
    {
        check_gen(sig, u);
        if (!(d.sig == sig))
            throw std::invalid_argument("signature mismatch");
        if (!d.is_zero() && d.parity != gen_parity(u))
            throw std::invalid_argument("anchor of delta(" + gen_name(u)
                                        + ") has the wrong parity");
        Derivation v = d;
        v.parity = gen_parity(u);
        anchors[slot(u)] = std::move(v);
    }

    // [[delta(u), delta(v)]]; missing entries are zero
    SuperForm bracket_value(const GenId& u, const GenId& v) const
    {
        check_gen(sig, u);
        check_gen(sig, v);
        const bool flip = v < u;
        const auto key = flip ? std::make_pair(v, u) : std::make_pair(u, v);
        const auto it = table.find(key);
        if (it == table.end())
            return SuperForm::zero(sig);
        if (!flip)
            return it->second;
        const int s = gen_parity(u) & gen_parity(v);
        return s ? it->second : -it->second;
    }

    void set_bracket(const GenId& u, const GenId& v, SuperForm w)
    {
        check_gen(sig, u);
        check_gen(sig, v);
        if (!(w.sig == sig))
            throw std::invalid_argument("signature mismatch");
        if (!w.is_zero()) {
            if (!w.has_pure_form_degree() || w.form_degree() != 1)
                throw std::invalid_argument("bracket of delta(" + gen_name(u) + "),delta("
                                            + gen_name(v) + ") must be a 1-form");
            if (!w.has_homogeneous_parity()
                || w.parity() != ((gen_parity(u) + gen_parity(v)) & 1))
                throw std::invalid_argument("bracket of delta(" + gen_name(u) + "),delta("
                                            + gen_name(v) + ") has the wrong parity");
        }
        GenId a = u, b = v;
        if (b < a) {
            std::swap(a, b);
            if (!(gen_parity(u) & gen_parity(v)))
                w = -w;
        }
        if (a == b && gen_parity(a) == 0 && !w.is_zero())
            throw std::invalid_argument("[[delta(" + gen_name(a) + "),delta(" + gen_name(a)
                                        + ")]] must vanish for parity reasons");
        const auto it = table.find({a, b});
        if (it != table.end()) {
            if (!(it->second == w))
                throw std::invalid_argument("conflicting bracket value for delta("
                                            + gen_name(a) + "),delta(" + gen_name(b) + ")");
            return;
        }
        table.emplace(std::make_pair(a, b), std::move(w));
    }

private:
    std::vector<Derivation> anchors;
    std::map<std::pair<GenId, GenId>, SuperForm> table;

    std::size_t slot(const GenId& u) const { return u.odd ? sig.m + u.index : u.index; }
};

namespace detail {

inline const Signature& source_sig(const PoissonAlgebroid& A) { return A.P.sig; }
inline const Signature& source_sig(const AlgebroidData& A) { return A.sig; }

// the k entering the sign exponents (p+k)(q+k)
inline int source_shift(const PoissonAlgebroid& A) { return A.P.degree; }
inline int source_shift(const AlgebroidData&) { return 0; }

inline Derivation source_anchor(const PoissonAlgebroid& A, const GenId& u)
{
    return hamiltonian(A.P, AlgebraElement::generator(A.P.sig, u));
}

inline Derivation source_anchor(const AlgebroidData& A, const GenId& u)
{
    return A.anchor_value(u);
}

inline void require_one_form(const SuperForm& w, const char* what)
{
    if (w.is_zero())
        return;
    if (!w.has_pure_form_degree() || w.form_degree() != 1)
        throw std::invalid_argument(std::string(what) + " requires a form of pure degree 1");
}

// the generator behind a degree-1 monomial
inline GenId one_form_generator(const FormMonomial& m)
{
    if (m.dx_mask)
        return even_gen(static_cast<std::uint32_t>(std::countr_zero(m.dx_mask)));
    for (std::uint32_t j = 0; j < m.dtheta.size(); ++j)
        if (m.dtheta[j])
            return odd_gen(j);
    throw std::logic_error("degree-1 monomial without a generator");
}

inline SuperForm left_mult(const AlgebraElement& c, const SuperForm& w)
{
    return wedge(SuperForm::from_algebra(c), w);
}

} // namespace detail

// A-linear extension of the generator anchor; alpha must have homogeneous
// parity (the result is a single derivation).
template <class Source>
Derivation anchor(const Source& A, const SuperForm& alpha)
{
    const Signature& sig = detail::source_sig(A);
    if (!(alpha.sig == sig))
        throw std::invalid_argument("signature mismatch");
    detail::require_one_form(alpha, "anchor");
    Derivation r = Derivation::zero(sig, 0);
    for (const auto& [mono, c] : alpha.terms) {
        const GenId u = detail::one_form_generator(mono);
        r = r + c * detail::source_anchor(A, u);
    }
    return r;
}

namespace detail {

// [[alpha,beta]] from the anchor alone, with sign shift kk; parity
// components are combined bilinearly.
template <class Source>
SuperForm corchete_formula(const Source& A, int kk, const SuperForm& alpha,
                           const SuperForm& beta)
{
    const Signature& sig = source_sig(A);
    SuperForm r(sig);
    const auto [ae, ao] = alpha.parity_components();
    const auto [be, bo] = beta.parity_components();
    const SuperForm* as[2] = {&ae, &ao};
    const SuperForm* bs[2] = {&be, &bo};
    for (int pa = 0; pa < 2; ++pa)
        for (int pb = 0; pb < 2; ++pb) {
            const SuperForm& a = *as[pa];
            const SuperForm& b = *bs[pb];
            if (a.is_zero() || b.is_zero())
                continue;
            const Derivation ra = anchor(A, a);
            const Derivation rb = anchor(A, b);
            r += contract(ra, delta(b));
            const int s = ((pa + kk) & 1) & ((pb + kk) & 1);
            const SuperForm t = contract(rb, delta(a));
            r += s ? t : -t;
            r += delta(evaluate(b, ra));
        }
    return r;
}

} // namespace detail

// Literal evaluation of the defining formula; general k.
inline SuperForm algebroid_bracket(const PoissonAlgebroid& A, const SuperForm& alpha,
                                   const SuperForm& beta)
{
    detail::require_one_form(alpha, "algebroid bracket");
    detail::require_one_form(beta, "algebroid bracket");
    return detail::corchete_formula(A, A.P.degree, alpha, beta);
}

// Leibniz + skew extension of the stored generator table; the term rule
// is spelled out at the innermost loop below.
inline SuperForm algebroid_bracket(const AlgebroidData& A, const SuperForm& alpha,
                                   const SuperForm& beta)
{
    if (!(alpha.sig == A.sig) || !(beta.sig == A.sig))
        throw std::invalid_argument("signature mismatch");
    detail::require_one_form(alpha, "algebroid bracket");
    detail::require_one_form(beta, "algebroid bracket");
    SuperForm r(A.sig);
    for (const auto& [m1, c1] : alpha.terms) {
        const GenId u = detail::one_form_generator(m1);
        const auto [c1e, c1o] = c1.parity_components();
        const AlgebraElement* lefts[2] = {&c1e, &c1o};
        for (int pa = 0; pa < 2; ++pa) {
            const AlgebraElement& a = *lefts[pa];
            if (a.is_zero())
                continue;
            const int px = (pa + gen_parity(u)) & 1; // parity of a du
            for (const auto& [m2, c2] : beta.terms) {
                const GenId v = detail::one_form_generator(m2);
                const auto [c2e, c2o] = c2.parity_components();
                const AlgebraElement* rights[2] = {&c2e, &c2o};
                for (int pb = 0; pb < 2; ++pb) {
                    const AlgebraElement& b = *rights[pb];
                    if (b.is_zero())
                        continue;
                    // [[a du, b dv]] = (a rho_u(b)) dv
                    //   + (-1)^(px p(b)) (b a) [[du,dv]]
                    //   - (-1)^(px (p(b)+p(v))) (b rho_v(a)) du
                    r += detail::left_mult(a * apply(A.anchor_value(u), b),
                                           SuperForm::d_generator(A.sig, v));
                    const SuperForm t2 = detail::left_mult(b * a, A.bracket_value(u, v));
                    r += (px & pb) ? -t2 : t2;
                    const SuperForm t3 =
                        detail::left_mult(b * apply(A.anchor_value(v), a),
                                          SuperForm::d_generator(A.sig, u));
                    r += (px & ((pb + gen_parity(v)) & 1)) ? t3 : -t3;
                }
            }
        }
    }
    return r;
}

// Jacobi defect [[f,[[g,h]]]] - [[[[f,g]],h]] - (-1)^((p(f)+k)(p(g)+k)) [[g,[[f,h]]]],
// summed over parity components of the first two arguments.
template <class Source>
SuperForm algebroid_jacobiator(const Source& A, const SuperForm& alpha, const SuperForm& beta,
                               const SuperForm& gamma)
{
    const int kk = detail::source_shift(A);
    SuperForm r(detail::source_sig(A));
    const auto [ae, ao] = alpha.parity_components();
    const auto [be, bo] = beta.parity_components();
    const SuperForm* as[2] = {&ae, &ao};
    const SuperForm* bs[2] = {&be, &bo};
    for (int pa = 0; pa < 2; ++pa)
        for (int pb = 0; pb < 2; ++pb) {
            const SuperForm& a = *as[pa];
            const SuperForm& b = *bs[pb];
            if (a.is_zero() || b.is_zero())
                continue;
            r += algebroid_bracket(A, a, algebroid_bracket(A, b, gamma));
            r += -algebroid_bracket(A, algebroid_bracket(A, a, b), gamma);
            const int s = ((pa + kk) & 1) & ((pb + kk) & 1);
            const SuperForm t = algebroid_bracket(A, b, algebroid_bracket(A, a, gamma));
            r += s ? t : -t;
        }
    return r;
}

// rho(delta(f))(g), the bracket on A induced by raw algebroid data
inline AlgebraElement induced_bracket(const AlgebroidData& A, const AlgebraElement& f,
                                      const AlgebraElement& g)
{
    AlgebraElement r(A.sig);
    const auto [fe, fo] = f.parity_components();
    if (!fe.is_zero())
        r += apply(anchor(A, delta(fe)), g);
    if (!fo.is_zero())
        r += apply(anchor(A, delta(fo)), g);
    return r;
}

namespace detail {

// alpha(rho(beta)) + (-1)^((p(alpha)+k)(p(beta)+k)) beta(rho(alpha)) == 0
template <class Source>
bool anchor_skew_pair_ok(const Source& A, const SuperForm& alpha, const SuperForm& beta)
{
    if (alpha.is_zero() || beta.is_zero())
        return true;
    const int kk = source_shift(A);
    const int s = ((alpha.parity() + kk) & 1) & ((beta.parity() + kk) & 1);
    const AlgebraElement lhs = evaluate(alpha, anchor(A, beta));
    const AlgebraElement rhs = evaluate(beta, anchor(A, alpha));
    return (s ? lhs - rhs : lhs + rhs).is_zero();
}

} // namespace detail

// Skew-supersymmetry of the anchor pairing on generator pairs and samples.
template <class Source>
Report check_anchor_skew(const Source& A, std::uint64_t seed, std::uint32_t samples)
{
    const Signature& sig = detail::source_sig(A);
    Report rep;
    bool ok = true;
    std::string witness;
    for (std::uint32_t i = 0; i < gen_count(sig) && ok; ++i)
        for (std::uint32_t j = 0; j < gen_count(sig) && ok; ++j) {
            const GenId u = gen_at(sig, i), v = gen_at(sig, j);
            if (!detail::anchor_skew_pair_ok(A, SuperForm::d_generator(sig, u),
                                             SuperForm::d_generator(sig, v))) {
                ok = false;
                witness = "fails at alpha = d" + gen_name(u) + ", beta = d" + gen_name(v);
            }
        }
    Sampler smp(sig, seed);
    for (std::uint32_t t = 0; t < samples && ok; ++t) {
        const SuperForm a = smp.one_form(static_cast<int>(smp.next(2)));
        const SuperForm b = smp.one_form(static_cast<int>(smp.next(2)));
        if (!detail::anchor_skew_pair_ok(A, a, b)) {
            ok = false;
            witness = "fails at alpha = " + print_form(a) + ", beta = " + print_form(b);
        }
    }
    rep.add("anchor-skew", ok, witness);
    return rep;
}

// Super skew, super Jacobi and the Leibniz axiom for the bracket on 1-forms.
// PoissonAlgebroid input requires even k; the graded bracket exists for odd
// k but makes no superalgebroid claim.
template <class Source>
Report check_superalgebroid(const Source& A, std::uint64_t seed, std::uint32_t samples,
                            std::uint32_t max_poly_degree = 2)
{
    if (detail::source_shift(A) & 1)
        throw std::invalid_argument("superalgebroid checks require an even bracket degree");
    const Signature& sig = detail::source_sig(A);
    Report rep;

    {
        bool ok = true;
        std::string witness;
        for (std::uint32_t i = 0; i < gen_count(sig) && ok; ++i)
            for (std::uint32_t j = 0; j < gen_count(sig) && ok; ++j) {
                const GenId u = gen_at(sig, i), v = gen_at(sig, j);
                const SuperForm a = SuperForm::d_generator(sig, u);
                const SuperForm b = SuperForm::d_generator(sig, v);
                const SuperForm lhs = algebroid_bracket(A, a, b);
                const SuperForm rhs = algebroid_bracket(A, b, a);
                const int s = gen_parity(u) & gen_parity(v);
                if (!((s ? lhs - rhs : lhs + rhs).is_zero())) {
                    ok = false;
                    witness = "skew fails at d" + gen_name(u) + ", d" + gen_name(v);
                }
            }
        Sampler smp(sig, seed);
        for (std::uint32_t t = 0; t < samples && ok; ++t) {
            const SuperForm a = smp.one_form(static_cast<int>(smp.next(2)), max_poly_degree);
            const SuperForm b = smp.one_form(static_cast<int>(smp.next(2)), max_poly_degree);
            if (a.is_zero() || b.is_zero())
                continue;
            const SuperForm lhs = algebroid_bracket(A, a, b);
            const SuperForm rhs = algebroid_bracket(A, b, a);
            const int s = a.parity() & b.parity();
            if (!((s ? lhs - rhs : lhs + rhs).is_zero())) {
                ok = false;
                witness = "skew fails at alpha = " + print_form(a) + ", beta = "
                          + print_form(b);
            }
        }
        rep.add("algebroid-skew", ok, witness);
    }

    {
        bool ok = true;
        std::string witness;
        for (std::uint32_t i = 0; i < gen_count(sig) && ok; ++i)
            for (std::uint32_t j = 0; j < gen_count(sig) && ok; ++j)
                for (std::uint32_t l = 0; l < gen_count(sig) && ok; ++l) {
                    const SuperForm jac = algebroid_jacobiator(
                        A, SuperForm::d_generator(sig, gen_at(sig, i)),
                        SuperForm::d_generator(sig, gen_at(sig, j)),
                        SuperForm::d_generator(sig, gen_at(sig, l)));
                    if (!jac.is_zero()) {
                        ok = false;
                        witness = "jacobiator(d" + gen_name(gen_at(sig, i)) + ",d"
                                  + gen_name(gen_at(sig, j)) + ",d"
                                  + gen_name(gen_at(sig, l)) + ") = " + print_form(jac);
                    }
                }
        rep.add("algebroid-jacobi-generators", ok, witness);
    }

    {
        bool ok = true;
        std::string witness;
        Sampler smp(sig, seed + 1);
        for (std::uint32_t t = 0; t < samples && ok; ++t) {
            const SuperForm a = smp.one_form(static_cast<int>(smp.next(2)), max_poly_degree);
            const SuperForm b = smp.one_form(static_cast<int>(smp.next(2)), max_poly_degree);
            const SuperForm c = smp.one_form(static_cast<int>(smp.next(2)), max_poly_degree);
            const SuperForm jac = algebroid_jacobiator(A, a, b, c);
            if (!jac.is_zero()) {
                ok = false;
                witness = "jacobiator(" + print_form(a) + ", " + print_form(b) + ", "
                          + print_form(c) + ") = " + print_form(jac);
            }
        }
        rep.add("algebroid-jacobi-samples", ok, witness);
    }

    {
        bool ok = true;
        std::string witness;
        Sampler smp(sig, seed + 2);
        for (std::uint32_t t = 0; t < samples && ok; ++t) {
            const SuperForm a = smp.one_form(static_cast<int>(smp.next(2)), max_poly_degree);
            const AlgebraElement f =
                smp.parity_homogeneous(static_cast<int>(smp.next(2)), max_poly_degree);
            const SuperForm b = smp.one_form(static_cast<int>(smp.next(2)), max_poly_degree);
            if (a.is_zero() || f.is_zero())
                continue;
            // [[alpha, f beta]] = rho(alpha)(f) beta + (-1)^(p(alpha) p(f)) f [[alpha,beta]]
            const SuperForm lhs = algebroid_bracket(A, a, detail::left_mult(f, b));
            SuperForm rhs = detail::left_mult(apply(anchor(A, a), f), b);
            const int kk = detail::source_shift(A);
            const int s = ((a.parity() + kk) & 1) & f.parity();
            const SuperForm t2 = detail::left_mult(f, algebroid_bracket(A, a, b));
            rhs += s ? -t2 : t2;
            if (!(lhs == rhs)) {
                ok = false;
                witness = "leibniz fails at alpha = " + print_form(a) + ", f = "
                          + print_element(f) + ", beta = " + print_form(b);
            }
        }
        rep.add("algebroid-leibniz", ok, witness);
    }

    return rep;
}

// Conditions (1) and (3) on raw data: the induced bracket on A satisfies
// Jacobi, and the anchor is a morphism onto hamiltonian derivations.  The
// two must agree; the agreement line asserts exactly that.
inline Report check_poisson_type(const AlgebroidData& A, std::uint64_t seed,
                                 std::uint32_t samples, std::uint32_t max_poly_degree = 2)
{
    Report rep;
    const Signature& sig = A.sig;

    const auto induced_jacobiator = [&](const AlgebraElement& f, const AlgebraElement& g,
                                        const AlgebraElement& h) {
        AlgebraElement r(sig);
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
                r += induced_bracket(A, fp, induced_bracket(A, gp, h));
                r += -induced_bracket(A, induced_bracket(A, fp, gp), h);
                const AlgebraElement t = induced_bracket(A, gp, induced_bracket(A, fp, h));
                r += (pf & pg) ? t : -t;
            }
        return r;
    };

    bool jacobi_ok = true;
    {
        std::string witness;
        for (std::uint32_t i = 0; i < gen_count(sig) && jacobi_ok; ++i)
            for (std::uint32_t j = 0; j < gen_count(sig) && jacobi_ok; ++j)
                for (std::uint32_t l = 0; l < gen_count(sig) && jacobi_ok; ++l) {
                    const AlgebraElement f = AlgebraElement::generator(sig, gen_at(sig, i));
                    const AlgebraElement g = AlgebraElement::generator(sig, gen_at(sig, j));
                    const AlgebraElement h = AlgebraElement::generator(sig, gen_at(sig, l));
                    const AlgebraElement jac = induced_jacobiator(f, g, h);
                    if (!jac.is_zero()) {
                        jacobi_ok = false;
                        witness = "jacobiator(" + gen_name(gen_at(sig, i)) + ","
                                  + gen_name(gen_at(sig, j)) + "," + gen_name(gen_at(sig, l))
                                  + ") = " + print_element(jac);
                    }
                }
        Sampler smp(sig, seed);
        for (std::uint32_t t = 0; t < samples && jacobi_ok; ++t) {
            const AlgebraElement f = smp.element(max_poly_degree);
            const AlgebraElement g = smp.element(max_poly_degree);
            const AlgebraElement h = smp.element(max_poly_degree);
            const AlgebraElement jac = induced_jacobiator(f, g, h);
            if (!jac.is_zero()) {
                jacobi_ok = false;
                witness = "jacobiator(" + print_element(f) + ", " + print_element(g) + ", "
                          + print_element(h) + ") = " + print_element(jac);
            }
        }
        rep.add("induced-jacobi", jacobi_ok, witness);
    }

    bool morphism_ok = true;
    {
        std::string witness;
        for (std::uint32_t i = 0; i < gen_count(sig) && morphism_ok; ++i)
            for (std::uint32_t j = 0; j < gen_count(sig) && morphism_ok; ++j) {
                const GenId u = gen_at(sig, i), v = gen_at(sig, j);
                const Derivation lhs = commutator(A.anchor_value(u), A.anchor_value(v));
                const AlgebraElement uv =
                    induced_bracket(A, AlgebraElement::generator(sig, u),
                                    AlgebraElement::generator(sig, v));
                const Derivation rhs = anchor(A, delta(uv));
                if (!(lhs == rhs)) {
                    morphism_ok = false;
                    witness = "[rho(d" + gen_name(u) + "), rho(d" + gen_name(v)
                              + ")] = " + describe_derivation(lhs) + " but rho(d{"
                              + gen_name(u) + "," + gen_name(v)
                              + "}) = " + describe_derivation(rhs);
                }
            }
        Sampler smp(sig, seed + 1);
        for (std::uint32_t t = 0; t < samples && morphism_ok; ++t) {
            const AlgebraElement f =
                smp.parity_homogeneous(static_cast<int>(smp.next(2)), max_poly_degree);
            const AlgebraElement g =
                smp.parity_homogeneous(static_cast<int>(smp.next(2)), max_poly_degree);
            if (f.is_zero() || g.is_zero())
                continue;
            const Derivation lhs = commutator(anchor(A, delta(f)), anchor(A, delta(g)));
            const Derivation rhs = anchor(A, delta(induced_bracket(A, f, g)));
            if (!(lhs == rhs)) {
                morphism_ok = false;
                witness = "fails at f = " + print_element(f) + ", g = " + print_element(g);
            }
        }
        rep.add("anchor-morphism", morphism_ok, witness);
    }

    rep.add("condition-agreement", jacobi_ok == morphism_ok,
            std::string("conditions disagree: induced-jacobi ")
                + (jacobi_ok ? "passes" : "fails") + ", anchor-morphism "
                + (morphism_ok ? "passes" : "fails"));
    return rep;
}

// Snapshot of a Poisson-derived algebroid as raw data; even k only (the
// data convention fixes k = 0 signs).
inline AlgebroidData to_algebroid_data(const PoissonAlgebroid& A)
{
    if (A.P.degree & 1)
        throw std::invalid_argument("algebroid data requires an even bracket degree");
    const Signature& sig = A.P.sig;
    AlgebroidData D(sig);
    for (std::uint32_t i = 0; i < gen_count(sig); ++i) {
        const GenId u = gen_at(sig, i);
        D.set_anchor(u, detail::source_anchor(A, u));
    }
    for (std::uint32_t i = 0; i < gen_count(sig); ++i)
        for (std::uint32_t j = i; j < gen_count(sig); ++j) {
            const GenId u = gen_at(sig, i), v = gen_at(sig, j);
            D.set_bracket(u, v,
                          algebroid_bracket(A, SuperForm::d_generator(sig, u),
                                            SuperForm::d_generator(sig, v)));
        }
    return D;
}

// Recompute the bracket from the anchor alone and compare with the stored
// extension; check the behaviour on exact pairs.  The hypotheses mirror
// the reconstruction statement: skew anchor pairing and exactness of the
// generator brackets.  Samples pair differentials of independent
// generators; degenerate (linearly dependent) pairs are out of scope.
inline Report reconstruct_bracket(const AlgebroidData& A, std::uint64_t seed = 0,
                                  std::uint32_t samples = 64,
                                  std::uint32_t closed_samples = 32,
                                  std::uint32_t max_poly_degree = 2)
{
    Report rep;
    const Signature& sig = A.sig;

    bool hyp_skew = true;
    {
        std::string witness;
        for (std::uint32_t i = 0; i < gen_count(sig) && hyp_skew; ++i)
            for (std::uint32_t j = 0; j < gen_count(sig) && hyp_skew; ++j) {
                const GenId u = gen_at(sig, i), v = gen_at(sig, j);
                if (!detail::anchor_skew_pair_ok(A, SuperForm::d_generator(sig, u),
                                                 SuperForm::d_generator(sig, v))) {
                    hyp_skew = false;
                    witness = "fails at d" + gen_name(u) + ", d" + gen_name(v);
                }
            }
        rep.add("hypothesis-anchor-skew", hyp_skew, witness);
    }

    bool hyp_exact = true;
    {
        std::string witness;
        for (std::uint32_t i = 0; i < gen_count(sig) && hyp_exact; ++i)
            for (std::uint32_t j = 0; j < gen_count(sig) && hyp_exact; ++j) {
                const GenId u = gen_at(sig, i), v = gen_at(sig, j);
                const AlgebraElement uv =
                    apply(A.anchor_value(u), AlgebraElement::generator(sig, v));
                if (!(A.bracket_value(u, v) == delta(uv))) {
                    hyp_exact = false;
                    witness = "[[d" + gen_name(u) + ",d" + gen_name(v)
                              + "]] != delta(rho(d" + gen_name(u) + ")(" + gen_name(v)
                              + "))";
                }
            }
        rep.add("hypothesis-exact-generators", hyp_exact, witness);
    }

    if (!hyp_skew || !hyp_exact) {
        const std::string reason = "hypotheses not met";
        rep.skip("reconstruction-generators", reason);
        rep.skip("reconstruction-samples", reason);
        rep.skip("closed-pair-literal", reason);
        rep.skip("closed-pair-exact", reason);
        rep.skip("closed-pair-dclosed", reason);
        return rep;
    }

    {
        bool ok = true;
        std::string witness;
        for (std::uint32_t i = 0; i < gen_count(sig) && ok; ++i)
            for (std::uint32_t j = 0; j < gen_count(sig) && ok; ++j) {
                const SuperForm a = SuperForm::d_generator(sig, gen_at(sig, i));
                const SuperForm b = SuperForm::d_generator(sig, gen_at(sig, j));
                if (!(algebroid_bracket(A, a, b) == detail::corchete_formula(A, 0, a, b))) {
                    ok = false;
                    witness = "formula differs at d" + gen_name(gen_at(sig, i)) + ", d"
                              + gen_name(gen_at(sig, j));
                }
            }
        rep.add("reconstruction-generators", ok, witness);
    }

    {
        bool ok = true;
        std::string witness = "sampled pairs use independent generator differentials";
        Sampler smp(sig, seed);
        for (std::uint32_t t = 0; t < samples && ok; ++t) {
            const SuperForm a = smp.one_form(static_cast<int>(smp.next(2)), max_poly_degree);
            const SuperForm b = smp.one_form(static_cast<int>(smp.next(2)), max_poly_degree);
            const SuperForm lhs = algebroid_bracket(A, a, b);
            const SuperForm rhs = detail::corchete_formula(A, 0, a, b);
            if (!(lhs == rhs)) {
                ok = false;
                witness = "formula differs at alpha = " + print_form(a) + ", beta = "
                          + print_form(b);
            }
        }
        rep.add("reconstruction-samples", ok, witness);
    }

    {
        bool literal_ok = true, exact_ok = true, dclosed_ok = true;
        std::string wl, we, wd;
        Sampler smp(sig, seed + 1);
        for (std::uint32_t t = 0; t < closed_samples; ++t) {
            const SuperForm a =
                smp.closed_one_form(static_cast<int>(smp.next(2)), max_poly_degree);
            const SuperForm b =
                smp.closed_one_form(static_cast<int>(smp.next(2)), max_poly_degree);
            if (a.is_zero() || b.is_zero())
                continue;
            const SuperForm w = algebroid_bracket(A, a, b);
            if (literal_ok && !w.is_zero()) {
                literal_ok = false;
                wl = "[[alpha,beta]] = " + print_form(w) + " for closed alpha = "
                     + print_form(a) + ", beta = " + print_form(b);
            }
            if (exact_ok && !(w == delta(evaluate(b, anchor(A, a))))) {
                exact_ok = false;
                we = "[[alpha,beta]] != delta(beta(rho(alpha))) at alpha = " + print_form(a)
                     + ", beta = " + print_form(b);
            }
            if (dclosed_ok && !delta(w).is_zero()) {
                dclosed_ok = false;
                wd = "delta([[alpha,beta]]) != 0 at alpha = " + print_form(a) + ", beta = "
                     + print_form(b);
            }
        }
        rep.add("closed-pair-literal", literal_ok, wl);
        rep.add("closed-pair-exact", exact_ok, we);
        rep.add("closed-pair-dclosed", dclosed_ok, wd);
    }

    return rep;
}

} // namespace superpoisson
