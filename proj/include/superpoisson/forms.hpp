/*
 * forms.hpp -- the bigraded algebra Omega(A) of superforms.
 *
 * Monomials are dx_S * dth^kappa with S a strictly increasing subset (the
 * dx_i anticommute among themselves) and kappa a multidegree (the dth_j
 * commute and may repeat).  Coefficients from A sit on the left.  For
 * bihomogeneous alpha (form degree r, parity p) and beta (s, q):
 *   alpha ^ beta = (-1)^(r s + p q) beta ^ alpha.
 * dx_i is even, dth_j is odd; both have form degree 1.
 */
#pragma once

#include "derivation.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace superpoisson {

struct FormMonomial {
    OddMono dx_mask = 0;               // set of dx factors
    std::vector<std::uint32_t> dtheta; // multidegree over dth_1..dth_n

    int form_degree() const
    {
        return std::popcount(dx_mask)
               + static_cast<int>(std::accumulate(dtheta.begin(), dtheta.end(), 0u));
    }

    int parity() const
    {
        return static_cast<int>(std::accumulate(dtheta.begin(), dtheta.end(), 0u)) & 1;
    }

    friend bool operator==(const FormMonomial&, const FormMonomial&) = default;
};

struct FormMonomialLess {
    bool operator()(const FormMonomial& a, const FormMonomial& b) const
    {
        const int ra = a.form_degree(), rb = b.form_degree();
        if (ra != rb)
            return ra < rb;
        if (a.dx_mask != b.dx_mask)
            return a.dx_mask < b.dx_mask;
        return a.dtheta < b.dtheta;
    }
};

// Wedge of two monomials in the written order; zero when a dx repeats.
// Sign: each dx of the right factor crosses each dth of the left factor
// (they anticommute), then the dx blocks interleave with Koszul
// inversions; dth factors merge without signs.
inline std::optional<std::pair<int, FormMonomial>> wedge_monomials(const FormMonomial& a,
                                                                   const FormMonomial& b)
{
    if (a.dx_mask & b.dx_mask)
        return std::nullopt;
    const int theta_a = static_cast<int>(std::accumulate(a.dtheta.begin(), a.dtheta.end(), 0u));
    int exp = std::popcount(b.dx_mask) * theta_a + koszul_inversions(a.dx_mask, b.dx_mask);
    FormMonomial r;
    r.dx_mask = a.dx_mask | b.dx_mask;
    r.dtheta = a.dtheta;
    for (std::size_t j = 0; j < r.dtheta.size() && j < b.dtheta.size(); ++j)
        r.dtheta[j] += b.dtheta[j];
    return std::make_pair(exp & 1, r);
}

class SuperForm {
public:
    Signature sig;
    std::map<FormMonomial, AlgebraElement, FormMonomialLess> terms;

    SuperForm() = default;
    explicit SuperForm(const Signature& s) : sig(s) {}

    static SuperForm zero(const Signature& s) { return SuperForm(s); }

    static SuperForm from_algebra(const AlgebraElement& a)
    {
        SuperForm w(a.sig);
        w.add_term(FormMonomial{0, std::vector<std::uint32_t>(a.sig.n, 0)}, a);
        return w;
    }

    static SuperForm dx(const Signature& s, std::uint32_t i)
    {
        check_gen(s, even_gen(i));
        SuperForm w(s);
        w.add_term(FormMonomial{OddMono{1} << i, std::vector<std::uint32_t>(s.n, 0)},
                   AlgebraElement::one(s));
        return w;
    }

    static SuperForm dtheta(const Signature& s, std::uint32_t j)
    {
        check_gen(s, odd_gen(j));
        std::vector<std::uint32_t> kappa(s.n, 0);
        kappa[j] = 1;
        SuperForm w(s);
        w.add_term(FormMonomial{0, std::move(kappa)}, AlgebraElement::one(s));
        return w;
    }

    // d applied to a generator: dx_i or dth_j as a 1-form.
    static SuperForm d_generator(const Signature& s, const GenId& u)
    {
        return u.odd ? dtheta(s, u.index) : dx(s, u.index);
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(const FormMonomial& mono, const AlgebraElement& a)
    {
        if (a.is_zero())
            return;
        auto it = terms.find(mono);
        if (it == terms.end()) {
            terms.emplace(mono, a);
        } else {
            it->second += a;
            if (it->second.is_zero())
                terms.erase(it);
        }
    }

    friend SuperForm operator+(const SuperForm& a, const SuperForm& b)
    {
        require_same_sig(a, b);
        SuperForm r = a;
        for (const auto& [mono, c] : b.terms)
            r.add_term(mono, c);
        return r;
    }

    friend SuperForm operator-(const SuperForm& a)
    {
        SuperForm r = a;
        for (auto& [mono, c] : r.terms)
            c = -c;
        return r;
    }

    friend SuperForm operator-(const SuperForm& a, const SuperForm& b) { return a + (-b); }

    friend SuperForm operator*(const Rational& c, const SuperForm& a)
    {
        SuperForm r(a.sig);
        for (const auto& [mono, v] : a.terms)
            r.add_term(mono, c * v);
        return r;
    }

    SuperForm& operator+=(const SuperForm& b)
    {
        if (terms.empty() && sig == Signature{})
            sig = b.sig;
        require_same_sig(*this, b);
        for (const auto& [mono, c] : b.terms)
            add_term(mono, c);
        return *this;
    }

    friend bool operator==(const SuperForm& a, const SuperForm& b)
    {
        return a.sig == b.sig && a.terms == b.terms;
    }

    bool has_pure_form_degree() const
    {
        if (terms.empty())
            return true;
        const int r = terms.begin()->first.form_degree();
        for (const auto& [mono, c] : terms)
            if (mono.form_degree() != r)
                return false;
        return true;
    }

    int form_degree() const // 0 for zero
    {
        if (terms.empty())
            return 0;
        if (!has_pure_form_degree())
            throw std::logic_error("mixed form degree queried for exact degree");
        return terms.begin()->first.form_degree();
    }

    // total parity = parity of the coefficient + parity of the monomial
    bool has_homogeneous_parity() const
    {
        int seen = -1;
        for (const auto& [mono, c] : terms)
            for (const auto& [odd, p] : c.terms) {
                const int par = (mono.parity() + std::popcount(odd)) & 1;
                if (seen < 0)
                    seen = par;
                else if (seen != par)
                    return false;
            }
        return true;
    }

    int parity() const // 0 for zero
    {
        if (terms.empty())
            return 0;
        if (!has_homogeneous_parity())
            throw std::logic_error("inhomogeneous form queried for parity");
        const auto& [mono, c] = *terms.begin();
        return (mono.parity() + c.parity()) & 1;
    }

    bool is_bihomogeneous() const { return has_pure_form_degree() && has_homogeneous_parity(); }

    std::pair<SuperForm, SuperForm> parity_components() const // (even, odd)
    {
        SuperForm even(sig), odd(sig);
        for (const auto& [mono, c] : terms) {
            auto [ce, co] = c.parity_components();
            if (mono.parity() == 0) {
                even.add_term(mono, ce);
                odd.add_term(mono, co);
            } else {
                even.add_term(mono, co);
                odd.add_term(mono, ce);
            }
        }
        return {even, odd};
    }

    // split into pure form degrees, ascending
    std::vector<SuperForm> degree_components() const
    {
        std::map<int, SuperForm> buckets;
        for (const auto& [mono, c] : terms) {
            auto [it, fresh] = buckets.try_emplace(mono.form_degree(), sig);
            it->second.add_term(mono, c);
        }
        std::vector<SuperForm> r;
        for (auto& [d, w] : buckets)
            r.push_back(std::move(w));
        return r;
    }

    // decompose into (coefficient, monomial) pairs in canonical order
    std::vector<std::pair<AlgebraElement, FormMonomial>> term_list() const
    {
        std::vector<std::pair<AlgebraElement, FormMonomial>> r;
        r.reserve(terms.size());
        for (const auto& [mono, c] : terms)
            r.emplace_back(c, mono);
        return r;
    }

    static void require_same_sig(const SuperForm& a, const SuperForm& b)
    {
        if (!(a.sig == b.sig))
            throw std::invalid_argument("signature mismatch");
    }
};

inline AlgebraElement to_algebra(const SuperForm& w)
{
    AlgebraElement a(w.sig);
    for (const auto& [mono, c] : w.terms) {
        if (mono.form_degree() != 0)
            throw std::logic_error("form of positive degree used as an algebra element");
        a += c;
    }
    return a;
}

// Wedge product with left coefficients: moving the right coefficient b
// across the left monomial M1 costs (-1)^(parity(M1) * parity(b)).
inline SuperForm wedge(const SuperForm& w1, const SuperForm& w2)
{
    SuperForm::require_same_sig(w1, w2);
    SuperForm r(w1.sig);
    for (const auto& [m1, a] : w1.terms) {
        const int pm1 = m1.parity();
        for (const auto& [m2, b] : w2.terms) {
            const auto wm = wedge_monomials(m1, m2);
            if (!wm)
                continue;
            AlgebraElement coeff(w1.sig);
            if (pm1 == 0) {
                coeff = a * b;
            } else {
                auto [be, bo] = b.parity_components();
                coeff = a * (be - bo);
            }
            r.add_term(wm->second, wm->first ? -coeff : coeff);
        }
    }
    return r;
}

inline SuperForm wedge(std::initializer_list<SuperForm> ws)
{
    auto it = ws.begin();
    if (it == ws.end())
        throw std::invalid_argument("empty wedge");
    SuperForm r = *it;
    for (++it; it != ws.end(); ++it)
        r = wedge(r, *it);
    return r;
}

// Super exterior derivative of an algebra element, as a 1-form:
// delta(a) = sum_i dx_i(a) dx_i + (-1)^(parity(a)+1) sum_j dth_j(a) dth_j
// per homogeneous component.  Equivalent to iterating
// delta(uv) = delta(u) v + (-1)^(deg u in form grading) u delta(v) and
// normalising coefficients to the left.
inline SuperForm delta(const AlgebraElement& a)
{
    SuperForm r(a.sig);
    for (const auto& [mono, p] : a.terms) {
        AlgebraElement term(a.sig);
        term.add_term(mono, p);
        for (std::uint32_t i = 0; i < a.sig.m; ++i) {
            AlgebraElement c = partial(term, even_gen(i));
            if (!c.is_zero())
                r += wedge(SuperForm::from_algebra(c), SuperForm::dx(a.sig, i));
        }
        const int sgn = (std::popcount(mono) + 1) & 1; // exponent of (-1)
        for (std::uint32_t j = 0; j < a.sig.n; ++j) {
            AlgebraElement c = partial(term, odd_gen(j));
            if (c.is_zero())
                continue;
            if (sgn)
                c = -c;
            r += wedge(SuperForm::from_algebra(c), SuperForm::dtheta(a.sig, j));
        }
    }
    return r;
}

// delta on forms: delta(a * M) = delta(a) ^ M since the generators dx, dth
// are closed.
inline SuperForm delta(const SuperForm& w)
{
    SuperForm r(w.sig);
    for (const auto& [mono, a] : w.terms) {
        SuperForm m(w.sig);
        m.add_term(mono, AlgebraElement::one(w.sig));
        r += wedge(delta(a), m);
    }
    return r;
}

// Interior product along a derivation D: form degree -1, parity of D.
//   contract(D, a)          = 0 for a in A,
//   contract(D, d(u))       = D(u),
//   contract(D, alpha^beta) = contract(D,alpha)^beta
//                             + (-1)^(r_alpha + parity(D) parity(alpha)) alpha^contract(D,beta).
// On a canonical monomial dx_S dth^kappa the rule collapses to
//   sum_{i in S} (-1)^(pos_S(i)-1) D(x_i) (monomial without dx_i)
//   + (-1)^(|S|) sum_j kappa_j D(th_j) (monomial with kappa_j - 1),
// and the coefficient contributes (-1)^(parity(D) parity(a)).
inline SuperForm contract(const Derivation& d, const SuperForm& w)
{
    if (!(d.sig == w.sig))
        throw std::invalid_argument("signature mismatch");
    SuperForm r(w.sig);
    for (const auto& [mono, a] : w.terms) {
        AlgebraElement base(a.sig);
        if (d.parity == 0) {
            base = a;
        } else {
            auto [ae, ao] = a.parity_components();
            base = ae - ao;
        }
        // dx part
        int pos = 0;
        for (OddMono s = mono.dx_mask; s; s &= s - 1, ++pos) {
            const int i = std::countr_zero(s);
            const AlgebraElement& val = d.even_values[i];
            if (val.is_zero())
                continue;
            FormMonomial rest = mono;
            rest.dx_mask &= ~(OddMono{1} << i);
            AlgebraElement c = base * val;
            r.add_term(rest, (pos & 1) ? -c : c);
        }
        // dth part
        const int sx = std::popcount(mono.dx_mask) & 1;
        for (std::uint32_t j = 0; j < mono.dtheta.size(); ++j) {
            if (mono.dtheta[j] == 0)
                continue;
            const AlgebraElement& val = d.odd_values[j];
            if (val.is_zero())
                continue;
            FormMonomial rest = mono;
            rest.dtheta[j] -= 1;
            AlgebraElement c = Rational(mono.dtheta[j]) * (base * val);
            r.add_term(rest, sx ? -c : c);
        }
    }
    return r;
}

// Pairing of a 1-form against a derivation:
//   evaluate(a d(u), D) = (-1)^(parity(D) parity(a)) a D(u).
// Agrees with contract on pure degree-1 forms.
inline AlgebraElement evaluate(const SuperForm& w, const Derivation& d)
{
    if (!(d.sig == w.sig))
        throw std::invalid_argument("signature mismatch");
    AlgebraElement r(w.sig);
    for (const auto& [mono, a] : w.terms) {
        if (mono.form_degree() != 1)
            throw std::logic_error("evaluate requires a form of pure degree 1");
        AlgebraElement base(a.sig);
        if (d.parity == 0) {
            base = a;
        } else {
            auto [ae, ao] = a.parity_components();
            base = ae - ao;
        }
        if (mono.dx_mask) {
            const int i = std::countr_zero(mono.dx_mask);
            r += base * d.even_values[i];
        } else {
            for (std::uint32_t j = 0; j < mono.dtheta.size(); ++j)
                if (mono.dtheta[j])
                    r += base * d.odd_values[j];
        }
    }
    return r;
}

} // namespace superpoisson
