/*
 * random.hpp -- deterministic sampling of elements, derivations and forms.
 *
 * All randomness flows through one mt19937_64 stream reduced by modulo, so
 * a (seed, call sequence) pair produces identical samples on every
 * platform.  Samplers may occasionally return zero (cancelling terms);
 * identity checks treat that as a wasted sample, not an error.
 */
#pragma once

#include "forms.hpp"

#include <cstdint>
#include <random>

namespace superpoisson {

class Sampler {
public:
    Sampler(const Signature& s, std::uint64_t seed) : sig(s), rng(seed) {}

    std::uint64_t next(std::uint64_t bound) { return bound ? rng() % bound : 0; }

    // nonzero, numerator in [-4,4], denominator in [1,3]
    Rational rational()
    {
        static const int numerators[] = {-4, -3, -2, -1, 1, 2, 3, 4};
        return Rational(numerators[next(8)], static_cast<int>(1 + next(3)));
    }

    Polynomial polynomial(std::uint32_t max_degree = 2)
    {
        Polynomial p;
        const std::uint64_t nterms = 1 + next(3);
        for (std::uint64_t t = 0; t < nterms; ++t) {
            ExpVec e(sig.m, 0);
            if (sig.m > 0) {
                const std::uint64_t d = next(max_degree + 1);
                for (std::uint64_t k = 0; k < d; ++k)
                    e[next(sig.m)] += 1;
            }
            p.add_term(e, rational());
        }
        return p;
    }

    OddMono odd_subset(std::uint32_t size)
    {
        OddMono mono = 0;
        if (size > sig.n)
            return 0;
        while (static_cast<std::uint32_t>(std::popcount(mono)) < size)
            mono |= OddMono{1} << next(sig.n);
        return mono;
    }

    AlgebraElement element(std::uint32_t max_degree = 2)
    {
        AlgebraElement a(sig);
        const std::uint64_t nterms = 1 + next(3);
        for (std::uint64_t t = 0; t < nterms; ++t)
            a.add_term(odd_subset(static_cast<std::uint32_t>(next(sig.n + 1))),
                       polynomial(max_degree));
        return a;
    }

    // homogeneous of Z-degree d (zero when d > n)
    AlgebraElement homogeneous(std::uint32_t d, std::uint32_t max_degree = 2)
    {
        AlgebraElement a(sig);
        if (d > sig.n)
            return a;
        const std::uint64_t nterms = 1 + next(2);
        for (std::uint64_t t = 0; t < nterms; ++t)
            a.add_term(odd_subset(d), polynomial(max_degree));
        return a;
    }

    AlgebraElement parity_homogeneous(int parity, std::uint32_t max_degree = 2)
    {
        parity &= 1;
        AlgebraElement a(sig);
        if (static_cast<std::uint32_t>(parity) > sig.n)
            return a; // parity 1 with no odd generators
        const std::uint64_t nterms = 1 + next(2);
        for (std::uint64_t t = 0; t < nterms; ++t) {
            const std::uint64_t slots = (sig.n - parity) / 2 + 1;
            const std::uint32_t d = static_cast<std::uint32_t>(parity + 2 * next(slots));
            a.add_term(odd_subset(d), polynomial(max_degree));
        }
        return a;
    }

    Derivation derivation(int parity, std::uint32_t max_degree = 2)
    {
        Derivation d(sig, parity);
        for (std::uint32_t k = 0; k < gen_count(sig); ++k) {
            const GenId u = gen_at(sig, k);
            if (next(2) == 0)
                continue;
            d.set_value(u, parity_homogeneous((parity + gen_parity(u)) & 1, max_degree));
        }
        return d;
    }

    GenId generator() { return gen_at(sig, next(gen_count(sig))); }

    // degree-1 form of homogeneous parity p: coefficients of dx_i carry
    // parity p, coefficients of dth_j carry parity p+1
    SuperForm one_form(int parity, std::uint32_t max_degree = 2)
    {
        parity &= 1;
        SuperForm w(sig);
        if (gen_count(sig) == 0)
            return w;
        const std::uint64_t nterms = 1 + next(3);
        for (std::uint64_t t = 0; t < nterms; ++t) {
            const GenId u = generator();
            const AlgebraElement c =
                parity_homogeneous((parity + gen_parity(u)) & 1, max_degree);
            w += wedge(SuperForm::from_algebra(c), SuperForm::d_generator(sig, u));
        }
        return w;
    }

    // exact 1-form: delta of a parity-homogeneous element (delta preserves p)
    SuperForm closed_one_form(int parity, std::uint32_t max_degree = 2)
    {
        return delta(parity_homogeneous(parity, max_degree));
    }

    // bihomogeneous form of given form degree and parity
    SuperForm form(std::uint32_t degree, int parity, std::uint32_t max_degree = 2)
    {
        parity &= 1;
        SuperForm w(sig);
        const std::uint64_t nterms = 1 + next(2);
        for (std::uint64_t t = 0; t < nterms; ++t) {
            FormMonomial mono{0, std::vector<std::uint32_t>(sig.n, 0)};
            std::uint32_t ndx = 0, ndth = 0;
            for (std::uint32_t f = 0; f < degree; ++f) {
                const bool can_dx = ndx < sig.m;
                const bool can_dth = sig.n > 0;
                if (!can_dx && !can_dth)
                    return SuperForm::zero(sig);
                const bool pick_dth = !can_dx || (can_dth && next(2) == 1);
                if (pick_dth) {
                    mono.dtheta[next(sig.n)] += 1;
                    ++ndth;
                } else {
                    // a fresh dx index
                    std::uint32_t i = static_cast<std::uint32_t>(next(sig.m));
                    while (mono.dx_mask & (OddMono{1} << i))
                        i = (i + 1) % sig.m;
                    mono.dx_mask |= OddMono{1} << i;
                    ++ndx;
                }
            }
            w.add_term(mono, parity_homogeneous((parity + ndth) & 1, max_degree));
        }
        return w;
    }

private:
    Signature sig;
    std::mt19937_64 rng;
};

} // namespace superpoisson
