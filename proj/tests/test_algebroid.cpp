#include "corpus.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace superpoisson;

namespace {

GradedPoissonStructure metric_r3()
{
    return corpus::metric_constant(3);
}

// [[f1 dh1, f2 dh2]] expanded into the three-term normal form
SuperForm three_term(const GradedPoissonStructure& P, const AlgebraElement& f1,
                     const AlgebraElement& h1, const AlgebraElement& f2,
                     const AlgebraElement& h2)
{
    const int pa = (f1.parity() + h1.parity()) & 1;
    const int pb = (f2.parity() + h2.parity()) & 1;
    SuperForm r = wedge(SuperForm::from_algebra(f1 * bracket(P, h1, f2)), delta(h2));
    const SuperForm t2 =
        wedge(SuperForm::from_algebra(f2 * bracket(P, h2, f1)), delta(h1));
    r += (pa & pb) ? t2 : -t2;
    const SuperForm t3 =
        wedge(SuperForm::from_algebra(f2 * f1), delta(bracket(P, h2, h1)));
    r += ((pa & pb) ^ (h2.parity() & f1.parity())) ? t3 : -t3;
    return r;
}

} // namespace

TEST_CASE("algebroid bracket on exact generators follows the table")
{
    const GradedPoissonStructure P = metric_r3();
    const PoissonAlgebroid E{P};
    const Signature& sig = P.sig;
    CHECK(algebroid_bracket(E, parse_form("dth1", sig), parse_form("dth2", sig)).is_zero());
    CHECK(algebroid_bracket(E, parse_form("th1*dth2", sig), parse_form("dth1", sig))
          == parse_form("-dth2", sig));
}

TEST_CASE("metric anchors: exact coordinate differentials act trivially")
{
    const GradedPoissonStructure P = metric_r3();
    const PoissonAlgebroid E{P};
    const Signature& sig = P.sig;
    CHECK(anchor(E, parse_form("dx1", sig)).is_zero());
    const Derivation r = anchor(E, parse_form("dth1", sig));
    CHECK(apply(r, parse_element("th1", sig)) == AlgebraElement::one(sig));
    CHECK(apply(r, parse_element("x1", sig)).is_zero());
}

TEST_CASE("superalgebroid axioms hold for every even-degree corpus structure")
{
    for (const auto& e : corpus::passing()) {
        if (e.structure.degree & 1)
            continue;
        INFO(e.name);
        const Report r = check_superalgebroid(PoissonAlgebroid{e.structure}, 0, 48);
        for (const auto& c : r.checks) {
            INFO(c.name << ": " << c.detail);
            CHECK(c.status != CheckStatus::Fail);
        }
    }
}

TEST_CASE("odd-degree structures are rejected by the superalgebroid checker")
{
    const PoissonAlgebroid E{corpus::bivector_r2(false)};
    CHECK_THROWS_AS(check_superalgebroid(E, 0, 8), std::invalid_argument);
    CHECK_THROWS_AS(to_algebroid_data(E), std::invalid_argument);
}

TEST_CASE("anchor skew pairing holds for every corpus structure, odd degrees included")
{
    for (const auto& e : corpus::passing()) {
        INFO(e.name);
        const Report r = check_anchor_skew(PoissonAlgebroid{e.structure}, 0, 48);
        for (const auto& c : r.checks) {
            INFO(c.name << ": " << c.detail);
            CHECK(c.status != CheckStatus::Fail);
        }
    }
}

TEST_CASE("derived data reproduces the literal bracket")
{
    for (const auto& e : corpus::passing()) {
        if (e.structure.degree & 1)
            continue;
        INFO(e.name);
        const PoissonAlgebroid E{e.structure};
        const AlgebroidData D = to_algebroid_data(E);
        const Signature& sig = e.structure.sig;
        Sampler smp(sig, 29);
        for (int t = 0; t < 24; ++t) {
            const SuperForm a = smp.one_form(static_cast<int>(smp.next(2)));
            const SuperForm b = smp.one_form(static_cast<int>(smp.next(2)));
            CHECK(algebroid_bracket(D, a, b) == algebroid_bracket(E, a, b));
        }
    }
}

TEST_CASE("induced bracket recovers the Poisson bracket")
{
    const GradedPoissonStructure P = corpus::metric_polynomial(2);
    const AlgebroidData D = to_algebroid_data(PoissonAlgebroid{P});
    Sampler smp(P.sig, 31);
    for (int t = 0; t < 32; ++t) {
        const AlgebraElement f = smp.element();
        const AlgebraElement g = smp.element();
        CHECK(induced_bracket(D, f, g) == bracket(P, f, g));
    }
}

TEST_CASE("poisson-type conditions pass for derived data and co-fail for the broken table")
{
    const AlgebroidData good = to_algebroid_data(PoissonAlgebroid{corpus::classical_so3()});
    const Report rg = check_poisson_type(good, 0, 48);
    for (const auto& c : rg.checks) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.status != CheckStatus::Fail);
    }

    const AlgebroidData bad = to_algebroid_data(PoissonAlgebroid{corpus::broken_table()});
    const Report rb = check_poisson_type(bad, 0, 48);
    const CheckResult* jac = rb.find("induced-jacobi");
    const CheckResult* mor = rb.find("anchor-morphism");
    const CheckResult* agr = rb.find("condition-agreement");
    REQUIRE(jac != nullptr);
    REQUIRE(mor != nullptr);
    REQUIRE(agr != nullptr);
    CHECK(jac->status == CheckStatus::Fail);
    CHECK(mor->status == CheckStatus::Fail);
    CHECK(agr->status == CheckStatus::Pass);
    CHECK(jac->detail.find("jacobiator(x1,x2,x3) = x1 + x2 + x3") != std::string::npos);
}

TEST_CASE("bracket reconstruction from the anchor")
{
    const AlgebroidData D =
        to_algebroid_data(PoissonAlgebroid{corpus::pseudoeuclidean_random3()});
    const Report r = reconstruct_bracket(D, 0, 48);
    for (const char* name : {"hypothesis-anchor-skew", "hypothesis-exact-generators",
                             "reconstruction-generators", "reconstruction-samples",
                             "closed-pair-exact", "closed-pair-dclosed"}) {
        const CheckResult* c = r.find(name);
        REQUIRE(c != nullptr);
        INFO(name << ": " << c->detail);
        CHECK(c->status == CheckStatus::Pass);
    }
}

TEST_CASE("a closed pair with nonvanishing bracket, and its exactness")
{
    // alpha = delta(th1*th2) and beta = delta(th1) are closed, yet the
    // bracket is -dth2; it still equals delta(beta(rho(alpha))).
    const GradedPoissonStructure P =
        corpus::pseudoeuclidean_diag({Rational(1), Rational(1), Rational(1)});
    const PoissonAlgebroid E{P};
    const Signature& sig = P.sig;
    const SuperForm alpha = delta(parse_element("th1*th2", sig));
    const SuperForm beta = delta(parse_element("th1", sig));
    CHECK(delta(alpha).is_zero());
    CHECK(delta(beta).is_zero());
    const SuperForm br = algebroid_bracket(E, alpha, beta);
    CHECK(br == parse_form("-dth2", sig));
    CHECK(br == delta(evaluate(beta, anchor(E, alpha))));
    CHECK(delta(br).is_zero());
}

TEST_CASE("three-term normal form of the bracket on decomposable one-forms")
{
    const GradedPoissonStructure P = metric_r3();
    const PoissonAlgebroid E{P};
    const Signature& sig = P.sig;
    // the calibration pair: [[th1 dth2, dth1]] = -dth2
    CHECK(three_term(P, parse_element("th1", sig), parse_element("th2", sig),
                     AlgebraElement::one(sig), parse_element("th1", sig))
          == parse_form("-dth2", sig));
    Sampler smp(sig, 37);
    for (int t = 0; t < 24; ++t) {
        const AlgebraElement f1 = smp.parity_homogeneous(static_cast<int>(smp.next(2)), 1);
        const AlgebraElement h1 = smp.parity_homogeneous(static_cast<int>(smp.next(2)), 1);
        const AlgebraElement f2 = smp.parity_homogeneous(static_cast<int>(smp.next(2)), 1);
        const AlgebraElement h2 = smp.parity_homogeneous(static_cast<int>(smp.next(2)), 1);
        if (f1.is_zero() || h1.is_zero() || f2.is_zero() || h2.is_zero())
            continue;
        const SuperForm lhs = algebroid_bracket(
            E, wedge(SuperForm::from_algebra(f1), delta(h1)),
            wedge(SuperForm::from_algebra(f2), delta(h2)));
        CHECK(lhs == three_term(P, f1, h1, f2, h2));
    }
}

TEST_CASE("algebroid data setters validate their input")
{
    const Signature sig(0, 2);
    AlgebroidData D(sig);
    // a nonzero anchor value must carry the generator's parity
    Derivation even_dv = Derivation::zero(sig, 0);
    even_dv.set_value(odd_gen(1), parse_element("th1", sig));
    CHECK_THROWS_AS(D.set_anchor(odd_gen(0), even_dv), std::invalid_argument);
    // a zero derivation is parity-agnostic and accepted
    D.set_anchor(odd_gen(0), Derivation::zero(sig, 0));
    // bracket values must be one-forms of the right parity
    CHECK_THROWS_AS(D.set_bracket(odd_gen(0), odd_gen(1),
                                  parse_form("dth1", sig)),
                    std::invalid_argument);
    CHECK_THROWS_AS(D.set_bracket(odd_gen(0), odd_gen(1),
                                  parse_form("th1*dth1*dth2", sig)),
                    std::invalid_argument);
    D.set_bracket(odd_gen(0), odd_gen(1), parse_form("th1*dth1", sig));
    // consistent re-set is fine, conflicting one is not
    D.set_bracket(odd_gen(1), odd_gen(0), parse_form("th1*dth1", sig));
    CHECK_THROWS_AS(D.set_bracket(odd_gen(1), odd_gen(0), parse_form("-th1*dth1", sig)),
                    std::invalid_argument);
}
