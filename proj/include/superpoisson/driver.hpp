/*
 * driver.hpp -- suite orchestration shared by the CLI and the tests.
 *
 * run_check_suite runs every axiom checker that applies to the loaded
 * structure.  run_theorem_suite emits one line per theorem direction;
 * equivalence lines pass when the two sides agree, so a deliberately
 * broken structure still passes them by failing both sides at once.
 * Suites needing an even bracket degree are reported as skipped for odd
 * degree.  Reports render to plain text (header shows measured wall time)
 * or to a stable JSON shape; the JSON shape excludes timing so it is
 * byte-deterministic for a fixed (structure, seed, samples, max_degree).
 */
#pragma once

#include "document.hpp"

#include <chrono>
#include <cstdint>
#include <string>

namespace superpoisson {

struct SuiteOptions {
    std::uint64_t seed = 0;
    std::uint32_t samples = 64;
    std::uint32_t max_degree = 3; // top form degree for gerstenhaber sampling
};

namespace detail {

inline long long ms_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

inline bool line_passed(const Report& r, const char* name)
{
    const CheckResult* c = r.find(name);
    return c != nullptr && c->status == CheckStatus::Pass;
}

inline std::string agree_detail(const char* a, bool aok, const char* b, bool bok)
{
    return std::string(a) + (aok ? " passes" : " fails") + ", " + b
           + (bok ? " passes" : " fails");
}

inline void add_line(Report& rep, const char* name, bool ok, const std::string& detail)
{
    if (ok)
        rep.pass(name, detail);
    else
        rep.fail(name, detail);
}

// [rho(df), rho(dg)] = rho(d{f,g}) with hamiltonian anchors, any degree
inline bool hamiltonian_morphism_ok(const GradedPoissonStructure& P, std::uint64_t seed,
                                    std::uint32_t samples, std::string& witness)
{
    const Signature& sig = P.sig;
    for (std::uint32_t i = 0; i < gen_count(sig); ++i)
        for (std::uint32_t j = 0; j < gen_count(sig); ++j) {
            const GenId u = gen_at(sig, i), v = gen_at(sig, j);
            const AlgebraElement fu = AlgebraElement::generator(sig, u);
            const AlgebraElement fv = AlgebraElement::generator(sig, v);
            const Derivation lhs = commutator(hamiltonian(P, fu), hamiltonian(P, fv));
            const Derivation rhs = hamiltonian(P, bracket(P, fu, fv));
            if (!(lhs == rhs)) {
                witness = "fails at (" + gen_name(u) + ", " + gen_name(v) + "): ["
                          + describe_derivation(hamiltonian(P, fu)) + "; "
                          + describe_derivation(hamiltonian(P, fv)) + "]";
                return false;
            }
        }
    Sampler smp(sig, seed + 3);
    for (std::uint32_t t = 0; t < samples; ++t) {
        const AlgebraElement f = smp.parity_homogeneous(static_cast<int>(smp.next(2)));
        const AlgebraElement g = smp.parity_homogeneous(static_cast<int>(smp.next(2)));
        const Derivation lhs = commutator(hamiltonian(P, f), hamiltonian(P, g));
        const Derivation rhs = hamiltonian(P, bracket(P, f, g));
        if (!(lhs == rhs)) {
            witness = "fails at f = " + print_element(f) + ", g = " + print_element(g);
            return false;
        }
    }
    return true;
}

template <class Source, class RefBracket>
bool roundtrip_ok(const Source& S, const Signature& sig, RefBracket&& ref,
                  std::uint64_t seed, std::uint32_t samples, std::string& witness)
{
    for (std::uint32_t i = 0; i < gen_count(sig); ++i)
        for (std::uint32_t j = 0; j < gen_count(sig); ++j) {
            const AlgebraElement f = AlgebraElement::generator(sig, gen_at(sig, i));
            const AlgebraElement g = AlgebraElement::generator(sig, gen_at(sig, j));
            if (!(poisson_from_gerstenhaber(S, f, g) == ref(f, g))) {
                witness = "fails at (" + gen_name(gen_at(sig, i)) + ", "
                          + gen_name(gen_at(sig, j)) + ")";
                return false;
            }
        }
    Sampler smp(sig, seed + 4);
    for (std::uint32_t t = 0; t < samples; ++t) {
        const AlgebraElement f = smp.element();
        const AlgebraElement g = smp.element();
        if (!(poisson_from_gerstenhaber(S, f, g) == ref(f, g))) {
            witness = "fails at f = " + print_element(f) + ", g = " + print_element(g);
            return false;
        }
    }
    return true;
}

template <class Source, class Algebroid>
bool restriction_ok(const Source& S, const Algebroid& A, const Signature& sig,
                    std::uint64_t seed, std::uint32_t samples, std::string& witness)
{
    Sampler smp(sig, seed + 5);
    for (std::uint32_t t = 0; t < samples; ++t) {
        const SuperForm a = smp.one_form(static_cast<int>(smp.next(2)));
        const SuperForm b = smp.one_form(static_cast<int>(smp.next(2)));
        if (!(gerst_bracket(S, a, b) == algebroid_bracket(A, a, b))) {
            witness = "fails at alpha = " + print_form(a) + ", beta = " + print_form(b);
            return false;
        }
    }
    return true;
}

inline void append_reconstruction_lines(Report& rep, const Report& rec)
{
    const CheckResult* gen = rec.find("reconstruction-generators");
    const CheckResult* smp = rec.find("reconstruction-samples");
    if (gen->status == CheckStatus::Skip) {
        rep.skip("bracket-reconstruction", gen->detail);
        rep.skip("closed-pair-exactness", gen->detail);
        return;
    }
    const bool hyp = line_passed(rec, "hypothesis-anchor-skew")
                     && line_passed(rec, "hypothesis-exact-generators");
    const bool recon = gen->status == CheckStatus::Pass && smp->status == CheckStatus::Pass;
    std::string detail = "anchor determines the bracket on generator pairs and samples";
    if (!recon)
        detail = gen->status != CheckStatus::Pass ? gen->detail : smp->detail;
    add_line(rep, "bracket-reconstruction", hyp && recon, detail);
    const CheckResult* exact = rec.find("closed-pair-exact");
    const CheckResult* dcl = rec.find("closed-pair-dclosed");
    const bool closed = exact->status == CheckStatus::Pass && dcl->status == CheckStatus::Pass;
    std::string cdetail = "closed pairs: bracket is exact, [[alpha,beta]] = "
                          "delta(beta(rho(alpha)))";
    if (!closed)
        cdetail = exact->status != CheckStatus::Pass ? exact->detail : dcl->detail;
    add_line(rep, "closed-pair-exactness", closed, cdetail);
}

} // namespace detail

inline Report run_check_suite(const GradedPoissonStructure& P, const SuiteOptions& o)
{
    const auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.append("poisson", check_axioms(P, o.seed, o.samples));
    const PoissonAlgebroid E{P};
    rep.append("algebroid", check_anchor_skew(E, o.seed, o.samples));
    if (!(P.degree & 1)) {
        rep.append("algebroid", check_superalgebroid(E, o.seed, o.samples));
        const AlgebroidData D = to_algebroid_data(E);
        rep.append("data", check_poisson_type(D, o.seed, o.samples));
        rep.append("gerstenhaber", check_gerstenhaber(P, o.seed, o.samples, o.max_degree));
        rep.append("gerstenhaber", check_differential(P, o.seed, o.samples));
    } else {
        rep.skip("algebroid.axioms", "odd degree");
        rep.skip("data.poisson-type", "odd degree");
        rep.skip("gerstenhaber.axioms", "odd degree");
        rep.skip("gerstenhaber.differential", "odd degree");
    }
    rep.wall_ms = detail::ms_since(t0);
    return rep;
}

inline Report run_check_suite(const AlgebroidData& D, const SuiteOptions& o)
{
    const auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.append("algebroid", check_superalgebroid(D, o.seed, o.samples));
    rep.append("algebroid", check_anchor_skew(D, o.seed, o.samples));
    rep.append("data", check_poisson_type(D, o.seed, o.samples));
    rep.append("gerstenhaber", check_gerstenhaber(D, o.seed, o.samples, o.max_degree));
    rep.append("gerstenhaber", check_differential(D, o.seed, o.samples));
    rep.wall_ms = detail::ms_since(t0);
    return rep;
}

inline Report run_check_suite(const GerstenhaberBracketSource& src, const SuiteOptions& o)
{
    return std::visit([&](const auto& s) { return run_check_suite(s, o); }, src);
}

inline Report run_theorem_suite(const GradedPoissonStructure& P, const SuiteOptions& o)
{
    const auto t0 = std::chrono::steady_clock::now();
    Report rep;
    const Signature& sig = P.sig;
    const Report ax = check_axioms(P, o.seed, o.samples);
    const bool poisson_ok = ax.all_passed();
    const bool cond1 = detail::line_passed(ax, "jacobi-generators")
                       && detail::line_passed(ax, "jacobi-samples");
    std::string w3;
    const bool cond3 = detail::hamiltonian_morphism_ok(P, o.seed, o.samples, w3);
    const PoissonAlgebroid E{P};
    const bool even = !(P.degree & 1);

    if (even) {
        const bool s_ok = check_superalgebroid(E, o.seed, o.samples).all_passed();
        detail::add_line(rep, "poisson-to-algebroid", poisson_ok == s_ok,
                         detail::agree_detail("poisson axioms", poisson_ok,
                                              "superalgebroid axioms", s_ok));
    } else {
        rep.skip("poisson-to-algebroid", "odd degree");
    }

    detail::add_line(rep, "anchor-morphism", cond3 == poisson_ok,
                     detail::agree_detail("anchor morphism", cond3, "poisson axioms",
                                          poisson_ok)
                         + (cond3 ? "" : "; " + w3));
    detail::add_line(rep, "induced-jacobi-equivalence", cond1 == cond3,
                     detail::agree_detail("jacobiator condition", cond1, "anchor morphism",
                                          cond3));

    if (even) {
        const AlgebroidData D = to_algebroid_data(E);
        detail::append_reconstruction_lines(rep, reconstruct_bracket(D, o.seed, o.samples));
        const bool g_ok =
            check_gerstenhaber(P, o.seed, o.samples, o.max_degree).all_passed();
        detail::add_line(rep, "gerstenhaber-axioms", g_ok == poisson_ok,
                         detail::agree_detail("gerstenhaber axioms", g_ok, "poisson axioms",
                                              poisson_ok));
        const bool d_ok = check_differential(P, o.seed, o.samples).all_passed();
        detail::add_line(rep, "differential-identity", d_ok == poisson_ok,
                         detail::agree_detail("differential compatibility", d_ok,
                                              "poisson axioms", poisson_ok));
        std::string wr;
        const bool r_ok = detail::roundtrip_ok(
            P, sig,
            [&](const AlgebraElement& f, const AlgebraElement& g) {
                return bracket(P, f, g);
            },
            o.seed, o.samples, wr);
        detail::add_line(rep, "poisson-roundtrip", r_ok,
                         r_ok ? "[f, delta(g)] recovers the bracket" : wr);
        std::string ws;
        const bool a_ok = detail::restriction_ok(P, E, sig, o.seed, o.samples, ws);
        detail::add_line(rep, "restriction-agreement", a_ok,
                         a_ok ? "gerstenhaber bracket restricts to the algebroid bracket"
                              : ws);
    } else {
        rep.skip("bracket-reconstruction", "odd degree");
        rep.skip("closed-pair-exactness", "odd degree");
        rep.skip("gerstenhaber-axioms", "odd degree");
        rep.skip("differential-identity", "odd degree");
        rep.skip("poisson-roundtrip", "odd degree");
        rep.skip("restriction-agreement", "odd degree");
    }
    rep.wall_ms = detail::ms_since(t0);
    return rep;
}

inline Report run_theorem_suite(const AlgebroidData& D, const SuiteOptions& o)
{
    const auto t0 = std::chrono::steady_clock::now();
    Report rep;
    const Signature& sig = D.sig;
    const Report pt = check_poisson_type(D, o.seed, o.samples);
    const bool cond1 = detail::line_passed(pt, "induced-jacobi");
    const bool cond3 = detail::line_passed(pt, "anchor-morphism");

    const bool s_ok = check_superalgebroid(D, o.seed, o.samples).all_passed();
    detail::add_line(rep, "poisson-to-algebroid", cond1 == s_ok,
                     detail::agree_detail("induced bracket jacobi", cond1,
                                          "superalgebroid axioms", s_ok));
    detail::add_line(rep, "anchor-morphism", cond3 == cond1,
                     detail::agree_detail("anchor morphism", cond3, "induced bracket jacobi",
                                          cond1));
    detail::add_line(rep, "induced-jacobi-equivalence", cond1 == cond3,
                     detail::agree_detail("jacobiator condition", cond1, "anchor morphism",
                                          cond3));
    detail::append_reconstruction_lines(rep, reconstruct_bracket(D, o.seed, o.samples));
    const bool g_ok = check_gerstenhaber(D, o.seed, o.samples, o.max_degree).all_passed();
    detail::add_line(rep, "gerstenhaber-axioms", g_ok == cond1,
                     detail::agree_detail("gerstenhaber axioms", g_ok,
                                          "induced bracket jacobi", cond1));
    const bool d_ok = check_differential(D, o.seed, o.samples).all_passed();
    detail::add_line(rep, "differential-identity", d_ok == cond1,
                     detail::agree_detail("differential compatibility", d_ok,
                                          "induced bracket jacobi", cond1));
    std::string wr;
    const bool r_ok = detail::roundtrip_ok(
        D, sig,
        [&](const AlgebraElement& f, const AlgebraElement& g) {
            return induced_bracket(D, f, g);
        },
        o.seed, o.samples, wr);
    detail::add_line(rep, "poisson-roundtrip", r_ok,
                     r_ok ? "[f, delta(g)] recovers the induced bracket" : wr);
    std::string ws;
    const bool a_ok = detail::restriction_ok(D, D, sig, o.seed, o.samples, ws);
    detail::add_line(rep, "restriction-agreement", a_ok,
                     a_ok ? "gerstenhaber bracket restricts to the algebroid bracket" : ws);
    rep.wall_ms = detail::ms_since(t0);
    return rep;
}

inline Report run_theorem_suite(const GerstenhaberBracketSource& src, const SuiteOptions& o)
{
    return std::visit([&](const auto& s) { return run_theorem_suite(s, o); }, src);
}

inline std::string render_report_text(const Report& rep, const SuiteOptions& o)
{
    std::string out = "seed " + std::to_string(o.seed) + "  samples "
                      + std::to_string(o.samples) + "  max-degree "
                      + std::to_string(o.max_degree);
    if (rep.wall_ms >= 0)
        out += "  wall " + std::to_string(rep.wall_ms) + "ms";
    out += "\n";
    std::size_t passed = 0, failed = 0, skipped = 0;
    for (const auto& c : rep.checks) {
        switch (c.status) {
        case CheckStatus::Pass:
            ++passed;
            out += "PASS " + c.name + "\n";
            break;
        case CheckStatus::Fail:
            ++failed;
            out += "FAIL " + c.name + (c.detail.empty() ? "" : ": " + c.detail) + "\n";
            break;
        case CheckStatus::Skip:
            ++skipped;
            out += "SKIP " + c.name + (c.detail.empty() ? "" : ": " + c.detail) + "\n";
            break;
        }
    }
    out += "summary: " + std::to_string(passed) + " passed, " + std::to_string(failed)
           + " failed, " + std::to_string(skipped) + " skipped\n";
    return out;
}

inline std::string render_report_structured(const Report& rep, const SuiteOptions& o)
{
    nlohmann::json j;
    j["seed"] = o.seed;
    j["samples"] = o.samples;
    j["max_degree"] = o.max_degree;
    j["all_passed"] = rep.all_passed();
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : rep.checks) {
        nlohmann::json e;
        e["name"] = c.name;
        e["status"] = c.status == CheckStatus::Pass   ? "pass"
                      : c.status == CheckStatus::Fail ? "fail"
                                                      : "skip";
        e["detail"] = c.detail;
        checks.push_back(e);
    }
    j["checks"] = checks;
    return j.dump(2) + "\n";
}

} // namespace superpoisson
