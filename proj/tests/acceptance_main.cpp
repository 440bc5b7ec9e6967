/*
 * acceptance_main.cpp -- one line per acceptance criterion, exact arithmetic
 * throughout (pass tolerance: identically zero).  Exits 0 only if every
 * criterion holds.  A4 is split: A4a covers the reconstruction identity,
 * A4b the closed-pair vanishing clause as stated; A4b is expected to fail
 * and its line carries a concrete counterexample plus the two invariants
 * that do hold on closed pairs (the bracket is delta-exact and
 * delta-closed).
 */
#include "corpus.hpp"

#include <array>
#include <cstdio>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace superpoisson;

namespace {

int g_failures = 0;

void line(const std::string& id, bool ok, const std::string& detail)
{
    std::cout << (ok ? "PASS " : "FAIL ") << id << ": " << detail << "\n";
    if (!ok)
        ++g_failures;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& cmdline)
{
    FILE* p = popen(cmdline.c_str(), "r");
    if (!p)
        return {-1, {}};
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0)
        out.append(buf.data(), got);
    const int status = pclose(p);
    return {status != -1 && WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool suite_clean(const Report& r, std::string& why)
{
    for (const auto& c : r.checks)
        if (c.status == CheckStatus::Fail) {
            why = c.name + ": " + c.detail;
            return false;
        }
    return true;
}

// [[f1 dh1, f2 dh2]] in three-term normal form
SuperForm three_term(const GradedPoissonStructure& P, const AlgebraElement& f1,
                     const AlgebraElement& h1, const AlgebraElement& f2,
                     const AlgebraElement& h2)
{
    const int pa = (f1.parity() + h1.parity()) & 1;
    const int pb = (f2.parity() + h2.parity()) & 1;
    SuperForm r = wedge(SuperForm::from_algebra(f1 * bracket(P, h1, f2)), delta(h2));
    const SuperForm t2 = wedge(SuperForm::from_algebra(f2 * bracket(P, h2, f1)), delta(h1));
    r += (pa & pb) ? t2 : -t2;
    const SuperForm t3 = wedge(SuperForm::from_algebra(f2 * f1), delta(bracket(P, h2, h1)));
    r += ((pa & pb) ^ (h2.parity() & f1.parity())) ? t3 : -t3;
    return r;
}

void criterion_a1()
{
    std::string why;
    bool ok = true;
    for (const auto& e : corpus::passing()) {
        const Report r = check_axioms(e.structure, 0, 64);
        std::string w;
        if (!suite_clean(r, w)) {
            ok = false;
            why = e.name + " " + w;
            break;
        }
    }
    const Report rb = check_axioms(corpus::broken_table(), 0, 64);
    const CheckResult* j = rb.find("jacobi-generators");
    const bool witness = j && j->status == CheckStatus::Fail
                         && j->detail == "jacobiator(x1,x2,x3) = x1 + x2 + x3";
    if (ok && !witness) {
        ok = false;
        why = "broken table witness missing, got: " + (j ? j->detail : std::string("?"));
    }
    line("A1", ok,
         ok ? "graded Poisson axioms pass on all 11 corpus structures; broken table fails "
              "Jacobi with jacobiator(x1,x2,x3) = x1 + x2 + x3"
            : why);
}

void criterion_a2()
{
    std::string why;
    bool ok = true;
    int count = 0;
    for (const auto& e : corpus::passing()) {
        if (e.structure.degree & 1)
            continue;
        ++count;
        const Report r = check_superalgebroid(PoissonAlgebroid{e.structure}, 0, 64);
        std::string w;
        if (!suite_clean(r, w)) {
            ok = false;
            why = e.name + " " + w;
            break;
        }
    }
    line("A2", ok,
         ok ? "superalgebroid skew, Jacobi (generator triples + 64 samples) and Leibniz "
              "hold for all "
                  + std::to_string(count) + " even-degree structures"
            : why);
}

void criterion_a3()
{
    std::string why;
    bool ok = true;
    auto entries = corpus::passing();
    entries.push_back({"broken table", corpus::broken_table()});
    for (const auto& e : entries) {
        const Report ax = check_axioms(e.structure, 0, 64);
        const CheckResult* jg = ax.find("jacobi-generators");
        const CheckResult* js = ax.find("jacobi-samples");
        const bool cond1 = jg && jg->status == CheckStatus::Pass && js
                           && js->status == CheckStatus::Pass;
        std::string w3;
        const bool cond3 = detail::hamiltonian_morphism_ok(e.structure, 0, 64, w3);
        if (cond1 != cond3) {
            ok = false;
            why = e.name + ": jacobiator condition "
                  + (cond1 ? "passes" : "fails") + " but anchor morphism "
                  + (cond3 ? "passes" : "fails");
            break;
        }
    }
    line("A3", ok,
         ok ? "jacobiator and anchor-morphism conditions agree (co-pass or co-fail) on "
              "all structures including the broken one"
            : why);
}

void criterion_a4()
{
    std::string why_a, why_b;
    bool ok_a = true, ok_b = true;
    bool invariants = true;
    std::string inv_why;
    for (const auto& e : corpus::passing()) {
        if (e.structure.degree & 1)
            continue;
        const AlgebroidData D = to_algebroid_data(PoissonAlgebroid{e.structure});
        const Report r = reconstruct_bracket(D, 0, 64, 32);
        for (const char* name :
             {"hypothesis-anchor-skew", "hypothesis-exact-generators",
              "reconstruction-generators", "reconstruction-samples"}) {
            const CheckResult* c = r.find(name);
            if (!c || c->status != CheckStatus::Pass) {
                if (ok_a)
                    why_a = e.name + " " + name + ": " + (c ? c->detail : "missing");
                ok_a = false;
            }
        }
        const CheckResult* lit = r.find("closed-pair-literal");
        if (!lit || lit->status != CheckStatus::Pass) {
            if (ok_b)
                why_b = e.name + ": " + (lit ? lit->detail : "missing");
            ok_b = false;
        }
        for (const char* name : {"closed-pair-exact", "closed-pair-dclosed"}) {
            const CheckResult* c = r.find(name);
            if (!c || c->status != CheckStatus::Pass) {
                if (invariants)
                    inv_why = e.name + " " + name + ": " + (c ? c->detail : "missing");
                invariants = false;
            }
        }
    }
    line("A4a", ok_a,
         ok_a ? "anchor reconstruction matches the stored bracket on all generator pairs "
                "and 64 sampled one-form pairs per even-degree structure"
              : why_a);
    std::string b_detail;
    if (ok_b) {
        b_detail = "brackets of sampled closed pairs all vanish";
    } else {
        b_detail = "closed pairs need not have vanishing bracket; " + why_b;
        b_detail += invariants
                        ? " (the bracket of a closed pair is always "
                          "delta(beta(rho(alpha))) and delta-closed; both verified on "
                          "32 sampled closed pairs per structure)"
                        : " (and the exactness invariant also failed: " + inv_why + ")";
    }
    line("A4b", ok_b, b_detail);
}

void criterion_a5()
{
    std::string why;
    bool ok = true;
    for (const auto& e : corpus::passing()) {
        if (e.structure.degree & 1)
            continue;
        std::string w;
        if (!suite_clean(check_gerstenhaber(e.structure, 0, 64, 3), w)) {
            ok = false;
            why = e.name + " " + w;
            break;
        }
        if (!suite_clean(check_differential(e.structure, 0, 64), w)) {
            ok = false;
            why = e.name + " " + w;
            break;
        }
        const Signature& sig = e.structure.sig;
        bool roundtrip = true;
        for (std::uint32_t i = 0; i < gen_count(sig) && roundtrip; ++i)
            for (std::uint32_t j = 0; j < gen_count(sig) && roundtrip; ++j) {
                const AlgebraElement f = AlgebraElement::generator(sig, gen_at(sig, i));
                const AlgebraElement g = AlgebraElement::generator(sig, gen_at(sig, j));
                roundtrip = poisson_from_gerstenhaber(e.structure, f, g)
                            == bracket(e.structure, f, g);
            }
        if (!roundtrip) {
            ok = false;
            why = e.name + ": poisson_from_gerstenhaber differs from the table";
            break;
        }
    }
    if (ok) {
        const Report rb = check_differential(corpus::broken_table(), 0, 64);
        const CheckResult* ja = rb.find("differential-jacobi");
        if (!ja || ja->status != CheckStatus::Fail) {
            ok = false;
            why = "broken source did not fail the differential reduction";
        }
    }
    line("A5", ok,
         ok ? "Gerstenhaber axioms (form degree <= 3, 64 samples) and differential "
              "compatibility pass for every even-degree structure; the broken source "
              "fails the differential reduction; the bracket roundtrips to the table"
            : why);
}

void criterion_a6()
{
    const GradedPoissonStructure P = corpus::metric_constant(3);
    const PoissonAlgebroid E{P};
    const Signature& sig = P.sig;
    bool ok = algebroid_bracket(E, parse_form("th1*dth2", sig), parse_form("dth1", sig))
              == parse_form("-dth2", sig);
    std::string why = ok ? "" : "[[th1*dth2, dth1]] != -dth2";
    Sampler smp(sig, 0);
    int done = 0;
    while (ok && done < 20) {
        const AlgebraElement f1 = smp.parity_homogeneous(static_cast<int>(smp.next(2)), 1);
        const AlgebraElement h1 = smp.parity_homogeneous(static_cast<int>(smp.next(2)), 1);
        const AlgebraElement f2 = smp.parity_homogeneous(static_cast<int>(smp.next(2)), 1);
        const AlgebraElement h2 = smp.parity_homogeneous(static_cast<int>(smp.next(2)), 1);
        if (f1.is_zero() || h1.is_zero() || f2.is_zero() || h2.is_zero())
            continue;
        ++done;
        const SuperForm lhs =
            algebroid_bracket(E, wedge(SuperForm::from_algebra(f1), delta(h1)),
                              wedge(SuperForm::from_algebra(f2), delta(h2)));
        if (!(lhs == three_term(P, f1, h1, f2, h2))) {
            ok = false;
            why = "three-term mismatch at f1 = " + print_element(f1) + ", h1 = "
                  + print_element(h1) + ", f2 = " + print_element(f2) + ", h2 = "
                  + print_element(h2);
        }
    }
    line("A6", ok,
         ok ? "literal bracket equals the three-term normal form on 20 seeded homogeneous "
              "quadruples under g = diag(1,1,1); [[th1*dth2, dth1]] = -dth2"
            : why);
}

void criterion_a7()
{
    const Signature sig(3, 3, true);
    Sampler smp(sig, 99);
    const GradedPoissonStructure P = corpus::metric_polynomial(3);
    bool ok = true;
    std::string why;
    const auto fail = [&](const std::string& w) {
        if (ok)
            why = w;
        ok = false;
    };
    for (int t = 0; t < 128 && ok; ++t) {
        const AlgebraElement a = smp.element(3);
        if (!delta(delta(a)).is_zero())
            fail("delta^2 != 0 at " + print_element(a));
        if (!de_rham_d(de_rham_d(a)).is_zero())
            fail("d^2 != 0 at " + print_element(a));
        const AlgebraElement th = AlgebraElement::theta(sig, smp.next(3));
        if (!((th * th).is_zero()))
            fail("theta^2 != 0");
        const std::uint32_t da = static_cast<std::uint32_t>(smp.next(3));
        const std::uint32_t db = static_cast<std::uint32_t>(smp.next(3));
        const int pa = static_cast<int>(smp.next(2)), pb = static_cast<int>(smp.next(2));
        const SuperForm wa = smp.form(da, pa, 1);
        const SuperForm wb = smp.form(db, pb, 1);
        const SuperForm wc = smp.form(static_cast<std::uint32_t>(smp.next(2)),
                                      static_cast<int>(smp.next(2)), 1);
        const int e = static_cast<int>((da * db + pa * pb) & 1);
        const SuperForm ba = wedge(wb, wa);
        if (!(wedge(wa, wb) == (e ? -ba : ba)))
            fail("wedge commutativity at " + print_form(wa) + " | " + print_form(wb));
        if (!(wedge(wedge(wa, wb), wc) == wedge(wa, wedge(wb, wc))))
            fail("wedge associativity");
        // bracket well-definedness: the same element through two factorizations
        const AlgebraElement u = smp.parity_homogeneous(static_cast<int>(smp.next(2)), 1);
        const AlgebraElement v = smp.parity_homogeneous(static_cast<int>(smp.next(2)), 1);
        const AlgebraElement w = smp.parity_homogeneous(static_cast<int>(smp.next(2)), 1);
        const AlgebraElement g = smp.parity_homogeneous(static_cast<int>(smp.next(2)));
        if (!(bracket(P, (u * v) * w, g) == bracket(P, u * (v * w), g)))
            fail("bracket well-definedness, first slot");
        if (!(bracket(P, g, (u * v) * w) == bracket(P, g, u * (v * w))))
            fail("bracket well-definedness, second slot");
    }
    line("A7", ok,
         ok ? "delta^2 = 0, d^2 = 0, theta^2 = 0, wedge bigraded commutativity and "
              "associativity, bracket well-definedness under refactoring: 128 seeded "
              "samples each, exact"
            : why);
}

void criterion_a8()
{
    const std::string cli = SP_CLI_PATH;
    const std::string fix = SP_FIXTURE_DIR;
    bool ok = true;
    std::string why;
    const auto fail = [&](const std::string& w) {
        if (ok)
            why = w;
        ok = false;
    };
    const char* fixtures[] = {
        "pseudoeuclidean_diag_1_1.json", "pseudoeuclidean_diag_1_m1.json",
        "pseudoeuclidean_random_3x3.json", "metric_r2_identity.json",
        "metric_r3_identity.json", "metric_r2_polynomial.json",
        "metric_r3_polynomial.json", "bivector_r2_constant.json",
        "bivector_r2_linear.json", "classical_so3.json", "broken_table.json",
        "trivial.json", "algebroid_metric_r2.json",
    };
    for (const char* f : fixtures) {
        if (!ok)
            break;
        const std::string doc = fix + "/" + f;
        for (const char* cmd : {"check", "verify-theorems"}) {
            const std::string c = cli + " " + cmd + " " + doc
                                  + " --format structured --seed 0 --samples 8";
            const RunResult r1 = run(c);
            const RunResult r2 = run(c);
            if (r1.out != r2.out || r1.exit_code != r2.exit_code) {
                fail(std::string(cmd) + " on " + f + " is not byte-identical across runs");
                break;
            }
        }
        const std::string b = cli + " bracket " + doc
                              + " --kind gerstenhaber 'x1' 'x1' --format structured";
        // x1 is out of range for pure-odd signatures; skip those
        if (std::string(f).rfind("pseudoeuclidean", 0) != 0) {
            const RunResult b1 = run(b + " 2>/dev/null");
            const RunResult b2 = run(b + " 2>/dev/null");
            if (b1.out != b2.out || b1.exit_code != b2.exit_code)
                fail(std::string("bracket on ") + f + " is not byte-identical");
        }
    }
    if (ok) {
        const struct {
            std::string cmd;
            int expect;
        } codes[] = {
            {cli + " check " + fix + "/metric_r2_identity.json --samples 8", 0},
            {cli + " check " + fix + "/broken_table.json --samples 8", 1},
            {cli + " check " + fix + "/malformed.json 2>/dev/null", 2},
            {cli + " bracket " + fix + "/metric_r3_identity.json --kind algebroid"
                 + " 'th1' 'dth1' 2>/dev/null",
             3},
            {cli + " verify-theorems " + fix + "/broken_table.json --samples 8", 0},
            {cli + " bracket " + fix + "/metric_r3_identity.json --kind poisson"
                 + " 'th1' 'th1*th2'",
             0},
        };
        for (const auto& c : codes) {
            const RunResult r = run(c.cmd + " > /dev/null");
            if (r.exit_code != c.expect) {
                fail("exit code " + std::to_string(r.exit_code) + " (expected "
                     + std::to_string(c.expect) + ") for: " + c.cmd);
                break;
            }
        }
    }
    line("A8", ok,
         ok ? "structured reports are byte-identical across repeated runs on all 13 "
              "fixtures; exit codes: pass 0, check-fail 1, schema error 2, degree "
              "violation 3"
            : why);
}

} // namespace

int main(int argc, char** argv)
{
    // optional arguments select criteria by id ("A4" covers A4a and A4b)
    const auto wanted = [&](const char* id) {
        if (argc < 2)
            return true;
        for (int i = 1; i < argc; ++i)
            if (std::string(argv[i]) == id)
                return true;
        return false;
    };
    int total = 0;
    const auto maybe = [&](const char* id, void (*fn)(), int lines) {
        if (!wanted(id))
            return;
        total += lines;
        fn();
    };
    maybe("A1", criterion_a1, 1);
    maybe("A2", criterion_a2, 1);
    maybe("A3", criterion_a3, 1);
    maybe("A4", criterion_a4, 2);
    maybe("A5", criterion_a5, 1);
    maybe("A6", criterion_a6, 1);
    maybe("A7", criterion_a7, 1);
    maybe("A8", criterion_a8, 1);
    std::cout << "acceptance: " << (total - g_failures) << "/" << total
              << " criteria pass\n";
    return g_failures == 0 ? 0 : 1;
}
