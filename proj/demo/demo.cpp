/*
 * A short tour: build the degree -2 structure of the round metric on R^3,
 * evaluate a few brackets at every level, then run both suites.
 */
#include "superpoisson/superpoisson.hpp"

#include <iostream>
#include <vector>

using namespace superpoisson;

int main()
{
    const Polynomial one = Polynomial::constant(3, 1);
    const Polynomial nil = Polynomial::zero();
    const GradedPoissonStructure P =
        from_metric_cosharp({{one, nil, nil}, {nil, one, nil}, {nil, nil, one}});
    const Signature& sig = P.sig;

    std::cout << "metric g = diag(1,1,1) on R^3, bracket degree " << P.degree << "\n\n";

    const AlgebraElement x1 = parse_element("x1", sig);
    const AlgebraElement th1 = parse_element("th1", sig);
    const AlgebraElement th12 = parse_element("th1*th2", sig);
    std::cout << "{th1, th1*th2}  = " << print_element(bracket(P, th1, th12)) << "\n";
    std::cout << "{x1, th1}       = " << print_element(bracket(P, x1, th1)) << "\n";

    const PoissonAlgebroid E{P};
    const SuperForm alpha = parse_form("th1*dth2", sig);
    const SuperForm beta = parse_form("dth1", sig);
    std::cout << "[[th1*dth2, dth1]] = " << print_form(algebroid_bracket(E, alpha, beta))
              << "\n";

    const SuperForm gamma = parse_form("x1*dth1*dth2", sig);
    std::cout << "[x1*dth1*dth2, dth1] = " << print_form(gerst_bracket(P, gamma, beta))
              << "\n\n";

    const SuiteOptions opt{.seed = 0, .samples = 32, .max_degree = 3};
    std::cout << "check suite\n" << render_report_text(run_check_suite(P, opt), opt);
    std::cout << "\ntheorem suite\n";
    const GerstenhaberBracketSource src = P;
    std::cout << render_report_text(run_theorem_suite(src, opt), opt);
    return 0;
}
