/*
 * superpoisson -- load a structure document, evaluate brackets, run the
 * verification suites.
 *
 * Exit codes: 0 all requested checks pass (or the value printed fine),
 * 1 at least one check failed, 2 document or expression error,
 * 3 degree constraint violated by an operand or flag.
 */
#include "superpoisson/superpoisson.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace superpoisson;

std::string read_text(const std::string& path)
{
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in)
        throw DocumentError("cannot open \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Signature source_signature(const GerstenhaberBracketSource& src)
{
    return std::visit([](const auto& s) { return detail::source_sig(s); }, src);
}

void print_result(const std::string& value, const std::string& format)
{
    if (format == "structured") {
        nlohmann::json j;
        j["result"] = value;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << value << "\n";
    }
}

int report_command(const std::string& doc_path, const SuiteOptions& opt,
                   const std::string& format, bool theorems)
{
    const GerstenhaberBracketSource src = load_document(read_text(doc_path));
    const Report rep = theorems ? run_theorem_suite(src, opt) : run_check_suite(src, opt);
    std::cout << (format == "structured" ? render_report_structured(rep, opt)
                                         : render_report_text(rep, opt));
    return rep.all_passed() ? 0 : 1;
}

int bracket_command(const std::string& doc_path, const std::string& kind,
                    const std::string& ea, const std::string& eb,
                    const std::string& format)
{
    const GerstenhaberBracketSource src = load_document(read_text(doc_path));
    const Signature sig = source_signature(src);
    const SuperForm a = parse_form(ea, sig);
    const SuperForm b = parse_form(eb, sig);
    const auto require_degree = [](const SuperForm& w, int d, const char* role) {
        if (w.is_zero())
            return;
        if (!w.has_pure_form_degree() || w.form_degree() != d)
            throw std::invalid_argument(std::string(role) + " must be a form of degree "
                                        + std::to_string(d) + " for this kind");
    };
    if (kind == "poisson") {
        require_degree(a, 0, "the first operand");
        require_degree(b, 0, "the second operand");
        const AlgebraElement f = to_algebra(a), g = to_algebra(b);
        const AlgebraElement r = std::visit(
            [&](const auto& s) {
                if constexpr (std::is_same_v<std::decay_t<decltype(s)>,
                                             GradedPoissonStructure>)
                    return bracket(s, f, g);
                else
                    return induced_bracket(s, f, g);
            },
            src);
        print_result(print_element(r), format);
        return 0;
    }
    if (kind == "algebroid") {
        require_degree(a, 1, "the first operand");
        require_degree(b, 1, "the second operand");
        const SuperForm r = std::visit(
            [&](const auto& s) {
                if constexpr (std::is_same_v<std::decay_t<decltype(s)>,
                                             GradedPoissonStructure>)
                    return algebroid_bracket(PoissonAlgebroid{s}, a, b);
                else
                    return algebroid_bracket(s, a, b);
            },
            src);
        print_result(print_form(r), format);
        return 0;
    }
    // gerstenhaber: any form degrees
    print_result(print_form(gerst_bracket(src, a, b)), format);
    return 0;
}

int eval_command(const std::string& doc_path, const std::string& expr,
                 const std::string& format)
{
    const GerstenhaberBracketSource src = load_document(read_text(doc_path));
    const SuperForm w = parse_form(expr, source_signature(src));
    print_result(print_form(w), format);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact checks for graded Poisson structures, Poisson-type "
                 "superalgebroids and their Gerstenhaber brackets"};
    app.require_subcommand(1);

    SuiteOptions opt;
    std::string format = "text";
    std::string doc_path;
    std::string kind;
    std::string expr_a, expr_b;
    const auto add_common = [&](CLI::App* sub, bool sampling) {
        sub->add_option("document", doc_path, "structure document path, or - for stdin")
            ->required();
        sub->add_option("--format", format, "text or structured")
            ->check(CLI::IsMember({"text", "structured"}));
        if (sampling) {
            sub->add_option("--seed", opt.seed, "sampler seed");
            sub->add_option("--samples", opt.samples, "samples per randomized check");
            sub->add_option("--max-degree", opt.max_degree, "top form degree sampled");
        }
    };

    CLI::App* chk = app.add_subcommand("check", "run every applicable axiom suite");
    add_common(chk, true);
    CLI::App* thm =
        app.add_subcommand("verify-theorems", "one equivalence verdict per theorem");
    add_common(thm, true);
    CLI::App* brk = app.add_subcommand("bracket", "evaluate a bracket of two expressions");
    add_common(brk, false);
    brk->add_option("--kind", kind, "poisson, algebroid or gerstenhaber")
        ->required()
        ->check(CLI::IsMember({"poisson", "algebroid", "gerstenhaber"}));
    brk->add_option("exprA", expr_a, "first operand")->required();
    brk->add_option("exprB", expr_b, "second operand")->required();
    CLI::App* evl = app.add_subcommand("eval", "normalize one expression");
    add_common(evl, false);
    evl->add_option("expr", expr_a, "expression to normalize")->required();

    try {
        app.parse(argc, argv);
        if (chk->parsed())
            return report_command(doc_path, opt, format, false);
        if (thm->parsed())
            return report_command(doc_path, opt, format, true);
        if (brk->parsed())
            return bracket_command(doc_path, kind, expr_a, expr_b, format);
        return eval_command(doc_path, expr_a, format);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const DocumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
