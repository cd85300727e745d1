#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "braidcryst/report.hpp"
#include "braidcryst/errors.hpp"

namespace {

using braidcryst::Report;
using braidcryst::ReportOptions;

long default_max_order() {
    if (const char *env = std::getenv("BRAIDCRYST_MAX_ORDER")) {
        try {
            long v = std::stol(env);
            if (v >= 1) return v;
        } catch (...) {
        }
        std::cerr << "warning: ignoring invalid BRAIDCRYST_MAX_ORDER\n";
    }
    return 64;
}

struct CommonFlags {
    std::string format = "text";
    ReportOptions opts;
};

void add_common(CLI::App *cmd, CommonFlags &flags, bool with_format = true) {
    if (with_format)
        cmd->add_option("--format", flags.format, "Output format")
            ->check(CLI::IsMember({"text", "json", "gap"}))
            ->default_val("text");
    cmd->add_option("--max-order", flags.opts.max_order,
                    "Maximum group order for enumeration")
        ->default_val(default_max_order());
    cmd->add_flag("--full", flags.opts.full, "Include large matrices in text output");
    cmd->add_flag("--no-verify", [&flags](size_t) { flags.opts.verify = false; },
                  "Skip certificate verification");
    cmd->add_flag("--timings", flags.opts.timings, "Include timings (JSON gains a timings key)");
}

int emit_report(const Report &report, const CommonFlags &flags) {
    if (flags.format == "json")
        std::cout << report.json.dump(2) << "\n";
    else
        std::cout << braidcryst::render_report_text(report, flags.opts);
    return report.certificates_ok ? 0 : 2;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact computation in B_n/[P_n,P_n]: Bieberbach subgroups with "
                 "finite abelian holonomy and their flat-manifold invariants"};
    app.require_subcommand(1);

    std::string spec_text, word_text;
    int element_n = 0;

    CommonFlags analyze_flags, verify_flags, present_flags, matrix_flags, element_flags;

    CLI::App *analyze = app.add_subcommand("analyze", "Full construction, certificates, verdicts");
    analyze->add_option("spec", spec_text, "Group spec, e.g. Z3 or Z9xZ4")->required();
    add_common(analyze, analyze_flags);

    CLI::App *verify = app.add_subcommand("verify", "Certificates only");
    verify->add_option("spec", spec_text)->required();
    add_common(verify, verify_flags);

    CLI::App *present = app.add_subcommand("present", "Presentation of Gamma_q (odd cyclic)");
    present->add_option("spec", spec_text)->required();
    add_common(present, present_flags);

    CLI::App *matrix = app.add_subcommand("matrix", "Holonomy matrix dump");
    matrix->add_option("spec", spec_text)->required();
    add_common(matrix, matrix_flags);

    CLI::App *element = app.add_subcommand("element", "Normal form of a braid word");
    element->add_option("n", element_n, "Strand count")->required();
    element->add_option("word", word_text, "Braid word, e.g. \"s1 s1\" (S = inverse)")->required();
    add_common(element, element_flags);

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            Report r = braidcryst::build_report(spec_text, analyze_flags.opts);
            return emit_report(r, analyze_flags);
        }
        if (verify->parsed()) {
            Report r = braidcryst::build_verify_report(spec_text, verify_flags.opts);
            return emit_report(r, verify_flags);
        }
        if (present->parsed()) {
            auto parsed = braidcryst::parse_group_spec(spec_text);
            if (!parsed.spec.is_cyclic() || !parsed.spec.is_odd()) {
                std::cerr << "error: presentations are available for odd cyclic holonomy only\n";
                return 1;
            }
            if (parsed.spec.order() > present_flags.opts.max_order) {
                std::cerr << "error: group order exceeds bound (use --max-order)\n";
                return 1;
            }
            braidcryst::Presentation pres = braidcryst::presentation(parsed.spec.order());
            if (present_flags.format == "gap")
                std::cout << braidcryst::render_presentation_gap(pres);
            else if (present_flags.format == "json")
                std::cout << braidcryst::presentation_report(parsed.spec.order()).dump(2) << "\n";
            else
                std::cout << braidcryst::render_presentation_text(pres);
            if (!braidcryst::audit_presentation(pres)) {
                std::cerr << "error: relation audit failed\n";
                return 2;
            }
            return 0;
        }
        if (matrix->parsed()) {
            auto j = braidcryst::matrix_report(spec_text, matrix_flags.opts);
            if (matrix_flags.format == "json")
                std::cout << j.dump(2) << "\n";
            else
                std::cout << braidcryst::render_matrix_text(j, matrix_flags.opts);
            return 0;
        }
        if (element->parsed()) {
            auto j = braidcryst::element_report(element_n, word_text);
            if (element_flags.format == "json")
                std::cout << j.dump(2) << "\n";
            else
                std::cout << braidcryst::render_element_text(j);
            return 0;
        }
    } catch (const braidcryst::verification_error &e) {
        // internal certificate/invariant failure: distinct exit code
        std::cerr << "verification failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
