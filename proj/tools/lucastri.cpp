// lucastri — generate, evaluate and verify Lucas-analogue combinatorial
// triangles. Exit codes: 0 success, 1 verification/evaluation failure,
// 2 usage error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "lucas/lucas.hpp"

namespace {

struct table_args {
    std::string seq;
    int rows = 5;
    std::string format = "text";
};

struct eval_args {
    std::string seq;
    int n = 0;
    int k = 0;
    bool has_k = false;
    long long s0 = 0;
    long long t0 = 0;
};

struct poly_args {
    std::string seq;
    int n = 0;
    int k = 0;
    bool has_k = false;
};

struct verify_args {
    int max_n = 12;
    std::string format = "text";
    std::vector<std::string> only;
};

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return 2;
}

/// Enforces the index arity of the sequence: triangles need --k,
/// single-index sequences must not get one.
std::optional<int> check_arity(lucas::sequence_id id, bool has_k) {
    if (lucas::is_triangle(id) && !has_k)
        return usage_error("sequence '" + std::string(lucas::to_string(id)) +
                           "' is two-index; pass --k");
    if (!lucas::is_triangle(id) && has_k)
        return usage_error("sequence '" + std::string(lucas::to_string(id)) +
                           "' is single-index; drop --k");
    return std::nullopt;
}

int run_table(const table_args& args) {
    auto seq = lucas::sequence_from_string(args.seq);
    if (!seq) return usage_error("unknown sequence '" + args.seq + "'");
    auto format = lucas::format_from_string(args.format);
    if (!format) return usage_error("unknown format '" + args.format + "'");
    if (args.rows < 0) return usage_error("--rows must be >= 0");
    lucas::sequences gen;
    std::cout << lucas::render_table(lucas::triangle(gen, *seq, args.rows), *format);
    return 0;
}

int run_eval(const eval_args& args) {
    auto seq = lucas::sequence_from_string(args.seq);
    if (!seq) return usage_error("unknown sequence '" + args.seq + "'");
    if (auto rc = check_arity(*seq, args.has_k)) return *rc;
    lucas::sequences gen;
    try {
        lucas::rational_function value = gen.value(*seq, args.n, args.k);
        std::cout << value.eval(lucas::integer(args.s0), lucas::integer(args.t0)).str()
                  << "\n";
        return 0;
    } catch (const lucas::division_by_zero&) {
        std::cerr << "error: denominator vanishes at (s,t)=(" << args.s0 << "," << args.t0
                  << ")\n";
        return 1;
    } catch (const std::domain_error& e) {
        return usage_error(e.what());
    }
}

int run_poly(const poly_args& args) {
    auto seq = lucas::sequence_from_string(args.seq);
    if (!seq) return usage_error("unknown sequence '" + args.seq + "'");
    if (auto rc = check_arity(*seq, args.has_k)) return *rc;
    lucas::sequences gen;
    try {
        std::cout << gen.value(*seq, args.n, args.k).str() << "\n";
        return 0;
    } catch (const std::domain_error& e) {
        return usage_error(e.what());
    }
}

int run_verify(const verify_args& args) {
    auto format = lucas::format_from_string(args.format);
    if (!format) return usage_error("unknown format '" + args.format + "'");
    if (args.max_n < 0) return usage_error("--max-n must be >= 0");
    const auto known = lucas::verify::known_check_ids();
    for (const auto& id : args.only)
        if (std::find(known.begin(), known.end(), id) == known.end())
            return usage_error("unknown check id '" + id + "'");
    const std::vector<std::string>* selection = args.only.empty() ? nullptr : &args.only;
    lucas::sequences gen;
    auto report = lucas::verify::run_suite(gen, args.max_n, selection);
    report.append(lucas::verify::golden_tables(gen, 5, selection));
    std::cout << lucas::render_report(report, *format);
    return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Lucas analogues of combinatorial triangles"};
    app.require_subcommand(1);
    std::string sequences_help = "sequences:\n";
    for (const auto& name : lucas::sequence_name_list()) {
        auto id = *lucas::sequence_from_string(name);
        sequences_help += "  " + name + std::string(20 - name.size(), ' ') +
                          std::string(lucas::sequence_description(id)) + "\n";
    }
    app.footer(sequences_help);

    table_args targs;
    auto* table = app.add_subcommand("table", "render a sequence as a table");
    table->add_option("--seq", targs.seq, "sequence name")->required();
    table->add_option("--rows", targs.rows, "number of rows (n = 0..rows)");
    table->add_option("--format", targs.format, "text|csv|json|latex");

    eval_args eargs;
    auto* eval = app.add_subcommand("eval", "evaluate a cell at integer (s,t)");
    eval->add_option("--seq", eargs.seq, "sequence name")->required();
    eval->add_option("--n", eargs.n, "row index")->required();
    auto* eval_k = eval->add_option("--k", eargs.k, "column index (triangles only)");
    eval->add_option("--s", eargs.s0, "value of s")->required();
    eval->add_option("--t", eargs.t0, "value of t")->required();

    poly_args pargs;
    auto* poly = app.add_subcommand("poly", "print a cell as a polynomial or quotient");
    poly->add_option("--seq", pargs.seq, "sequence name")->required();
    poly->add_option("--n", pargs.n, "row index")->required();
    auto* poly_k = poly->add_option("--k", pargs.k, "column index (triangles only)");

    verify_args vargs;
    auto* verify = app.add_subcommand("verify", "run the property suite and golden tables");
    verify->add_option("--max-n", vargs.max_n, "bound for the property checks");
    verify->add_option("--format", vargs.format, "text|csv|json|latex");
    verify->add_option("--only", vargs.only, "comma-separated check ids")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    eargs.has_k = eval_k->count() > 0;
    pargs.has_k = poly_k->count() > 0;

    if (table->parsed()) return run_table(targs);
    if (eval->parsed()) return run_eval(eargs);
    if (poly->parsed()) return run_poly(pargs);
    if (verify->parsed()) return run_verify(vargs);
    return usage_error("no subcommand given");
}
