#include "hartogs/io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

using namespace hartogs;

// exit codes: validate 0 ok / 1 invalid / 2 parse error;
// check 0 hartogs / 3 no hartogs / 4 not applicable or invalid / 2 parse error;
// verify 0 ok / 1 mismatch / 2 parse error.

CheckOptions resolve_options(const ParsedInput& input, long cli_max_rank) {
    CheckOptions opts = default_check_options();  // HARTOGS_MAX_RANK or 4
    if (input.max_rank) opts.max_rank = *input.max_rank;
    if (cli_max_rank > 0) opts.max_rank = static_cast<std::size_t>(cli_max_rank);
    opts.auto_complete_faces = input.auto_complete_faces;
    return opts;
}

int cmd_validate(const std::string& path) {
    ParsedInput input;
    try {
        input = parse_input_file(path);
    } catch (const SemanticError& e) {
        std::cout << "invalid: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    const FanValidation v = validate_fan(input.fan, input.auto_complete_faces);
    if (!v.valid) {
        std::cout << "invalid colored fan:\n";
        for (const auto& msg : v.violations) std::cout << "  - " << msg << "\n";
        return 1;
    }
    std::cout << "valid colored fan (" << v.completed.cones.size() << " cones)\n";
    return 0;
}

int exit_code_for(const HartogsReport& report) {
    if (report.verdict == "hartogs") return 0;
    if (report.verdict == "no_hartogs") return 3;
    return 4;
}

int cmd_check(const std::string& path, const std::string& format, bool explain,
              long cli_max_rank) {
    ParsedInput input;
    HartogsReport report;
    bool have_report = false;
    try {
        input = parse_input_file(path);
    } catch (const SemanticError& e) {
        report.fan_valid = false;
        report.violations = {e.what()};
        report.verdict = "invalid_fan";
        report.notes = {"input data inadmissible: the criterion is not applicable"};
        input.kind = "horospherical";
        have_report = true;
    } catch (const Error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    if (!have_report) {
        const CheckOptions opts = resolve_options(input, cli_max_rank);
        try {
            report = input.homogeneous ? homogeneous_verdict(*input.datum, opts)
                                       : check_hartogs(input.fan, opts);
        } catch (const RankTooLarge& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
    }
    if (format == "json") {
        std::cout << report_to_json(report, input.kind).dump(2) << "\n";
    } else {
        std::cout << report_to_text(report, explain);
    }
    return exit_code_for(report);
}

int cmd_verify(const std::string& report_path, const std::string& input_path) {
    StoredReport stored;
    ParsedInput input;
    try {
        stored = load_report_file(report_path);
        input = parse_input_file(input_path);
    } catch (const SemanticError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    if (!stored.hartogs) {
        std::cout << "certificate: MISMATCH (report carries no decided verdict)\n";
        return 1;
    }
    const CheckOptions opts = resolve_options(input, 0);
    bool ok = false;
    try {
        RatMat gens;
        if (input.homogeneous) {
            gens = homogeneous_hartogs_generators(*input.datum, opts);
        } else {
            gens = hartogs_generators(input.fan, opts);
        }
        ok = stored.rank == input.fan.ambient_rank &&
             recheck_certificate(stored.certificate, *stored.hartogs, input.fan.ambient_rank,
                                 gens);
    } catch (const RankTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error&) {
        ok = false;  // complete or invalid input: no certificate can match
    }
    if (ok) {
        std::cout << "certificate: OK\n";
        return 0;
    }
    std::cout << "certificate: MISMATCH\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hartogs phenomenon decision engine for spherical embedding data"};
    app.require_subcommand(1);

    std::string validate_path;
    auto* validate = app.add_subcommand("validate", "check the colored-fan axioms");
    validate->add_option("file", validate_path, "input JSON document")->required();

    std::string check_path;
    std::string format = "text";
    bool explain = false;
    long max_rank = 0;
    auto* check = app.add_subcommand("check", "decide the Hartogs phenomenon");
    check->add_option("file", check_path, "input JSON document")->required();
    check->add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    check->add_flag("--explain", explain, "include cells and certificate detail (text output)");
    check->add_option("--max-rank", max_rank, "cell-enumeration rank limit");

    std::string verify_report;
    std::string verify_input;
    auto* verify = app.add_subcommand("verify", "recheck a report's certificate against an input");
    verify->add_option("report", verify_report, "report JSON produced by check")->required();
    verify->add_option("input", verify_input, "input JSON document")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(validate_path);
        if (check->parsed()) return cmd_check(check_path, format, explain, max_rank);
        if (verify->parsed()) return cmd_verify(verify_report, verify_input);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
