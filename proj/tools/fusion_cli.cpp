// fusion: command-line front end for fusion-rule analysis.
//
//   fusion validate RULE [--json]
//   fusion analyze RULE [--tolerance T] [--json]
//   fusion graph RULE [--dot OUT]
//   fusion gen FAMILY [PARAMS...] [--group G] [--out OUT]
//   fusion enumerate --rank R --max-mult M [--survey] [--strict-axioms] [--limit N] [--json]
//
// Exit status: 0 success, 1 invalid rule / failed survey, 2 parse, I/O or usage errors.

#include "fusion/errors.hpp"
#include "fusion/explorer.hpp"
#include "fusion/generators.hpp"
#include "fusion/io.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace fusion;

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kError = 2;

FiniteGroup load_group(const std::string &spec) {
    if (std::filesystem::exists(spec))
        return read_group_file(spec);
    return named_group(spec);
}

void emit(const std::string &text, const std::optional<std::string> &out) {
    if (out)
        write_text_file(*out, text);
    else
        std::cout << text;
}

int run_validate(const std::string &path, bool as_json) {
    const auto rule = read_rule_file(path);
    const auto report = validate(rule);
    std::cout << (as_json ? validation_json(report) : format_validation(rule, report));
    return report.valid ? kOk : kInvalid;
}

int run_analyze(const std::string &path, double tolerance, bool as_json) {
    const auto rule = read_rule_file(path);
    const auto report = validate(rule);
    if (!report.valid) {
        std::cerr << format_validation(rule, report);
        return kInvalid;
    }
    const auto analysis = analyze(rule, tolerance);
    std::cout << (as_json ? analysis_json(rule, analysis) : format_analysis(rule, analysis));
    return kOk;
}

int run_graph(const std::string &path, const std::optional<std::string> &out) {
    const auto rule = read_rule_file(path);
    const auto report = validate(rule);
    if (!report.valid) {
        std::cerr << format_validation(rule, report);
        return kInvalid;
    }
    emit(to_dot(rule), out);
    return kOk;
}

int run_gen(const std::string &family, const std::vector<std::string> &params,
            const std::optional<std::string> &group_option, const std::optional<std::string> &out) {
    auto group_spec = [&]() -> std::string {
        if (group_option)
            return *group_option;
        if (params.size() == 1)
            return params.front();
        throw CLI::ValidationError("gen " + family, "expects one group name or group file");
    };
    auto single = [&](const char *what) -> const std::string & {
        if (params.size() != 1)
            throw CLI::ValidationError("gen " + family, std::string("expects ") + what);
        return params.front();
    };

    std::optional<FusionRule> rule;
    if (family == "pointed") {
        rule = pointed(load_group(group_spec()));
    } else if (family == "double") {
        rule = drinfeld_double(load_group(group_spec()));
    } else if (family == "su2k") {
        const auto &level = single("a level k");
        std::size_t consumed = 0;
        unsigned long k = 0;
        try {
            k = std::stoul(level, &consumed);
        } catch (const std::exception &) {
            consumed = 0;
        }
        if (consumed != level.size() || k == 0)
            throw CLI::ValidationError("gen su2k", "level must be a positive integer");
        rule = su2k(k);
    } else if (family == "fixture") {
        rule = named_fixture(single("a fixture name"));
    } else if (family == "product") {
        if (params.size() != 2)
            throw CLI::ValidationError("gen product", "expects two rule files");
        const auto a = read_rule_file(params[0]);
        const auto b = read_rule_file(params[1]);
        for (const auto *factor : {&a, &b})
            if (!validate(*factor).valid)
                throw PreconditionError("gen product: factor is not a valid fusion rule");
        rule = product(a, b);
    } else {
        throw LookupError("unknown family '" + family +
                          "'; available: pointed, su2k, fixture, double, product");
    }
    emit(serialize_rule(*rule), out);
    return kOk;
}

int run_enumerate(std::size_t rank, unsigned max_mult, bool survey_mode, bool strict,
                  std::optional<std::size_t> limit, double tolerance, bool as_json) {
    EnumSpec spec;
    spec.rank = rank;
    spec.max_mult = max_mult;
    spec.limit = limit;
    spec.strict_axioms = strict;
    if (survey_mode) {
        const auto result = survey(spec, tolerance);
        std::cout << (as_json ? survey_json(result) : format_survey(result));
        return result.disagreements.empty() && result.weak_integrality_failures.empty() ? kOk : kInvalid;
    }
    const auto rules = enumerate(spec);
    for (std::size_t r = 0; r < rules.size(); ++r)
        std::cout << (r ? "\n" : "") << serialize_rule(rules[r]);
    return kOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Fusion rule toolkit: validation, acyclicity and nilpotency analysis"};
    app.require_subcommand(1);

    bool as_json = false;
    double tolerance = kDefaultTolerance;
    std::string path;
    std::optional<std::string> out;
    std::optional<std::string> group;

    auto *validate_cmd = app.add_subcommand("validate", "Check the fusion-rule axioms");
    validate_cmd->add_option("rule", path, "Rule file")->required();
    validate_cmd->add_flag("--json", as_json, "Machine-readable output");

    auto *analyze_cmd = app.add_subcommand("analyze", "Acyclicity, central series and FP dimensions");
    analyze_cmd->add_option("rule", path, "Rule file")->required();
    analyze_cmd->add_option("--tolerance", tolerance, "FP-dimension tolerance")
        ->check(CLI::PositiveNumber);
    analyze_cmd->add_flag("--json", as_json, "Machine-readable output");

    auto *graph_cmd = app.add_subcommand("graph", "Emit the adjoint graph as DOT");
    graph_cmd->add_option("rule", path, "Rule file")->required();
    graph_cmd->add_option("--dot", out, "Output file (default: stdout)");

    std::string family;
    std::vector<std::string> params;
    auto *gen_cmd = app.add_subcommand("gen", "Generate a rule: pointed, su2k, fixture, double, product");
    gen_cmd->add_option("family", family, "Generator family")->required();
    gen_cmd->add_option("params", params, "Family parameters");
    gen_cmd->add_option("--group", group, "Group name or group file");
    gen_cmd->add_option("--out", out, "Output file (default: stdout)");

    std::size_t rank = 2;
    unsigned max_mult = 2;
    bool survey_mode = false;
    bool strict = false;
    std::optional<std::size_t> limit;
    auto *enum_cmd = app.add_subcommand("enumerate", "Enumerate small fusion rules");
    enum_cmd->add_option("--rank", rank, "Rank (1-5)")->required();
    enum_cmd->add_option("--max-mult", max_mult, "Multiplicity bound (0-3)");
    enum_cmd->add_flag("--survey", survey_mode, "Print the acyclic/nilpotent survey instead of rules");
    enum_cmd->add_flag("--strict-axioms", strict,
                       "Do not require N_ij^0 = 0 for j != dual(i)");
    enum_cmd->add_option("--limit", limit, "Emit at most this many rules");
    enum_cmd->add_option("--tolerance", tolerance, "FP-dimension tolerance")->check(CLI::PositiveNumber);
    enum_cmd->add_flag("--json", as_json, "Machine-readable survey");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kError;
    }

    try {
        if (*validate_cmd)
            return run_validate(path, as_json);
        if (*analyze_cmd)
            return run_analyze(path, tolerance, as_json);
        if (*graph_cmd)
            return run_graph(path, out);
        if (*gen_cmd)
            return run_gen(family, params, group, out);
        if (*enum_cmd)
            return run_enumerate(rank, max_mult, survey_mode, strict, limit, tolerance, as_json);
    } catch (const CLI::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
