#pragma once

#include "fusion/acyclicity.hpp"
#include "fusion/explorer.hpp"
#include "fusion/fp_dimensions.hpp"
#include "fusion/fusion_rule.hpp"
#include "fusion/group.hpp"
#include "fusion/nilpotency.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace fusion {

// Rule files are JSON documents:
//   {"rank": 3, "labels": ["1", "sigma", "psi"], "dual": [0, 1, 2],
//    "fusion": [[i, j, k, multiplicity], ...]}
// with one record per nonzero entry, no duplicate (i, j, k), multiplicities
// >= 1 and the vacuum at index 0. "labels" is optional.

/// Throws ParseError on malformed documents and StructuralError on bad shapes.
FusionRule parse_rule(std::string_view text);
std::string serialize_rule(const FusionRule &rule);

FusionRule read_rule_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, std::string_view text);

// Group files: {"order": n, "table": [row-major n*n entries], "name": "..."}.
FiniteGroup parse_group(std::string_view text);
std::string serialize_group(const FiniteGroup &group);
FiniteGroup read_group_file(const std::filesystem::path &path);

/// Adjoint graph as a DOT digraph; one node per dual pair, one edge per
/// adjoint edge labelled with its multiplicity. Output depends only on the rule.
std::string to_dot(const FusionRule &rule);

struct Analysis {
    AcyclicityResult acyclicity;
    CentralSeries series;
    FPDimData fp;
    TheoremCheck theorem;
};

Analysis analyze(const FusionRule &rule, double tolerance = kDefaultTolerance);

std::string format_validation(const FusionRule &rule, const ValidationReport &report);
std::string validation_json(const ValidationReport &report);

std::string format_analysis(const FusionRule &rule, const Analysis &analysis);
/// Keys: rank, labels, acyclic, witness, nilpotent, nilpotency_class,
/// central_series, fp_dimensions, global_dimension, integral,
/// weakly_integral, agree.
std::string analysis_json(const FusionRule &rule, const Analysis &analysis);

std::string format_survey(const TheoremSurvey &survey);
std::string survey_json(const TheoremSurvey &survey);

} // namespace fusion
