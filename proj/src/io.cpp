#include "fusion/io.hpp"

#include "fusion/errors.hpp"

#include <fmt/format.h>
#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>
#include <tuple>

namespace fusion {

using nlohmann::json;

namespace {

constexpr std::size_t kMaxFileRank = 512;

json parse_document(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(fmt::format("not a JSON document: {}", e.what()));
    }
}

template <typename T>
T get_field(const json &doc, const char *key) {
    if (!doc.contains(key))
        throw ParseError(fmt::format("missing key \"{}\"", key));
    try {
        return doc.at(key).get<T>();
    } catch (const json::exception &e) {
        throw ParseError(fmt::format("key \"{}\" has the wrong type: {}", key, e.what()));
    }
}

long long integer(const json &value, std::string_view what) {
    if (!value.is_number_integer())
        throw ParseError(fmt::format("{} must be an integer, got {}", what, value.dump()));
    return value.get<long long>();
}

std::vector<long long> integer_list(const json &doc, const char *key) {
    if (!doc.contains(key))
        throw ParseError(fmt::format("missing key \"{}\"", key));
    const auto &list = doc.at(key);
    if (!list.is_array())
        throw ParseError(fmt::format("key \"{}\" must be a list", key));
    std::vector<long long> values;
    for (const auto &x : list)
        values.push_back(integer(x, fmt::format("entry of \"{}\"", key)));
    return values;
}

std::string read_text(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(fmt::format("cannot read '{}'", path.string()));
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string json_string(std::string_view s) { return json(std::string(s)).dump(); }

std::string join_labels(const FusionRule &rule, std::span<const Label> labels,
                        std::string_view separator) {
    std::string text;
    for (std::size_t a = 0; a < labels.size(); ++a)
        text += fmt::format("{}{}", a ? separator : "", rule.label(labels[a]));
    return text;
}

} // namespace

FusionRule parse_rule(std::string_view text) {
    const auto doc = parse_document(text);
    if (!doc.is_object())
        throw ParseError("rule file must be a JSON object");
    if (!doc.contains("rank"))
        throw ParseError("missing key \"rank\"");
    const auto rank = integer(doc.at("rank"), "rank");
    if (rank < 1)
        throw ParseError(fmt::format("rank must be positive, got {}", rank));
    if (rank > static_cast<long long>(kMaxFileRank))
        throw CapacityError(fmt::format("rank {} exceeds the file cap of {}", rank, kMaxFileRank));
    const auto n = static_cast<std::size_t>(rank);

    std::vector<std::string> labels = default_labels(n);
    if (doc.contains("labels")) {
        labels = get_field<std::vector<std::string>>(doc, "labels");
        if (labels.size() != n)
            throw ParseError(fmt::format("expected {} labels, got {}", n, labels.size()));
    }
    const auto raw_dual = integer_list(doc, "dual");
    if (raw_dual.size() != n)
        throw ParseError(fmt::format("expected {} dual entries, got {}", n, raw_dual.size()));
    std::vector<Label> dual;
    for (auto d : raw_dual) {
        if (d < 0 || d >= rank)
            throw ParseError(fmt::format("dual entry {} out of range", d));
        dual.push_back(static_cast<Label>(d));
    }

    if (!doc.contains("fusion") || !doc.at("fusion").is_array())
        throw ParseError("key \"fusion\" must be a list of records");
    std::vector<Multiplicity> tensor(n * n * n, 0);
    std::set<std::tuple<long long, long long, long long>> seen;
    for (const auto &record : doc.at("fusion")) {
        if (!record.is_array() || record.size() != 4)
            throw ParseError(fmt::format("fusion record must be 4 integers, got {}", record.dump()));
        std::vector<long long> r;
        for (const auto &x : record)
            r.push_back(integer(x, "fusion record entry"));
        for (int a = 0; a < 3; ++a)
            if (r[a] < 0 || r[a] >= rank)
                throw ParseError(fmt::format("index {} out of range in record [{}, {}, {}, {}]",
                                             r[a], r[0], r[1], r[2], r[3]));
        if (r[3] < 1 || r[3] > 0xffffffffLL)
            throw ParseError(fmt::format("multiplicity must be at least 1 in record [{}, {}, {}, {}]",
                                         r[0], r[1], r[2], r[3]));
        if (!seen.emplace(r[0], r[1], r[2]).second)
            throw ParseError(fmt::format("duplicate record for ({}, {}, {})", r[0], r[1], r[2]));
        tensor[(static_cast<std::size_t>(r[0]) * n + static_cast<std::size_t>(r[1])) * n +
               static_cast<std::size_t>(r[2])] = static_cast<Multiplicity>(r[3]);
    }
    return FusionRule(std::move(labels), std::move(dual), std::move(tensor));
}

std::string serialize_rule(const FusionRule &rule) {
    std::string out = fmt::format("{{\n  \"rank\": {},\n  \"labels\": [", rule.rank());
    for (Label i = 0; i < rule.rank(); ++i)
        out += fmt::format("{}{}", i ? ", " : "", json_string(rule.label(i)));
    out += "],\n  \"dual\": [";
    for (Label i = 0; i < rule.rank(); ++i)
        out += fmt::format("{}{}", i ? ", " : "", rule.dual(i));
    out += "],\n  \"fusion\": [";
    bool first = true;
    for (Label i = 0; i < rule.rank(); ++i)
        for (Label j = 0; j < rule.rank(); ++j)
            for (const auto &[k, m] : rule.fuse(i, j)) {
                out += fmt::format("{}\n    [{}, {}, {}, {}]", first ? "" : ",", i, j, k, m);
                first = false;
            }
    out += "\n  ]\n}\n";
    return out;
}

FusionRule read_rule_file(const std::filesystem::path &path) { return parse_rule(read_text(path)); }

void write_text_file(const std::filesystem::path &path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(fmt::format("cannot open '{}' for writing", path.string()));
    out << text;
    if (!out)
        throw Error(fmt::format("failed writing '{}'", path.string()));
}

FiniteGroup parse_group(std::string_view text) {
    const auto doc = parse_document(text);
    if (!doc.is_object())
        throw ParseError("group file must be a JSON object");
    if (!doc.contains("order"))
        throw ParseError("missing key \"order\"");
    const auto order = integer(doc.at("order"), "order");
    if (order < 1)
        throw ParseError(fmt::format("order must be positive, got {}", order));
    const auto raw = integer_list(doc, "table");
    std::vector<Element> table;
    for (auto x : raw) {
        if (x < 0 || x >= order)
            throw ParseError(fmt::format("table entry {} out of range", x));
        table.push_back(static_cast<Element>(x));
    }
    std::string name = doc.contains("name") ? get_field<std::string>(doc, "name") : std::string("G");
    return FiniteGroup(static_cast<std::size_t>(order), std::move(table), std::move(name));
}

std::string serialize_group(const FiniteGroup &group) {
    std::string out = fmt::format("{{\n  \"name\": {},\n  \"order\": {},\n  \"table\": [",
                                  json_string(group.name()), group.order());
    for (Element a = 0; a < group.order(); ++a) {
        out += a ? ",\n    " : "\n    ";
        for (Element b = 0; b < group.order(); ++b)
            out += fmt::format("{}{}", b ? ", " : "", group.multiply(a, b));
    }
    out += "\n  ]\n}\n";
    return out;
}

FiniteGroup read_group_file(const std::filesystem::path &path) { return parse_group(read_text(path)); }

std::string to_dot(const FusionRule &rule) {
    const auto graph = adjoint_graph(rule);
    std::string out = "digraph adjoint {\n";
    for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
        const auto &[rep, partner] = graph.vertices[v];
        std::string name = rule.label(rep);
        if (partner != rep)
            name += ", " + rule.label(partner);
        out += fmt::format("  n{} [label={}];\n", v, json_string(name));
    }
    for (const auto &e : graph.edges)
        out += fmt::format("  n{} -> n{} [label=\"{}\"];\n", e.from, e.to, e.weight);
    out += "}\n";
    return out;
}

Analysis analyze(const FusionRule &rule, double tolerance) {
    Analysis a{is_acyclic(rule), central_series(rule), fp_dimensions(rule, tolerance), {}};
    a.theorem.acyclic = a.acyclicity.acyclic;
    a.theorem.nilpotent = a.series.nilpotent;
    a.theorem.agree = a.theorem.acyclic == a.theorem.nilpotent;
    return a;
}

std::string format_validation(const FusionRule &rule, const ValidationReport &report) {
    std::string out = fmt::format("rank: {}\nvalid: {}\n", rule.rank(), report.valid ? "yes" : "no");
    if (!report.valid) {
        out += fmt::format("violations: {}\n", report.violations.size());
        for (const auto &v : report.violations) {
            std::string idx;
            for (std::size_t a = 0; a < v.indices.size(); ++a)
                idx += fmt::format("{}{}", a ? "," : "", v.indices[a]);
            out += fmt::format("  {} ({}): {}\n", axiom_name(v.axiom), idx, v.message);
        }
        if (report.valid_without_vacuum_channel())
            out += "note: only vacuum_channel violations; the rule satisfies the weaker axiom set\n";
    }
    return out;
}

std::string validation_json(const ValidationReport &report) {
    json doc;
    doc["valid"] = report.valid;
    doc["violations"] = json::array();
    for (const auto &v : report.violations)
        doc["violations"].push_back(
            {{"axiom", std::string(axiom_name(v.axiom))}, {"indices", v.indices}, {"message", v.message}});
    return doc.dump(2) + "\n";
}

std::string format_analysis(const FusionRule &rule, const Analysis &a) {
    std::string out = fmt::format("rank: {}\n", rule.rank());
    out += fmt::format("acyclic: {}\n", a.acyclicity.acyclic ? "yes" : "no");
    if (a.acyclicity.witness) {
        const auto &w = *a.acyclicity.witness;
        out += fmt::format("cycle witness: ({})", join_labels(rule, w.labels, ", "));
        out += " multiplicities (";
        for (std::size_t k = 0; k < w.multiplicities.size(); ++k)
            out += fmt::format("{}{}", k ? ", " : "", w.multiplicities[k]);
        out += ")\n";
    }
    if (a.series.nilpotent)
        out += fmt::format("nilpotent: yes (class {})\n", *a.series.nilpotency_class);
    else
        out += "nilpotent: no\n";
    out += "central series:\n";
    for (std::size_t s = 0; s < a.series.chain.size(); ++s)
        out += fmt::format("  A({}) = {{{}}}\n", s, join_labels(rule, a.series.chain[s].members(), ", "));
    out += "FP dimensions:\n";
    for (Label i = 0; i < rule.rank(); ++i)
        out += fmt::format("  {} {:.9g}\n", rule.label(i), a.fp.dims[i]);
    out += fmt::format("global dimension: {:.9g}\n", a.fp.global);
    out += fmt::format("integral: {}\n", a.fp.is_integral ? "yes" : "no");
    out += fmt::format("weakly integral: {}\n", a.fp.is_weakly_integral ? "yes" : "no");
    out += fmt::format("theorem: acyclic={} nilpotent={} {}\n", a.theorem.acyclic, a.theorem.nilpotent,
                       a.theorem.agree ? "agree" : "DISAGREE");
    return out;
}

std::string analysis_json(const FusionRule &rule, const Analysis &a) {
    json doc;
    doc["rank"] = rule.rank();
    doc["labels"] = std::vector<std::string>(rule.labels().begin(), rule.labels().end());
    doc["acyclic"] = a.acyclicity.acyclic;
    if (a.acyclicity.witness)
        doc["witness"] = {{"labels", a.acyclicity.witness->labels},
                          {"multiplicities", a.acyclicity.witness->multiplicities}};
    else
        doc["witness"] = nullptr;
    doc["nilpotent"] = a.series.nilpotent;
    doc["nilpotency_class"] = a.series.nilpotency_class ? json(*a.series.nilpotency_class) : json(nullptr);
    doc["central_series"] = json::array();
    for (const auto &s : a.series.chain)
        doc["central_series"].push_back(std::vector<Label>(s.members().begin(), s.members().end()));
    doc["fp_dimensions"] = a.fp.dims;
    doc["global_dimension"] = a.fp.global;
    doc["integral"] = a.fp.is_integral;
    doc["weakly_integral"] = a.fp.is_weakly_integral;
    doc["agree"] = a.theorem.agree;
    return doc.dump(2) + "\n";
}

std::string format_survey(const TheoremSurvey &s) {
    std::string out = fmt::format("total: {}\nacyclic: {}\nnilpotent: {}\n", s.total, s.acyclic_count,
                                  s.nilpotent_count);
    out += fmt::format("satisfying N_ij^0 = delta(j, dual i): {}\n", s.vacuum_channel_count);
    out += "nilpotency classes:";
    for (const auto &[cls, count] : s.class_histogram)
        out += fmt::format(" {}:{}", cls, count);
    out += fmt::format("\ndisagreements: {}\nweak integrality failures: {}\n", s.disagreements.size(),
                       s.weak_integrality_failures.size());
    return out;
}

std::string survey_json(const TheoremSurvey &s) {
    json doc;
    doc["total"] = s.total;
    doc["acyclic_count"] = s.acyclic_count;
    doc["nilpotent_count"] = s.nilpotent_count;
    doc["vacuum_channel_count"] = s.vacuum_channel_count;
    json histogram = json::object();
    for (const auto &[cls, count] : s.class_histogram)
        histogram[std::to_string(cls)] = count;
    doc["class_histogram"] = histogram;
    doc["disagreements"] = json::array();
    for (const auto &r : s.disagreements)
        doc["disagreements"].push_back(json::parse(serialize_rule(r)));
    doc["weak_integrality_failures"] = json::array();
    for (const auto &r : s.weak_integrality_failures)
        doc["weak_integrality_failures"].push_back(json::parse(serialize_rule(r)));
    return doc.dump(2) + "\n";
}

} // namespace fusion
