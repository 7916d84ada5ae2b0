#pragma once

#include "fusion/fusion_rule.hpp"

#include <optional>
#include <vector>

namespace fusion {

/// Directed graph on dual pairs {i, dual i}. There is an edge from pair X to
/// pair Y when X is not the vacuum pair and x_i x_{dual i} contains a member
/// of Y for some member i of X.
struct AdjointGraph {
    struct Vertex {
        Label representative; // smaller member of the pair
        Label partner;        // dual of the representative
    };
    struct Edge {
        std::size_t from; // vertex indices
        std::size_t to;
        Label source;     // member of `from` whose adjoint product hits `to`
        Multiplicity weight; // N_{source, dual source}^{representative of to}
    };

    std::vector<Vertex> vertices;
    std::vector<Edge> edges; // sorted by (from, to)

    /// Index of the vertex containing label i.
    std::vector<std::size_t> vertex_of;
};

AdjointGraph adjoint_graph(const FusionRule &rule);

/// A closed label sequence (x_1, ..., x_n, x_1) with x_1 != 1 such that
/// N_{x_k, dual x_k}^{x_{k+1}} > 0 for every step.
struct CycleWitness {
    std::vector<Label> labels;                // n + 1 entries, first == last
    std::vector<Multiplicity> multiplicities; // n entries
};

struct AcyclicityResult {
    bool acyclic = true;
    std::optional<CycleWitness> witness;
};

/// Decides acyclicity from the strongly connected components of the adjoint
/// graph. When a cycle exists the witness is a shortest one; ties go to the
/// smallest starting vertex.
AcyclicityResult is_acyclic(const FusionRule &rule);

struct TheoremCheck {
    bool acyclic = false;
    bool nilpotent = false;
    bool agree = false;
};

/// Runs the cycle test and the descending central series independently.
TheoremCheck check_theorem(const FusionRule &rule);

/// Strongly connected components (Tarjan), each sorted, listed in reverse
/// topological order.
std::vector<std::vector<std::size_t>>
strongly_connected_components(const std::vector<std::vector<std::size_t>> &successors);

} // namespace fusion
