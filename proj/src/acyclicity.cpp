#include "fusion/acyclicity.hpp"

#include "fusion/nilpotency.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace fusion {

namespace {

constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();

struct TarjanState {
    const std::vector<std::vector<std::size_t>> &successors;
    std::vector<std::size_t> index;
    std::vector<std::size_t> lowlink;
    std::vector<bool> on_stack;
    std::vector<std::size_t> stack;
    std::size_t counter = 0;
    std::vector<std::vector<std::size_t>> components;

    void visit(std::size_t v) {
        index[v] = lowlink[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (auto w : successors[v]) {
            if (index[w] == kUnvisited) {
                visit(w);
                lowlink[v] = std::min(lowlink[v], lowlink[w]);
            } else if (on_stack[w]) {
                lowlink[v] = std::min(lowlink[v], index[w]);
            }
        }
        if (lowlink[v] == index[v]) {
            std::vector<std::size_t> component;
            std::size_t w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                component.push_back(w);
            } while (w != v);
            std::sort(component.begin(), component.end());
            components.push_back(std::move(component));
        }
    }
};

} // namespace

std::vector<std::vector<std::size_t>>
strongly_connected_components(const std::vector<std::vector<std::size_t>> &successors) {
    const auto n = successors.size();
    TarjanState state{successors,
                      std::vector<std::size_t>(n, kUnvisited),
                      std::vector<std::size_t>(n, kUnvisited),
                      std::vector<bool>(n, false),
                      {},
                      0,
                      {}};
    for (std::size_t v = 0; v < n; ++v)
        if (state.index[v] == kUnvisited)
            state.visit(v);
    return std::move(state.components);
}

AdjointGraph adjoint_graph(const FusionRule &rule) {
    const auto n = rule.rank();
    AdjointGraph graph;
    graph.vertex_of.assign(n, 0);
    for (Label i = 0; i < n; ++i) {
        const Label rep = std::min(i, rule.dual(i));
        if (rep == i) {
            graph.vertex_of[i] = graph.vertices.size();
            graph.vertices.push_back({i, rule.dual(i)});
        }
    }
    for (Label i = 0; i < n; ++i)
        graph.vertex_of[i] = graph.vertex_of[std::min(i, rule.dual(i))];

    for (std::size_t x = 1; x < graph.vertices.size(); ++x) {
        const auto &vertex = graph.vertices[x];
        std::vector<AdjointGraph::Edge> out;
        for (Label source : {vertex.representative, vertex.partner}) {
            for (const auto &[j, m] : rule.fuse(source, rule.dual(source))) {
                const auto y = graph.vertex_of[j];
                const bool seen = std::any_of(out.begin(), out.end(),
                                              [&](const auto &e) { return e.to == y; });
                if (seen)
                    continue;
                const auto at_rep = rule(source, rule.dual(source), graph.vertices[y].representative);
                out.push_back({x, y, source, at_rep != 0 ? at_rep : m});
            }
            if (vertex.partner == vertex.representative)
                break;
        }
        std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.to < b.to; });
        graph.edges.insert(graph.edges.end(), out.begin(), out.end());
    }
    return graph;
}

AcyclicityResult is_acyclic(const FusionRule &rule) {
    const auto graph = adjoint_graph(rule);
    const auto nv = graph.vertices.size();

    // Vertex 0 is the vacuum pair; it has no outgoing edges and is excluded.
    std::vector<std::vector<std::size_t>> successors(nv);
    std::vector<bool> self_loop(nv, false);
    for (const auto &e : graph.edges) {
        if (e.to == 0)
            continue;
        successors[e.from].push_back(e.to);
        if (e.from == e.to)
            self_loop[e.from] = true;
    }

    const auto components = strongly_connected_components(successors);
    std::vector<std::size_t> component_of(nv);
    std::vector<bool> cyclic(nv, false);
    for (std::size_t c = 0; c < components.size(); ++c)
        for (auto v : components[c]) {
            component_of[v] = c;
            cyclic[v] = components[c].size() > 1 || self_loop[v];
        }

    AcyclicityResult result;
    std::vector<std::size_t> best_path;
    for (std::size_t start = 1; start < nv; ++start) {
        if (!cyclic[start])
            continue;
        if (!best_path.empty() && best_path.size() == 2)
            break;
        // Shortest return path to `start` inside its component.
        std::vector<std::size_t> parent(nv, kUnvisited);
        std::queue<std::size_t> frontier;
        frontier.push(start);
        std::vector<std::size_t> path;
        std::vector<bool> reached(nv, false);
        while (!frontier.empty() && path.empty()) {
            const auto v = frontier.front();
            frontier.pop();
            for (auto w : successors[v]) {
                if (component_of[w] != component_of[start])
                    continue;
                if (w == start) {
                    path.push_back(start);
                    for (auto u = v; u != start; u = parent[u])
                        path.push_back(u);
                    path.push_back(start);
                    std::reverse(path.begin(), path.end());
                    break;
                }
                if (!reached[w]) {
                    reached[w] = true;
                    parent[w] = v;
                    frontier.push(w);
                }
            }
        }
        if (best_path.empty() || path.size() < best_path.size())
            best_path = std::move(path);
    }
    if (best_path.empty())
        return result;

    auto edge_between = [&](std::size_t from, std::size_t to) -> const AdjointGraph::Edge & {
        return *std::find_if(graph.edges.begin(), graph.edges.end(),
                             [&](const auto &e) { return e.from == from && e.to == to; });
    };
    CycleWitness witness;
    for (std::size_t k = 0; k + 1 < best_path.size(); ++k)
        witness.labels.push_back(edge_between(best_path[k], best_path[k + 1]).source);
    witness.labels.push_back(witness.labels.front());
    for (std::size_t k = 0; k + 1 < witness.labels.size(); ++k) {
        const auto x = witness.labels[k];
        witness.multiplicities.push_back(rule(x, rule.dual(x), witness.labels[k + 1]));
    }
    result.acyclic = false;
    result.witness = std::move(witness);
    return result;
}

TheoremCheck check_theorem(const FusionRule &rule) {
    TheoremCheck check;
    check.acyclic = is_acyclic(rule).acyclic;
    check.nilpotent = central_series(rule).nilpotent;
    check.agree = check.acyclic == check.nilpotent;
    return check;
}

} // namespace fusion
