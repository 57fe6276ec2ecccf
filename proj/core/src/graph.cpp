#include "pathtrust/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pathtrust {

TrustGraph::TrustGraph(std::size_t node_count)
    : adj_(node_count), indegree_(node_count, 0), node_weight_(node_count, 0.0) {}

NodeId TrustGraph::add_node() {
    adj_.emplace_back();
    indegree_.push_back(0);
    node_weight_.push_back(0.0);
    return static_cast<NodeId>(adj_.size() - 1);
}

void TrustGraph::check_node(NodeId u) const {
    if (u >= adj_.size())
        throw std::invalid_argument("unknown node id " + std::to_string(u));
}

void TrustGraph::add_edge(NodeId src, NodeId dst, double weight) {
    check_node(src);
    check_node(dst);
    if (src == dst)
        throw std::invalid_argument("self-loop rejected at node " + std::to_string(src));
    if (!(weight >= 0.0 && weight <= 1.0))
        throw std::invalid_argument("trust weight outside [0,1]: " + std::to_string(weight));
    auto& edges = adj_[src];
    auto it = std::lower_bound(edges.begin(), edges.end(), dst,
                               [](const OutEdge& e, NodeId d) { return e.dst < d; });
    if (it != edges.end() && it->dst == dst) {
        it->weight = weight;  // last write wins
        return;
    }
    edges.insert(it, OutEdge{dst, weight});
    ++indegree_[dst];
    ++edge_count_;
}

bool TrustGraph::has_edge(NodeId src, NodeId dst) const {
    check_node(src);
    check_node(dst);
    const auto& edges = adj_[src];
    auto it = std::lower_bound(edges.begin(), edges.end(), dst,
                               [](const OutEdge& e, NodeId d) { return e.dst < d; });
    return it != edges.end() && it->dst == dst;
}

double TrustGraph::edge_weight(NodeId src, NodeId dst) const {
    check_node(src);
    check_node(dst);
    const auto& edges = adj_[src];
    auto it = std::lower_bound(edges.begin(), edges.end(), dst,
                               [](const OutEdge& e, NodeId d) { return e.dst < d; });
    if (it == edges.end() || it->dst != dst)
        throw std::invalid_argument("no edge " + std::to_string(src) + "->" + std::to_string(dst));
    return it->weight;
}

std::span<const OutEdge> TrustGraph::out_edges(NodeId u) const {
    check_node(u);
    return adj_[u];
}

std::vector<NodeId> TrustGraph::successors(NodeId u) const {
    check_node(u);
    std::vector<NodeId> out;
    out.reserve(adj_[u].size());
    for (const auto& e : adj_[u]) out.push_back(e.dst);
    return out;
}

std::size_t TrustGraph::out_degree(NodeId u) const {
    check_node(u);
    return adj_[u].size();
}

std::size_t TrustGraph::indegree(NodeId u) const {
    check_node(u);
    return indegree_[u];
}

std::size_t TrustGraph::max_indegree() const {
    std::size_t best = 0;
    for (std::size_t d : indegree_) best = std::max(best, d);
    return best;
}

void TrustGraph::set_node_weight(NodeId u, double w) {
    check_node(u);
    if (w < 0.0) throw std::invalid_argument("node weight must be >= 0");
    node_weight_[u] = w;
}

double TrustGraph::node_weight(NodeId u) const {
    check_node(u);
    return node_weight_[u];
}

void TrustGraph::validate() const {
    std::vector<std::size_t> indeg(adj_.size(), 0);
    std::size_t edges = 0;
    for (NodeId u = 0; u < adj_.size(); ++u) {
        NodeId prev = 0;
        bool first = true;
        for (const auto& e : adj_[u]) {
            if (e.dst >= adj_.size()) throw std::logic_error("edge to unknown node");
            if (e.dst == u) throw std::logic_error("self-loop stored");
            if (!first && e.dst <= prev) throw std::logic_error("adjacency not strictly sorted");
            if (!(e.weight >= 0.0 && e.weight <= 1.0))
                throw std::logic_error("edge weight outside [0,1]");
            prev = e.dst;
            first = false;
            ++indeg[e.dst];
            ++edges;
        }
        if (node_weight_[u] < 0.0) throw std::logic_error("negative node weight");
    }
    if (edges != edge_count_) throw std::logic_error("edge count cache stale");
    if (indeg != indegree_) throw std::logic_error("indegree cache stale");
}

InferredGraph::InferredGraph(TrustGraph base)
    : graph_(std::move(base)), original_count_(graph_.edge_count()) {}

void InferredGraph::add_inferred(NodeId src, NodeId dst, double weight) {
    if (graph_.has_edge(src, dst))
        throw std::invalid_argument("inferred edge collides with an existing edge");
    if (!(weight > 0.0 && weight <= 1.0))
        throw std::invalid_argument("inferred trust must lie in (0,1]");
    graph_.add_edge(src, dst, weight);
    if (!inferred_.empty() && inferred_.back() >= std::make_pair(src, dst)) sorted_ = false;
    inferred_.emplace_back(src, dst);
    if (!sorted_) {
        std::sort(inferred_.begin(), inferred_.end());
        sorted_ = true;
    }
}

bool InferredGraph::is_inferred(NodeId src, NodeId dst) const {
    return std::binary_search(inferred_.begin(), inferred_.end(), std::make_pair(src, dst));
}

}  // namespace pathtrust
