#ifndef PATHTRUST_GRAPH_HPP
#define PATHTRUST_GRAPH_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace pathtrust {

using NodeId = std::uint32_t;
using Path = std::vector<NodeId>;  // node sequence, front = source

struct OutEdge {
    NodeId dst;
    double weight;
};

// Directed graph with per-edge trust weight in [0,1] and per-node
// influence weight theta >= 0. Successors are kept sorted ascending,
// which fixes the traversal order of every enumeration.
class TrustGraph {
public:
    TrustGraph() = default;
    explicit TrustGraph(std::size_t node_count);

    std::size_t node_count() const { return adj_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    NodeId add_node();

    // Inserts or overwrites (last write wins). Rejects self-loops,
    // out-of-range weights, and unknown endpoints.
    void add_edge(NodeId src, NodeId dst, double weight);

    bool has_edge(NodeId src, NodeId dst) const;
    double edge_weight(NodeId src, NodeId dst) const;  // throws if absent

    std::span<const OutEdge> out_edges(NodeId u) const;
    std::vector<NodeId> successors(NodeId u) const;  // sorted ascending
    std::size_t out_degree(NodeId u) const;
    std::size_t indegree(NodeId u) const;
    std::size_t max_indegree() const;

    void set_node_weight(NodeId u, double w);  // rejects w < 0
    double node_weight(NodeId u) const;

    // Re-derives indegrees and checks every stored invariant.
    void validate() const;

private:
    void check_node(NodeId u) const;

    std::vector<std::vector<OutEdge>> adj_;
    std::vector<std::size_t> indegree_;
    std::vector<double> node_weight_;
    std::size_t edge_count_ = 0;
};

// A TrustGraph plus provenance: edges are either copies of the source
// graph or trust values inferred from paths.
class InferredGraph {
public:
    InferredGraph() = default;
    explicit InferredGraph(TrustGraph base);

    const TrustGraph& graph() const { return graph_; }

    // The pair must not collide with an original edge; weight in (0,1].
    void add_inferred(NodeId src, NodeId dst, double weight);

    bool is_inferred(NodeId src, NodeId dst) const;
    std::size_t inferred_count() const { return inferred_.size(); }
    std::size_t original_count() const { return original_count_; }

    // Sorted by (src,dst); insertion happens in key order in practice.
    const std::vector<std::pair<NodeId, NodeId>>& inferred_pairs() const { return inferred_; }

private:
    TrustGraph graph_;
    std::vector<std::pair<NodeId, NodeId>> inferred_;
    std::size_t original_count_ = 0;
    bool sorted_ = true;
};

}  // namespace pathtrust

#endif
