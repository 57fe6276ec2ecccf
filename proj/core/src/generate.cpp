#include "pathtrust/generate.hpp"

#include <random>
#include <set>
#include <stdexcept>

namespace pathtrust {

TrustGraph generate_powerlaw(std::size_t node_count, std::size_t edges_per_node,
                             std::uint64_t seed) {
    if (node_count < 2) throw std::invalid_argument("need at least 2 nodes");
    if (edges_per_node < 1) throw std::invalid_argument("need at least 1 edge per node");

    TrustGraph g(node_count);
    std::mt19937_64 rng(seed);
    // Each node appears once at birth plus once per received edge, so a
    // uniform draw from the pool is preferential attachment with +1 smoothing.
    std::vector<NodeId> pool;
    pool.reserve(node_count * (edges_per_node + 1));
    pool.push_back(0);

    for (NodeId v = 1; v < node_count; ++v) {
        std::size_t wanted = std::min<std::size_t>(edges_per_node, v);
        std::set<NodeId> targets;
        std::size_t attempts = 0;
        while (targets.size() < wanted && attempts < 64 * wanted) {
            std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
            NodeId t = pool[pick(rng)];
            ++attempts;
            if (t == v) continue;
            targets.insert(t);
        }
        for (NodeId t = 0; targets.size() < wanted && t < v; ++t) targets.insert(t);
        for (NodeId t : targets) {
            g.add_edge(v, t, 1.0);
            pool.push_back(t);
        }
        pool.push_back(v);
    }
    return g;
}

}  // namespace pathtrust
