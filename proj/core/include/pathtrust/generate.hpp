#ifndef PATHTRUST_GENERATE_HPP
#define PATHTRUST_GENERATE_HPP

#include <cstdint>

#include "pathtrust/graph.hpp"

namespace pathtrust {

// Directed preferential-attachment graph: each new node trusts up to
// `edges_per_node` earlier nodes, chosen proportionally to indegree+1.
// Edge weights are 1.0. Fully determined by the seed.
TrustGraph generate_powerlaw(std::size_t node_count, std::size_t edges_per_node,
                             std::uint64_t seed);

}  // namespace pathtrust

#endif
