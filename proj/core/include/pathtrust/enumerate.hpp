#ifndef PATHTRUST_ENUMERATE_HPP
#define PATHTRUST_ENUMERATE_HPP

#include <span>
#include <string>
#include <vector>

#include "pathtrust/graph.hpp"
#include "pathtrust/path_index.hpp"

namespace pathtrust {

enum class Method { All, H1, H2 };

const char* method_name(Method m);
Method method_from_name(const std::string& name);

enum class CutoffKind { MeanScaled, AlphaPercentile };

struct EnumConfig {
    int lmax = 3;
    Method method = Method::All;
    double cth = 1.0;  // scale on the neighborhood-mean cutoff
    CutoffKind cutoff = CutoffKind::MeanScaled;
    double alpha = 50.0;  // percentile, (0,100), alpha-percentile mode only
    unsigned threads = 0;  // 0 -> hardware concurrency

    void validate() const;
};

// theta^c = cth * mean(neighbor weights); list must be non-empty.
double theta_cutoff(std::span<const double> neighbor_weights, double cth);

// Nearest-rank percentile: ascending sort, element at ceil(alpha/100 * size), 1-based.
double alpha_cutoff(std::vector<double> neighbor_weights, double alpha);

// Every simple path of length 2..lmax between every ordered non-adjacent pair.
PathIndex enumerate_all(const TrustGraph& graph, int lmax, unsigned threads = 0);

// Threshold-pruned enumeration: at each node, only successors whose
// weight passes the cutoff over that node's successor weights are
// expanded to (and recorded). Mean-scaled mode passes on >=,
// alpha-percentile mode on strict >.
PathIndex enumerate_h1(const TrustGraph& graph, std::span<const double> weights,
                       const EnumConfig& cfg);

// H1 plus check-mode recovery: a successor that fails the cutoff is
// still explored, recording a first-found path for any pair whose key
// is absent. The resulting key set equals enumerate_all's exactly.
PathIndex enumerate_h2(const TrustGraph& graph, std::span<const double> weights,
                       const EnumConfig& cfg);

}  // namespace pathtrust

#endif
