#ifndef PATHTRUST_DATAIO_HPP
#define PATHTRUST_DATAIO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pathtrust/graph.hpp"
#include "pathtrust/ratings.hpp"

namespace pathtrust {

struct IngestOptions {
    std::optional<std::size_t> user_cap;  // seeded uniform subsample before filtering
    std::uint64_t seed = 0;
    RatingScale scale{0.5, 4.0};
    double default_trust = 1.0;  // weight for two-column trust records
};

struct IngestResult {
    TrustGraph graph;
    RatingTable ratings;
    std::vector<std::string> user_ids;  // dense id -> raw dataset id
    std::vector<std::string> item_ids;
    std::size_t tie_count = 0;
    std::size_t dropped_self_loops = 0;
};

// Reads (truster, trustee[, weight]) and (user, item, rating) records,
// one per line, tab/comma/space separated. Filters: optional seeded
// user subsample, then users present in both files, then items rated
// by at least two surviving users. Dense ids follow the sorted order
// of the raw ids (numeric when all ids parse as integers).
IngestResult ingest(const std::string& trust_file, const std::string& rating_file,
                    const IngestOptions& opts = {});

// Edge list: src<TAB>dst<TAB>weight<TAB>provenance. Ids are the raw
// labels when a map is given, dense ids otherwise.
void write_edge_list(const std::string& path, const TrustGraph& graph,
                     const std::vector<std::string>* ids = nullptr);
void write_edge_list(const std::string& path, const InferredGraph& graph,
                     const std::vector<std::string>* ids = nullptr);

// Dense-id readers for files produced by the writers above.
TrustGraph read_edge_list(const std::string& path);
InferredGraph read_inferred_edge_list(const std::string& path);

void write_ratings(const std::string& path, const RatingTable& ratings,
                   const std::vector<std::string>* user_ids = nullptr,
                   const std::vector<std::string>* item_ids = nullptr);

}  // namespace pathtrust

#endif
