#ifndef PATHTRUST_PATH_INDEX_HPP
#define PATHTRUST_PATH_INDEX_HPP

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pathtrust/graph.hpp"

namespace pathtrust {

// Path store: ordered non-adjacent node pair -> discovered
// simple paths of length 2..L_max. Keyed map is ordered, so iteration
// and serialization are deterministic.
class PathIndex {
public:
    using Key = std::pair<NodeId, NodeId>;
    using Map = std::map<Key, std::vector<Path>>;

    void add_path(const Path& path);          // appends under (front,back)
    bool add_path_if_new_key(const Path& path);  // records only if the key is absent

    bool contains(NodeId src, NodeId dst) const;
    const std::vector<Path>* paths(NodeId src, NodeId dst) const;

    const Map& entries() const { return entries_; }
    std::size_t key_count() const { return entries_.size(); }
    std::size_t path_count() const;

    std::set<Key> key_set() const;

    // Keys are disjoint when workers partition by source node.
    void merge(PathIndex&& other);

    // Checks every stored invariant against the source graph.
    void validate(const TrustGraph& graph, int lmax) const;

    std::string serialize() const;  // canonical text form, for determinism checks

private:
    Map entries_;
};

}  // namespace pathtrust

#endif
