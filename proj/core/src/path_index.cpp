#include "pathtrust/path_index.hpp"

#include <sstream>
#include <stdexcept>

namespace pathtrust {

void PathIndex::add_path(const Path& path) {
    if (path.size() < 3) throw std::invalid_argument("path shorter than 2 edges");
    entries_[{path.front(), path.back()}].push_back(path);
}

bool PathIndex::add_path_if_new_key(const Path& path) {
    if (path.size() < 3) throw std::invalid_argument("path shorter than 2 edges");
    auto [it, inserted] = entries_.try_emplace({path.front(), path.back()});
    if (!inserted) return false;
    it->second.push_back(path);
    return true;
}

bool PathIndex::contains(NodeId src, NodeId dst) const {
    return entries_.count({src, dst}) != 0;
}

const std::vector<Path>* PathIndex::paths(NodeId src, NodeId dst) const {
    auto it = entries_.find({src, dst});
    return it == entries_.end() ? nullptr : &it->second;
}

std::size_t PathIndex::path_count() const {
    std::size_t n = 0;
    for (const auto& [key, paths] : entries_) n += paths.size();
    return n;
}

std::set<PathIndex::Key> PathIndex::key_set() const {
    std::set<Key> keys;
    for (const auto& [key, paths] : entries_) keys.insert(key);
    return keys;
}

void PathIndex::merge(PathIndex&& other) {
    for (auto& [key, paths] : other.entries_) {
        auto [it, inserted] = entries_.try_emplace(key, std::move(paths));
        if (!inserted)
            throw std::logic_error("merge with overlapping keys");
    }
    other.entries_.clear();
}

void PathIndex::validate(const TrustGraph& graph, int lmax) const {
    for (const auto& [key, paths] : entries_) {
        auto [src, dst] = key;
        if (src == dst) throw std::logic_error("index key with equal endpoints");
        if (graph.has_edge(src, dst))
            throw std::logic_error("index key for an adjacent pair");
        if (paths.empty()) throw std::logic_error("empty path list");
        for (const Path& p : paths) {
            if (p.size() < 3 || static_cast<int>(p.size()) - 1 > lmax)
                throw std::logic_error("path length outside [2, lmax]");
            if (p.front() != src || p.back() != dst)
                throw std::logic_error("path endpoints disagree with key");
            std::set<NodeId> seen(p.begin(), p.end());
            if (seen.size() != p.size()) throw std::logic_error("path is not simple");
            for (std::size_t i = 0; i + 1 < p.size(); ++i)
                if (!graph.has_edge(p[i], p[i + 1]))
                    throw std::logic_error("path step is not an edge of the source graph");
        }
    }
}

std::string PathIndex::serialize() const {
    std::ostringstream out;
    for (const auto& [key, paths] : entries_) {
        out << key.first << ' ' << key.second << ':';
        for (const Path& p : paths) {
            for (NodeId u : p) out << ' ' << u;
            out << ';';
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace pathtrust
