#include "pathtrust/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace pathtrust {

const char* method_name(Method m) {
    switch (m) {
        case Method::All: return "all";
        case Method::H1: return "h1";
        case Method::H2: return "h2";
    }
    return "?";
}

Method method_from_name(const std::string& name) {
    if (name == "all") return Method::All;
    if (name == "h1") return Method::H1;
    if (name == "h2") return Method::H2;
    throw std::invalid_argument("unknown method: " + name);
}

void EnumConfig::validate() const {
    if (lmax < 2) throw std::invalid_argument("lmax must be >= 2");
    if (cth < 0.0) throw std::invalid_argument("cth must be >= 0");
    if (cutoff == CutoffKind::AlphaPercentile && !(alpha > 0.0 && alpha < 100.0))
        throw std::invalid_argument("alpha must lie in (0,100)");
}

double theta_cutoff(std::span<const double> neighbor_weights, double cth) {
    if (neighbor_weights.empty())
        throw std::invalid_argument("cutoff over an empty neighborhood");
    double sum = 0.0;
    for (double w : neighbor_weights) sum += w;
    return cth * sum / static_cast<double>(neighbor_weights.size());
}

double alpha_cutoff(std::vector<double> neighbor_weights, double alpha) {
    if (neighbor_weights.empty())
        throw std::invalid_argument("cutoff over an empty neighborhood");
    if (!(alpha > 0.0 && alpha < 100.0))
        throw std::invalid_argument("alpha must lie in (0,100)");
    std::sort(neighbor_weights.begin(), neighbor_weights.end());
    auto n = neighbor_weights.size();
    auto rank = static_cast<std::size_t>(std::ceil(alpha / 100.0 * static_cast<double>(n)));
    rank = std::clamp<std::size_t>(rank, 1, n);
    return neighbor_weights[rank - 1];
}

namespace {

// Depth-first expansion from one source. The threshold at each node is
// computed over the weights of that node's successors and gates which
// successors the walk moves to; check-mode (H2) keeps walking past
// failed successors but records only pairs whose key is still absent.
class Expander {
public:
    Expander(const TrustGraph& graph, std::span<const double> weights, Method method,
             const EnumConfig& cfg, PathIndex& out)
        : graph_(graph), weights_(weights), method_(method), cfg_(cfg), out_(out),
          on_path_(graph.node_count(), 0) {
        path_.reserve(static_cast<std::size_t>(cfg.lmax) + 1);
        scratch_.reserve(64);
    }

    void run_source(NodeId src) {
        source_ = src;
        path_.clear();
        path_.push_back(src);
        on_path_[src] = 1;
        expand(src, cfg_.lmax);
        on_path_[src] = 0;
    }

private:
    bool passes(double w, double cutoff) const {
        return cfg_.cutoff == CutoffKind::MeanScaled ? w >= cutoff : w > cutoff;
    }

    double cutoff_at(std::span<const OutEdge> edges) {
        if (cfg_.cutoff == CutoffKind::MeanScaled) {
            double sum = 0.0;
            for (const auto& e : edges) sum += weights_[e.dst];
            return cfg_.cth * sum / static_cast<double>(edges.size());
        }
        scratch_.clear();
        for (const auto& e : edges) scratch_.push_back(weights_[e.dst]);
        return alpha_cutoff(scratch_, cfg_.alpha);
    }

    void expand(NodeId cur, int budget) {
        if (budget == 0) return;
        auto edges = graph_.out_edges(cur);
        if (edges.empty()) return;
        double cutoff = method_ == Method::All ? 0.0 : cutoff_at(edges);
        for (const auto& e : edges) {
            NodeId s = e.dst;
            if (on_path_[s]) continue;
            bool pass = method_ == Method::All || passes(weights_[s], cutoff);
            if (!pass) {
                if (method_ == Method::H2) {
                    path_.push_back(s);
                    on_path_[s] = 1;
                    if (path_.size() >= 3 && !graph_.has_edge(source_, s))
                        out_.add_path_if_new_key(path_);
                    check_expand(s, budget - 1);
                    on_path_[s] = 0;
                    path_.pop_back();
                }
                continue;
            }
            path_.push_back(s);
            on_path_[s] = 1;
            if (path_.size() >= 3 && !graph_.has_edge(source_, s)) out_.add_path(path_);
            expand(s, budget - 1);
            on_path_[s] = 0;
            path_.pop_back();
        }
    }

    void check_expand(NodeId cur, int budget) {
        if (budget == 0) return;
        for (const auto& e : graph_.out_edges(cur)) {
            NodeId s = e.dst;
            if (on_path_[s]) continue;
            path_.push_back(s);
            on_path_[s] = 1;
            if (path_.size() >= 3 && !graph_.has_edge(source_, s))
                out_.add_path_if_new_key(path_);
            check_expand(s, budget - 1);
            on_path_[s] = 0;
            path_.pop_back();
        }
    }

    const TrustGraph& graph_;
    std::span<const double> weights_;
    Method method_;
    const EnumConfig& cfg_;
    PathIndex& out_;
    std::vector<char> on_path_;
    Path path_;
    NodeId source_ = 0;
    std::vector<double> scratch_;
};

PathIndex run_enumeration(const TrustGraph& graph, std::span<const double> weights,
                          Method method, const EnumConfig& cfg) {
    cfg.validate();
    if (method != Method::All && weights.size() != graph.node_count())
        throw std::invalid_argument("weight map does not cover all nodes");

    std::size_t n = graph.node_count();
    unsigned threads = cfg.threads ? cfg.threads : std::thread::hardware_concurrency();
    threads = std::max(1u, std::min<unsigned>(threads, n == 0 ? 1 : static_cast<unsigned>(n)));

    // Sources partition the key space, so per-worker indices have
    // disjoint keys and the merged result is schedule-independent.
    std::vector<PathIndex> parts(threads);
    std::atomic<std::size_t> next{0};
    auto work = [&](unsigned t) {
        Expander ex(graph, weights, method, cfg, parts[t]);
        for (;;) {
            std::size_t src = next.fetch_add(1);
            if (src >= n) break;
            ex.run_source(static_cast<NodeId>(src));
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }

    PathIndex out;
    for (auto& part : parts) out.merge(std::move(part));
    return out;
}

}  // namespace

PathIndex enumerate_all(const TrustGraph& graph, int lmax, unsigned threads) {
    EnumConfig cfg;
    cfg.lmax = lmax;
    cfg.method = Method::All;
    cfg.threads = threads;
    return run_enumeration(graph, {}, Method::All, cfg);
}

PathIndex enumerate_h1(const TrustGraph& graph, std::span<const double> weights,
                       const EnumConfig& cfg) {
    return run_enumeration(graph, weights, Method::H1, cfg);
}

PathIndex enumerate_h2(const TrustGraph& graph, std::span<const double> weights,
                       const EnumConfig& cfg) {
    return run_enumeration(graph, weights, Method::H2, cfg);
}

}  // namespace pathtrust
