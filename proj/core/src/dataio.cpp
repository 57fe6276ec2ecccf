#include "pathtrust/dataio.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pathtrust {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == '\t' || c == ',' || c == ' ') {
            if (!cur.empty()) fields.push_back(std::move(cur));
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    if (!cur.empty()) fields.push_back(std::move(cur));
    return fields;
}

[[noreturn]] void parse_error(const std::string& file, std::size_t line_no,
                              const std::string& what) {
    throw std::runtime_error(file + ":" + std::to_string(line_no) + ": " + what);
}

double parse_number(const std::string& s, const std::string& file, std::size_t line_no) {
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        parse_error(file, line_no, "not a number: '" + s + "'");
    }
    if (pos != s.size()) parse_error(file, line_no, "trailing characters in '" + s + "'");
    return v;
}

// Numeric order when every id parses as an integer, lexicographic otherwise.
bool all_numeric(const std::set<std::string>& ids) {
    for (const auto& s : ids) {
        if (s.empty()) return false;
        std::size_t start = s[0] == '-' ? 1 : 0;
        if (start == s.size()) return false;
        for (std::size_t i = start; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

std::vector<std::string> sorted_ids(const std::set<std::string>& ids) {
    std::vector<std::string> out(ids.begin(), ids.end());
    if (all_numeric(ids))
        std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
            return std::stoll(a) < std::stoll(b);
        });
    return out;
}

struct TrustRecord {
    std::string src, dst;
    double weight;
};
struct RatingRecord {
    std::string user, item;
    double value;
};

}  // namespace

IngestResult ingest(const std::string& trust_file, const std::string& rating_file,
                    const IngestOptions& opts) {
    std::ifstream tf(trust_file);
    if (!tf) throw std::runtime_error("cannot open trust file: " + trust_file);
    std::ifstream rf(rating_file);
    if (!rf) throw std::runtime_error("cannot open rating file: " + rating_file);

    std::vector<TrustRecord> ties;
    std::size_t dropped_self = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(tf, line)) {
        ++line_no;
        auto f = split_fields(line);
        if (f.empty()) continue;
        if (f.size() != 2 && f.size() != 3)
            parse_error(trust_file, line_no, "expected 2 or 3 columns");
        double w = f.size() == 3 ? parse_number(f[2], trust_file, line_no) : opts.default_trust;
        if (!(w >= 0.0 && w <= 1.0))
            parse_error(trust_file, line_no, "trust weight outside [0,1]");
        if (f[0] == f[1]) {
            ++dropped_self;
            continue;
        }
        ties.push_back({f[0], f[1], w});
    }

    std::vector<RatingRecord> ratings;
    line_no = 0;
    while (std::getline(rf, line)) {
        ++line_no;
        auto f = split_fields(line);
        if (f.empty()) continue;
        if (f.size() < 3) parse_error(rating_file, line_no, "expected 3 columns");
        double v = parse_number(f[2], rating_file, line_no);
        if (!opts.scale.contains(v))
            parse_error(rating_file, line_no, "rating outside declared scale");
        ratings.push_back({f[0], f[1], v});
    }

    std::set<std::string> trust_users, rating_users;
    for (const auto& t : ties) {
        trust_users.insert(t.src);
        trust_users.insert(t.dst);
    }
    for (const auto& r : ratings) rating_users.insert(r.user);

    // Filter 1: optional seeded uniform subsample of the user universe.
    std::set<std::string> universe;
    universe.insert(trust_users.begin(), trust_users.end());
    universe.insert(rating_users.begin(), rating_users.end());
    std::set<std::string> sampled;
    if (opts.user_cap && *opts.user_cap < universe.size()) {
        std::vector<std::string> pool = sorted_ids(universe);
        std::mt19937_64 rng(opts.seed);
        std::shuffle(pool.begin(), pool.end(), rng);
        sampled.insert(pool.begin(), pool.begin() + static_cast<long>(*opts.user_cap));
    } else {
        sampled = universe;
    }

    // Filter 2: users present in both files.
    std::set<std::string> kept_users;
    for (const auto& u : sampled)
        if (trust_users.count(u) && rating_users.count(u)) kept_users.insert(u);

    // Filter 3: items rated by at least two surviving users.
    std::map<std::string, std::set<std::string>> raters_of;
    for (const auto& r : ratings)
        if (kept_users.count(r.user)) raters_of[r.item].insert(r.user);
    std::set<std::string> kept_items;
    for (const auto& [item, raters] : raters_of)
        if (raters.size() >= 2) kept_items.insert(item);

    if (kept_users.empty() || kept_items.empty())
        throw std::runtime_error("ingest produced an empty dataset after filtering");

    IngestResult out;
    out.user_ids = sorted_ids(kept_users);
    out.item_ids = sorted_ids(kept_items);
    out.dropped_self_loops = dropped_self;

    std::map<std::string, NodeId> user_of;
    for (NodeId i = 0; i < out.user_ids.size(); ++i) user_of[out.user_ids[i]] = i;
    std::map<std::string, ItemId> item_of;
    for (ItemId i = 0; i < out.item_ids.size(); ++i) item_of[out.item_ids[i]] = i;

    out.graph = TrustGraph(out.user_ids.size());
    for (const auto& t : ties) {
        auto s = user_of.find(t.src);
        auto d = user_of.find(t.dst);
        if (s == user_of.end() || d == user_of.end()) continue;
        out.graph.add_edge(s->second, d->second, t.weight);
        ++out.tie_count;
    }
    out.tie_count = out.graph.edge_count();  // duplicates collapse, last write wins

    out.ratings = RatingTable(out.user_ids.size(), out.item_ids.size(), opts.scale);
    for (const auto& r : ratings) {
        auto u = user_of.find(r.user);
        auto i = item_of.find(r.item);
        if (u == user_of.end() || i == item_of.end()) continue;
        out.ratings.set_rating(u->second, i->second, r.value);
    }
    return out;
}

namespace {

void write_edge(std::ofstream& out, NodeId src, NodeId dst, double w, const char* provenance,
                const std::vector<std::string>* ids) {
    char wbuf[40];
    std::snprintf(wbuf, sizeof(wbuf), "%.17g", w);
    if (ids)
        out << (*ids)[src] << '\t' << (*ids)[dst] << '\t' << wbuf << '\t' << provenance << '\n';
    else
        out << src << '\t' << dst << '\t' << wbuf << '\t' << provenance << '\n';
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    return out;
}

}  // namespace

void write_edge_list(const std::string& path, const TrustGraph& graph,
                     const std::vector<std::string>* ids) {
    auto out = open_out(path);
    for (NodeId u = 0; u < graph.node_count(); ++u)
        for (const auto& e : graph.out_edges(u))
            write_edge(out, u, e.dst, e.weight, "original", ids);
}

void write_edge_list(const std::string& path, const InferredGraph& graph,
                     const std::vector<std::string>* ids) {
    auto out = open_out(path);
    for (NodeId u = 0; u < graph.graph().node_count(); ++u)
        for (const auto& e : graph.graph().out_edges(u))
            write_edge(out, u, e.dst, e.weight,
                       graph.is_inferred(u, e.dst) ? "inferred" : "original", ids);
}

namespace {

struct ParsedEdge {
    NodeId src, dst;
    double weight;
    bool inferred;
};

std::vector<ParsedEdge> parse_edges(const std::string& path, NodeId& max_id) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list: " + path);
    std::vector<ParsedEdge> edges;
    std::string line;
    std::size_t line_no = 0;
    max_id = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto f = split_fields(line);
        if (f.empty()) continue;
        if (f.size() < 2) parse_error(path, line_no, "expected at least 2 columns");
        ParsedEdge e{};
        try {
            e.src = static_cast<NodeId>(std::stoul(f[0]));
            e.dst = static_cast<NodeId>(std::stoul(f[1]));
        } catch (const std::exception&) {
            parse_error(path, line_no, "node ids must be non-negative integers");
        }
        e.weight = f.size() >= 3 ? parse_number(f[2], path, line_no) : 1.0;
        e.inferred = f.size() >= 4 && f[3] == "inferred";
        max_id = std::max({max_id, e.src, e.dst});
        edges.push_back(e);
    }
    return edges;
}

}  // namespace

TrustGraph read_edge_list(const std::string& path) {
    NodeId max_id = 0;
    auto edges = parse_edges(path, max_id);
    TrustGraph g(edges.empty() ? 0 : static_cast<std::size_t>(max_id) + 1);
    for (const auto& e : edges) g.add_edge(e.src, e.dst, e.weight);
    return g;
}

InferredGraph read_inferred_edge_list(const std::string& path) {
    NodeId max_id = 0;
    auto edges = parse_edges(path, max_id);
    TrustGraph base(edges.empty() ? 0 : static_cast<std::size_t>(max_id) + 1);
    for (const auto& e : edges)
        if (!e.inferred) base.add_edge(e.src, e.dst, e.weight);
    InferredGraph g(std::move(base));
    for (const auto& e : edges)
        if (e.inferred) g.add_inferred(e.src, e.dst, e.weight);
    return g;
}

void write_ratings(const std::string& path, const RatingTable& ratings,
                   const std::vector<std::string>* user_ids,
                   const std::vector<std::string>* item_ids) {
    auto out = open_out(path);
    char buf[40];
    for (NodeId u = 0; u < ratings.user_count(); ++u) {
        for (const auto& [item, value] : ratings.user_ratings(u)) {
            std::snprintf(buf, sizeof(buf), "%.17g", value);
            if (user_ids)
                out << (*user_ids)[u] << '\t';
            else
                out << u << '\t';
            if (item_ids)
                out << (*item_ids)[item] << '\t';
            else
                out << item << '\t';
            out << buf << '\n';
        }
    }
}

}  // namespace pathtrust
