#include "lotkit/gen.hpp"

#include <random>

#include "lotkit/decomposition.hpp"

namespace lotkit {

namespace {

std::string letter_name(int k) {
    return k < 26 ? std::string(1, static_cast<char>('a' + k)) : "v" + std::to_string(k + 1);
}

std::string x_name(int k) { return "x" + std::to_string(k + 1); }

// Deterministic bounded draw; the modulo bias is irrelevant at these sizes
// and keeps the stream identical across platforms.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

LogGraph rosebrock_on(int base) {
    GraphData data;
    data.vertices = {letter_name(base), letter_name(base + 1), letter_name(base + 2)};
    data.edges.push_back({data.vertices[0], data.vertices[1], data.vertices[2]});
    data.edges.push_back({data.vertices[1], data.vertices[2], data.vertices[0]});
    return LogGraph::from_data(data);
}

// Standard Prufer decode; emits edges in the order the sequence is read.
std::vector<std::pair<int, int>> prufer_decode(int m, const std::vector<int>& seq) {
    std::vector<std::pair<int, int>> edges;
    if (m < 2) return edges;
    std::vector<int> degree(m, 1);
    for (int s : seq) ++degree[s];
    for (int s : seq) {
        int leaf = -1;
        for (int v = 0; v < m; ++v) {
            if (degree[v] == 1) {
                leaf = v;
                break;
            }
        }
        edges.emplace_back(leaf, s);
        degree[leaf] = 0;
        --degree[s];
    }
    int u = -1;
    int v = -1;
    for (int i = 0; i < m; ++i) {
        if (degree[i] == 1) (u < 0 ? u : v) = i;
    }
    edges.emplace_back(u, v);
    return edges;
}

std::vector<int> off_edge_vertices(int m, int u, int v) {
    std::vector<int> off;
    off.reserve(m - 2);
    for (int w = 0; w < m; ++w) {
        if (w != u && w != v) off.push_back(w);
    }
    return off;
}

}  // namespace

LogGraph rosebrock_chain(int s, Attachment attachment, std::uint64_t rng_seed) {
    if (s < 1) throw InvalidSizeError("a chain needs at least one part");
    std::mt19937_64 rng(rng_seed);
    LogGraph acc = rosebrock_on(0);
    for (int i = 1; i < s; ++i) {
        LogGraph part = rosebrock_on(3 * i);
        int target;
        switch (attachment) {
            case Attachment::chain: target = acc.vertex_count() - 1; break;
            case Attachment::star: target = 0; break;
            case Attachment::random:
            default: target = static_cast<int>(bounded(rng, acc.vertex_count())); break;
        }
        acc = compose(acc, acc.vertex_name(target), part, part.vertex_name(0));
    }
    return acc;
}

LogGraph random_lot(int m, std::uint64_t rng_seed) {
    if (m == 1) {
        return LogGraph::from_data({{x_name(0)}, {}});
    }
    if (m < 3) {
        throw InvalidSizeError("no interior-reduced LOT exists on " + std::to_string(m) +
                               " vertices");
    }
    std::mt19937_64 rng(rng_seed);
    std::vector<int> seq(m - 2);
    for (int& s : seq) s = static_cast<int>(bounded(rng, m));
    auto edges = prufer_decode(m, seq);

    GraphData data;
    for (int v = 0; v < m; ++v) data.vertices.push_back(x_name(v));
    for (auto [u, v] : edges) {
        std::vector<int> off = off_edge_vertices(m, u, v);
        int label = off[bounded(rng, off.size())];
        data.edges.push_back({x_name(u), x_name(v), x_name(label)});
    }
    return LogGraph::from_data(data);
}

LotEnumerator::LotEnumerator(int m, int cap) : m_(m) {
    if (m < 1) throw InvalidSizeError("vertex count must be positive");
    if (m > cap) {
        throw SizeTooLargeError("census for m = " + std::to_string(m) + " exceeds the cap of " +
                                std::to_string(cap));
    }
    if (m == 2) {
        done_ = true;  // one tree, but its edge admits no interior-reduced label
        return;
    }
    if (m >= 3) {
        prufer_.assign(m - 2, 0);
        label_code_.assign(m - 1, 0);
        rebuild_tree();
    }
}

std::uint64_t LotEnumerator::count_for(int m) {
    if (m == 1) return 1;
    if (m == 2) return 0;
    std::uint64_t trees = 1;
    for (int i = 0; i < m - 2; ++i) trees *= static_cast<std::uint64_t>(m);
    std::uint64_t labelings = 1;
    for (int i = 0; i < m - 1; ++i) labelings *= static_cast<std::uint64_t>(m - 2);
    return trees * labelings;
}

void LotEnumerator::rebuild_tree() {
    tree_edges_ = prufer_decode(m_, prufer_);
    off_edge_.clear();
    for (auto [u, v] : tree_edges_) off_edge_.push_back(off_edge_vertices(m_, u, v));
}

LogGraph LotEnumerator::current() const {
    GraphData data;
    for (int v = 0; v < m_; ++v) data.vertices.push_back(x_name(v));
    for (std::size_t j = 0; j < tree_edges_.size(); ++j) {
        auto [u, v] = tree_edges_[j];
        int label = off_edge_[j][label_code_[j]];
        data.edges.push_back({x_name(u), x_name(v), x_name(label)});
    }
    return LogGraph::from_data(data);
}

std::optional<LogGraph> LotEnumerator::next() {
    if (done_) return std::nullopt;
    if (m_ == 1) {
        done_ = true;
        ++emitted_;
        return LogGraph::from_data({{x_name(0)}, {}});
    }
    if (first_) {
        first_ = false;
        ++emitted_;
        return current();
    }

    // Advance the per-edge label counter (base m-2), then the Prufer
    // counter (base m) on overflow.
    int i = static_cast<int>(label_code_.size()) - 1;
    while (i >= 0 && label_code_[i] == m_ - 3) {
        label_code_[i] = 0;
        --i;
    }
    if (i >= 0) {
        ++label_code_[i];
        ++emitted_;
        return current();
    }

    i = static_cast<int>(prufer_.size()) - 1;
    while (i >= 0 && prufer_[i] == m_ - 1) {
        prufer_[i] = 0;
        --i;
    }
    if (i < 0) {
        done_ = true;
        return std::nullopt;
    }
    ++prufer_[i];
    rebuild_tree();
    ++emitted_;
    return current();
}

}  // namespace lotkit
