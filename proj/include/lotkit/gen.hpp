#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lotkit/graph.hpp"

namespace lotkit {

enum class Attachment { chain, star, random };

/// Exhaustive enumeration above this vertex count must be forced explicitly.
inline constexpr int kDefaultCensusCap = 5;

struct GenSpec {
    enum class Mode { random, exhaustive, rosebrock_chain };

    int m = 0;
    std::uint64_t rng_seed = 0;
    Mode mode = Mode::random;
    int parts = 1;
    Attachment attachment = Attachment::chain;
};

/// Composes s fresh Rosebrock LOTs (m = 2s + 1). The attachment policy
/// picks the identification vertex in the already-built graph: chain = last
/// created vertex, star = first vertex, random = seeded draw. Always
/// decomposable into exactly s parts.
LogGraph rosebrock_chain(int s, Attachment attachment = Attachment::chain,
                         std::uint64_t rng_seed = 0);

/// Uniform random labeled tree on m vertices with each edge label drawn
/// uniformly from the m-2 vertices off that edge; connected and interior
/// reduced by construction, deterministic per seed. m = 1 yields the
/// single vertex; m = 2 is impossible (InvalidSizeError).
LogGraph random_lot(int m, std::uint64_t rng_seed);

/// Streams every labeled tree on m named vertices crossed with every
/// interior-reduced labeling, each exactly once, in a fixed order (trees by
/// lexicographic Prufer sequence, labelings by mixed-radix counter).
/// Total count: m^(m-2) * (m-2)^(m-1) for m >= 3, 1 for m = 1, 0 for m = 2.
class LotEnumerator {
public:
    /// Throws SizeTooLargeError when m exceeds cap.
    explicit LotEnumerator(int m, int cap = kDefaultCensusCap);

    std::optional<LogGraph> next();
    std::uint64_t emitted() const { return emitted_; }

    static std::uint64_t count_for(int m);

private:
    LogGraph current() const;
    void rebuild_tree();

    int m_ = 0;
    bool done_ = false;
    bool first_ = true;
    std::uint64_t emitted_ = 0;
    std::vector<int> prufer_;      // base-m counter over tree shapes
    std::vector<int> label_code_;  // per-edge digit, base m-2
    std::vector<std::pair<int, int>> tree_edges_;
    std::vector<std::vector<int>> off_edge_;  // label choices per edge
};

}  // namespace lotkit
