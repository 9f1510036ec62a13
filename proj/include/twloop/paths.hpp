#pragma once

#include <functional>
#include <vector>

#include "twloop/admissible.hpp"

namespace twl {

// a * sum_{i in Y°} kappa(i) eps_i
Vec shape_weight(const AffineRootDatum& d, NodeSet y_circ, i64 a);

// Nodes where a dominant weight vanishes; W_J is its stabilizer.
NodeSet stabilizer_nodes(const Vec& shape);

struct LSPath {
    Vec shape;
    std::vector<int> directions;   // indices into the Bruhat graph, strictly decreasing
    std::vector<Rational> cuts;    // 0 = a_0 < a_1 < ... < a_s = 1
};

// Counts (and optionally emits) LS paths of the given shape whose initial
// direction lies in `allowed`.  The graph must be built modulo the stabilizer
// of the shape and contain everything below the allowed directions.
class LSPathCounter {
public:
    LSPathCounter(const BruhatGraph& graph, const Vec& shape);

    // |pairing| carried by each edge, <lower(shape), beta^vee>
    const std::vector<i64>& edge_pairings() const { return pair_; }

    // Number of LS paths with initial direction in `allowed` (graph indices).
    i64 count(const std::vector<int>& allowed) const;

    // Depth-first emission in a deterministic order; returns the number emitted.
    i64 enumerate(const std::vector<int>& allowed, const std::function<void(const LSPath&)>& sink) const;

    // Is there a descending chain from `from` to `to` along covers whose pairings are
    // divisible by d?
    bool chain_exists(int from, int to, i64 d) const;

    bool is_ls_path(const LSPath& p) const;

    const std::vector<Rational>& cut_values() const { return cuts_; }

private:
    const BruhatGraph& g_;
    Vec shape_;
    std::vector<i64> pair_;
    std::vector<Rational> cuts_;           // candidate cut values in (0,1), increasing
    std::vector<int> order_;               // graph indices by increasing length
    mutable std::vector<std::pair<i64, std::vector<std::vector<std::uint64_t>>>> reach_;
    const std::vector<std::vector<std::uint64_t>>& reach(i64 d) const;
};

std::string format_path(const WeylGroup& g, const BruhatGraph& graph, const LSPath& p);

// h^(mu)_Y(a) for a projected coweight lambda.
struct HCount {
    i64 value = 0;
    NodeSet y_circ = 0;
    std::size_t allowed = 0;
    std::size_t graph_size = 0;
};
HCount count_h_Y(const WeylGroup& g, const Vec& lambda, NodeSet y, i64 a, std::size_t cap = 20000,
                 const std::function<void(const LSPath&, const BruhatGraph&)>& sink = nullptr);

// Number of LS paths of a dominant finite shape over W_0 / W_lambda (no constraint).
i64 finite_ls_count(const WeylGroup& g, const Vec& shape, std::size_t cap = 20000);

}  // namespace twl
