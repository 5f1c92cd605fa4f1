#pragma once

#include <vector>

#include "symrep/partition.hpp"

namespace symrep {

/// Difference of two nested Young diagrams.  The inner shape may be empty,
/// in which case this is an ordinary (straight) shape.
class SkewShape {
public:
    SkewShape() = default;
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    int size() const { return outer_.size() - inner_.size(); }
    bool is_straight() const { return inner_.empty(); }

    /// Cells of outer minus inner, row-major.
    std::vector<Node> cells() const;

    bool contains(const Node& a) const;

    auto operator<=>(const SkewShape&) const = default;

private:
    Partition outer_;
    Partition inner_;
};

inline SkewShape skew(Partition outer, Partition inner) {
    return SkewShape(std::move(outer), std::move(inner));
}

/// Edge adjacency (shared side) of the cell set.
bool is_connected(const SkewShape& s);

/// Connected and all cell contents pairwise distinct.
bool is_skew_hook(const SkewShape& s);

/// Number of rows occupied minus one.  Error on the empty shape.
int leg(const SkewShape& s);

} // namespace symrep
