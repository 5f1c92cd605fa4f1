#pragma once

#include <compare>
#include <string>
#include <vector>

#include "symrep/errors.hpp"
#include "symrep/numeric.hpp"

namespace symrep {

/// A box of a Young diagram, 1-based.
struct Node {
    int row = 0;
    int col = 0;

    int content() const { return col - row; }
    auto operator<=>(const Node&) const = default;
};

/// Weakly decreasing sequence of positive parts.  Doubles as a Young
/// diagram and as a cycle type.  Trailing zeros are never stored, so the
/// representation is unique; the empty partition has size 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /// Parses "5,3,3,1"; "" and "0" give the empty partition.
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int rows() const { return static_cast<int>(parts_.size()); }

    /// 1-based row length, 0 past the last row.
    int row(int r) const {
        return (r >= 1 && r <= rows()) ? parts_[r - 1] : 0;
    }

    bool empty() const { return parts_.empty(); }
    bool contains(const Partition& inner) const;
    Partition conjugate() const;

    Partition with_removed(const Node& a) const;
    Partition with_added(const Node& a) const;

    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// All partitions of n, decreasing lexicographic, the canonical order for
/// every table in this library.
std::vector<Partition> partitions_of(int n);

std::vector<Node> removable_nodes(const Partition& la);
std::vector<Node> addable_nodes(const Partition& la);

/// n! / product of hook lengths.
Integer hook_dimension(const Partition& la);

} // namespace symrep
