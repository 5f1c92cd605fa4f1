#pragma once

#include <vector>

#include "symrep/permutation.hpp"
#include "symrep/skew.hpp"

namespace symrep {

/// Bijective increasing filling of a (skew) shape by 1..k.  Stored as the
/// entry -> box sequence; the box -> entry direction is derived on demand.
class StandardTableau {
public:
    StandardTableau() = default;
    StandardTableau(SkewShape shape, std::vector<Node> box_of_entry);

    const SkewShape& shape() const { return shape_; }
    int size() const { return static_cast<int>(boxes_.size()); }

    /// Box holding entry k (1-based).
    const Node& box_of(int k) const { return boxes_[k - 1]; }
    /// Entry in a given box; 0 if the box is not in the shape.
    int entry_at(const Node& a) const;

    /// (cont T_1, ..., cont T_k) — the GZ weight for straight shapes.
    std::vector<int> content_vector() const;

    /// Row-by-row rendering, cells aligned; inner cells blank.
    std::string to_string() const;

    auto operator<=>(const StandardTableau&) const = default;

private:
    SkewShape shape_;
    std::vector<Node> boxes_;
};

/// All standard tableaux of the shape, ordered lexicographically by
/// content vector.  This order fixes matrix row/column order everywhere.
std::vector<StandardTableau> standard_tableaux(const SkewShape& shape);

inline std::vector<StandardTableau> standard_tableaux(const Partition& la) {
    return standard_tableaux(SkewShape(la, Partition{}));
}

/// Row-reading filling 1..n, first row first.
StandardTableau canonical_tableau(const Partition& la);

/// The three conditions characterizing content vectors of standard tableaux:
/// (i) i_1 = 0; (ii) every later entry has a +-1 neighbour earlier;
/// (iii) equal entries are separated by both adjacent values.
bool is_valid_weight(const std::vector<int>& i);

/// Unique standard tableau with the given content vector.
StandardTableau weight_to_tableau(const std::vector<int>& i);

/// Swap entries k and k+1; only allowed when their contents differ by >= 2.
StandardTableau admissible_transposition(const StandardTableau& t, int k);

/// Generator indices moving T to the canonical tableau by admissible
/// transpositions; the word is reduced.
std::vector<int> path_to_canonical(const StandardTableau& t);

/// The permutation w with T = w . T(shape), straight shapes only.
Permutation tableau_word(const StandardTableau& t);

} // namespace symrep
