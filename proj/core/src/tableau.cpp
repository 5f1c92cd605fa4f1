#include "symrep/tableau.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace symrep {

StandardTableau::StandardTableau(SkewShape shape, std::vector<Node> box_of_entry)
    : shape_(std::move(shape)), boxes_(std::move(box_of_entry)) {
    if (static_cast<int>(boxes_.size()) != shape_.size())
        throw domain_error("tableau: entry count does not match shape size");
    std::map<Node, int> entry;
    for (int k = 1; k <= size(); ++k) {
        const Node& a = boxes_[k - 1];
        if (!shape_.contains(a) || !entry.emplace(a, k).second)
            throw domain_error("tableau: entries are not a bijective filling");
    }
    for (const auto& [a, k] : entry) {
        auto right = entry.find({a.row, a.col + 1});
        if (right != entry.end() && right->second < k)
            throw domain_error("tableau: rows must increase");
        auto below = entry.find({a.row + 1, a.col});
        if (below != entry.end() && below->second < k)
            throw domain_error("tableau: columns must increase");
    }
}

int StandardTableau::entry_at(const Node& a) const {
    for (int k = 1; k <= size(); ++k)
        if (boxes_[k - 1] == a) return k;
    return 0;
}

std::vector<int> StandardTableau::content_vector() const {
    std::vector<int> out;
    out.reserve(boxes_.size());
    for (const Node& a : boxes_) out.push_back(a.content());
    return out;
}

std::string StandardTableau::to_string() const {
    const Partition& outer = shape_.outer();
    const Partition& inner = shape_.inner();
    int width = 1;
    for (int w = size(); w >= 10; w /= 10) ++width;
    std::ostringstream os;
    for (int r = 1; r <= outer.rows(); ++r) {
        for (int c = 1; c <= outer.row(r); ++c) {
            if (c > 1) os << ' ';
            if (c <= inner.row(r)) {
                os << std::string(width, '.');
            } else {
                std::string e = std::to_string(entry_at({r, c}));
                os << std::string(width - e.size(), ' ') << e;
            }
        }
        os << '\n';
    }
    return os.str();
}

namespace {

// Fill boxes from the largest entry down: the cell holding the maximum must
// be a removable corner of the outer shape lying outside the inner shape.
void enumerate_fillings(const Partition& outer, const Partition& inner, int k,
                        std::vector<Node>& boxes, const SkewShape& shape,
                        std::vector<StandardTableau>& out) {
    if (k == 0) {
        out.emplace_back(shape, boxes);
        return;
    }
    for (const Node& a : removable_nodes(outer)) {
        if (a.col <= inner.row(a.row)) continue;
        boxes[k - 1] = a;
        enumerate_fillings(outer.with_removed(a), inner, k - 1, boxes, shape, out);
    }
}

} // namespace

std::vector<StandardTableau> standard_tableaux(const SkewShape& shape) {
    std::vector<StandardTableau> out;
    std::vector<Node> boxes(shape.size());
    enumerate_fillings(shape.outer(), shape.inner(), shape.size(), boxes, shape, out);
    std::sort(out.begin(), out.end(),
              [](const StandardTableau& a, const StandardTableau& b) {
                  return a.content_vector() < b.content_vector();
              });
    return out;
}

StandardTableau canonical_tableau(const Partition& la) {
    std::vector<Node> boxes;
    boxes.reserve(la.size());
    for (int r = 1; r <= la.rows(); ++r)
        for (int c = 1; c <= la.row(r); ++c) boxes.push_back({r, c});
    return StandardTableau(SkewShape(la, Partition{}), boxes);
}

bool is_valid_weight(const std::vector<int>& i) {
    const int n = static_cast<int>(i.size());
    if (n == 0) return true;
    if (i[0] != 0) return false;
    for (int k = 1; k < n; ++k) {
        bool neighbour = false;
        for (int m = 0; m < k; ++m)
            if (i[m] == i[k] - 1 || i[m] == i[k] + 1) neighbour = true;
        if (!neighbour) return false;
    }
    for (int k = 0; k < n; ++k)
        for (int m = k + 1; m < n; ++m) {
            if (i[k] != i[m]) continue;
            bool lo = false, hi = false;
            for (int t = k + 1; t < m; ++t) {
                if (i[t] == i[k] - 1) lo = true;
                if (i[t] == i[k] + 1) hi = true;
            }
            if (!lo || !hi) return false;
        }
    return true;
}

StandardTableau weight_to_tableau(const std::vector<int>& i) {
    if (!is_valid_weight(i))
        throw domain_error("not a valid weight vector");
    Partition shape;
    std::vector<Node> boxes;
    for (int k = 0; k < static_cast<int>(i.size()); ++k) {
        bool placed = false;
        for (const Node& a : addable_nodes(shape)) {
            if (a.content() == i[k]) {
                shape = shape.with_added(a);
                boxes.push_back(a);
                placed = true;
                break;
            }
        }
        if (!placed)
            throw domain_error("no addable node on the required diagonal");
    }
    return StandardTableau(SkewShape(shape, Partition{}), boxes);
}

StandardTableau admissible_transposition(const StandardTableau& t, int k) {
    if (k < 1 || k >= t.size())
        throw domain_error("generator index out of range");
    const int c1 = t.box_of(k).content();
    const int c2 = t.box_of(k + 1).content();
    if (c2 == c1 + 1 || c2 == c1 - 1)
        throw domain_error("entries lie on adjacent diagonals; transposition not admissible");
    std::vector<Node> boxes;
    boxes.reserve(t.size());
    for (int m = 1; m <= t.size(); ++m) boxes.push_back(t.box_of(m));
    std::swap(boxes[k - 1], boxes[k]);
    return StandardTableau(t.shape(), boxes);
}

std::vector<int> path_to_canonical(const StandardTableau& t) {
    if (!t.shape().is_straight())
        throw domain_error("path_to_canonical requires a straight shape");
    std::vector<int> word;
    StandardTableau cur = t;
    Partition shape = t.shape().outer();
    for (int m = t.size(); m >= 1; --m) {
        const Node corner{shape.rows(), shape.row(shape.rows())};
        int k = cur.entry_at(corner);
        for (int j = k; j < m; ++j) {
            cur = admissible_transposition(cur, j);
            word.push_back(j);
        }
        shape = shape.with_removed(corner);
    }
    return word;
}

Permutation tableau_word(const StandardTableau& t) {
    if (!t.shape().is_straight())
        throw domain_error("tableau_word requires a straight shape");
    const StandardTableau canon = canonical_tableau(t.shape().outer());
    std::vector<int> img(t.size());
    for (int i = 1; i <= t.size(); ++i)
        img[i - 1] = t.entry_at(canon.box_of(i));
    return Permutation(img);
}

} // namespace symrep
