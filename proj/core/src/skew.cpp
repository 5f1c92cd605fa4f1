#include "symrep/skew.hpp"

#include <algorithm>
#include <set>

namespace symrep {

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_))
        throw domain_error("skew shape: inner diagram not contained in outer");
}

std::vector<Node> SkewShape::cells() const {
    std::vector<Node> out;
    for (int r = 1; r <= outer_.rows(); ++r)
        for (int c = inner_.row(r) + 1; c <= outer_.row(r); ++c)
            out.push_back({r, c});
    return out;
}

bool SkewShape::contains(const Node& a) const {
    return a.row >= 1 && a.col > inner_.row(a.row) && a.col <= outer_.row(a.row);
}

bool is_connected(const SkewShape& s) {
    auto cells = s.cells();
    if (cells.empty()) return true;
    std::set<Node> todo(cells.begin() + 1, cells.end());
    std::vector<Node> frontier{cells[0]};
    while (!frontier.empty()) {
        Node a = frontier.back();
        frontier.pop_back();
        for (Node b : {Node{a.row - 1, a.col}, Node{a.row + 1, a.col},
                       Node{a.row, a.col - 1}, Node{a.row, a.col + 1}}) {
            auto it = todo.find(b);
            if (it != todo.end()) {
                todo.erase(it);
                frontier.push_back(b);
            }
        }
    }
    return todo.empty();
}

bool is_skew_hook(const SkewShape& s) {
    if (!is_connected(s)) return false;
    std::set<int> contents;
    for (const Node& a : s.cells())
        if (!contents.insert(a.content()).second) return false;
    return true;
}

int leg(const SkewShape& s) {
    if (s.size() == 0) throw domain_error("leg of the empty skew shape");
    std::set<int> rows;
    for (const Node& a : s.cells()) rows.insert(a.row);
    return static_cast<int>(rows.size()) - 1;
}

} // namespace symrep
