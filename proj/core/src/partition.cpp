#include "symrep/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace symrep {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw domain_error("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw domain_error("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size())
            throw domain_error("bad partition part: '" + item + "'");
        parts.push_back(v);
    }
    return Partition(parts);
}

bool Partition::contains(const Partition& inner) const {
    for (int r = 1; r <= inner.rows(); ++r)
        if (inner.row(r) > row(r)) return false;
    return true;
}

Partition Partition::conjugate() const {
    std::vector<int> cols;
    if (!parts_.empty()) {
        cols.resize(parts_[0], 0);
        for (int p : parts_)
            for (int c = 0; c < p; ++c) ++cols[c];
    }
    return Partition(cols);
}

Partition Partition::with_removed(const Node& a) const {
    if (a.row < 1 || a.row > rows() || a.col != row(a.row))
        throw domain_error("node is not removable");
    auto p = parts_;
    --p[a.row - 1];
    if (a.row < rows() && p[a.row - 1] < p[a.row])
        throw domain_error("node is not removable");
    return Partition(p);
}

Partition Partition::with_added(const Node& a) const {
    auto p = parts_;
    if (a.row == rows() + 1) {
        if (a.col != 1) throw domain_error("node is not addable");
        p.push_back(1);
    } else if (a.row >= 1 && a.row <= rows() && a.col == p[a.row - 1] + 1) {
        ++p[a.row - 1];
        if (a.row > 1 && p[a.row - 1] > p[a.row - 2])
            throw domain_error("node is not addable");
    } else {
        throw domain_error("node is not addable");
    }
    return Partition(p);
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

namespace {
void emit_partitions(int n, int max_part, std::vector<int>& prefix,
                     std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        prefix.push_back(p);
        emit_partitions(n - p, p, prefix, out);
        prefix.pop_back();
    }
}
} // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw domain_error("partitions_of: n must be non-negative");
    std::vector<Partition> out;
    std::vector<int> prefix;
    emit_partitions(n, n, prefix, out);
    if (n == 0) return {Partition{}};
    return out;
}

std::vector<Node> removable_nodes(const Partition& la) {
    std::vector<Node> out;
    for (int r = 1; r <= la.rows(); ++r)
        if (la.row(r) > la.row(r + 1)) out.push_back({r, la.row(r)});
    return out;
}

std::vector<Node> addable_nodes(const Partition& la) {
    std::vector<Node> out;
    for (int r = 1; r <= la.rows() + 1; ++r)
        if (la.row(r) < la.row(r - 1) || r == 1) out.push_back({r, la.row(r) + 1});
    return out;
}

Integer hook_dimension(const Partition& la) {
    const Partition conj = la.conjugate();
    Integer denom = 1;
    for (int r = 1; r <= la.rows(); ++r)
        for (int c = 1; c <= la.row(r); ++c)
            denom *= (la.row(r) - c) + (conj.row(c) - r) + 1;
    return factorial(la.size()) / denom;
}

} // namespace symrep
