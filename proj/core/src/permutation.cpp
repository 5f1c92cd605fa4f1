#include "symrep/permutation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace symrep {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 1 || v > degree() || seen[v - 1])
            throw domain_error("not a permutation in one-line notation");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    return Permutation(img);
}

Permutation Permutation::simple(int k, int n) {
    return transposition(k, k + 1, n);
}

Permutation Permutation::transposition(int a, int b, int n) {
    if (a < 1 || b < 1 || a > n || b > n || a == b)
        throw domain_error("bad transposition");
    auto w = identity(n);
    std::swap(w.images_[a - 1], w.images_[b - 1]);
    return w;
}

Permutation Permutation::parse(const std::string& text, int n) {
    if (text.find('(') == std::string::npos) {
        std::vector<int> img;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) img.push_back(std::stoi(item));
        if (n > static_cast<int>(img.size()))
            for (int i = static_cast<int>(img.size()) + 1; i <= n; ++i)
                img.push_back(i);
        return Permutation(img);
    }
    // Cycle notation.
    std::vector<std::vector<int>> cycles;
    size_t pos = 0;
    int max_letter = n;
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) { ++pos; continue; }
        if (text[pos] != '(') throw domain_error("bad cycle notation");
        size_t close = text.find(')', pos);
        if (close == std::string::npos) throw domain_error("unbalanced cycle notation");
        std::string body = text.substr(pos + 1, close - pos - 1);
        for (char& ch : body)
            if (ch == ',') ch = ' ';
        std::stringstream ss(body);
        std::vector<int> cyc;
        int v;
        while (ss >> v) {
            cyc.push_back(v);
            max_letter = std::max(max_letter, v);
        }
        if (!cyc.empty()) cycles.push_back(cyc);
        pos = close + 1;
    }
    auto w = identity(max_letter);
    for (const auto& cyc : cycles)
        for (size_t i = 0; i < cyc.size(); ++i)
            w.images_[cyc[i] - 1] = cyc[(i + 1) % cyc.size()];
    // Re-validate: overlapping cycles could break bijectivity.
    return Permutation(w.images_);
}

Permutation Permutation::compose(const Permutation& rhs) const {
    if (degree() != rhs.degree())
        throw domain_error("composing permutations of different degrees");
    std::vector<int> img(degree());
    for (int i = 1; i <= degree(); ++i) img[i - 1] = (*this)(rhs(i));
    return Permutation(img);
}

Permutation Permutation::inverse() const {
    std::vector<int> img(degree());
    for (int i = 1; i <= degree(); ++i) img[(*this)(i)-1] = i;
    return Permutation(img);
}

std::string Permutation::to_string() const {
    std::string s;
    for (int i = 0; i < degree(); ++i) {
        if (i) s += ',';
        s += std::to_string(images_[i]);
    }
    return s;
}

Partition cycle_type(const Permutation& w) {
    std::vector<bool> seen(w.degree(), false);
    std::vector<int> lens;
    for (int i = 1; i <= w.degree(); ++i) {
        if (seen[i - 1]) continue;
        int len = 0;
        for (int j = i; !seen[j - 1]; j = w(j)) {
            seen[j - 1] = true;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return Partition(lens);
}

Permutation class_representative(const Partition& rho) {
    const int n = rho.size();
    std::vector<int> img(n);
    int start = 1;
    for (int len : rho.parts()) {
        for (int i = 0; i < len; ++i)
            img[start - 1 + i] = start + (i + 1) % len;
        start += len;
    }
    return Permutation(img);
}

Integer class_size(const Partition& rho) {
    // n! / z_rho, z_rho = prod_i i^{l_i} l_i!.
    std::map<int, int> mult;
    for (int p : rho.parts()) ++mult[p];
    Integer z = 1;
    for (auto [i, l] : mult) {
        for (int t = 0; t < l; ++t) z *= i;
        z *= factorial(l);
    }
    return factorial(rho.size()) / z;
}

int coxeter_length(const Permutation& w) {
    int count = 0;
    for (int i = 1; i <= w.degree(); ++i)
        for (int j = i + 1; j <= w.degree(); ++j)
            if (w(i) > w(j)) ++count;
    return count;
}

std::vector<int> reduced_word(const Permutation& w) {
    // Bubble-sort the one-line form; each recorded swap multiplies by a
    // simple transposition on the right, so the word is read off reversed.
    auto img = w.images();
    std::vector<int> word;
    bool progress = true;
    while (progress) {
        progress = false;
        for (size_t i = 0; i + 1 < img.size(); ++i) {
            if (img[i] > img[i + 1]) {
                std::swap(img[i], img[i + 1]);
                word.push_back(static_cast<int>(i) + 1);
                progress = true;
            }
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

} // namespace symrep
