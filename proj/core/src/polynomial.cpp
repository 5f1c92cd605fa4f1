#include "symrep/polynomial.hpp"

#include <sstream>

namespace symrep {

namespace {
void strip_zeros(GradedPolynomial::Exponents& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
}
} // namespace

GradedPolynomial GradedPolynomial::constant(const Rational& c) {
    GradedPolynomial p;
    p.add_term({}, c);
    return p;
}

GradedPolynomial GradedPolynomial::variable(int k) {
    if (k < 1) throw domain_error("variable index must be positive");
    GradedPolynomial p;
    Exponents e(k, 0);
    e[k - 1] = 1;
    p.add_term(std::move(e), 1);
    return p;
}

void GradedPolynomial::add_term(Exponents exps, const Rational& c) {
    if (c == 0) return;
    strip_zeros(exps);
    auto [it, inserted] = terms_.emplace(std::move(exps), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GradedPolynomial GradedPolynomial::operator+(const GradedPolynomial& rhs) const {
    GradedPolynomial out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
    return out;
}

GradedPolynomial GradedPolynomial::operator-(const GradedPolynomial& rhs) const {
    GradedPolynomial out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, -c);
    return out;
}

GradedPolynomial GradedPolynomial::operator*(const GradedPolynomial& rhs) const {
    GradedPolynomial out;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : rhs.terms_) {
            Exponents e(std::max(ea.size(), eb.size()), 0);
            for (size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
            for (size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            out.add_term(std::move(e), ca * cb);
        }
    return out;
}

GradedPolynomial GradedPolynomial::operator*(const Rational& c) const {
    GradedPolynomial out;
    for (const auto& [e, v] : terms_) out.add_term(e, v * c);
    return out;
}

GradedPolynomial GradedPolynomial::derivative(int k) const {
    if (k < 1) throw domain_error("variable index must be positive");
    GradedPolynomial out;
    for (const auto& [e, c] : terms_) {
        if (static_cast<int>(e.size()) < k || e[k - 1] == 0) continue;
        Exponents d = e;
        --d[k - 1];
        out.add_term(std::move(d), c * e[k - 1]);
    }
    return out;
}

Rational GradedPolynomial::constant_term() const {
    auto it = terms_.find({});
    return it == terms_.end() ? Rational(0) : it->second;
}

int GradedPolynomial::degree(const Exponents& e) {
    int d = 0;
    for (size_t i = 0; i < e.size(); ++i) d += static_cast<int>(i + 1) * e[i];
    return d;
}

bool GradedPolynomial::is_homogeneous(int deg) const {
    for (const auto& [e, c] : terms_)
        if (degree(e) != deg) return false;
    return true;
}

std::string GradedPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c;
        if (!e.empty()) {
            os << " *";
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                os << " x" << (i + 1);
                if (e[i] > 1) os << '^' << e[i];
            }
        }
    }
    return os.str();
}

} // namespace symrep
