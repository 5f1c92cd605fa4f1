#include "symrep/fock.hpp"

#include "symrep/schur.hpp"
#include "symrep/skew.hpp"

namespace symrep {

FockVector FockVector::basis(const Partition& la, int cap) {
    FockVector v;
    v.cap = cap;
    v.add(la, 1);
    return v;
}

void FockVector::add(const Partition& la, const Rational& c) {
    if (c == 0) return;
    if (la.size() > cap)
        throw truncation_error("fock vector term beyond the degree cap");
    auto [it, inserted] = terms.emplace(la, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

FockVector FockVector::operator+(const FockVector& rhs) const {
    FockVector out = *this;
    for (const auto& [la, c] : rhs.terms) out.add(la, c);
    return out;
}

FockVector FockVector::operator-(const FockVector& rhs) const {
    FockVector out = *this;
    for (const auto& [la, c] : rhs.terms) out.add(la, -c);
    return out;
}

Rational FockVector::pair(const FockVector& rhs) const {
    Rational total = 0;
    for (const auto& [la, c] : terms) {
        auto it = rhs.terms.find(la);
        if (it != rhs.terms.end()) total += c * it->second;
    }
    return total;
}

namespace {

int hook_sign(const SkewShape& hook) { return leg(hook) % 2 == 0 ? 1 : -1; }

} // namespace

FockVector lambda_op(int k, const FockVector& v) {
    if (k == 0)
        throw domain_error("Lambda_0 is not well defined on the fermionic space");
    FockVector out;
    out.cap = v.cap;
    for (const auto& [la, c] : v.terms) {
        if (k > 0) {
            if (la.size() < k) continue;
            for (const Partition& mu : partitions_of(la.size() - k)) {
                if (!la.contains(mu)) continue;
                SkewShape hook(la, mu);
                if (!is_skew_hook(hook)) continue;
                out.add(mu, c * hook_sign(hook));
            }
        } else {
            const int grow = -k;
            if (la.size() + grow > v.cap)
                throw truncation_error("hook addition exceeds the Fock degree cap");
            for (const Partition& mu : partitions_of(la.size() + grow)) {
                if (!mu.contains(la)) continue;
                SkewShape hook(mu, la);
                if (!is_skew_hook(hook)) continue;
                out.add(mu, c * hook_sign(hook));
            }
        }
    }
    return out;
}

FockVector heisenberg_residual(int n, int k, const Partition& la, int cap) {
    if (n == 0 || k == 0) throw domain_error("heisenberg_residual: indices must be nonzero");
    if (la.size() + std::abs(n) + std::abs(k) > cap)
        throw domain_error("heisenberg_residual: cap too small for an exact commutator");
    FockVector v = FockVector::basis(la, cap);
    FockVector residual = lambda_op(n, lambda_op(k, v)) - lambda_op(k, lambda_op(n, v));
    if (n == -k) {
        FockVector scaled;
        scaled.cap = cap;
        scaled.add(la, Rational(n));
        residual = residual - scaled;
    }
    return residual;
}

Integer fock_character(const Partition& la, const Partition& rho) {
    if (la.size() != rho.size())
        throw domain_error("fock_character: |la| must equal |rho|");
    FockVector v = FockVector::basis(la, la.size());
    for (int part : rho.parts()) v = lambda_op(part, v);
    const Rational c = v.pair(FockVector::basis(Partition{}, la.size()));
    if (denominator(c) != 1)
        throw domain_error("fock_character: non-integer coefficient");
    return numerator(c);
}

BosonResidual boson_image_residual(const Partition& la, int n, int cap) {
    if (n < 1) throw domain_error("boson_image_residual: n must be positive");
    if (la.size() + n > cap)
        throw domain_error("boson_image_residual: cap too small");

    auto boson_image = [](const FockVector& v) {
        GradedPolynomial p;
        for (const auto& [mu, c] : v.terms) p = p + schur_poly(mu) * c;
        return p;
    };

    const FockVector v = FockVector::basis(la, cap);
    const GradedPolynomial s_la = schur_poly(la);

    BosonResidual res;
    res.raising = boson_image(lambda_op(-n, v)) -
                  GradedPolynomial::variable(n) * s_la * Rational(n);
    res.lowering = boson_image(lambda_op(n, v)) - s_la.derivative(n);
    return res;
}

} // namespace symrep
