#pragma once

#include <map>
#include <string>
#include <vector>

#include "symrep/errors.hpp"
#include "symrep/numeric.hpp"

namespace symrep {

/// Exact-rational polynomial in x_1, x_2, ... with the grading
/// deg(x_k) = k.  Keys are exponent vectors with trailing zeros stripped;
/// zero coefficients are pruned eagerly so equality is structural.
class GradedPolynomial {
public:
    using Exponents = std::vector<int>; // exps[k-1] = exponent of x_k

    GradedPolynomial() = default;
    static GradedPolynomial constant(const Rational& c);
    /// The single variable x_k.
    static GradedPolynomial variable(int k);

    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Exponents exps, const Rational& c);

    GradedPolynomial operator+(const GradedPolynomial& rhs) const;
    GradedPolynomial operator-(const GradedPolynomial& rhs) const;
    GradedPolynomial operator*(const GradedPolynomial& rhs) const;
    GradedPolynomial operator*(const Rational& c) const;
    bool operator==(const GradedPolynomial& rhs) const = default;

    GradedPolynomial derivative(int k) const;
    Rational constant_term() const;

    /// Graded degree of a monomial: sum of k * exps[k-1].
    static int degree(const Exponents& e);
    /// True if every monomial has the same graded degree (or the
    /// polynomial is zero).
    bool is_homogeneous(int deg) const;

    /// "c1 * x1^a1 x2^a2 + ..." with rationals rendered as p/q.
    std::string to_string() const;

private:
    std::map<Exponents, Rational> terms_;
};

} // namespace symrep
