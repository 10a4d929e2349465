#pragma once

#include <map>
#include <string>
#include <vector>

#include "chopf/scalar.hpp"

namespace chopf {

/// Commutative polynomial in a fixed number of variables x_1..x_N with exact
/// coefficients; exponent vectors have length N. Used as the literal
/// function-level model of symmetric and quasisymmetric functions and as the
/// cohomology ring of products of projective spaces (via truncate()).
class MultiPoly {
public:
    using Exponents = std::vector<int>;
    using Terms = std::map<Exponents, Scalar>;

    explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}
    static MultiPoly constant(int nvars, const Scalar& c);
    static MultiPoly variable(int nvars, int i);
    /// Linear form sum_i coeffs[i] * x_i.
    static MultiPoly linear(const std::vector<int>& coeffs);

    [[nodiscard]] int nvars() const { return nvars_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] Scalar coefficient(const Exponents& e) const;
    void add_term(Exponents e, const Scalar& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Scalar& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const Scalar& c) { return a *= c; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

    /// Drops every monomial with exponent of x_i above bounds[i].
    [[nodiscard]] MultiPoly truncated(const std::vector<int>& bounds) const;
    /// Product followed by truncation, without materializing discarded terms.
    [[nodiscard]] MultiPoly mul_truncated(const MultiPoly& o, const std::vector<int>& bounds) const;
    [[nodiscard]] MultiPoly pow(int n) const;

    /// "x1^2*x2 + x1*x2^2".
    [[nodiscard]] std::string str() const;

private:
    int nvars_ = 0;
    Terms terms_;
};

} // namespace chopf
