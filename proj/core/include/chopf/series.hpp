#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "chopf/element.hpp"

namespace chopf {

/// Exponent of a series term; univariate series use only the first slot.
using Exponent = std::array<int, 2>;

/// Orders exponents by total degree, then by the first variable descending.
struct ExponentOrder {
    bool operator()(const Exponent& a, const Exponent& b) const
    {
        const int da = a[0] + a[1];
        const int db = b[0] + b[1];
        if (da != db)
            return da < db;
        return a[0] > b[0];
    }
};

/// Truncated power (or, univariate, Laurent) series in one or two central
/// indeterminates with coefficients in one algebra. Terms of total degree
/// above the cap are discarded; no stored coefficient is zero.
class Series {
public:
    using Coefficients = std::map<Exponent, Element, ExponentOrder>;

    Series() = default;
    Series(Space space, int nvars, int cap);

    /// The indeterminate itself (slot 0 = T or X, slot 1 = Y).
    static Series variable(Space space, int nvars, int cap, int slot = 0);
    static Series constant(const Element& c, int nvars, int cap);
    /// Sum_k coeffs[k] T^(k + shift).
    static Series from_coefficients(const std::vector<Element>& coeffs, int cap, int shift = 0);

    [[nodiscard]] Space space() const { return space_; }
    [[nodiscard]] int nvars() const { return nvars_; }
    [[nodiscard]] int cap() const { return cap_; }
    [[nodiscard]] Ground ground() const { return ground_; }
    [[nodiscard]] const Coefficients& coefficients() const { return coeffs_; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] const std::vector<std::string>& variable_names() const { return names_; }
    void set_variable_names(std::vector<std::string> names);

    [[nodiscard]] Element coefficient(int k) const { return coefficient(Exponent{k, 0}); }
    [[nodiscard]] Element coefficient(const Exponent& e) const;
    void add_term(const Exponent& e, const Element& c);
    void set_ground(Ground g) { ground_ = g; }
    /// Lowest exponent present (univariate), or cap + 1 for zero.
    [[nodiscard]] int valuation() const;
    [[nodiscard]] Series truncated(int cap) const;

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series& operator*=(const Scalar& c);
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(Series a, const Scalar& c) { return a *= c; }
    friend Series operator*(const Scalar& c, Series a) { return a *= c; }
    friend bool operator==(const Series& a, const Series& b);

    /// "c0 + c1*T + c2*T^2 + ..." (X and Y for bivariate series).
    [[nodiscard]] std::string str() const;

private:
    Space space_{};
    int nvars_ = 1;
    int cap_ = 0;
    Ground ground_ = Ground::integers;
    std::vector<std::string> names_{"T"};
    Coefficients coeffs_;

    void adopt_space(Space s);
};

/// Cauchy product; coefficients of f multiply on the left. Result cap = min of caps.
Series ps_mul(const Series& f, const Series& g);
Series operator*(const Series& f, const Series& g);
/// Element times series, the element on the left of every coefficient.
Series operator*(const Element& a, const Series& f);
Series ps_pow(const Series& f, int n);

/// Two-sided inverse; the constant term must be an invertible scalar multiple of 1.
Series ps_invert(const Series& f);

/// sum_k c_k * inner^k with the outer coefficient c_k on the left. The inner
/// series must have zero constant term; it may be bivariate.
Series ps_compose(const Series& outer, const Series& inner);

/// Compositional inverse of T + (higher order) over a commutative coefficient algebra.
Series ps_revert(const Series& f);

/// Coefficient of T^-1.
Element ps_residue(const Series& f);

/// Truncated exponential (zero constant term) and logarithm (constant term 1);
/// both require rational scalars.
Series ps_exp(const Series& f);
Series ps_log(const Series& f);

/// f(-T) (or f(-X,-Y)).
Series ps_negate_variable(const Series& f);
/// T^k * f.
Series ps_shift(const Series& f, int k);
/// Univariate f regarded as a bivariate series in X (slot 0) or Y (slot 1).
Series ps_embed(const Series& f, int slot);
/// Bivariate series with the variable in `slot` set to zero (result univariate in the other).
Series ps_set_zero(const Series& f, int slot);
/// Applies a linear map to every coefficient.
Series ps_map(const Series& f, Space target, const std::function<Element(const Element&)>& map);

} // namespace chopf
