#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chopf/index.hpp"
#include "chopf/scalar.hpp"

namespace chopf {

/// Underlying graded algebra of an element.
///   scalar  the ground ring itself (only the empty index)
///   sym     symmetric functions S*, bases e/h/p/m indexed by partitions
///   nsym    noncommutative symmetric functions N*, basis Z_I (also the algebra of the BFK Hopf algebra)
///   qsym    quasisymmetric functions Q*, monomial basis M_I
///   fdb     polynomial algebra of formal diffeomorphisms, generators t_k (or b_k)
enum class Algebra { scalar, sym, nsym, qsym, fdb };

/// Basis letter. `b` is the fdb algebra relabeled by the generators of H_*(MU);
/// within `b` words the part 0 stands for the central generator beta.
enum class Basis { unit, e, h, p, m, Z, M, t, b };

enum class Ground { integers, rationals };

struct Space {
    Algebra algebra = Algebra::scalar;
    Basis basis = Basis::unit;
    friend bool operator==(const Space&, const Space&) = default;
};

inline constexpr Space kScalarSpace{Algebra::scalar, Basis::unit};
inline constexpr Space kSymE{Algebra::sym, Basis::e};
inline constexpr Space kSymH{Algebra::sym, Basis::h};
inline constexpr Space kSymP{Algebra::sym, Basis::p};
inline constexpr Space kSymM{Algebra::sym, Basis::m};
inline constexpr Space kNSym{Algebra::nsym, Basis::Z};
inline constexpr Space kQSym{Algebra::qsym, Basis::M};
inline constexpr Space kFdB{Algebra::fdb, Basis::t};
inline constexpr Space kFdBb{Algebra::fdb, Basis::b};

std::string_view algebra_name(Algebra a);
std::optional<Algebra> algebra_from_name(std::string_view s);
char basis_letter(Basis b);
std::optional<Basis> basis_from_letter(char c);
/// Algebra a generator letter belongs to (e,h,p,m -> sym; Z -> nsym; M -> qsym; t,b -> fdb).
std::optional<Algebra> algebra_of_letter(char c);
bool is_commutative(Algebra a);

/// Sparse finite linear combination of basis words with exact coefficients.
/// Words of commutative polynomial bases are stored sorted weakly decreasing.
class Element {
public:
    using Terms = std::map<Word, Scalar>;

    Element() = default;
    explicit Element(Space space, Ground ground = Ground::integers) : space_(space), ground_(ground) {}

    static Element zero(Space space) { return Element(space); }
    static Element one(Space space);
    static Element basis(Space space, Word word, Scalar coeff = Scalar(1));
    static Element constant(Scalar c);

    [[nodiscard]] Space space() const { return space_; }
    [[nodiscard]] Algebra algebra() const { return space_.algebra; }
    [[nodiscard]] Basis basis_tag() const { return space_.basis; }
    [[nodiscard]] Ground ground() const { return ground_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }

    [[nodiscard]] Scalar coefficient(const Word& w) const;
    [[nodiscard]] Scalar constant_term() const { return coefficient({}); }
    /// Adds c * [w]; canonicalizes and validates the word for the space.
    void add_term(Word w, const Scalar& c);
    void set_ground(Ground g) { ground_ = g; }
    /// True if every coefficient is an integer.
    [[nodiscard]] bool integral() const;

    /// Largest weight present, or -1 for zero.
    [[nodiscard]] int max_weight() const;
    [[nodiscard]] bool is_homogeneous(int weight) const;
    [[nodiscard]] Element component(int weight) const;
    /// Same terms reinterpreted in another space (no conversion).
    [[nodiscard]] Element relabeled(Space space) const;

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const Scalar& c);

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator-(Element a) { return a *= Scalar(-1); }
    friend Element operator*(Element a, const Scalar& c) { return a *= c; }
    friend Element operator*(const Scalar& c, Element a) { return a *= c; }
    friend Element operator*(const Element& a, const Element& b);

    /// Same space and identical term maps (ground tag ignored).
    friend bool operator==(const Element& a, const Element& b);

    [[nodiscard]] std::string str() const;

private:
    Space space_{};
    Ground ground_ = Ground::integers;
    Terms terms_;
};

Element pow(const Element& x, int n);

/// Product of two basis words in a space.
Element multiply_words(Space space, const Word& a, const Word& b);

/// Canonical form of a word in a space; throws DomainError for invalid parts.
Word canonical_word(Space space, Word w);

/// Text of a single basis word in a space: "e[2,1]", "Z[1,2]", "1" for the empty word.
std::string basis_str(Space space, const Word& w);

/// n-fold tensor of elements; factor spaces are fixed at construction.
class Tensor {
public:
    using Key = std::vector<Word>;
    using Terms = std::map<Key, Scalar>;

    Tensor() = default;
    explicit Tensor(std::vector<Space> factors) : factors_(std::move(factors)) {}

    /// a ⊗ b ⊗ ...
    static Tensor of(const std::vector<Element>& parts);
    static Tensor one(std::vector<Space> factors);

    [[nodiscard]] const std::vector<Space>& factors() const { return factors_; }
    [[nodiscard]] std::size_t arity() const { return factors_.size(); }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] Scalar coefficient(const Key& k) const;

    void add_term(Key k, const Scalar& c);

    Tensor& operator+=(const Tensor& o);
    Tensor& operator-=(const Tensor& o);
    Tensor& operator*=(const Scalar& c);
    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend Tensor operator*(Tensor a, const Scalar& c) { return a *= c; }
    friend Tensor operator*(const Scalar& c, Tensor a) { return a *= c; }
    /// Factorwise product in the tensor product algebra.
    friend Tensor operator*(const Tensor& a, const Tensor& b);
    friend bool operator==(const Tensor& a, const Tensor& b);

    [[nodiscard]] std::string str() const;

private:
    std::vector<Space> factors_;
    Terms terms_;
};

/// x ⊗ y concatenating factor lists.
Tensor tensor(const Tensor& x, const Tensor& y);
Tensor tensor(const Element& x, const Tensor& y);
Tensor tensor(const Tensor& x, const Element& y);

/// Replaces factor `slot` of every term by the tensor `f(word)` (which may have any arity,
/// including 1 for a linear map and 0 for a functional).
Tensor expand_factor(const Tensor& x, std::size_t slot, const std::function<Tensor(const Word&)>& f);

/// Linear map applied on one factor.
Tensor map_factor(const Tensor& x, std::size_t slot, const std::function<Element(const Word&)>& f);

/// Multiplies factors `slot` and `slot + 1` (which must share a space).
Tensor multiply_adjacent(const Tensor& x, std::size_t slot);

/// Collapses a 1-fold tensor to an element.
Element to_element(const Tensor& x);

/// Swaps factors `slot` and `slot + 1`.
Tensor swap_adjacent(const Tensor& x, std::size_t slot);

/// Extends a map on generators multiplicatively over a word: gen(w_1) * gen(w_2) * ...
/// With `reversed`, the factors are multiplied in reverse order (antimorphism).
Element extend_on_word(Space target, const Word& w, const std::function<Element(int)>& gen, bool reversed = false);
Tensor extend_on_word(const std::vector<Space>& target, const Word& w, const std::function<Tensor(int)>& gen);

/// Linear extension of a map defined on basis words.
Element apply_linear(const Element& x, Space target, const std::function<Element(const Word&)>& f);
Tensor apply_linear(const Element& x, const std::vector<Space>& target, const std::function<Tensor(const Word&)>& f);

std::ostream& operator<<(std::ostream& os, const Element& x);
std::ostream& operator<<(std::ostream& os, const Tensor& x);

} // namespace chopf
