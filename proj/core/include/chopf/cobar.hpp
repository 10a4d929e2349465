#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "chopf/element.hpp"

namespace chopf {

/// Highest cobar level the differential accepts as input.
inline constexpr int kMaxCobarLevel = 2;
/// Highest weight for cohomology rank computations.
inline constexpr int kMaxCohomologyWeight = 5;
/// Highest cohomological degree for rank computations.
inline constexpr int kMaxCohomologyDegree = 1;

enum class AlgebroidKind {
    sym_fdb,  ///< (S*, S* (x) B), right unit psi_S
    nsym_bfk, ///< (N*, N* (x) N), right unit Delta_N
};

std::string_view algebroid_name(AlgebroidKind k); // "S.B", "N.N"
std::optional<AlgebroidKind> algebroid_from_name(std::string_view s);

/// Split Hopf algebroid (A, A (x) H) given by a coaction psi: A -> A (x) H.
class SplitAlgebroid {
public:
    explicit SplitAlgebroid(AlgebroidKind kind);

    [[nodiscard]] AlgebroidKind kind() const { return kind_; }
    [[nodiscard]] Space base() const { return base_; }
    [[nodiscard]] Space hopf() const { return hopf_; }

    /// eta_L(a) = a (x) 1.
    [[nodiscard]] Tensor left_unit(const Element& a) const;
    /// eta_R(a) = psi(a).
    [[nodiscard]] Tensor right_unit(const Element& a) const;
    [[nodiscard]] Tensor coaction_word(const Word& w) const;
    [[nodiscard]] Tensor hopf_coproduct_word(const Word& w) const;
    /// Counit of A (x) H: a (x) h -> a eps(h).
    [[nodiscard]] Element counit(const Tensor& x) const;

    /// Basis words of A (resp. H) of a given weight.
    [[nodiscard]] std::vector<Word> base_words(int weight) const;
    [[nodiscard]] std::vector<Word> hopf_words(int weight) const;

private:
    AlgebroidKind kind_;
    Space base_;
    Space hopf_;
};

/// Level-n cochains are tensors A (x) H^(x)n (arity n + 1).
Tensor cobar_level0(const SplitAlgebroid& alg, const Element& a);

/// Coface d_i, 0 <= i <= n + 1: d_0 applies psi to the A factor, d_i (1 <= i <= n)
/// applies the coproduct of H to the i-th H factor, d_(n+1) appends 1.
Tensor coface(const SplitAlgebroid& alg, const Tensor& x, int i);

/// Codegeneracy s_j, 0 <= j < n: counit on the (j+1)-th H factor.
Tensor codegeneracy(const SplitAlgebroid& alg, const Tensor& x, int j);

/// Alternating sum of cofaces. Throws CapabilityError above kMaxCobarLevel.
Tensor cobar_differential(const SplitAlgebroid& alg, const Tensor& x);

/// Basis of the normalized cochains A (x) Hbar^(x)s in a given total weight.
std::vector<Tensor::Key> normalized_cochain_basis(const SplitAlgebroid& alg, int level, int weight);

/// Rank over Q of the degree-s cohomology of the normalized cobar complex in weight w.
/// Throws CapabilityError for w > kMaxCohomologyWeight or s > kMaxCohomologyDegree.
int cohomology_rank(const SplitAlgebroid& alg, int weight, int degree);

/// eta_R(Z_k) paired in its second factor against M_I:
/// sum over Delta_N Z_k = sum x' (x) x'' of <x'', M_I> x'.
Element right_unit_functional(int k, const Composition& index);

// ---- literal Amitsur construction ----------------------------------------------------

/// A level-n element of the algebroid cobar complex written literally as
/// a (x)_A gamma_1 (x)_A ... (x)_A gamma_n with gamma_i = a_i (x) h_i in Gamma = A (x) H.
/// Stored as a tensor of arity 1 + 2n over (A, A, H, A, H, ...).
Tensor gamma_word(const SplitAlgebroid& alg, const Element& a, const std::vector<std::pair<Element, Element>>& gammas);

/// The isomorphism Gamma^((x)_A n) -> A (x) H^(x)n, moving every A-coefficient to the left
/// through the right unit.
Tensor normalize_gamma_word(const SplitAlgebroid& alg, const Tensor& x);

/// Amitsur coface on literal words: d_0 inserts eta_R of the coefficient, d_i applies the
/// algebroid coproduct Delta(a (x) h) = (a (x) h') (x)_A (1 (x) h''), d_(n+1) appends 1.
Tensor gamma_coface(const SplitAlgebroid& alg, const Tensor& x, int i);

} // namespace chopf
