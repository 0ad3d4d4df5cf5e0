#pragma once
/*
 * derivations.hpp
 * ---------------
 * Derivations of ∧V⊗∧W vanishing on ∧V, and φ-derivations along a DG
 * morphism. A derivation of degree n lowers degrees by n and is determined
 * by its values on fibre generators; it extends to products by
 *
 *     θ(a·b) = θ(a)·φ(b) + (−1)^{n|a|} φ(a)·θ(b)
 *
 * with φ the identity in the endomorphism case. The differential is
 * 𝒟θ = D∘θ − (−1)^n θ∘D and the (endomorphism-case) bracket is the graded
 * commutator [θ₁,θ₂] = θ₁∘θ₂ − (−1)^{n₁n₂} θ₂∘θ₁.
 */

#include <vector>

#include "cga/linalg.hpp"
#include "cga/sullivan.hpp"

namespace cga {

class Derivation {
public:
    // Endomorphism case: values over the model's own algebra.
    Derivation(ModelPtr model, int degree);
    // φ-case: values over the morphism's target algebra; the fibre
    // generators being differentiated are the morphism source's.
    Derivation(MorphismPtr morphism, int degree);

    int degree() const { return degree_; }
    const ModelPtr& model() const { return model_; }
    const MorphismPtr& morphism() const { return morphism_; }
    // True when the values live in a genuinely different complex (a
    // non-identity morphism), which forfeits the Lie structure.
    bool phi_case() const { return phi_case_; }
    // Algebra the values live in (target algebra in the φ-case).
    const AlgebraPtr& value_algebra() const;

    const Polynomial& value(int fibre_ordinal) const {
        return values_.at(static_cast<size_t>(fibre_ordinal));
    }
    // Enforces homogeneity: the value on w must be homogeneous of degree
    // |w| − n (or zero); negative-degree values must be zero.
    void set_value(int fibre_ordinal, Polynomial p);

    bool is_zero() const;

    Derivation& operator+=(const Derivation& other);
    Derivation& operator-=(const Derivation& other);
    Derivation& operator*=(const Rational& scalar);
    friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
    friend Derivation operator-(Derivation a, const Derivation& b) { return a -= b; }
    friend Derivation operator*(Derivation a, const Rational& s) { return a *= s; }
    friend Derivation operator*(const Rational& s, Derivation a) { return a *= s; }
    bool operator==(const Derivation& other) const;
    bool operator!=(const Derivation& other) const { return !(*this == other); }

private:
    ModelPtr model_;
    MorphismPtr morphism_;  // null in the endomorphism case
    bool phi_case_ = false;
    int degree_ = 0;
    std::vector<Polynomial> values_;
};

// θ applied to a polynomial over the source algebra.
Polynomial apply(const Derivation& theta, const Polynomial& a);

// 𝒟θ, one degree lower.
Derivation differential(const Derivation& theta);

// Graded commutator; unsupported_error for φ-case operands and
// algebra_mismatch_error across different models.
Derivation bracket(const Derivation& a, const Derivation& b);

// θ: w ↦ (single monomial), zero on other generators.
struct ElementaryDerivation {
    int fibre_ordinal = 0;
    Monomial value;
};

// The finite coordinate space Der^n (or its φ-variant): one basis element per
// (fibre generator, value monomial of degree |w|−n) pair, ordered by fibre
// declaration order then canonical monomial order. With autf set, only value
// monomials containing at least one base-generator factor are kept (the
// ∧⁺V⊗∧W subcomplex).
class DerivationSpace {
public:
    static DerivationSpace make(ModelPtr model, int degree, MorphismPtr morphism = nullptr,
                                bool autf = false);

    int degree() const { return degree_; }
    int dimension() const { return static_cast<int>(basis_.size()); }
    const std::vector<ElementaryDerivation>& basis() const { return basis_; }
    const ModelPtr& model() const { return model_; }
    const MorphismPtr& morphism() const { return morphism_; }

    Derivation element(const QVector& coords) const;
    // Exact coordinates; internal_error if a value monomial falls outside the
    // space (cannot happen for full spaces of the right degree).
    QVector coordinates(const Derivation& theta) const;

private:
    ModelPtr model_;
    MorphismPtr morphism_;
    int degree_ = 0;
    std::vector<ElementaryDerivation> basis_;
    std::map<std::pair<int, Monomial>, int> index_;
};

}  // namespace cga
