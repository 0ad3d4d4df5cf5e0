#pragma once
/*
 * core.hpp
 * --------
 * Exact arithmetic in finitely generated free graded-commutative algebras
 * over Q: generators, canonical monomials with Koszul signs, sparse
 * polynomials, and degree-component bookkeeping.
 *
 * Conventions:
 *   - Generators have degree >= 1; odd-degree generators square to zero.
 *   - A monomial is a sorted list of (generator index, exponent) pairs with
 *     odd generators carrying exponent at most 1; the empty list is the unit.
 *   - Polynomials are canonical term maps with no zero coefficients, so
 *     structural equality coincides with equality in the algebra.
 *   - Monomials of equal degree are ordered by ascending lexicographic
 *     comparison of their dense exponent vectors; every reported basis,
 *     representative and printed polynomial uses this order.
 */

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cga {

using Rational = mpq_class;

// Error taxonomy shared by the whole library. The CLI maps these to its
// exit codes (parse 2, validation 3, unsupported 4, io 5; anything else 1).
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class parse_error : public error {
public:
    using error::error;
};
class validation_error : public error {
public:
    using error::error;
};
class unsupported_error : public error {
public:
    using error::error;
};
class internal_error : public error {
public:
    using error::error;
};
class io_error : public error {
public:
    using error::error;
};
class algebra_mismatch_error : public error {
public:
    using error::error;
};

struct Generator {
    std::string name;
    int degree = 0;
    int index = 0;

    bool odd() const { return degree % 2 != 0; }
};

// Immutable generator context shared by every value built over it.
class Algebra {
public:
    explicit Algebra(std::vector<Generator> generators);

    int size() const { return static_cast<int>(gens_.size()); }
    const Generator& gen(int i) const { return gens_.at(static_cast<size_t>(i)); }
    int degree(int i) const { return gen(i).degree; }
    bool odd(int i) const { return gen(i).odd(); }
    int max_degree() const { return max_degree_; }

    // Index of a generator by name, -1 when absent.
    int find(const std::string& name) const;

    bool same_generators(const Algebra& other) const;

private:
    std::vector<Generator> gens_;
    std::map<std::string, int> by_name_;
    int max_degree_ = 0;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

AlgebraPtr make_algebra(std::vector<Generator> generators);

class Monomial {
public:
    Monomial() = default;  // the unit 1

    // Normalizes an arbitrary (index, exponent) list; returns nullopt when an
    // odd generator ends up with exponent >= 2 (the element is zero).
    static std::optional<Monomial> make(const Algebra& algebra,
                                        std::vector<std::pair<int, int>> exponents);

    const std::vector<std::pair<int, int>>& exponents() const { return exps_; }
    bool is_unit() const { return exps_.empty(); }
    int degree(const Algebra& algebra) const;
    int word_length() const;
    int exponent_of(int gen_index) const;

    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
    bool operator!=(const Monomial& other) const { return exps_ != other.exps_; }
    // Ascending lexicographic order on the dense exponent vector.
    bool operator<(const Monomial& other) const;

    std::string str(const Algebra& algebra) const;

private:
    std::vector<std::pair<int, int>> exps_;
};

// Graded-commutative product of canonical monomials. Returns the Koszul sign
// (+1/-1) together with the merged monomial, or nullopt when an odd generator
// squares to zero.
std::optional<std::pair<int, Monomial>> multiply(const Algebra& algebra,
                                                 const Monomial& a,
                                                 const Monomial& b);

class Polynomial {
public:
    explicit Polynomial(AlgebraPtr algebra);

    static Polynomial constant(AlgebraPtr algebra, const Rational& value);
    static Polynomial generator(AlgebraPtr algebra, int index);
    static Polynomial monomial(AlgebraPtr algebra, const Monomial& m, const Rational& coeff);

    const AlgebraPtr& algebra() const { return alg_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Monomial& m) const;
    // Word-length-one part as generator index -> coefficient.
    std::map<int, Rational> linear_coefficients() const;

    Polynomial degree_component(int n) const;
    // Largest total degree carrying a term; -1 for the zero polynomial.
    int max_degree() const;
    bool is_homogeneous(int* degree = nullptr) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Rational& scalar);
    Polynomial operator-() const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

    bool operator==(const Polynomial& other) const;
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    std::string str() const;

private:
    void add_term(const Monomial& m, const Rational& coeff);

    AlgebraPtr alg_;
    std::map<Monomial, Rational> terms_;
};

// All canonical monomials of the given total degree in canonical order.
// gen_limit >= 0 restricts the enumeration to generators of index < gen_limit
// (used for the base subalgebra, whose generators are declared first).
std::vector<Monomial> monomial_basis(const Algebra& algebra, int degree, int gen_limit = -1);

// Throws algebra_mismatch_error unless both operands live over the same
// generator context (pointer identity or structural equality).
void require_same_algebra(const Polynomial& a, const Polynomial& b);

}  // namespace cga
