/*
 * core.cpp
 * --------
 * Canonical monomial arithmetic and sparse polynomials. The Koszul sign of a
 * product is computed by counting transpositions of odd factors during the
 * merge of the two sorted exponent lists.
 */

#include "cga/core.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace cga {

Algebra::Algebra(std::vector<Generator> generators) : gens_(std::move(generators)) {
    for (size_t i = 0; i < gens_.size(); ++i) {
        Generator& g = gens_[i];
        g.index = static_cast<int>(i);
        if (g.name.empty()) {
            throw validation_error("generator " + std::to_string(i) + " has an empty name");
        }
        if (g.degree < 1) {
            throw validation_error("generator '" + g.name + "' has degree " +
                                   std::to_string(g.degree) + "; degrees must be >= 1");
        }
        if (!by_name_.emplace(g.name, g.index).second) {
            throw validation_error("duplicate generator name '" + g.name + "'");
        }
        max_degree_ = std::max(max_degree_, g.degree);
    }
}

int Algebra::find(const std::string& name) const {
    auto it = by_name_.find(name);
    return it == by_name_.end() ? -1 : it->second;
}

bool Algebra::same_generators(const Algebra& other) const {
    if (gens_.size() != other.gens_.size()) return false;
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].name != other.gens_[i].name || gens_[i].degree != other.gens_[i].degree) {
            return false;
        }
    }
    return true;
}

AlgebraPtr make_algebra(std::vector<Generator> generators) {
    return std::make_shared<const Algebra>(std::move(generators));
}

std::optional<Monomial> Monomial::make(const Algebra& algebra,
                                       std::vector<std::pair<int, int>> exponents) {
    std::sort(exponents.begin(), exponents.end());
    Monomial m;
    for (const auto& [gen, exp] : exponents) {
        if (gen < 0 || gen >= algebra.size()) {
            throw internal_error("monomial refers to generator index " + std::to_string(gen) +
                                 " outside the algebra");
        }
        if (exp < 0) {
            throw internal_error("negative exponent in monomial");
        }
        if (exp == 0) continue;
        if (!m.exps_.empty() && m.exps_.back().first == gen) {
            m.exps_.back().second += exp;
        } else {
            m.exps_.emplace_back(gen, exp);
        }
        if (algebra.odd(gen) && m.exps_.back().second > 1) {
            return std::nullopt;  // square of an odd generator
        }
    }
    return m;
}

int Monomial::degree(const Algebra& algebra) const {
    int d = 0;
    for (const auto& [gen, exp] : exps_) d += algebra.degree(gen) * exp;
    return d;
}

int Monomial::word_length() const {
    int n = 0;
    for (const auto& [gen, exp] : exps_) n += exp;
    return n;
}

int Monomial::exponent_of(int gen_index) const {
    for (const auto& [gen, exp] : exps_) {
        if (gen == gen_index) return exp;
        if (gen > gen_index) break;
    }
    return 0;
}

bool Monomial::operator<(const Monomial& other) const {
    // Walk both sparse lists as if comparing dense exponent vectors
    // lexicographically; a missing entry is exponent zero.
    size_t i = 0;
    size_t j = 0;
    while (i < exps_.size() || j < other.exps_.size()) {
        int gi = i < exps_.size() ? exps_[i].first : std::numeric_limits<int>::max();
        int gj = j < other.exps_.size() ? other.exps_[j].first : std::numeric_limits<int>::max();
        if (gi == gj) {
            if (exps_[i].second != other.exps_[j].second) {
                return exps_[i].second < other.exps_[j].second;
            }
            ++i;
            ++j;
        } else if (gi < gj) {
            return false;  // ours is positive where theirs is zero
        } else {
            return true;
        }
    }
    return false;
}

std::string Monomial::str(const Algebra& algebra) const {
    if (is_unit()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& [gen, exp] : exps_) {
        if (!first) out << "*";
        out << algebra.gen(gen).name;
        if (exp > 1) out << "^" << exp;
        first = false;
    }
    return out.str();
}

std::optional<std::pair<int, Monomial>> multiply(const Algebra& algebra,
                                                 const Monomial& a,
                                                 const Monomial& b) {
    // Collect odd generator indices on each side; the Koszul sign counts the
    // odd-odd transpositions needed to interleave b's factors into a's.
    std::vector<int> odd_a;
    for (const auto& [gen, exp] : a.exponents()) {
        if (algebra.odd(gen)) odd_a.push_back(gen);
    }
    long swaps = 0;
    for (const auto& [gen, exp] : b.exponents()) {
        if (!algebra.odd(gen)) continue;
        for (int h : odd_a) {
            if (h == gen) return std::nullopt;  // odd square
            if (h > gen) ++swaps;
        }
    }

    std::vector<std::pair<int, int>> merged = a.exponents();
    merged.insert(merged.end(), b.exponents().begin(), b.exponents().end());
    auto m = Monomial::make(algebra, std::move(merged));
    if (!m) return std::nullopt;
    return std::make_pair(swaps % 2 == 0 ? 1 : -1, *m);
}

Polynomial::Polynomial(AlgebraPtr algebra) : alg_(std::move(algebra)) {
    if (!alg_) throw internal_error("polynomial constructed without an algebra");
}

Polynomial Polynomial::constant(AlgebraPtr algebra, const Rational& value) {
    Polynomial p(std::move(algebra));
    p.add_term(Monomial(), value);
    return p;
}

Polynomial Polynomial::generator(AlgebraPtr algebra, int index) {
    Monomial m = *Monomial::make(*algebra, {{index, 1}});
    return monomial(std::move(algebra), m, 1);
}

Polynomial Polynomial::monomial(AlgebraPtr algebra, const Monomial& m, const Rational& coeff) {
    Polynomial p(std::move(algebra));
    p.add_term(m, coeff);
    return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::map<int, Rational> Polynomial::linear_coefficients() const {
    std::map<int, Rational> out;
    for (const auto& [m, c] : terms_) {
        if (m.word_length() == 1) out.emplace(m.exponents().front().first, c);
    }
    return out;
}

Polynomial Polynomial::degree_component(int n) const {
    Polynomial out(alg_);
    for (const auto& [m, c] : terms_) {
        if (m.degree(*alg_) == n) out.add_term(m, c);
    }
    return out;
}

int Polynomial::max_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree(*alg_));
    return d;
}

bool Polynomial::is_homogeneous(int* degree) const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int md = m.degree(*alg_);
        if (d == -1) {
            d = md;
        } else if (md != d) {
            return false;
        }
    }
    if (degree) *degree = d;
    return true;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    require_same_algebra(*this, other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    require_same_algebra(*this, other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    require_same_algebra(*this, other);
    Polynomial out(alg_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : other.terms_) {
            auto prod = multiply(*alg_, ma, mb);
            if (!prod) continue;
            out.add_term(prod->second, ca * cb * prod->first);
        }
    }
    terms_ = std::move(out.terms_);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(alg_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
    require_same_algebra(*this, other);
    return terms_ == other.terms_;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    // Print degree by degree, canonical monomial order within a degree.
    std::vector<const std::pair<const Monomial, Rational>*> order;
    order.reserve(terms_.size());
    for (const auto& term : terms_) order.push_back(&term);
    std::stable_sort(order.begin(), order.end(), [&](const auto* a, const auto* b) {
        int da = a->first.degree(*alg_);
        int db = b->first.degree(*alg_);
        if (da != db) return da < db;
        return a->first < b->first;
    });

    std::ostringstream out;
    bool first = true;
    for (const auto* term : order) {
        Rational c = term->second;
        bool negative = sgn(c) < 0;
        if (negative) c = -c;
        std::string body;
        if (term->first.is_unit()) {
            body = c.get_str();
        } else if (c == 1) {
            body = term->first.str(*alg_);
        } else {
            body = c.get_str() + "*" + term->first.str(*alg_);
        }
        if (first) {
            out << (negative ? "-" : "") << body;
        } else {
            out << (negative ? " - " : " + ") << body;
        }
        first = false;
    }
    return out.str();
}

void Polynomial::add_term(const Monomial& m, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

namespace {

void enumerate_monomials(const Algebra& algebra, int limit, int gen, int remaining,
                         std::vector<std::pair<int, int>>& acc, std::vector<Monomial>& out) {
    if (remaining == 0) {
        out.push_back(*Monomial::make(algebra, acc));
        return;
    }
    if (gen >= limit) return;
    int d = algebra.degree(gen);
    int max_exp = algebra.odd(gen) ? 1 : remaining / d;
    for (int e = 0; e <= max_exp; ++e) {
        if (e * d > remaining) break;
        if (e > 0) acc.emplace_back(gen, e);
        enumerate_monomials(algebra, limit, gen + 1, remaining - e * d, acc, out);
        if (e > 0) acc.pop_back();
    }
}

}  // namespace

std::vector<Monomial> monomial_basis(const Algebra& algebra, int degree, int gen_limit) {
    if (degree < 0) return {};
    int limit = gen_limit < 0 ? algebra.size() : std::min(gen_limit, algebra.size());
    std::vector<Monomial> out;
    std::vector<std::pair<int, int>> acc;
    enumerate_monomials(algebra, limit, 0, degree, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

void require_same_algebra(const Polynomial& a, const Polynomial& b) {
    if (a.algebra() == b.algebra()) return;
    if (a.algebra() && b.algebra() && a.algebra()->same_generators(*b.algebra())) return;
    throw algebra_mismatch_error("operands live over different generator sets");
}

}  // namespace cga
