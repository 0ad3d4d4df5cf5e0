/*
 * derivations.cpp
 * ---------------
 * Leibniz extension, differential, bracket, and the per-degree coordinate
 * spaces.
 */

#include "cga/derivations.hpp"

#include <algorithm>

namespace cga {

Derivation::Derivation(ModelPtr model, int degree) : model_(std::move(model)), degree_(degree) {
    values_.assign(static_cast<size_t>(model_->num_fibre()), Polynomial(model_->algebra()));
}

Derivation::Derivation(MorphismPtr morphism, int degree)
    : model_(morphism->source()), morphism_(std::move(morphism)), degree_(degree) {
    phi_case_ = !morphism_->is_identity();
    values_.assign(static_cast<size_t>(model_->num_fibre()),
                   Polynomial(morphism_->target()->algebra()));
}

const AlgebraPtr& Derivation::value_algebra() const {
    return morphism_ ? morphism_->target()->algebra() : model_->algebra();
}

void Derivation::set_value(int fibre_ordinal, Polynomial p) {
    int w = model_->fibre_gen(fibre_ordinal);
    int want = model_->algebra()->degree(w) - degree_;
    if (!p.is_zero()) {
        int got = -1;
        if (want < 0 || !p.is_homogeneous(&got) || got != want) {
            throw validation_error("value on " + model_->algebra()->gen(w).name +
                                   " must be homogeneous of degree " + std::to_string(want));
        }
    }
    values_.at(static_cast<size_t>(fibre_ordinal)) = std::move(p);
}

bool Derivation::is_zero() const {
    return std::all_of(values_.begin(), values_.end(),
                       [](const Polynomial& p) { return p.is_zero(); });
}

namespace {

void require_compatible(const Derivation& a, const Derivation& b) {
    if (!a.model()->same_model(*b.model())) {
        throw algebra_mismatch_error("derivations live over different models");
    }
    bool same_morphism =
        (a.morphism() == b.morphism()) ||
        (a.phi_case() == b.phi_case() && a.value_algebra()->same_generators(*b.value_algebra()));
    if (!same_morphism) {
        throw algebra_mismatch_error("derivations live along different morphisms");
    }
}

}  // namespace

Derivation& Derivation::operator+=(const Derivation& other) {
    require_compatible(*this, other);
    if (degree_ != other.degree_) {
        throw algebra_mismatch_error("cannot add derivations of different degrees");
    }
    for (size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
}

Derivation& Derivation::operator-=(const Derivation& other) {
    require_compatible(*this, other);
    if (degree_ != other.degree_) {
        throw algebra_mismatch_error("cannot subtract derivations of different degrees");
    }
    for (size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
    return *this;
}

Derivation& Derivation::operator*=(const Rational& scalar) {
    for (Polynomial& v : values_) v *= scalar;
    return *this;
}

bool Derivation::operator==(const Derivation& other) const {
    require_compatible(*this, other);
    if (degree_ != other.degree_) return false;
    return values_ == other.values_;
}

namespace {

// θ applied to one canonical monomial of the source algebra.
Polynomial apply_monomial(const Derivation& th, const Monomial& mono) {
    const ModelPtr& model = th.model();
    const AlgebraPtr& src = model->algebra();
    const MorphismPtr& phi = th.morphism();
    const AlgebraPtr& val_alg = th.value_algebra();
    const int n = th.degree();

    // φ of a source monomial (identity when no morphism is attached).
    auto map_monomial = [&](const Monomial& m) -> Polynomial {
        Polynomial p = Polynomial::monomial(src, m, 1);
        return phi ? phi->apply(p) : p;
    };

    const auto& exps = mono.exponents();
    Polynomial out(val_alg);
    int prefix_degree = 0;
    for (size_t i = 0; i < exps.size(); ++i) {
        auto [g, e] = exps[i];
        if (!model->is_base(g)) {
            const Polynomial& thg = th.value(model->fibre_ordinal(g));
            if (!thg.is_zero()) {
                // (−1)^{n·|prefix|} φ(prefix) · e·θ(g)·φ(g)^{e−1} · φ(suffix);
                // for odd g the exponent is 1, for even g the block carries
                // no internal sign.
                std::vector<std::pair<int, int>> prefix(
                    exps.begin(), exps.begin() + static_cast<std::ptrdiff_t>(i));
                std::vector<std::pair<int, int>> suffix(
                    exps.begin() + static_cast<std::ptrdiff_t>(i) + 1, exps.end());
                if (e > 1) suffix.insert(suffix.begin(), {g, e - 1});

                Polynomial term = map_monomial(*Monomial::make(*src, std::move(prefix)));
                term *= Rational(e);
                if ((n * prefix_degree) % 2 != 0) term *= Rational(-1);
                term *= thg;
                term *= map_monomial(*Monomial::make(*src, std::move(suffix)));
                out += term;
            }
        }
        prefix_degree += src->degree(g) * e;
    }
    return out;
}

}  // namespace

Polynomial apply(const Derivation& theta, const Polynomial& a) {
    require_same_algebra(a, Polynomial(theta.model()->algebra()));
    Polynomial out(theta.value_algebra());
    for (const auto& [mono, coeff] : a.terms()) {
        out += apply_monomial(theta, mono) * coeff;
    }
    return out;
}

Derivation differential(const Derivation& theta) {
    const ModelPtr& src = theta.model();
    const RelativeModel& val_model = theta.morphism() ? *theta.morphism()->target() : *src;
    const int n = theta.degree();

    Derivation out = theta.morphism() ? Derivation(theta.morphism(), n - 1)
                                      : Derivation(src, n - 1);
    for (int o = 0; o < src->num_fibre(); ++o) {
        Polynomial v = val_model.apply_D(theta.value(o));
        Polynomial tail = apply(theta, src->differential_of(src->fibre_gen(o)));
        if (n % 2 == 0) {
            v -= tail;
        } else {
            v += tail;
        }
        out.set_value(o, std::move(v));
    }
    return out;
}

Derivation bracket(const Derivation& a, const Derivation& b) {
    if (a.phi_case() || b.phi_case()) {
        throw unsupported_error(
            "derivation complexes along a morphism carry no Lie bracket (vector spaces only)");
    }
    require_compatible(a, b);

    Derivation out(a.model(), a.degree() + b.degree());
    bool minus = (a.degree() * b.degree()) % 2 == 0;  // −(−1)^{n₁n₂}
    for (int o = 0; o < a.model()->num_fibre(); ++o) {
        Polynomial v = apply(a, b.value(o));
        Polynomial w = apply(b, a.value(o));
        if (minus) {
            v -= w;
        } else {
            v += w;
        }
        out.set_value(o, std::move(v));
    }
    return out;
}

DerivationSpace DerivationSpace::make(ModelPtr model, int degree, MorphismPtr morphism,
                                      bool autf) {
    DerivationSpace space;
    space.model_ = std::move(model);
    space.morphism_ = std::move(morphism);
    space.degree_ = degree;

    const AlgebraPtr& val_alg = space.morphism_ ? space.morphism_->target()->algebra()
                                                : space.model_->algebra();
    // In the autf case a value monomial must contain a base-generator factor
    // of the value algebra; that filter only makes sense for endomorphisms.
    int val_num_base = space.morphism_ ? space.morphism_->target()->num_base()
                                       : space.model_->num_base();

    for (int o = 0; o < space.model_->num_fibre(); ++o) {
        int w = space.model_->fibre_gen(o);
        int value_degree = space.model_->algebra()->degree(w) - degree;
        if (value_degree < 0) continue;
        for (const Monomial& m : monomial_basis(*val_alg, value_degree)) {
            if (autf) {
                bool has_base = false;
                for (const auto& [g, e] : m.exponents()) {
                    if (g < val_num_base) {
                        has_base = true;
                        break;
                    }
                }
                if (!has_base) continue;
            }
            space.index_.emplace(std::make_pair(o, m), static_cast<int>(space.basis_.size()));
            space.basis_.push_back({o, m});
        }
    }
    return space;
}

Derivation DerivationSpace::element(const QVector& coords) const {
    if (static_cast<int>(coords.size()) != dimension()) {
        throw internal_error("coordinate vector does not match derivation-space dimension");
    }
    Derivation out = morphism_ ? Derivation(morphism_, degree_) : Derivation(model_, degree_);
    const AlgebraPtr& val_alg = out.value_algebra();
    std::vector<Polynomial> values(static_cast<size_t>(model_->num_fibre()), Polynomial(val_alg));
    for (size_t i = 0; i < basis_.size(); ++i) {
        if (coords[i] == 0) continue;
        values[static_cast<size_t>(basis_[i].fibre_ordinal)] +=
            Polynomial::monomial(val_alg, basis_[i].value, coords[i]);
    }
    for (int o = 0; o < model_->num_fibre(); ++o) {
        out.set_value(o, std::move(values[static_cast<size_t>(o)]));
    }
    return out;
}

QVector DerivationSpace::coordinates(const Derivation& theta) const {
    if (theta.degree() != degree_) {
        throw internal_error("derivation degree does not match the space");
    }
    QVector coords(basis_.size(), Rational(0));
    for (int o = 0; o < model_->num_fibre(); ++o) {
        for (const auto& [mono, coeff] : theta.value(o).terms()) {
            auto it = index_.find(std::make_pair(o, mono));
            if (it == index_.end()) {
                throw internal_error("derivation value falls outside the coordinate space");
            }
            coords[static_cast<size_t>(it->second)] = coeff;
        }
    }
    return coords;
}

}  // namespace cga
