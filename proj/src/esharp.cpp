/*
 * esharp.cpp
 * ----------
 * H₀(Der_♯) with canonical class coordinates, the exp/log correspondence,
 * and the BCH group law evaluated exactly by exp → compose → log on
 * representatives (never by summing the abstract series).
 *
 * Nilpotence certificate used by exp/log: a ♯-derivation θ of degree 0 and
 * the displacement φ−1 of a ♯-automorphism satisfy θ^k(w) = 0 and
 * (φ−1)^k(w) = 0 for k ≥ 5·|w|. Each application either raises word length
 * or moves a linear factor strictly down the filtration W₁ → W₀ → V; a
 * counting argument over factor lineages bounds the number of productive
 * steps by 5·|w| − 3.
 */

#include "cga/esharp.hpp"

#include <map>
#include <string>
#include <utility>

#include "cga/linalg.hpp"

namespace cga {

namespace {

// Linear fibre part of p as coordinates over the given fibre ordinals.
QVector fibre_linear_coords(const RelativeModel& m, const Polynomial& p,
                            const std::vector<int>& fibre_ordinals) {
    QVector coords(fibre_ordinals.size(), Rational(0));
    std::map<int, Rational> linear = p.linear_coefficients();
    for (size_t i = 0; i < fibre_ordinals.size(); ++i) {
        auto it = linear.find(m.fibre_gen(fibre_ordinals[i]));
        if (it != linear.end()) {
            coords[i] = it->second;
        }
    }
    return coords;
}

// True when the linear part of p contains any fibre generator.
bool has_fibre_linear_part(const RelativeModel& m, const Polynomial& p) {
    for (const auto& [gen, coeff] : p.linear_coefficients()) {
        if (!m.is_base(gen) && coeff != 0) {
            return true;
        }
    }
    return false;
}

}  // namespace

bool sharp_value_conditions(const Derivation& theta, const WSplit& split, std::string* why) {
    if (theta.degree() != 0) {
        if (why != nullptr) {
            *why = "sharp derivations have degree 0";
        }
        return false;
    }
    const RelativeModel& m = *theta.model();
    for (const WDegreeSplit& wd : split.degrees) {
        // θ(W₀): no linear fibre part on any kernel combination.
        for (const QVector& k : wd.w0_rows) {
            Polynomial combo(m.algebra());
            for (size_t j = 0; j < wd.fibre_ordinals.size(); ++j) {
                if (k[j] != 0) {
                    combo += theta.value(wd.fibre_ordinals[j]) * k[j];
                }
            }
            if (has_fibre_linear_part(m, combo)) {
                if (why != nullptr) {
                    *why = "value on a W0 combination of degree " + std::to_string(wd.degree) +
                           " has a linear fibre part";
                }
                return false;
            }
        }
        // θ(W₁): linear fibre part inside the W₀-span of the same degree.
        EchelonSpace w0_span(static_cast<int>(wd.fibre_ordinals.size()));
        for (const QVector& k : wd.w0_rows) {
            w0_span.insert(k);
        }
        for (int p : wd.w1_fibre_ordinals) {
            QVector vec = fibre_linear_coords(m, theta.value(p), wd.fibre_ordinals);
            if (!w0_span.contains(vec)) {
                if (why != nullptr) {
                    *why = "value on the W1 generator '" +
                           m.algebra()->gen(m.fibre_gen(p)).name +
                           "' has a linear fibre part outside W0";
                }
                return false;
            }
        }
    }
    return true;
}

ESharpSpace ESharpSpace::compute(ModelPtr model) {
    require_valid(*model, true);

    ESharpSpace space;
    space.model_ = model;
    space.split_ = linear_part_split(*model);
    space.der0_ = DerivationSpace::make(model, 0);
    DerivationSpace der1 = DerivationSpace::make(model, 1);
    DerivationSpace derm1 = DerivationSpace::make(model, -1);
    int dim0 = space.der0_.dimension();

    // Cycle condition rows: one per Der^{-1} output coordinate.
    {
        std::vector<QVector> images;
        for (int j = 0; j < dim0; ++j) {
            QVector unit(static_cast<size_t>(dim0), Rational(0));
            unit[static_cast<size_t>(j)] = 1;
            images.push_back(derm1.coordinates(differential(space.der0_.element(unit))));
        }
        for (int out = 0; out < derm1.dimension(); ++out) {
            QVector row(static_cast<size_t>(dim0), Rational(0));
            bool nonzero = false;
            for (int j = 0; j < dim0; ++j) {
                row[static_cast<size_t>(j)] = images[static_cast<size_t>(j)][static_cast<size_t>(out)];
                nonzero = nonzero || row[static_cast<size_t>(j)] != 0;
            }
            if (nonzero) {
                space.constraint_rows_.push_back(std::move(row));
            }
        }
    }
    // ♯ linear-part rows. Each functional is realized as the coordinate
    // vector of the indicator derivation it reads off.
    for (const WDegreeSplit& wd : space.split_.degrees) {
        for (const QVector& k : wd.w0_rows) {
            for (int u : wd.fibre_ordinals) {
                Derivation indicator(model, 0);
                for (size_t j = 0; j < wd.fibre_ordinals.size(); ++j) {
                    if (k[j] != 0) {
                        indicator.set_value(
                            wd.fibre_ordinals[j],
                            Polynomial::generator(model->algebra(), model->fibre_gen(u)) * k[j]);
                    }
                }
                if (!indicator.is_zero()) {
                    space.constraint_rows_.push_back(space.der0_.coordinates(indicator));
                }
            }
        }
        if (!wd.w1_fibre_ordinals.empty()) {
            QMatrix w0_matrix(static_cast<int>(wd.w0_rows.size()),
                              static_cast<int>(wd.fibre_ordinals.size()));
            for (size_t i = 0; i < wd.w0_rows.size(); ++i) {
                for (size_t j = 0; j < wd.fibre_ordinals.size(); ++j) {
                    w0_matrix.at(static_cast<int>(i), static_cast<int>(j)) = wd.w0_rows[i][j];
                }
            }
            std::vector<QVector> functionals = w0_matrix.kernel_basis();
            for (int p : wd.w1_fibre_ordinals) {
                for (const QVector& phi : functionals) {
                    Derivation indicator(model, 0);
                    Polynomial value(model->algebra());
                    for (size_t j = 0; j < wd.fibre_ordinals.size(); ++j) {
                        if (phi[j] != 0) {
                            value += Polynomial::generator(
                                         model->algebra(),
                                         model->fibre_gen(wd.fibre_ordinals[j])) *
                                     phi[j];
                        }
                    }
                    indicator.set_value(p, value);
                    if (!indicator.is_zero()) {
                        space.constraint_rows_.push_back(space.der0_.coordinates(indicator));
                    }
                }
            }
        }
    }

    // Z_♯ as the kernel of the stacked constraints.
    QMatrix constraints(static_cast<int>(space.constraint_rows_.size()), dim0);
    for (size_t r = 0; r < space.constraint_rows_.size(); ++r) {
        for (int j = 0; j < dim0; ++j) {
            constraints.at(static_cast<int>(r), j) = space.constraint_rows_[r][static_cast<size_t>(j)];
        }
    }
    std::vector<QVector> z_basis = constraints.kernel_basis();

    // Boundary space 𝒟(Der¹) and its intersection with Z_♯: solve for the
    // boundary combinations satisfying every constraint.
    EchelonSpace boundaries(dim0);
    for (int j = 0; j < der1.dimension(); ++j) {
        QVector unit(static_cast<size_t>(der1.dimension()), Rational(0));
        unit[static_cast<size_t>(j)] = 1;
        boundaries.insert(space.der0_.coordinates(differential(der1.element(unit))));
    }
    space.boundary_in_sharp_ = EchelonSpace(dim0);
    {
        int nb = boundaries.rank();
        QMatrix constrained(static_cast<int>(space.constraint_rows_.size()), nb);
        for (size_t r = 0; r < space.constraint_rows_.size(); ++r) {
            for (int j = 0; j < nb; ++j) {
                Rational dot(0);
                for (int i = 0; i < dim0; ++i) {
                    dot += space.constraint_rows_[r][static_cast<size_t>(i)] *
                           boundaries.rows()[static_cast<size_t>(j)][static_cast<size_t>(i)];
                }
                constrained.at(static_cast<int>(r), j) = dot;
            }
        }
        for (const QVector& y : constrained.kernel_basis()) {
            QVector v(static_cast<size_t>(dim0), Rational(0));
            for (int j = 0; j < nb; ++j) {
                for (int i = 0; i < dim0; ++i) {
                    v[static_cast<size_t>(i)] +=
                        y[static_cast<size_t>(j)] *
                        boundaries.rows()[static_cast<size_t>(j)][static_cast<size_t>(i)];
                }
            }
            space.boundary_in_sharp_.insert(std::move(v));
        }
    }

    space.classes_ = EchelonSpace(dim0);
    for (const QVector& z : z_basis) {
        space.classes_.insert(space.boundary_in_sharp_.reduce(z));
    }
    for (const QVector& row : space.classes_.rows()) {
        space.basis_.push_back(space.der0_.element(row));
    }
    return space;
}

QVector ESharpSpace::class_coordinates(const Derivation& theta) const {
    if (theta.degree() != 0) {
        throw validation_error("sharp classes live in derivation degree 0");
    }
    QVector v = der0_.coordinates(theta);
    for (const QVector& row : constraint_rows_) {
        Rational dot(0);
        for (size_t i = 0; i < v.size(); ++i) {
            dot += row[i] * v[i];
        }
        if (dot != 0) {
            std::string why;
            sharp_value_conditions(theta, split_, &why);
            throw validation_error("not a ♯-cycle" + (why.empty() ? std::string() : ": " + why));
        }
    }
    QVector residue = boundary_in_sharp_.reduce(v);
    auto coords = classes_.coordinates(residue);
    if (!coords) {
        throw internal_error("sharp cycle failed to reduce to the class basis");
    }
    return *coords;
}

Derivation ESharpSpace::representative(const QVector& coords) const {
    if (coords.size() != static_cast<size_t>(dimension())) {
        throw validation_error("class coordinate size mismatch");
    }
    QVector v(static_cast<size_t>(der0_.dimension()), Rational(0));
    for (size_t k = 0; k < coords.size(); ++k) {
        const QVector& row = classes_.rows()[k];
        for (size_t i = 0; i < v.size(); ++i) {
            v[i] += coords[k] * row[i];
        }
    }
    return der0_.element(v);
}

namespace {

int nilpotence_cap(int degree) { return 5 * std::max(1, degree); }

void require_sharp_cycle(const Derivation& theta, const WSplit& split) {
    if (theta.phi_case()) {
        throw validation_error("sharp derivations are endomorphism-case only");
    }
    if (theta.degree() != 0) {
        throw validation_error("exp expects a degree-0 derivation");
    }
    if (!differential(theta).is_zero()) {
        throw validation_error("exp expects a ♯-cycle (𝒟θ = 0)");
    }
    std::string why;
    if (!sharp_value_conditions(theta, split, &why)) {
        throw validation_error("exp expects ♯ value conditions: " + why);
    }
}

}  // namespace

MorphismPtr exp_automorphism(const Derivation& theta) {
    ModelPtr model = theta.model();
    require_sharp_cycle(theta, linear_part_split(*model));

    std::vector<std::pair<std::string, std::string>> values;
    for (int o = 0; o < model->num_fibre(); ++o) {
        int gen = model->fibre_gen(o);
        Polynomial sum = Polynomial::generator(model->algebra(), gen);
        Polynomial power = sum;
        Rational factorial(1);
        int cap = nilpotence_cap(model->algebra()->degree(gen));
        for (int k = 1; !power.is_zero(); ++k) {
            if (k >= cap) {
                throw internal_error("nilpotence certificate violated in exp");
            }
            power = apply(theta, power);
            factorial *= k;
            sum += power * (Rational(1) / factorial);
        }
        values.emplace_back(model->algebra()->gen(gen).name, sum.str());
    }
    return DGMorphism::create(model, model, values);
}

Derivation log_automorphism(ModelPtr model, const DGMorphism& phi) {
    if (!phi.source()->same_model(*model) || !phi.target()->same_model(*model)) {
        throw validation_error("log expects a self-map of the given model");
    }
    for (int g = 0; g < model->num_base(); ++g) {
        if (phi.value(g) != Polynomial::generator(phi.target()->algebra(), g)) {
            throw validation_error("log expects the identity on the base subalgebra");
        }
    }
    ValidationReport report = validate_morphism(phi);
    for (const CheckResult& check : report.checks) {
        if (check.level == CheckLevel::structural && !check.pass) {
            throw validation_error("log expects a DG self-map: " + check.detail);
        }
    }
    // Linear-part containments of φ₀ − 1.
    WSplit split = linear_part_split(*model);
    const RelativeModel& m = *model;
    for (const WDegreeSplit& wd : split.degrees) {
        EchelonSpace w0_span(static_cast<int>(wd.fibre_ordinals.size()));
        for (const QVector& k : wd.w0_rows) {
            w0_span.insert(k);
        }
        for (size_t j = 0; j < wd.fibre_ordinals.size(); ++j) {
            int o = wd.fibre_ordinals[j];
            Polynomial displacement =
                phi.value(m.fibre_gen(o)) -
                Polynomial::generator(m.algebra(), m.fibre_gen(o));
            QVector vec = fibre_linear_coords(m, displacement, wd.fibre_ordinals);
            bool is_w1 = false;
            for (int p : wd.w1_fibre_ordinals) {
                is_w1 = is_w1 || p == o;
            }
            if (is_w1) {
                if (!w0_span.contains(vec)) {
                    throw validation_error(
                        "log expects (φ0−1)(W1) ⊆ V ⊕ W0; violated on '" +
                        m.algebra()->gen(m.fibre_gen(o)).name + "'");
                }
            }
        }
        // On W₀ combinations the whole linear fibre part must vanish.
        for (const QVector& k : wd.w0_rows) {
            Polynomial combo(m.algebra());
            for (size_t j = 0; j < wd.fibre_ordinals.size(); ++j) {
                if (k[j] != 0) {
                    int gen = m.fibre_gen(wd.fibre_ordinals[j]);
                    combo += (phi.value(gen) - Polynomial::generator(m.algebra(), gen)) * k[j];
                }
            }
            if (has_fibre_linear_part(m, combo)) {
                throw validation_error(
                    "log expects (φ0−1)(W0) ⊆ V; a W0 combination of degree " +
                    std::to_string(wd.degree) + " violates it");
            }
        }
    }

    Derivation theta(model, 0);
    for (int o = 0; o < model->num_fibre(); ++o) {
        int gen = model->fibre_gen(o);
        Polynomial term =
            phi.value(gen) - Polynomial::generator(model->algebra(), gen);  // (φ−1)(w)
        Polynomial sum(model->algebra());
        int cap = nilpotence_cap(model->algebra()->degree(gen));
        for (int k = 1; !term.is_zero(); ++k) {
            if (k >= cap) {
                throw internal_error("nilpotence certificate violated in log");
            }
            Rational coeff = Rational(k % 2 == 1 ? 1 : -1) / Rational(k);
            sum += term * coeff;
            term = phi.apply(term) - term;  // (φ−1)^{k+1}(w)
        }
        theta.set_value(o, sum);
    }
    return theta;
}

namespace {

// f ∘ g for self-maps fixing the base: values on fibre generators only.
MorphismPtr compose_self_maps(ModelPtr model, const DGMorphism& f, const DGMorphism& g) {
    std::vector<std::pair<std::string, std::string>> values;
    for (int o = 0; o < model->num_fibre(); ++o) {
        int gen = model->fibre_gen(o);
        values.emplace_back(model->algebra()->gen(gen).name, f.apply(g.value(gen)).str());
    }
    return DGMorphism::create(model, model, values);
}

}  // namespace

QVector bch_product(const ESharpSpace& space, const QVector& a, const QVector& b) {
    MorphismPtr ea = exp_automorphism(space.representative(a));
    MorphismPtr eb = exp_automorphism(space.representative(b));
    Derivation log_ab = log_automorphism(space.model(), *compose_self_maps(space.model(), *ea, *eb));
    return space.class_coordinates(log_ab);
}

QVector bch_inverse(const ESharpSpace& space, const QVector& a) {
    QVector neg(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        neg[i] = -a[i];
    }
    return neg;
}

QVector bch_commutator(const ESharpSpace& space, const QVector& a, const QVector& b) {
    QVector inner = bch_product(space, bch_inverse(space, a), bch_inverse(space, b));
    return bch_product(space, bch_product(space, a, b), inner);
}

GroupProfile group_profile(const ESharpSpace& space) {
    GroupProfile profile;
    profile.dimension = space.dimension();
    profile.basis = space.basis();
    profile.infinite_order = profile.dimension >= 1;

    int dim = profile.dimension;
    auto unit = [dim](int i) {
        QVector v(static_cast<size_t>(dim), Rational(0));
        v[static_cast<size_t>(i)] = 1;
        return v;
    };
    profile.table.resize(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            profile.table[static_cast<size_t>(i)].push_back(bch_product(space, unit(i), unit(j)));
        }
    }
    for (int i = 0; i < dim && profile.abelian; ++i) {
        for (int j = 0; j < dim && profile.abelian; ++j) {
            profile.abelian = profile.table[static_cast<size_t>(i)][static_cast<size_t>(j)] ==
                              profile.table[static_cast<size_t>(j)][static_cast<size_t>(i)];
        }
    }

    // Lower central series by spans of iterated commutators of the basis.
    EchelonSpace level(dim);
    for (int i = 0; i < dim; ++i) {
        level.insert(unit(i));
    }
    int length = 0;
    while (level.rank() > 0) {
        ++length;
        if (length > dim + 1) {
            throw internal_error("lower central series failed to terminate");
        }
        EchelonSpace next(dim);
        for (int i = 0; i < dim; ++i) {
            for (const QVector& x : level.rows()) {
                next.insert(bch_commutator(space, unit(i), x));
            }
        }
        level = next;
    }
    profile.nilpotency_class_lower_bound = length;
    return profile;
}

}  // namespace cga
