#include "fermat/derivation.hpp"

#include <set>

namespace fermat {

RingElem well_definedness_residue(const RingSpecPtr& spec, const std::vector<RingElem>& images) {
    if (images.size() != spec->n())
        throw ArityError("expected " + std::to_string(spec->n()) + " images, got " +
                         std::to_string(images.size()));
    RingElem residue = RingElem::zero(spec);
    for (unsigned i = 0; i < spec->n(); ++i) {
        require_same_spec(spec, images[i].spec());
        Monomial mono{std::vector<unsigned>(spec->n(), 0)};
        mono.exponents[i] = spec->exponent(i) - 1;
        const CycloNum mi = CycloNum::from_rational(spec->field(), Rational(static_cast<int>(spec->exponent(i))));
        residue += RingElem::monomial(spec, std::move(mono), mi) * images[i];
    }
    return residue;
}

bool is_well_defined(const RingSpecPtr& spec, const std::vector<RingElem>& images) {
    return well_definedness_residue(spec, images).is_zero();
}

Derivation::Derivation(RingSpecPtr spec, std::vector<RingElem> images)
    : spec_(std::move(spec)), images_(std::move(images)),
      residue_(well_definedness_residue(spec_, images_)), certified_(residue_.is_zero()) {}

Derivation Derivation::generator_dij(const RingSpecPtr& spec, unsigned i, unsigned j) {
    const unsigned n = spec->n();
    if (i < 1 || j < 1 || i > n || j > n || i >= j)
        throw IndexError("generator needs 1 <= i < j <= n");
    std::vector<RingElem> images(n, RingElem::zero(spec));
    const FieldPtr& field = spec->field();

    Monomial mj{std::vector<unsigned>(n, 0)};
    mj.exponents[j - 1] = spec->exponent(j - 1) - 1;
    images[i - 1] = RingElem::monomial(
        spec, std::move(mj),
        CycloNum::from_rational(field, Rational(-static_cast<int>(spec->exponent(j - 1)))));

    Monomial mi{std::vector<unsigned>(n, 0)};
    mi.exponents[i - 1] = spec->exponent(i - 1) - 1;
    images[j - 1] = RingElem::monomial(
        spec, std::move(mi),
        CycloNum::from_rational(field, Rational(static_cast<int>(spec->exponent(i - 1)))));

    return Derivation(spec, std::move(images));
}

Derivation Derivation::generator_epsilon(const RingSpecPtr& spec) {
    std::vector<RingElem> images;
    images.reserve(spec->n());
    for (unsigned i = 1; i <= spec->n(); ++i) {
        const Rational inv_m(BigInt(1), BigInt(spec->exponent(i - 1)));
        images.push_back(CycloNum::from_rational(spec->field(), inv_m) * RingElem::variable(spec, i));
    }
    return Derivation(spec, std::move(images));
}

RingElem Derivation::apply(const RingElem& f) const {
    if (!certified_)
        throw CertificationError("derivation is not well defined; residue: " + residue_.str());
    require_same_spec(spec_, f.spec());
    RingElem out = RingElem::zero(spec_);
    for (unsigned i = 0; i < spec_->n(); ++i) {
        if (images_[i].is_zero()) continue;
        const RingElem df = f.partial_derivative(i);
        if (df.is_zero()) continue;
        out += df * images_[i];
    }
    return out;
}

bool Derivation::is_zero() const {
    for (const RingElem& im : images_)
        if (!im.is_zero()) return false;
    return true;
}

RingElem apply_power(const Derivation& d, unsigned s, const RingElem& f) {
    RingElem out = f;
    for (unsigned t = 0; t < s; ++t) out = d.apply(out);
    return out;
}

Matrix coefficient_system(const RingSpecPtr& spec, const std::vector<RingElem>& elems) {
    std::set<Monomial, MonomialDescLex> support;
    for (const RingElem& e : elems)
        for (const auto& [mono, coeff] : e.terms()) support.insert(mono);
    Matrix system(spec->field(), static_cast<unsigned>(support.size()),
                  static_cast<unsigned>(elems.size()));
    unsigned row = 0;
    for (const Monomial& mono : support) {
        for (unsigned col = 0; col < elems.size(); ++col) {
            const CycloNum c = elems[col].coefficient(mono);
            if (!c.is_zero()) system.at(row, col) = c;
        }
        ++row;
    }
    return system;
}

namespace {
// All monomials in the first `vars` variables with total degree <= bound,
// padded to n exponents.
void collect_bounded_monomials(unsigned n, unsigned vars, unsigned bound, unsigned index,
                               Monomial& scratch, std::vector<Monomial>& out) {
    if (index == vars) {
        out.push_back(scratch);
        return;
    }
    for (unsigned e = 0; e <= bound; ++e) {
        scratch.exponents[index] = e;
        collect_bounded_monomials(n, vars, bound - e, index + 1, scratch, out);
    }
    scratch.exponents[index] = 0;
}
}  // namespace

bool verify_triangular_vanishing(const RingSpecPtr& spec, unsigned degree_bound) {
    const unsigned n = spec->n();
    // One column per unknown coefficient: the constant image of x_1, then for
    // each i >= 2 every monomial of C[x_1..x_(i-1)] with degree <= bound. Each
    // column holds the residue contribution m_i x_i^(m_i-1) * monomial.
    std::vector<RingElem> columns;
    for (unsigned i = 0; i < n; ++i) {
        std::vector<Monomial> monos;
        Monomial scratch{std::vector<unsigned>(n, 0)};
        if (i == 0) {
            monos.push_back(scratch);  // d(x_1) = a
        } else {
            collect_bounded_monomials(n, i, degree_bound, 0, scratch, monos);
        }
        Monomial lead{std::vector<unsigned>(n, 0)};
        lead.exponents[i] = spec->exponent(i) - 1;
        const RingElem prefix = RingElem::monomial(
            spec, std::move(lead),
            CycloNum::from_rational(spec->field(), Rational(static_cast<int>(spec->exponent(i)))));
        for (const Monomial& mono : monos)
            columns.push_back(prefix * RingElem::monomial(spec, mono, CycloNum::one(spec->field())));
    }
    const Matrix system = coefficient_system(spec, columns);
    return nullspace(system).empty();
}

}  // namespace fermat
