#include "fermat/constants.hpp"

#include <algorithm>
#include <sstream>

namespace fermat {

std::string KernelReport::str() const {
    std::ostringstream out;
    for (const auto& [k, basis] : kernels) {
        out << "k=" << k << " dim=" << basis.size() << " basis=[";
        for (std::size_t t = 0; t < basis.size(); ++t) out << (t ? ", " : "") << basis[t].str();
        out << "]\n";
    }
    if (trivial)
        out << "TRIVIAL_UP_TO=" << max_degree << "\n";
    else
        out << "NONTRIVIAL at k=" << *first_nontrivial << "\n";
    return out.str();
}

VkMatrix restrict_to_vk(const LinearDerivation& d, unsigned k) {
    const RingSpecPtr& spec = d.spec();
    std::vector<Monomial> basis = vk_basis(spec, k);
    const unsigned dim = static_cast<unsigned>(basis.size());
    Matrix m(spec->field(), dim, dim);
    // basis is descending lex; binary search locates coordinates.
    const MonomialDescLex before{};
    for (unsigned j = 0; j < dim; ++j) {
        const RingElem image =
            d.apply(RingElem::monomial(spec, basis[j], CycloNum::one(spec->field())));
        for (const auto& [mono, coeff] : image.terms()) {
            auto it = std::lower_bound(basis.begin(), basis.end(), mono, before);
            if (it == basis.end() || !(*it == mono))
                throw Error("image of a V_k basis monomial left V_k");
            m.at(static_cast<unsigned>(it - basis.begin()), j) = coeff;
        }
    }
    return VkMatrix{k, std::move(basis), std::move(m)};
}

KernelReport kernel_up_to_degree(const LinearDerivation& d, unsigned max_degree) {
    if (max_degree < 1) throw PreconditionError("kernel bound must be >= 1");
    KernelReport report{max_degree, {}, true, std::nullopt};
    for (unsigned k = 1; k <= max_degree; ++k) {
        const VkMatrix vk = restrict_to_vk(d, k);
        std::vector<RingElem> basis;
        for (const auto& v : nullspace(vk.matrix)) {
            std::vector<std::pair<Monomial, CycloNum>> terms;
            for (unsigned t = 0; t < vk.basis.size(); ++t)
                if (!v[t].is_zero()) terms.emplace_back(vk.basis[t], v[t]);
            basis.push_back(RingElem::from_terms(d.spec(), std::move(terms)));
        }
        if (!basis.empty()) {
            report.trivial = false;
            if (!report.first_nontrivial) report.first_nontrivial = k;
        }
        report.kernels.emplace(k, std::move(basis));
    }
    return report;
}

CycloNum darboux_eigenvalue(const RingSpecPtr& spec, const CycloNum& alpha, const Monomial& mono) {
    if (mono.exponents.size() != spec->n()) throw ShapeError("monomial arity differs from ring");
    Rational weight(0);
    for (unsigned i = 0; i < spec->n(); ++i)
        weight += Rational(BigInt(mono.exponents[i]), BigInt(spec->exponent(i)));
    return weight * alpha;
}

DarbouxCertificate homogeneous_eigenvalue(const RingSpecPtr& spec, const CycloNum& alpha,
                                          const RingElem& f) {
    if (!spec->uniform_exponent())
        throw ShapeError("homogeneous eigenvalue requires uniform exponents");
    unsigned k = 0;
    if (!f.is_homogeneous(&k)) throw ShapeError("element is not homogeneous");
    if (f.is_zero()) throw PreconditionError("Darboux elements are nonzero");
    const CycloNum lambda =
        Rational(BigInt(k), BigInt(spec->exponents().front())) * alpha;
    const LinearDerivation d = LinearDerivation::diagonal(spec, alpha);
    if (d.apply(f) != lambda * f) throw Error("eigenvalue certificate failed to verify");
    return DarbouxCertificate{f, lambda, k >= 1};
}

bool eigenvalue_uniqueness_check(const RingSpecPtr& spec, const CycloNum& alpha, const RingElem& f,
                                 const CycloNum& lambda) {
    if (f.is_zero()) throw PreconditionError("Darboux elements are nonzero");
    require_same_spec(spec, f.spec());
    for (const auto& [mono, coeff] : f.terms())
        if (darboux_eigenvalue(spec, alpha, mono) != lambda) return false;
    return true;
}

bool shifted_eigen_check(const LinearDerivation& skew, const CycloNum& alpha, const RingElem& f,
                         const CycloNum& lambda) {
    const RingSpecPtr& spec = skew.spec();
    if (!spec->uniform_exponent() || spec->exponents().front() != 2)
        throw ShapeError("shifted eigenvalue check requires m = (2,...,2)");
    unsigned k = 0;
    if (!f.is_homogeneous(&k)) throw ShapeError("element is not homogeneous");
    const CycloNum shift = lambda - Rational(static_cast<int>(k)) * alpha;
    return skew.apply(f) == shift * f;
}

std::optional<CycloNum> find_alpha(const LinearDerivation& skew, unsigned max_degree,
                                   const std::vector<CycloNum>& candidates) {
    if (max_degree < 1) throw PreconditionError("search bound must be >= 1");
    std::vector<VkMatrix> restrictions;
    restrictions.reserve(max_degree);
    for (unsigned k = 1; k <= max_degree; ++k) restrictions.push_back(restrict_to_vk(skew, k));
    for (const CycloNum& alpha : candidates) {
        bool ok = true;
        for (unsigned k = 1; k <= max_degree && ok; ++k) {
            Matrix shifted = restrictions[k - 1].matrix;
            const CycloNum ka = Rational(static_cast<int>(k)) * alpha;
            for (unsigned t = 0; t < shifted.rows(); ++t) shifted.at(t, t) += ka;
            ok = !det(shifted).is_zero();
        }
        if (ok) return alpha;
    }
    return std::nullopt;
}

namespace {
LinearDerivation build_border_skew(unsigned n, const FieldPtr& field,
                                   const std::vector<CycloNum>& column) {
    const RingSpecPtr spec = RingSpec::make(n, std::vector<unsigned>(n, 2), field);
    Matrix m(field, n, n);
    for (unsigned r = 0; r + 1 < n; ++r) {
        m.at(r, n - 1) = -column[r];
        m.at(n - 1, r) = column[r];
    }
    LinearDerivation d = LinearDerivation::from_matrix(spec, m);
    const NilpotencyResult nil = is_nilpotent(d.matrix());
    if (!d.matrix().is_skew_symmetric() || !nil.nilpotent || *nil.index > 3)
        throw Error("family construction lost skewness or nilpotency");
    return d;
}
}  // namespace

LinearDerivation build_odd_family(unsigned n, const FieldPtr& field) {
    if (n < 3 || n % 2 == 0) throw ShapeError("this family needs odd n >= 3");
    const CycloNum i = CycloNum::imaginary_unit(field);  // throws unless 4 | conductor
    std::vector<CycloNum> column;
    column.reserve(n - 1);
    for (unsigned r = 0; r + 1 < n; ++r)
        column.push_back(r % 2 == 0 ? CycloNum::one(field) : i);
    return build_border_skew(n, field, column);
}

LinearDerivation build_even_family(unsigned n, const FieldPtr& field) {
    if (n < 4 || n % 2 == 1) throw ShapeError("this family needs even n >= 4");
    if (field->conductor() % (n - 1) != 0)
        throw FieldMismatchError("conductor " + std::to_string(field->conductor()) +
                                 " has no primitive root of unity of order " + std::to_string(n - 1));
    const CycloNum eps = CycloNum::zeta_power(field, field->conductor() / (n - 1));
    std::vector<CycloNum> column;
    column.reserve(n - 1);
    CycloNum power = CycloNum::one(field);
    for (unsigned r = 0; r + 1 < n; ++r) {
        column.push_back(power);
        power *= eps;
    }
    return build_border_skew(n, field, column);
}

bool verify_lnd_skew_implies_trivial(const LinearDerivation& skew, const CycloNum& alpha,
                                     unsigned max_degree) {
    if (!skew.matrix().is_skew_symmetric())
        throw PreconditionError("derivation is not skew-symmetric");
    if (!is_locally_nilpotent(skew))
        throw PreconditionError("derivation is not locally nilpotent");
    if (alpha.is_zero()) throw PreconditionError("scalar part must be nonzero");
    const LinearDerivation combined =
        LinearDerivation::scalar_plus_skew(skew.spec(), alpha, skew.matrix());
    return kernel_up_to_degree(combined, max_degree).trivial;
}

RingElem skew_kernel_witness(const LinearDerivation& skew) {
    const RingSpecPtr& spec = skew.spec();
    if (!skew.matrix().is_skew_symmetric())
        throw PreconditionError("derivation is not skew-symmetric");
    if (skew.is_zero()) throw PreconditionError("witness needs a nonzero derivation");
    const unsigned n = spec->n();
    const Matrix b2 = skew.matrix() * skew.matrix();
    if (!b2.is_zero()) {
        // Quadratic form X B^2 X^T; commutes with the action, hence constant.
        std::vector<std::pair<Monomial, CycloNum>> terms;
        for (unsigned r = 0; r < n; ++r)
            for (unsigned c = 0; c < n; ++c) {
                if (b2.at(r, c).is_zero()) continue;
                Monomial mono{std::vector<unsigned>(n, 0)};
                mono.exponents[r] += 1;
                mono.exponents[c] += 1;
                terms.emplace_back(std::move(mono), b2.at(r, c));
            }
        RingElem quad = RingElem::from_terms(spec, std::move(terms));
        if (!quad.is_zero()) return quad;
        // B^2 proportional to the identity: the form collapses onto the
        // relation; fall through to a degree-2 nullspace vector.
    } else {
        // B^2 = 0 makes 0 an eigenvalue of B^T; a nullvector gives a linear witness.
        const auto kernel = nullspace(skew.matrix().transpose());
        if (!kernel.empty()) {
            std::vector<std::pair<Monomial, CycloNum>> terms;
            for (unsigned t = 0; t < n; ++t) {
                if (kernel.front()[t].is_zero()) continue;
                Monomial mono{std::vector<unsigned>(n, 0)};
                mono.exponents[t] = 1;
                terms.emplace_back(std::move(mono), kernel.front()[t]);
            }
            return RingElem::from_terms(spec, std::move(terms));
        }
    }
    const KernelReport report = kernel_up_to_degree(
        LinearDerivation::scalar_plus_skew(spec, CycloNum::zero(spec->field()), skew.matrix()), 2);
    for (const auto& [k, basis] : report.kernels)
        if (!basis.empty()) return basis.front();
    throw Error("skew derivation unexpectedly has trivial kernel through degree 2");
}

Matrix restricted_action_matrix(const LinearDerivation& d, const std::vector<unsigned>& variables,
                                unsigned k) {
    const RingSpecPtr& spec = d.spec();
    const unsigned n = spec->n();
    std::vector<bool> chosen(n, false);
    for (unsigned v : variables) {
        if (v < 1 || v > n) throw IndexError("variable index out of range");
        chosen[v - 1] = true;
    }
    for (unsigned i = 0; i < n; ++i) {
        if (!chosen[i]) continue;
        for (unsigned j = 0; j < n; ++j)
            if (!chosen[j] && !d.matrix().at(i, j).is_zero())
                throw ShapeError("images leave the chosen variable span");
    }

    // Degree-k monomials of the free polynomial ring in the chosen variables,
    // descending lex on full exponent vectors; no quotient reduction applies.
    std::vector<Monomial> basis;
    Monomial scratch{std::vector<unsigned>(n, 0)};
    auto enumerate = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
        if (pos == variables.size()) {
            if (remaining == 0) basis.push_back(scratch);
            return;
        }
        const unsigned var = variables[pos] - 1;
        for (unsigned e = remaining + 1; e-- > 0;) {
            scratch.exponents[var] = e;
            self(self, pos + 1, remaining - e);
        }
        scratch.exponents[var] = 0;
    };
    enumerate(enumerate, 0, k);
    std::sort(basis.begin(), basis.end(),
              [](const Monomial& a, const Monomial& b) { return MonomialDescLex{}(a, b); });

    const unsigned dim = static_cast<unsigned>(basis.size());
    Matrix m(spec->field(), dim, dim);
    const MonomialDescLex before{};
    for (unsigned j = 0; j < dim; ++j) {
        // Formal Leibniz expansion upstairs: sum_i e_i x^(e - delta_i) d(x_i).
        std::map<Monomial, CycloNum, MonomialDescLex> image;
        for (unsigned i = 0; i < n; ++i) {
            const unsigned e = basis[j].exponents[i];
            if (e == 0) continue;
            for (unsigned t = 0; t < n; ++t) {
                const CycloNum& a = d.matrix().at(i, t);
                if (a.is_zero()) continue;
                Monomial mono = basis[j];
                mono.exponents[i] -= 1;
                mono.exponents[t] += 1;
                const CycloNum contribution = Rational(static_cast<int>(e)) * a;
                auto [it, inserted] = image.emplace(std::move(mono), contribution);
                if (!inserted) it->second += contribution;
            }
        }
        for (const auto& [mono, coeff] : image) {
            if (coeff.is_zero()) continue;
            auto it = std::lower_bound(basis.begin(), basis.end(), mono, before);
            if (it == basis.end() || !(*it == mono))
                throw Error("restricted action left the monomial span");
            m.at(static_cast<unsigned>(it - basis.begin()), j) = coeff;
        }
    }
    return m;
}

}  // namespace fermat
