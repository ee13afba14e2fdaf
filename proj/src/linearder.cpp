#include "fermat/linearder.hpp"

namespace fermat {

namespace {
std::vector<RingElem> images_from_matrix(const RingSpecPtr& spec, const Matrix& matrix) {
    if (matrix.rows() != spec->n() || matrix.cols() != spec->n())
        throw ShapeError("associated matrix must be n x n");
    if (matrix.field()->conductor() != spec->field()->conductor())
        throw FieldMismatchError("matrix field differs from ring field");
    std::vector<RingElem> images;
    images.reserve(spec->n());
    for (unsigned i = 0; i < spec->n(); ++i) {
        RingElem image = RingElem::zero(spec);
        for (unsigned j = 0; j < spec->n(); ++j)
            if (!matrix.at(i, j).is_zero())
                image += matrix.at(i, j) * RingElem::variable(spec, j + 1);
        images.push_back(std::move(image));
    }
    return images;
}
}  // namespace

LinearDerivation::LinearDerivation(Matrix matrix, Derivation derivation)
    : matrix_(std::move(matrix)), derivation_(std::move(derivation)) {}

LinearDerivation LinearDerivation::from_matrix(const RingSpecPtr& spec, const Matrix& matrix) {
    Derivation der(spec, images_from_matrix(spec, matrix));
    if (!der.certified())
        throw NotADerivationError("matrix does not define a derivation; residue: " + der.residue().str(),
                                  der.residue().str());
    return LinearDerivation(matrix, std::move(der));
}

LinearDerivation LinearDerivation::diagonal(const RingSpecPtr& spec, const CycloNum& alpha) {
    Matrix m(spec->field(), spec->n(), spec->n());
    for (unsigned i = 0; i < spec->n(); ++i) {
        const Rational inv_m(BigInt(1), BigInt(spec->exponent(i)));
        m.at(i, i) = inv_m * alpha;
    }
    return from_matrix(spec, m);
}

LinearDerivation LinearDerivation::scalar_plus_skew(const RingSpecPtr& spec, const CycloNum& alpha,
                                                    const Matrix& skew) {
    if (!spec->uniform_exponent() || spec->exponents().front() != 2)
        throw ShapeError("scalar + skew requires m = (2,...,2)");
    if (!skew.is_skew_symmetric()) throw ShapeError("skew part is not skew-symmetric");
    Matrix m = skew;
    for (unsigned i = 0; i < spec->n(); ++i) m.at(i, i) += alpha;
    return from_matrix(spec, m);
}

std::vector<Matrix> linear_derivation_space(const RingSpecPtr& spec) {
    const unsigned n = spec->n();
    // Unknown a_ij contributes m_i x_i^(m_i-1) x_j to the residue; row-major order.
    std::vector<RingElem> columns;
    columns.reserve(static_cast<std::size_t>(n) * n);
    for (unsigned i = 0; i < n; ++i) {
        Monomial lead{std::vector<unsigned>(n, 0)};
        lead.exponents[i] = spec->exponent(i) - 1;
        const RingElem prefix = RingElem::monomial(
            spec, std::move(lead),
            CycloNum::from_rational(spec->field(), Rational(static_cast<int>(spec->exponent(i)))));
        for (unsigned j = 0; j < n; ++j)
            columns.push_back(prefix * RingElem::variable(spec, j + 1));
    }
    const auto kernel = nullspace(coefficient_system(spec, columns));
    std::vector<Matrix> basis;
    basis.reserve(kernel.size());
    for (const auto& v : kernel) {
        Matrix m(spec->field(), n, n);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) m.at(i, j) = v[i * n + j];
        basis.push_back(std::move(m));
    }
    return basis;
}

Classification classify(const LinearDerivation& ld) {
    const RingSpecPtr& spec = ld.spec();
    const Matrix& m = ld.matrix();
    const unsigned n = spec->n();
    if (spec->all_exponents_at_least(3)) {
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j)
                if (i != j && !m.at(i, j).is_zero())
                    throw NotADerivationError("off-diagonal entry in an all-exponents >= 3 ring",
                                              m.at(i, j).str());
        const CycloNum alpha =
            CycloNum::from_rational(spec->field(), Rational(static_cast<int>(spec->exponent(0)))) *
            m.at(0, 0);
        for (unsigned i = 1; i < n; ++i) {
            const CycloNum scaled =
                CycloNum::from_rational(spec->field(), Rational(static_cast<int>(spec->exponent(i)))) *
                m.at(i, i);
            if (scaled != alpha)
                throw NotADerivationError("diagonal entries are not proportional to 1/m_i",
                                          scaled.str());
        }
        return Classification{Classification::Kind::diagonal, alpha, std::nullopt};
    }
    if (spec->uniform_exponent() && spec->exponents().front() == 2) {
        Decomposition parts = decompose(ld);
        return Classification{Classification::Kind::scalar_plus_skew, std::nullopt, std::move(parts)};
    }
    return Classification{Classification::Kind::unclassified, std::nullopt, std::nullopt};
}

Decomposition decompose(const LinearDerivation& ld) {
    const RingSpecPtr& spec = ld.spec();
    if (!spec->uniform_exponent() || spec->exponents().front() != 2)
        throw ShapeError("decomposition requires m = (2,...,2)");
    const Matrix& m = ld.matrix();
    const CycloNum alpha = m.at(0, 0);
    for (unsigned i = 1; i < spec->n(); ++i)
        if (m.at(i, i) != alpha)
            throw NotADerivationError("diagonal entries differ; no scalar part", m.at(i, i).str());
    Matrix skew = m;
    for (unsigned i = 0; i < spec->n(); ++i) skew.at(i, i) -= alpha;
    if (!skew.is_skew_symmetric())
        throw NotADerivationError("residual part is not skew-symmetric", skew.text());
    return Decomposition{alpha, std::move(skew)};
}

bool is_locally_nilpotent(const LinearDerivation& ld) {
    const NilpotencyResult result = is_nilpotent(ld.matrix());
    const RingSpecPtr& spec = ld.spec();
    if (result.nilpotent && spec->uniform_exponent() && spec->exponents().front() == 2) {
        // Cross-check: a nilpotent associated matrix has zero scalar part and
        // a nilpotent skew part.
        const Decomposition parts = decompose(ld);
        if (!parts.alpha.is_zero() || !is_nilpotent(parts.skew).nilpotent)
            throw Error("nilpotent matrix failed the skew-decomposition cross-check");
    }
    return result.nilpotent;
}

}  // namespace fermat
