#include "fermat/verify.hpp"

#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "fermat/constants.hpp"

namespace fermat {

namespace {

using Rng = std::mt19937_64;
using GridShape = std::pair<unsigned, std::vector<unsigned>>;

Rational random_rational(Rng& rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

CycloNum random_cyclo(const FieldPtr& field, Rng& rng) {
    std::vector<Rational> coords(field->degree(), Rational(0));
    std::uniform_int_distribution<unsigned> slots(1, std::min<unsigned>(field->degree(), 2));
    const unsigned fill = slots(rng);
    std::uniform_int_distribution<unsigned> pick(0, field->degree() - 1);
    for (unsigned t = 0; t < fill; ++t) coords[pick(rng)] = random_rational(rng);
    return CycloNum::from_coords(field, std::move(coords));
}

CycloNum random_nonzero_cyclo(const FieldPtr& field, Rng& rng) {
    for (int tries = 0; tries < 64; ++tries) {
        CycloNum c = random_cyclo(field, rng);
        if (!c.is_zero()) return c;
    }
    return CycloNum::one(field);
}

Monomial random_normal_monomial(const RingSpecPtr& spec, Rng& rng, unsigned max_degree) {
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    std::uniform_int_distribution<unsigned> var(0, spec->n() - 1);
    Monomial mono{std::vector<unsigned>(spec->n(), 0)};
    unsigned budget = deg(rng);
    for (unsigned t = 0; t < budget; ++t) {
        const unsigned v = var(rng);
        if (v + 1 == spec->n() && mono.exponents[v] + 1 >= spec->exponents().back()) continue;
        mono.exponents[v] += 1;
    }
    return mono;
}

RingElem random_homogeneous(const RingSpecPtr& spec, Rng& rng, unsigned degree) {
    const auto basis = vk_basis(spec, degree);
    std::vector<std::pair<Monomial, CycloNum>> terms;
    std::uniform_int_distribution<int> gate(0, 2);
    for (const Monomial& mono : basis)
        if (gate(rng) == 0) terms.emplace_back(mono, random_cyclo(spec->field(), rng));
    if (terms.empty() && !basis.empty())
        terms.emplace_back(basis.front(), CycloNum::one(spec->field()));
    return RingElem::from_terms(spec, std::move(terms));
}

Matrix random_skew(const FieldPtr& field, unsigned n, Rng& rng) {
    Matrix m(field, n, n);
    for (unsigned r = 0; r < n; ++r)
        for (unsigned c = r + 1; c < n; ++c) {
            const CycloNum v = random_cyclo(field, rng);
            m.at(r, c) = v;
            m.at(c, r) = -v;
        }
    return m;
}

LinearDerivation random_valid_linear(const RingSpecPtr& spec, Rng& rng,
                                     const std::vector<Matrix>& space_basis) {
    Matrix m(spec->field(), spec->n(), spec->n());
    for (const Matrix& b : space_basis) {
        const CycloNum c = random_cyclo(spec->field(), rng);
        if (!c.is_zero()) m += c * b;
    }
    return LinearDerivation::from_matrix(spec, m);
}

// The worked example with a plane rotation in the skew part:
// d(x1)=x1, d(x2)=x2-x3, d(x3)=x2+x3 over B_3^(2,2,2), Q(i).
LinearDerivation rotation_example_full() {
    const RingSpecPtr spec = RingSpec::make(3, {2, 2, 2}, 4);
    Matrix m = Matrix::identity(spec->field(), 3);
    m.at(1, 2) = CycloNum::from_rational(spec->field(), Rational(-1));
    m.at(2, 1) = CycloNum::one(spec->field());
    return LinearDerivation::from_matrix(spec, m);
}

LinearDerivation rotation_example_skew() {
    const RingSpecPtr spec = RingSpec::make(3, {2, 2, 2}, 4);
    Matrix m(spec->field(), 3, 3);
    m.at(1, 2) = CycloNum::from_rational(spec->field(), Rational(-1));
    m.at(2, 1) = CycloNum::one(spec->field());
    return LinearDerivation::from_matrix(spec, m);
}

struct Suite {
    explicit Suite(const VerifyOptions& options) : opt(options) {
        if (!opt.grid.empty()) restricted = true;
    }

    const VerifyOptions& opt;
    bool restricted = false;

    std::vector<GridShape> ring_grid() const {
        return filter({{3, {2, 2, 2}}, {3, {3, 3, 3}}, {4, {2, 2, 2, 2}}, {3, {3, 4, 5}}});
    }

    std::vector<GridShape> all_ge3_grid() const {
        std::vector<GridShape> out;
        for (unsigned n : {3u, 4u}) {
            std::vector<unsigned> m(n, 3);
            while (true) {
                out.emplace_back(n, m);
                unsigned i = 0;
                while (i < n && m[i] == 5) m[i++] = 3;
                if (i == n) break;
                ++m[i];
            }
        }
        return filter(std::move(out));
    }

    std::vector<GridShape> quadratic_grid() const {
        std::vector<GridShape> out;
        for (unsigned n : {3u, 4u, 5u}) out.emplace_back(n, std::vector<unsigned>(n, 2));
        return filter(std::move(out));
    }

    std::vector<GridShape> filter(std::vector<GridShape> shapes) const {
        if (!restricted) return shapes;
        std::vector<GridShape> out;
        for (auto& s : shapes)
            for (const auto& g : opt.grid)
                if (g.first == s.first && g.second == s.second) {
                    out.push_back(std::move(s));
                    break;
                }
        return out;
    }

    bool shape_included(unsigned n, const std::vector<unsigned>& m) const {
        if (!restricted) return true;
        for (const auto& g : opt.grid)
            if (g.first == n && g.second == m) return true;
        return false;
    }

    static RingSpecPtr spec_of(const GridShape& shape, unsigned conductor = 4) {
        return RingSpec::make(shape.first, shape.second, conductor);
    }
};

}  // namespace

VerifyResult run_verify_suite(const VerifyOptions& options, std::ostream& out) {
    Suite suite(options);
    VerifyResult result{true};

    struct Check {
        std::string name;
        std::function<bool(std::ostream&)> run;
        bool applicable = true;
    };
    std::vector<Check> checks;

    const unsigned K = options.max_degree;

    // 1. Unique normal forms: the defining relation collapses to zero and
    //    renormalizing a normal form is the identity.
    checks.push_back({"normal-form-idempotence", [&](std::ostream& detail) {
        const auto grid = suite.ring_grid();
        if (grid.empty()) return true;
        Rng rng(1001);
        for (const auto& shape : grid) {
            const RingSpecPtr spec = Suite::spec_of(shape);
            if (!relation_element(spec).is_zero()) {
                detail << "relation is nonzero in " << spec->str();
                return false;
            }
        }
        for (unsigned t = 0; t < 500; ++t) {
            const RingSpecPtr spec = Suite::spec_of(grid[t % grid.size()]);
            std::vector<std::pair<Monomial, CycloNum>> raw;
            std::uniform_int_distribution<unsigned> count(1, 6);
            std::uniform_int_distribution<unsigned> exp(0, 2 * spec->exponents().back());
            const unsigned terms = count(rng);
            for (unsigned s = 0; s < terms; ++s) {
                Monomial mono{std::vector<unsigned>(spec->n(), 0)};
                for (unsigned v = 0; v < spec->n(); ++v) mono.exponents[v] = exp(rng) % 4;
                mono.exponents.back() = exp(rng);
                raw.emplace_back(std::move(mono), random_cyclo(spec->field(), rng));
            }
            const RingElem once = RingElem::from_terms(spec, raw);
            std::vector<std::pair<Monomial, CycloNum>> again(once.terms().begin(), once.terms().end());
            if (!(RingElem::from_terms(spec, std::move(again)) == once)) {
                detail << "renormalization changed a normal form in " << spec->str();
                return false;
            }
        }
        return true;
    }});

    // 2. The canonical generators certify as well defined.
    checks.push_back({"generator-certification", [&](std::ostream& detail) {
        for (const auto& shape : suite.ring_grid()) {
            const RingSpecPtr spec = Suite::spec_of(shape);
            if (!Derivation::generator_epsilon(spec).certified()) {
                detail << "epsilon failed in " << spec->str();
                return false;
            }
            for (unsigned i = 1; i <= spec->n(); ++i)
                for (unsigned j = i + 1; j <= spec->n(); ++j)
                    if (!Derivation::generator_dij(spec, i, j).certified()) {
                        detail << "d_" << i << j << " failed in " << spec->str();
                        return false;
                    }
        }
        return true;
    }});

    // 3. Triangular candidates with constant d(x1) vanish identically.
    checks.push_back({"triangular-vanishing", [&](std::ostream& detail) {
        const std::vector<GridShape> shapes =
            suite.filter({{3, {2, 2, 2}}, {3, {3, 3, 3}}, {4, {2, 2, 2, 2}}});
        for (const auto& shape : shapes) {
            const RingSpecPtr spec = Suite::spec_of(shape);
            if (!verify_triangular_vanishing(spec, options.triangular_bound)) {
                detail << "nonzero triangular solution in " << spec->str();
                return false;
            }
        }
        return true;
    }});

    // 4. Dimension of the space of valid matrices: 1 (diagonal) for all
    //    exponents >= 3; 1 + n(n-1)/2 with a clean scalar/skew split for
    //    m = (2,...,2).
    checks.push_back({"linear-space-dimensions", [&](std::ostream& detail) {
        for (const auto& shape : suite.all_ge3_grid()) {
            const RingSpecPtr spec = Suite::spec_of(shape);
            const auto basis = linear_derivation_space(spec);
            if (basis.size() != 1) {
                detail << "dim " << basis.size() << " != 1 in " << spec->str();
                return false;
            }
            // Entries must be proportional to 1/m_i on the diagonal.
            const Matrix& b = basis.front();
            const CycloNum scale =
                CycloNum::from_rational(spec->field(), Rational(static_cast<int>(spec->exponent(0)))) *
                b.at(0, 0);
            if (scale.is_zero()) {
                detail << "degenerate basis in " << spec->str();
                return false;
            }
            for (unsigned i = 0; i < spec->n(); ++i)
                for (unsigned j = 0; j < spec->n(); ++j) {
                    const CycloNum expected =
                        i == j ? Rational(BigInt(1), BigInt(spec->exponent(i))) * scale
                               : CycloNum::zero(spec->field());
                    if (b.at(i, j) != expected) {
                        detail << "basis is not the diagonal family in " << spec->str();
                        return false;
                    }
                }
        }
        for (const auto& shape : suite.quadratic_grid()) {
            const RingSpecPtr spec = Suite::spec_of(shape);
            const auto basis = linear_derivation_space(spec);
            const std::size_t expected = 1 + shape.first * (shape.first - 1) / 2;
            if (basis.size() != expected) {
                detail << "dim " << basis.size() << " != " << expected << " in " << spec->str();
                return false;
            }
            for (const Matrix& b : basis) {
                const Decomposition parts = decompose(LinearDerivation::from_matrix(spec, b));
                if (!parts.skew.is_skew_symmetric()) {
                    detail << "non-skew residual in " << spec->str();
                    return false;
                }
            }
        }
        return true;
    }});

    // 5. Iterating the derivation on generators matches matrix powers.
    checks.push_back({"power-identity", [&](std::ostream& detail) {
        Rng rng(1005);
        for (const auto& shape : suite.ring_grid()) {
            const RingSpecPtr spec = Suite::spec_of(shape);
            const auto space = linear_derivation_space(spec);
            for (unsigned trial = 0; trial < 50; ++trial) {
                const LinearDerivation d = random_valid_linear(spec, rng, space);
                for (unsigned s = 0; s <= 5; ++s) {
                    const Matrix p = matrix_power(d.matrix(), s);
                    for (unsigned i = 0; i < spec->n(); ++i) {
                        RingElem expected = RingElem::zero(spec);
                        for (unsigned j = 0; j < spec->n(); ++j)
                            if (!p.at(i, j).is_zero())
                                expected += p.at(i, j) * RingElem::variable(spec, j + 1);
                        if (!(apply_power(d.derivation(), s, RingElem::variable(spec, i + 1)) ==
                              expected)) {
                            detail << "power mismatch at s=" << s << " in " << spec->str();
                            return false;
                        }
                    }
                }
            }
        }
        return true;
    }});

    // 6. With all exponents >= 3 the only locally nilpotent matrix is zero.
    checks.push_back({"diagonal-lnd-only-zero", [&](std::ostream& detail) {
        Rng rng(1006);
        for (const auto& shape : suite.all_ge3_grid()) {
            const RingSpecPtr spec = Suite::spec_of(shape);
            const LinearDerivation zero =
                LinearDerivation::from_matrix(spec, Matrix(spec->field(), spec->n(), spec->n()));
            if (!is_locally_nilpotent(zero)) {
                detail << "zero derivation not LND in " << spec->str();
                return false;
            }
            for (unsigned trial = 0; trial < 3; ++trial) {
                const CycloNum alpha = random_nonzero_cyclo(spec->field(), rng);
                if (is_locally_nilpotent(LinearDerivation::diagonal(spec, alpha))) {
                    detail << "nonzero diagonal is LND in " << spec->str();
                    return false;
                }
            }
        }
        return true;
    }});

    // 7. For m = (2,...,2): locally nilpotent iff nilpotent iff (after the
    //    split) zero scalar part with nilpotent skew part.
    checks.push_back({"skew-lnd-cross-check", [&](std::ostream& detail) {
        Rng rng(1007);
        for (const auto& shape : suite.quadratic_grid()) {
            const RingSpecPtr spec = Suite::spec_of(shape);
            std::vector<std::pair<CycloNum, Matrix>> pool;
            std::uniform_int_distribution<int> zero_gate(0, 1);
            for (unsigned trial = 0; trial < 20; ++trial) {
                const CycloNum alpha = zero_gate(rng) ? CycloNum::zero(spec->field())
                                                      : random_nonzero_cyclo(spec->field(), rng);
                pool.emplace_back(alpha, random_skew(spec->field(), spec->n(), rng));
            }
            if (spec->n() % 2 == 1) {
                // Border members land on the nilpotent side of the split.
                const Matrix member = build_odd_family(spec->n(), spec->field()).matrix();
                pool.emplace_back(CycloNum::zero(spec->field()), member);
                pool.emplace_back(CycloNum::one(spec->field()), member);
            }
            bool nilpotent_seen = false;
            for (const auto& [alpha, skew] : pool) {
                const LinearDerivation d = LinearDerivation::scalar_plus_skew(spec, alpha, skew);
                const bool lnd = is_locally_nilpotent(d);
                const bool matrix_nilpotent = is_nilpotent(d.matrix()).nilpotent;
                nilpotent_seen = nilpotent_seen || lnd;
                if (lnd != matrix_nilpotent) {
                    detail << "LND decision disagrees with nilpotency in " << spec->str();
                    return false;
                }
                if (lnd && !alpha.is_zero()) {
                    detail << "nilpotent matrix with nonzero scalar part in " << spec->str();
                    return false;
                }
                if (lnd != (d.matrix().is_skew_symmetric() && matrix_nilpotent)) {
                    detail << "skew+nilpotent characterization failed in " << spec->str();
                    return false;
                }
            }
            if (spec->n() % 2 == 1 && !nilpotent_seen) {
                detail << "nilpotent side never exercised in " << spec->str();
                return false;
            }
        }
        return true;
    }});

    // 8. Monomials are eigenvectors of diagonal derivations with the weighted
    //    eigenvalue; mixed-weight supports are rejected.
    checks.push_back({"monomial-eigenvalue-certificates", [&](std::ostream& detail) {
        Rng rng(1008);
        const auto grid = suite.all_ge3_grid();
        if (grid.empty()) return true;
        for (unsigned trial = 0; trial < 200; ++trial) {
            const RingSpecPtr spec = Suite::spec_of(grid[trial % grid.size()]);
            const CycloNum alpha = random_nonzero_cyclo(spec->field(), rng);
            const Monomial mono = random_normal_monomial(spec, rng, 5);
            const CycloNum lambda = darboux_eigenvalue(spec, alpha, mono);
            const LinearDerivation d = LinearDerivation::diagonal(spec, alpha);
            const RingElem f = RingElem::monomial(spec, mono, CycloNum::one(spec->field()));
            if (!(d.apply(f) == lambda * f)) {
                detail << "eigenvalue formula failed in " << spec->str();
                return false;
            }
            if (!eigenvalue_uniqueness_check(spec, alpha, f, lambda)) {
                detail << "uniqueness check rejected a monomial in " << spec->str();
                return false;
            }
        }
        // Reject supports with two distinct weights.
        for (const auto& shape : grid) {
            const RingSpecPtr spec = Suite::spec_of(shape);
            const CycloNum alpha = CycloNum::one(spec->field());
            const RingElem mixed =
                RingElem::variable(spec, 1) + RingElem::variable(spec, 1) * RingElem::variable(spec, 2);
            const CycloNum lambda =
                darboux_eigenvalue(spec, alpha, mixed.terms().begin()->first);
            if (eigenvalue_uniqueness_check(spec, alpha, mixed, lambda)) {
                detail << "mixed support accepted in " << spec->str();
                return false;
            }
            break;
        }
        return true;
    }});

    // 9. Nonzero diagonal derivations have no constants below the bound.
    checks.push_back({"diagonal-kernel-trivial", [&](std::ostream& detail) {
        for (const auto& shape : suite.all_ge3_grid()) {
            const RingSpecPtr spec = Suite::spec_of(shape);
            const LinearDerivation d = LinearDerivation::diagonal(spec, CycloNum::one(spec->field()));
            const KernelReport report = kernel_up_to_degree(d, K);
            if (!report.trivial) {
                detail << "nontrivial kernel at k=" << *report.first_nontrivial << " in " << spec->str();
                return false;
            }
        }
        return true;
    }});

    // 10. d = alpha*I + d_s on homogeneous degree-k elements: d(f) = lambda f
    //     iff d_s(f) = (lambda - k alpha) f; scalar restrictions are k*alpha*I.
    checks.push_back({"shifted-eigenvalue-equivalence", [&](std::ostream& detail) {
        Rng rng(1010);
        for (const auto& shape : suite.quadratic_grid()) {
            const RingSpecPtr spec = Suite::spec_of(shape);
            for (unsigned trial = 0; trial < 40; ++trial) {
                const Matrix skew_m = random_skew(spec->field(), spec->n(), rng);
                const LinearDerivation skew =
                    LinearDerivation::scalar_plus_skew(spec, CycloNum::zero(spec->field()), skew_m);
                const CycloNum alpha = random_cyclo(spec->field(), rng);
                const LinearDerivation d = LinearDerivation::scalar_plus_skew(spec, alpha, skew_m);
                std::uniform_int_distribution<unsigned> deg(1, 3);
                const unsigned k = deg(rng);
                const RingElem f = random_homogeneous(spec, rng, k);
                if (f.is_zero()) continue;
                const CycloNum lambda = random_cyclo(spec->field(), rng);
                const bool direct = d.apply(f) == lambda * f;
                const bool shifted = shifted_eigen_check(skew, alpha, f, lambda);
                if (direct != shifted) {
                    detail << "equivalence failed in " << spec->str();
                    return false;
                }
                // lambda = 0 specializes to the kernel criterion.
                const bool in_kernel = d.apply(f).is_zero();
                if (in_kernel != shifted_eigen_check(skew, alpha, f, CycloNum::zero(spec->field()))) {
                    detail << "kernel specialization failed in " << spec->str();
                    return false;
                }
            }
            // Pure scalar part: restriction to V_k is k*alpha*I.
            const CycloNum alpha = CycloNum::from_rational(spec->field(), Rational(2));
            const LinearDerivation scalar = LinearDerivation::scalar_plus_skew(
                spec, alpha, Matrix(spec->field(), spec->n(), spec->n()));
            for (unsigned k = 1; k <= std::min(K, 4u); ++k) {
                const VkMatrix vk = restrict_to_vk(scalar, k);
                Matrix expected(spec->field(), vk.matrix.rows(), vk.matrix.cols());
                const CycloNum ka = Rational(static_cast<int>(k)) * alpha;
                for (unsigned t = 0; t < expected.rows(); ++t) expected.at(t, t) = ka;
                if (!(vk.matrix == expected)) {
                    detail << "scalar restriction is not k*alpha*I in " << spec->str();
                    return false;
                }
            }
        }
        return true;
    }});

    // 11. Every nonzero skew derivation has a nonzero constant: quadratic form
    //     of the squared matrix, or a linear form when the square vanishes.
    checks.push_back({"skew-kernel-witnesses", [&](std::ostream& detail) {
        Rng rng(1011);
        for (const auto& shape : suite.quadratic_grid()) {
            const RingSpecPtr spec = Suite::spec_of(shape);
            std::vector<Matrix> pool;
            for (unsigned trial = 0; trial < 6; ++trial)
                pool.push_back(random_skew(spec->field(), spec->n(), rng));
            if (spec->n() == 3 && suite.shape_included(3, {2, 2, 2}))
                pool.push_back(rotation_example_skew().matrix());
            for (const Matrix& skew_m : pool) {
                if (skew_m.is_zero()) continue;
                const LinearDerivation skew =
                    LinearDerivation::scalar_plus_skew(spec, CycloNum::zero(spec->field()), skew_m);
                const RingElem witness = skew_kernel_witness(skew);
                if (witness.is_zero() || witness.is_constant() || !skew.apply(witness).is_zero()) {
                    detail << "bad witness in " << spec->str();
                    return false;
                }
                if (kernel_up_to_degree(skew, 2).trivial) {
                    detail << "skew kernel reported trivial in " << spec->str();
                    return false;
                }
            }
        }
        return true;
    }});

    // 12. Scalar-shift search against the rotation example: rational
    //     candidates pass, the imaginary unit is rejected at degree 1.
    checks.push_back({"alpha-search", [&](std::ostream& detail) {
        const LinearDerivation skew = rotation_example_skew();
        const FieldPtr& field = skew.spec()->field();
        const std::vector<CycloNum> good = {CycloNum::one(field),
                                            CycloNum::from_rational(field, Rational(2)),
                                            CycloNum::from_rational(field, Rational(BigInt(1), BigInt(2)))};
        const auto found = find_alpha(skew, K, good);
        if (!found || !(*found == CycloNum::one(field))) {
            detail << "expected alpha=1 from the candidate list";
            return false;
        }
        if (find_alpha(skew, K, {CycloNum::imaginary_unit(field)})) {
            detail << "imaginary candidate should be rejected";
            return false;
        }
        Matrix shifted = restrict_to_vk(skew, 1).matrix;
        for (unsigned t = 0; t < 3; ++t) shifted.at(t, t) += CycloNum::imaginary_unit(field);
        if (!det(shifted).is_zero()) {
            detail << "imaginary candidate should die at degree 1";
            return false;
        }
        return true;
    }, suite.shape_included(3, {2, 2, 2})});

    // 13. The border-pattern families: skew, cube to zero, locally nilpotent,
    //     and alpha=1 forces a trivial kernel below the bound.
    bool any_family_shape = false;
    for (unsigned n : {3u, 5u, 7u, 4u, 6u})
        any_family_shape = any_family_shape || suite.shape_included(n, std::vector<unsigned>(n, 2));
    checks.push_back({"nilpotent-family-kernels", [&](std::ostream& detail) {
        std::vector<LinearDerivation> family;
        for (unsigned n : {3u, 5u, 7u})
            if (suite.shape_included(n, std::vector<unsigned>(n, 2)))
                family.push_back(build_odd_family(n, FieldSpec::make(4)));
        for (unsigned n : {4u, 6u})
            if (suite.shape_included(n, std::vector<unsigned>(n, 2)))
                family.push_back(build_even_family(n, FieldSpec::make(std::lcm(4u, n - 1))));
        for (const LinearDerivation& d : family) {
            if (!d.matrix().is_skew_symmetric() ||
                !matrix_power(d.matrix(), 3).is_zero() || !is_locally_nilpotent(d)) {
                detail << "family member is not a nilpotent skew matrix (n=" << d.spec()->n() << ")";
                return false;
            }
            if (!verify_lnd_skew_implies_trivial(d, CycloNum::one(d.spec()->field()), K)) {
                detail << "family kernel is not trivial (n=" << d.spec()->n() << ")";
                return false;
            }
        }
        return true;
    }, any_family_shape});

    // 14. Rotation example: the action on the two rotated variables, taken in
    //     the free polynomial ring, has nonzero determinant for k = 1..10,
    //     and the full quotient kernel is trivial below the bound. The skew
    //     part alone has the linear witness x1 and the quadratic-form witness.
    checks.push_back({"restricted-action-determinants", [&](std::ostream& detail) {
        const LinearDerivation d = rotation_example_full();
        for (unsigned k = 1; k <= 10; ++k)
            if (det(restricted_action_matrix(d, {2, 3}, k)).is_zero()) {
                detail << "restricted determinant vanished at k=" << k;
                return false;
            }
        if (!kernel_up_to_degree(d, K).trivial) {
            detail << "full kernel is not trivial";
            return false;
        }
        const LinearDerivation skew = rotation_example_skew();
        const RingSpecPtr& spec = skew.spec();
        const RingElem x1 = RingElem::variable(spec, 1);
        const KernelReport report = kernel_up_to_degree(skew, 2);
        const auto& degree_one = report.kernels.at(1);
        if (degree_one.size() != 1 || !(degree_one.front() == x1)) {
            detail << "degree-1 kernel is not spanned by x1";
            return false;
        }
        const RingElem witness = skew_kernel_witness(skew);
        if (witness.is_zero() || !skew.apply(witness).is_zero()) {
            detail << "quadratic witness failed";
            return false;
        }
        return true;
    }, suite.shape_included(3, {2, 2, 2})});

    // 15. The rotation skew part is NOT nilpotent, yet 1*I + d_s still has a
    //     trivial kernel: local nilpotency is sufficient, not necessary.
    checks.push_back({"non-nilpotent-skew-trivial-kernel", [&](std::ostream& detail) {
        const LinearDerivation skew = rotation_example_skew();
        if (is_locally_nilpotent(skew)) {
            detail << "rotation skew part reported nilpotent";
            return false;
        }
        if (!kernel_up_to_degree(rotation_example_full(), K).trivial) {
            detail << "combined kernel is not trivial";
            return false;
        }
        try {
            verify_lnd_skew_implies_trivial(skew, CycloNum::one(skew.spec()->field()), 1);
            detail << "precondition violation was not rejected";
            return false;
        } catch (const PreconditionError&) {
        }
        return true;
    }, suite.shape_included(3, {2, 2, 2})});

    for (const Check& check : checks) {
        if (!check.applicable) {
            out << "SKIP " << check.name << "\n";
            ++result.skipped;
            continue;
        }
        std::ostringstream detail;
        bool ok = false;
        try {
            ok = check.run(detail);
        } catch (const std::exception& e) {
            detail << "exception: " << e.what();
        }
        if (ok) {
            out << "PASS " << check.name << "\n";
            ++result.passed;
        } else {
            out << "FAIL " << check.name << " (" << detail.str() << ")\n";
            ++result.failed;
            result.all_passed = false;
        }
    }
    return result;
}

}  // namespace fermat
