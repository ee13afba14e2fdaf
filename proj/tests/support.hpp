#pragma once

#include <random>
#include <vector>

#include "fermat/constants.hpp"
#include "fermat/linearder.hpp"

namespace testsupport {

using Rng = std::mt19937_64;

inline fermat::Rational random_rational(Rng& rng) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    return fermat::Rational(fermat::BigInt(num(rng)), fermat::BigInt(den(rng)));
}

inline fermat::CycloNum random_cyclo(const fermat::FieldPtr& field, Rng& rng) {
    std::vector<fermat::Rational> coords(field->degree(), fermat::Rational(0));
    std::uniform_int_distribution<unsigned> pick(0, field->degree() - 1);
    std::uniform_int_distribution<unsigned> fill(1, std::min<unsigned>(field->degree(), 2));
    const unsigned k = fill(rng);
    for (unsigned t = 0; t < k; ++t) coords[pick(rng)] = random_rational(rng);
    return fermat::CycloNum::from_coords(field, std::move(coords));
}

inline fermat::CycloNum random_nonzero_cyclo(const fermat::FieldPtr& field, Rng& rng) {
    for (int tries = 0; tries < 64; ++tries) {
        fermat::CycloNum c = random_cyclo(field, rng);
        if (!c.is_zero()) return c;
    }
    return fermat::CycloNum::one(field);
}

inline fermat::Monomial random_normal_monomial(const fermat::RingSpecPtr& spec, Rng& rng,
                                               unsigned max_degree) {
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    std::uniform_int_distribution<unsigned> var(0, spec->n() - 1);
    fermat::Monomial mono{std::vector<unsigned>(spec->n(), 0)};
    const unsigned budget = deg(rng);
    for (unsigned t = 0; t < budget; ++t) {
        const unsigned v = var(rng);
        if (v + 1 == spec->n() && mono.exponents[v] + 1 >= spec->exponents().back()) continue;
        mono.exponents[v] += 1;
    }
    return mono;
}

inline fermat::RingElem random_elem(const fermat::RingSpecPtr& spec, Rng& rng, unsigned max_degree,
                                    unsigned max_terms) {
    std::uniform_int_distribution<unsigned> count(0, max_terms);
    std::vector<std::pair<fermat::Monomial, fermat::CycloNum>> terms;
    const unsigned k = count(rng);
    for (unsigned t = 0; t < k; ++t)
        terms.emplace_back(random_normal_monomial(spec, rng, max_degree),
                           random_cyclo(spec->field(), rng));
    return fermat::RingElem::from_terms(spec, std::move(terms));
}

// A raw (possibly non-normal) term list for normal-form tests.
inline std::vector<std::pair<fermat::Monomial, fermat::CycloNum>> random_raw_terms(
    const fermat::RingSpecPtr& spec, Rng& rng) {
    std::uniform_int_distribution<unsigned> count(1, 6);
    std::uniform_int_distribution<unsigned> small(0, 3);
    std::uniform_int_distribution<unsigned> last(0, 2 * spec->exponents().back());
    std::vector<std::pair<fermat::Monomial, fermat::CycloNum>> terms;
    const unsigned k = count(rng);
    for (unsigned t = 0; t < k; ++t) {
        fermat::Monomial mono{std::vector<unsigned>(spec->n(), 0)};
        for (unsigned v = 0; v + 1 < spec->n(); ++v) mono.exponents[v] = small(rng);
        mono.exponents.back() = last(rng);
        terms.emplace_back(std::move(mono), random_cyclo(spec->field(), rng));
    }
    return terms;
}

inline fermat::RingElem random_homogeneous(const fermat::RingSpecPtr& spec, Rng& rng, unsigned degree) {
    const auto basis = fermat::vk_basis(spec, degree);
    std::vector<std::pair<fermat::Monomial, fermat::CycloNum>> terms;
    std::uniform_int_distribution<int> gate(0, 2);
    for (const fermat::Monomial& mono : basis)
        if (gate(rng) == 0) terms.emplace_back(mono, random_cyclo(spec->field(), rng));
    if (terms.empty() && !basis.empty())
        terms.emplace_back(basis.front(), fermat::CycloNum::one(spec->field()));
    return fermat::RingElem::from_terms(spec, std::move(terms));
}

inline fermat::Matrix random_skew(const fermat::FieldPtr& field, unsigned n, Rng& rng) {
    fermat::Matrix m(field, n, n);
    for (unsigned r = 0; r < n; ++r)
        for (unsigned c = r + 1; c < n; ++c) {
            const fermat::CycloNum v = random_cyclo(field, rng);
            m.at(r, c) = v;
            m.at(c, r) = -v;
        }
    return m;
}

inline fermat::LinearDerivation random_valid_linear(const fermat::RingSpecPtr& spec, Rng& rng,
                                                    const std::vector<fermat::Matrix>& space) {
    fermat::Matrix m(spec->field(), spec->n(), spec->n());
    for (const fermat::Matrix& b : space) {
        const fermat::CycloNum c = random_cyclo(spec->field(), rng);
        if (!c.is_zero()) m += c * b;
    }
    return fermat::LinearDerivation::from_matrix(spec, m);
}

// The worked plane-rotation example over B_3^(2,2,2), Q(i):
// d = I + d_s with d_s rotating (x2, x3).
inline fermat::LinearDerivation rotation_full() {
    const fermat::RingSpecPtr spec = fermat::RingSpec::make(3, {2, 2, 2}, 4);
    fermat::Matrix m = fermat::Matrix::identity(spec->field(), 3);
    m.at(1, 2) = fermat::CycloNum::from_rational(spec->field(), fermat::Rational(-1));
    m.at(2, 1) = fermat::CycloNum::one(spec->field());
    return fermat::LinearDerivation::from_matrix(spec, m);
}

inline fermat::LinearDerivation rotation_skew() {
    const fermat::RingSpecPtr spec = fermat::RingSpec::make(3, {2, 2, 2}, 4);
    fermat::Matrix m(spec->field(), 3, 3);
    m.at(1, 2) = fermat::CycloNum::from_rational(spec->field(), fermat::Rational(-1));
    m.at(2, 1) = fermat::CycloNum::one(spec->field());
    return fermat::LinearDerivation::from_matrix(spec, m);
}

// Grid of shapes with every exponent >= 3: n in {3,4}, m_i in {3,4,5}.
inline std::vector<fermat::RingSpecPtr> all_ge3_grid(unsigned conductor = 4) {
    std::vector<fermat::RingSpecPtr> out;
    for (unsigned n : {3u, 4u}) {
        std::vector<unsigned> m(n, 3);
        while (true) {
            out.push_back(fermat::RingSpec::make(n, m, conductor));
            unsigned i = 0;
            while (i < n && m[i] == 5) m[i++] = 3;
            if (i == n) break;
            ++m[i];
        }
    }
    return out;
}

inline std::vector<fermat::RingSpecPtr> ring_grid(unsigned conductor = 4) {
    return {fermat::RingSpec::make(3, {2, 2, 2}, conductor),
            fermat::RingSpec::make(3, {3, 3, 3}, conductor),
            fermat::RingSpec::make(4, {2, 2, 2, 2}, conductor),
            fermat::RingSpec::make(3, {3, 4, 5}, conductor)};
}

}  // namespace testsupport
