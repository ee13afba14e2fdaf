#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fermat/parser.hpp"
#include "support.hpp"

using namespace fermat;

namespace {

RingElem parse(const RingSpecPtr& spec, const std::string& text) {
    return parse_expression(text, spec);
}

}  // namespace

TEST_CASE("the defining relation collapses to zero") {
    for (const auto& spec : testsupport::ring_grid()) {
        CHECK(relation_element(spec).is_zero());
    }
}

TEST_CASE("normal form rewrites the last variable") {
    const RingSpecPtr b3 = RingSpec::make(3, {2, 2, 2}, 4);
    CHECK(parse(b3, "x1^2 + x2^2 + x3^2").is_zero());
    CHECK(parse(b3, "x3^2") == parse(b3, "-x1^2 - x2^2"));
    CHECK(parse(b3, "x3^2").str() == "-x1^2 - x2^2");

    // One division step; multiply back to cross-check.
    const RingElem cubed = parse(b3, "x3^3");
    CHECK(cubed.str() == "-x1^2*x3 - x2^2*x3");
    const RingElem x3 = RingElem::variable(b3, 3);
    CHECK(cubed == x3 * x3 * x3);
}

TEST_CASE("normal form is idempotent on random raw inputs") {
    for (const auto& spec : testsupport::ring_grid()) {
        testsupport::Rng rng(60 + spec->n());
        for (int trial = 0; trial < 200; ++trial) {
            const RingElem once = RingElem::from_terms(spec, testsupport::random_raw_terms(spec, rng));
            std::vector<std::pair<Monomial, CycloNum>> again(once.terms().begin(), once.terms().end());
            CHECK(RingElem::from_terms(spec, std::move(again)) == once);
            for (const auto& [mono, coeff] : once.terms()) {
                CHECK(mono.is_normal(*spec));
                CHECK_FALSE(coeff.is_zero());
            }
        }
    }
}

TEST_CASE("addition merges coefficients") {
    const RingSpecPtr b3 = RingSpec::make(3, {2, 2, 2}, 4);
    const RingElem f = parse(b3, "x1*x3 - 2*x2");
    CHECK(f + RingElem::zero(b3) == f);
    CHECK((f + (-f)).is_zero());
    CHECK(parse(b3, "x1 + x2") + parse(b3, "x2") == parse(b3, "x1 + 2*x2"));
    CHECK_THROWS_AS(f + RingElem::one(RingSpec::make(3, {3, 3, 3}, 4)), RingMismatchError);
}

TEST_CASE("multiplication reduces products") {
    const RingSpecPtr b3 = RingSpec::make(3, {2, 2, 2}, 4);
    const RingElem x3 = RingElem::variable(b3, 3);
    CHECK(x3 * x3 == parse(b3, "-x1^2 - x2^2"));
    const RingElem f = parse(b3, "x1*x2 + 3*x3");
    CHECK(f * RingElem::one(b3) == f);

    const RingSpecPtr c3 = RingSpec::make(3, {3, 3, 3}, 4);
    CHECK(parse(c3, "(x1+x2)*(x1-x2)") == parse(c3, "x1^2 - x2^2"));
}

TEST_CASE("equality is decided on normal forms") {
    const RingSpecPtr b3 = RingSpec::make(3, {2, 2, 2}, 4);
    CHECK(parse(b3, "x3^2") == parse(b3, "-x1^2-x2^2"));
    CHECK_FALSE(parse(b3, "x1") == parse(b3, "x2"));
    CHECK(parse(b3, "(x1+x3)^2") == parse(b3, "x1^2 + 2*x1*x3 - x1^2 - x2^2"));
}

TEST_CASE("ring axioms on random triples") {
    for (const auto& spec : testsupport::ring_grid()) {
        testsupport::Rng rng(61 + spec->n() + spec->exponents().back());
        for (int trial = 0; trial < 500; ++trial) {
            const RingElem a = testsupport::random_elem(spec, rng, 3, 3);
            const RingElem b = testsupport::random_elem(spec, rng, 3, 3);
            const RingElem c = testsupport::random_elem(spec, rng, 3, 3);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
        }
    }
}

TEST_CASE("homogeneous components") {
    const RingSpecPtr b3 = RingSpec::make(3, {2, 2, 2}, 4);
    CHECK(RingElem::zero(b3).homogeneous_components().empty());

    const RingElem f = parse(b3, "x1 + x1*x2");
    const auto parts = f.homogeneous_components();
    REQUIRE(parts.size() == 2);
    CHECK(parts.at(1) == parse(b3, "x1"));
    CHECK(parts.at(2) == parse(b3, "x1*x2"));

    const auto reduced = parse(b3, "x3^2").homogeneous_components();
    REQUIRE(reduced.size() == 1);
    CHECK(reduced.at(2) == parse(b3, "-x1^2-x2^2"));

    // Components sum back to the element.
    testsupport::Rng rng(62);
    for (int trial = 0; trial < 100; ++trial) {
        const RingElem g = testsupport::random_elem(b3, rng, 4, 5);
        RingElem sum = RingElem::zero(b3);
        for (const auto& [k, part] : g.homogeneous_components()) {
            unsigned degree = 0;
            CHECK(part.is_homogeneous(&degree));
            CHECK(degree == k);
            sum += part;
        }
        CHECK(sum == g);
    }
}

TEST_CASE("V_k bases enumerate normal monomials in descending lex order") {
    const RingSpecPtr b3 = RingSpec::make(3, {2, 2, 2}, 4);
    const auto k0 = vk_basis(b3, 0);
    REQUIRE(k0.size() == 1);
    CHECK(k0.front().str() == "1");

    const auto k1 = vk_basis(b3, 1);
    REQUIRE(k1.size() == 3);
    CHECK(k1[0].str() == "x1");
    CHECK(k1[1].str() == "x2");
    CHECK(k1[2].str() == "x3");

    const auto k2 = vk_basis(b3, 2);
    REQUIRE(k2.size() == 5);
    CHECK(k2[0].str() == "x1^2");
    CHECK(k2[1].str() == "x1*x2");
    CHECK(k2[2].str() == "x1*x3");
    CHECK(k2[3].str() == "x2^2");
    CHECK(k2[4].str() == "x2*x3");

    // dim V_k = 2k+1 for B_3^(2,2,2).
    for (unsigned k = 1; k <= 8; ++k) CHECK(vk_dimension(b3, k) == 2 * k + 1);
}

TEST_CASE("V_k dimension matches direct lattice-point counting") {
    for (const auto& spec : testsupport::ring_grid()) {
        for (unsigned k = 0; k <= 6; ++k) {
            // Count exponent vectors with sum k and last entry < m_n directly.
            unsigned count = 0;
            std::vector<unsigned> e(spec->n(), 0);
            const unsigned n = spec->n();
            auto walk = [&](auto&& self, unsigned index, unsigned remaining) -> void {
                if (index + 1 == n) {
                    if (remaining < spec->exponents().back()) ++count;
                    return;
                }
                for (unsigned v = 0; v <= remaining; ++v) self(self, index + 1, remaining - v);
            };
            walk(walk, 0, k);
            CHECK(vk_dimension(spec, k) == count);
        }
    }
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(RingSpec::make(2, {2, 2}, 4), ShapeError);
    CHECK_THROWS_AS(RingSpec::make(3, {2, 1, 2}, 4), ShapeError);
    CHECK_THROWS_AS(RingSpec::make(3, {2, 2}, 4), ShapeError);
}

TEST_CASE("canonical printing of elements") {
    const RingSpecPtr b3 = RingSpec::make(3, {2, 2, 2}, 4);
    CHECK(RingElem::zero(b3).str() == "0");
    CHECK(RingElem::one(b3).str() == "1");
    CHECK(parse(b3, "x1^2*x3 - 2*x2").str() == "x1^2*x3 - 2*x2");
    CHECK(parse(b3, "i*x3 + 1/2").str() == "w*x3 + 1/2");
    CHECK(parse(b3, "(1+w)*x1").str() == "(1 + w)*x1");
    CHECK(parse(b3, "-x1^2").str() == "-x1^2");
}
