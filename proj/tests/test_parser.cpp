#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fermat/parser.hpp"
#include "support.hpp"

using namespace fermat;

TEST_CASE("expression parsing") {
    const RingSpecPtr b3 = RingSpec::make(3, {2, 2, 2}, 4);
    CHECK(parse_expression("x1^2 + x2^2 + x3^2", b3).is_zero());

    const RingElem f = parse_expression("2/3*x1*x2 - i*x3", b3);
    REQUIRE(f.terms().size() == 2);
    CHECK(f.coefficient(Monomial{{1, 1, 0}}) ==
          CycloNum::from_rational(b3->field(), Rational(BigInt(2), BigInt(3))));
    CHECK(f.coefficient(Monomial{{0, 0, 1}}) == -CycloNum::imaginary_unit(b3->field()));

    CHECK(parse_expression("(x1+x2)*(x1-x2)", b3) == parse_expression("x1^2 - x2^2", b3));
    CHECK(parse_expression("2x1", b3) == parse_expression("2*x1", b3));
    CHECK(parse_expression("-x1^2", b3) == -parse_expression("x1^2", b3));
    CHECK(parse_expression("1/2 - 1/2*w", b3) ==
          RingElem::constant(b3, CycloNum::from_coords(b3->field(), {Rational(BigInt(1), BigInt(2)),
                                                                     Rational(BigInt(-1), BigInt(2))})));
}

TEST_CASE("syntax errors carry byte offsets") {
    const RingSpecPtr b3 = RingSpec::make(3, {2, 2, 2}, 4);
    try {
        parse_expression("x1 + + x2", b3);
        FAIL("expected a syntax error");
    } catch (const ParseError& e) {
        CHECK(e.kind == ParseError::Kind::syntax);
        CHECK(e.offset == 5);
    }
    try {
        parse_expression("x1^", b3);
        FAIL("expected a syntax error");
    } catch (const ParseError& e) {
        CHECK(e.kind == ParseError::Kind::syntax);
    }
    CHECK_THROWS_AS(parse_expression("", b3), ParseError);
    CHECK_THROWS_AS(parse_expression("x1 )", b3), ParseError);
}

TEST_CASE("variable indices out of range are arity errors") {
    const RingSpecPtr b3 = RingSpec::make(3, {2, 2, 2}, 4);
    try {
        parse_expression("x4", b3);
        FAIL("expected an arity error");
    } catch (const ParseError& e) {
        CHECK(e.kind == ParseError::Kind::arity);
        CHECK(e.offset == 0);
    }
    try {
        parse_expression("x1 + 2*x0", b3);
        FAIL("expected an arity error");
    } catch (const ParseError& e) {
        CHECK(e.kind == ParseError::Kind::arity);
        CHECK(e.offset == 7);
    }
}

TEST_CASE("imaginary literal needs a compatible conductor") {
    const RingSpecPtr plain = RingSpec::make(3, {2, 2, 2}, 1);
    try {
        parse_expression("x1 + i*x2", plain);
        FAIL("expected a literal error");
    } catch (const ParseError& e) {
        CHECK(e.kind == ParseError::Kind::literal);
        CHECK(e.offset == 5);
    }
    CHECK(parse_expression("w", plain) == RingElem::one(plain));  // zeta_1 = 1
}

TEST_CASE("round trip on random elements") {
    testsupport::Rng rng(100);
    for (const auto& spec : testsupport::ring_grid()) {
        for (int trial = 0; trial < 125; ++trial) {
            const RingElem f = testsupport::random_elem(spec, rng, 4, 5);
            CHECK(parse_expression(f.str(), spec) == f);
        }
    }
    // Multi-coordinate coefficients exercise the parenthesized form.
    const RingSpecPtr rich = RingSpec::make(3, {2, 2, 2}, 12);
    for (int trial = 0; trial < 100; ++trial) {
        const RingElem f = testsupport::random_elem(rich, rng, 4, 4);
        CHECK(parse_expression(f.str(), rich) == f);
    }
}

TEST_CASE("coefficient parsing") {
    const FieldPtr f4 = FieldSpec::make(4);
    CHECK(parse_coefficient("-3", f4) == CycloNum::from_rational(f4, Rational(-3)));
    CHECK(parse_coefficient("2/5", f4) == CycloNum::from_rational(f4, Rational(BigInt(2), BigInt(5))));
    CHECK(parse_coefficient("i", f4) == CycloNum::imaginary_unit(f4));
    CHECK(parse_coefficient("2/3*w^2", f4) ==
          Rational(BigInt(2), BigInt(3)) * CycloNum::zeta_power(f4, 2));
    CHECK_THROWS_AS(parse_coefficient("x1", f4), ParseError);
    CHECK_THROWS_AS(parse_coefficient("1/0", f4), ParseError);
}

TEST_CASE("matrix parsing") {
    const FieldPtr f4 = FieldSpec::make(4);
    const Matrix m = parse_matrix("0,0,-1; 0,0,-i; 1,i,0", f4);
    REQUIRE(m.rows() == 3);
    REQUIRE(m.cols() == 3);
    CHECK(m.at(0, 2) == -CycloNum::one(f4));
    CHECK(m.at(1, 2) == -CycloNum::imaginary_unit(f4));
    CHECK(m.is_skew_symmetric());
    CHECK(parse_matrix(m.text(), f4) == m);  // machine format round trip

    CHECK_THROWS_AS(parse_matrix("1,2;3", f4), ParseError);
    CHECK_THROWS_AS(parse_matrix("1,,2", f4), ParseError);
}

TEST_CASE("ring spec parsing") {
    const RingSpecText t = parse_ring_spec("n=3;m=2,2,2;field=4", 4);
    CHECK(t.n == 3);
    CHECK(t.exponents == std::vector<unsigned>{2, 2, 2});
    CHECK(t.conductor == 4);
    CHECK(t.conductor_given);

    const RingSpecText defaulted = parse_ring_spec("n=4;m=3,3,3,3", 12);
    CHECK(defaulted.conductor == 12);
    CHECK_FALSE(defaulted.conductor_given);

    CHECK_THROWS_AS(parse_ring_spec("n=3", 4), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("m=2,2,2", 4), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("n=3;m=2,a,2", 4), ParseError);
}

TEST_CASE("derivation images parsing") {
    const RingSpecPtr b3 = RingSpec::make(3, {2, 2, 2}, 4);
    const auto images = parse_images("d(x1)=0; d(x2)=-x3; d(x3)=x2", b3);
    REQUIRE(images.size() == 3);
    CHECK(images[0].is_zero());
    CHECK(images[1] == parse_expression("-x3", b3));
    CHECK(images[2] == RingElem::variable(b3, 2));

    const auto tagged = parse_images("images: d(x1)=x1; d(x2)=x2; d(x3)=x3", b3);
    CHECK(tagged[0] == RingElem::variable(b3, 1));

    CHECK_THROWS_AS(parse_images("d(x1)=0; d(x2)=0", b3), ParseError);
    CHECK_THROWS_AS(parse_images("d(x9)=0; d(x2)=0; d(x3)=0", b3), ParseError);
}

TEST_CASE("malformed inputs throw positioned errors, never crash") {
    const RingSpecPtr b3 = RingSpec::make(3, {2, 2, 2}, 4);
    const std::string alphabet = "x123wi+-*/^() ";
    testsupport::Rng rng(101);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::uniform_int_distribution<std::size_t> len(0, 12);
    for (int trial = 0; trial < 2000; ++trial) {
        std::string text;
        const std::size_t n = len(rng);
        for (std::size_t t = 0; t < n; ++t) text += alphabet[pick(rng)];
        try {
            (void)parse_expression(text, b3);
        } catch (const ParseError& e) {
            CHECK(e.offset <= text.size());
        }
    }
}

TEST_CASE("printing is deterministic and reparses to the same value") {
    const RingSpecPtr b3 = RingSpec::make(3, {2, 2, 2}, 4);
    const RingElem f = parse_expression("x3^3", b3);
    CHECK(f.str() == "-x1^2*x3 - x2^2*x3");
    CHECK(parse_expression(f.str(), b3) == f);
    CHECK(f.str() == parse_expression(f.str(), b3).str());
}
