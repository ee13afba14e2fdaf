#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>

#include "support.hpp"

using namespace fermat;

namespace {

std::vector<BigInt> poly(std::initializer_list<int> coeffs) {
    std::vector<BigInt> out;
    for (int c : coeffs) out.emplace_back(c);
    return out;
}

// Euler totient by counting coprime residues; independent of the polynomial route.
unsigned totient(unsigned k) {
    unsigned count = 0;
    for (unsigned j = 1; j <= k; ++j)
        if (std::gcd(j, k) == 1) ++count;
    return count;
}

}  // namespace

TEST_CASE("cyclotomic polynomials match hand division") {
    CHECK(cyclotomic_polynomial(1) == poly({-1, 1}));
    CHECK(cyclotomic_polynomial(2) == poly({1, 1}));
    // X^4-1 divided by (X-1)(X+1) leaves X^2+1.
    CHECK(cyclotomic_polynomial(4) == poly({1, 0, 1}));
    // X^6-1 divided by Phi_1 Phi_2 Phi_3 leaves X^2-X+1.
    CHECK(cyclotomic_polynomial(6) == poly({1, -1, 1}));
    CHECK(cyclotomic_polynomial(12) == poly({1, 0, -1, 0, 1}));
}

TEST_CASE("cyclotomic degree equals the totient and the divisor product rebuilds X^k-1") {
    for (unsigned k = 1; k <= 24; ++k) {
        const auto phi = cyclotomic_polynomial(k);
        CHECK(phi.size() == totient(k) + 1);
        CHECK(phi.back() == 1);  // monic

        std::vector<BigInt> product{1};
        for (unsigned d = 1; d <= k; ++d) {
            if (k % d != 0) continue;
            const auto factor = cyclotomic_polynomial(d);
            std::vector<BigInt> next(product.size() + factor.size() - 1, BigInt(0));
            for (std::size_t i = 0; i < product.size(); ++i)
                for (std::size_t j = 0; j < factor.size(); ++j) next[i + j] += product[i] * factor[j];
            product = std::move(next);
        }
        std::vector<BigInt> expected(k + 1, BigInt(0));
        expected[0] = -1;
        expected[k] = 1;
        CHECK(product == expected);
    }
}

TEST_CASE("basic arithmetic in Q(i)") {
    const FieldPtr f4 = FieldSpec::make(4);
    const CycloNum i = CycloNum::imaginary_unit(f4);
    const CycloNum one = CycloNum::one(f4);
    CHECK(i * i == -one);
    CHECK(i == CycloNum::zeta(f4));

    const CycloNum a = CycloNum::from_coords(f4, {Rational(3), Rational(-2)});
    CHECK(a * one == a);

    const CycloNum two = CycloNum::from_rational(f4, Rational(2));
    CHECK((one + i) * (one - i) == two);
}

TEST_CASE("inverses") {
    const FieldPtr f4 = FieldSpec::make(4);
    const CycloNum one = CycloNum::one(f4);
    const CycloNum i = CycloNum::imaginary_unit(f4);
    CHECK(one.inverse() == one);
    CHECK(i.inverse() == -i);

    // (1+i)^-1 = (1-i)/2
    const CycloNum inv = (one + i).inverse();
    const CycloNum expected =
        CycloNum::from_coords(f4, {Rational(BigInt(1), BigInt(2)), Rational(BigInt(-1), BigInt(2))});
    CHECK(inv == expected);
    CHECK((one + i) * inv == one);

    CHECK_THROWS_AS(CycloNum::zero(f4).inverse(), DivisionByZeroError);
}

TEST_CASE("imaginary unit per conductor") {
    const FieldPtr f12 = FieldSpec::make(12);
    const CycloNum i12 = CycloNum::imaginary_unit(f12);
    CHECK(i12 == CycloNum::zeta_power(f12, 3));
    CHECK(i12 * i12 == -CycloNum::one(f12));
    CHECK_THROWS_AS(CycloNum::imaginary_unit(FieldSpec::make(6)), UnsupportedElementError);
}

TEST_CASE("zeta is a primitive root for each configured conductor") {
    for (unsigned k : {1u, 4u, 6u, 12u, 20u}) {
        const FieldPtr field = FieldSpec::make(k);
        CHECK(CycloNum::zeta_power(field, k) == CycloNum::one(field));
        for (unsigned d = 1; d < k; ++d) CHECK(CycloNum::zeta_power(field, d) != CycloNum::one(field));
    }
}

TEST_CASE("field axioms on random triples") {
    for (unsigned k : {1u, 4u, 12u}) {
        const FieldPtr field = FieldSpec::make(k);
        testsupport::Rng rng(40 + k);
        const CycloNum one = CycloNum::one(field);
        for (int trial = 0; trial < 1000; ++trial) {
            const CycloNum a = testsupport::random_cyclo(field, rng);
            const CycloNum b = testsupport::random_cyclo(field, rng);
            const CycloNum c = testsupport::random_cyclo(field, rng);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) CHECK(a * a.inverse() == one);
        }
    }
}

TEST_CASE("rational canonical form is closed under arithmetic") {
    testsupport::Rng rng(41);
    auto canonical = [](const Rational& r) {
        if (r.denominator() <= 0) return false;
        return boost::multiprecision::gcd(boost::multiprecision::abs(r.numerator()), r.denominator()) == 1;
    };
    for (int trial = 0; trial < 2000; ++trial) {
        const Rational a = testsupport::random_rational(rng);
        const Rational b = testsupport::random_rational(rng);
        CHECK(canonical(a + b));
        CHECK(canonical(a - b));
        CHECK(canonical(a * b));
        if (!b.is_zero()) CHECK(canonical(a / b));
    }
}

TEST_CASE("operations across fields are rejected") {
    const CycloNum a = CycloNum::one(FieldSpec::make(4));
    const CycloNum b = CycloNum::one(FieldSpec::make(12));
    CHECK_THROWS_AS(a + b, FieldMismatchError);
    CHECK_THROWS_AS(a * b, FieldMismatchError);
}

TEST_CASE("canonical printing") {
    const FieldPtr f4 = FieldSpec::make(4);
    CHECK(CycloNum::zero(f4).str() == "0");
    CHECK(CycloNum::one(f4).str() == "1");
    CHECK(CycloNum::imaginary_unit(f4).str() == "w");
    const CycloNum half_minus_half_i =
        CycloNum::from_coords(f4, {Rational(BigInt(1), BigInt(2)), Rational(BigInt(-1), BigInt(2))});
    CHECK(half_minus_half_i.str() == "1/2 - 1/2*w");
    const FieldPtr f12 = FieldSpec::make(12);
    CHECK(CycloNum::zeta_power(f12, 3).str() == "w^3");
}
