#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fermat/rational.hpp"

namespace fermat {

// k-th cyclotomic polynomial, ascending integer coefficients, monic of degree phi(k).
// Computed by exact division of X^k - 1 by the product of Phi_d over proper divisors d of k.
std::vector<BigInt> cyclotomic_polynomial(unsigned k);

class FieldSpec;
using FieldPtr = std::shared_ptr<const FieldSpec>;

// The cyclotomic field Q(zeta_k), fixed by its conductor k. Holds the minimal
// polynomial Phi_k and a power table zeta^t for t up to 2*(phi(k)-1) so that
// products reduce to the power basis with table lookups only.
class FieldSpec {
  public:
    static FieldPtr make(unsigned conductor);

    unsigned conductor() const { return conductor_; }
    unsigned degree() const { return degree_; }
    const std::vector<BigInt>& minimal_polynomial() const { return minpoly_; }
    // zeta^t in the power basis, valid for 0 <= t <= 2*(degree-1).
    const std::vector<Rational>& zeta_power_coords(unsigned t) const { return power_table_[t]; }

  private:
    explicit FieldSpec(unsigned conductor);

    unsigned conductor_;
    unsigned degree_;
    std::vector<BigInt> minpoly_;
    std::vector<std::vector<Rational>> power_table_;
};

// Element of Q(zeta_k) in the power basis 1, zeta, ..., zeta^(phi(k)-1).
// Immutable value type; all operations are pure.
class CycloNum {
  public:
    static CycloNum zero(const FieldPtr& field);
    static CycloNum one(const FieldPtr& field);
    static CycloNum from_rational(const FieldPtr& field, const Rational& r);
    static CycloNum from_coords(const FieldPtr& field, std::vector<Rational> coords);
    static CycloNum zeta(const FieldPtr& field);
    // zeta^t for any integer t (reduced mod the conductor).
    static CycloNum zeta_power(const FieldPtr& field, long long t);
    // The square root of -1, i.e. zeta^(k/4). Requires 4 | conductor.
    static CycloNum imaginary_unit(const FieldPtr& field);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_rational() const;
    // The value as a rational; throws UnsupportedElementError when not rational.
    Rational rational_value() const;

    CycloNum operator-() const;
    CycloNum& operator+=(const CycloNum& o);
    CycloNum& operator-=(const CycloNum& o);
    CycloNum& operator*=(const CycloNum& o);

    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
    friend CycloNum operator*(const Rational& r, CycloNum a);
    friend CycloNum operator/(const CycloNum& a, const CycloNum& b) { return a * b.inverse(); }

    friend bool operator==(const CycloNum& a, const CycloNum& b);
    friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

    // Multiplicative inverse via the extended Euclidean algorithm on the
    // coordinate polynomial and Phi_k. Throws DivisionByZeroError for zero.
    CycloNum inverse() const;

    // Canonical printing: coordinates in ascending power order, zero terms
    // omitted, `w` for zeta, e.g. "1/2 - 1/2*w".
    std::string str() const;

  private:
    CycloNum(FieldPtr field, std::vector<Rational> coords);

    FieldPtr field_;
    std::vector<Rational> coords_;
};

// Throws FieldMismatchError unless both operands share a conductor.
void require_same_field(const CycloNum& a, const CycloNum& b);

}  // namespace fermat
