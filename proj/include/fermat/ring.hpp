#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fermat/cyclotomic.hpp"

namespace fermat {

class RingSpec;
using RingSpecPtr = std::shared_ptr<const RingSpec>;

// The quotient of C[X1..Xn] by the single relation X1^m1 + ... + Xn^mn,
// with coefficients drawn from Q(zeta_k).
class RingSpec {
  public:
    static RingSpecPtr make(unsigned n, std::vector<unsigned> exponents, const FieldPtr& field);
    static RingSpecPtr make(unsigned n, std::vector<unsigned> exponents, unsigned conductor);

    unsigned n() const { return n_; }
    const std::vector<unsigned>& exponents() const { return exponents_; }
    unsigned exponent(unsigned i) const { return exponents_[i]; }  // 0-based
    const FieldPtr& field() const { return field_; }
    bool all_exponents_at_least(unsigned bound) const;
    bool uniform_exponent() const;

    friend bool operator==(const RingSpec& a, const RingSpec& b) {
        return a.n_ == b.n_ && a.exponents_ == b.exponents_ &&
               a.field_->conductor() == b.field_->conductor();
    }

    std::string str() const;  // "n=3;m=2,2,2;field=4"

  private:
    RingSpec(unsigned n, std::vector<unsigned> exponents, FieldPtr field);

    unsigned n_;
    std::vector<unsigned> exponents_;
    FieldPtr field_;
};

void require_same_spec(const RingSpecPtr& a, const RingSpecPtr& b);

// Exponent vector of a monomial x1^e1 ... xn^en.
struct Monomial {
    std::vector<unsigned> exponents;

    unsigned total_degree() const;
    // Normal iff the last exponent stays below m_n.
    bool is_normal(const RingSpec& spec) const { return exponents.back() < spec.exponents().back(); }
    std::string str() const;  // "x1^2*x3", "1" for the empty monomial

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exponents == b.exponents; }
};

// Orders monomials by descending lexicographic comparison of exponent vectors,
// the order used for printing and V_k basis enumeration.
struct MonomialDescLex {
    bool operator()(const Monomial& a, const Monomial& b) const { return a.exponents > b.exponents; }
};

using TermMap = std::map<Monomial, CycloNum, MonomialDescLex>;

// Element of the quotient ring in its unique normal form: a sparse map from
// normal monomials to nonzero coefficients. Immutable value semantics; every
// product is re-reduced so the representation invariant always holds.
class RingElem {
  public:
    static RingElem zero(const RingSpecPtr& spec);
    static RingElem one(const RingSpecPtr& spec);
    static RingElem constant(const RingSpecPtr& spec, const CycloNum& c);
    static RingElem constant(const RingSpecPtr& spec, const Rational& r);
    // x_i, 1-based to match the surface syntax x1..xn.
    static RingElem variable(const RingSpecPtr& spec, unsigned i);
    static RingElem monomial(const RingSpecPtr& spec, Monomial mono, const CycloNum& coeff);
    // Normal-form entry point for a raw polynomial given as a term list;
    // rewrites x_n^(m_n) -> -(x_1^(m_1) + ... + x_(n-1)^(m_(n-1))) until every
    // monomial is normal. The result is unique and order independent.
    static RingElem from_terms(const RingSpecPtr& spec, std::vector<std::pair<Monomial, CycloNum>> terms);

    const RingSpecPtr& spec() const { return spec_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Max total degree over the support; 0 for the zero element.
    unsigned degree() const;
    bool is_homogeneous(unsigned* degree_out = nullptr) const;
    CycloNum coefficient(const Monomial& mono) const;

    RingElem operator-() const;
    RingElem& operator+=(const RingElem& o);
    RingElem& operator-=(const RingElem& o);
    friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
    friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
    friend RingElem operator*(const RingElem& a, const RingElem& b);
    friend RingElem operator*(const CycloNum& s, const RingElem& f);
    friend bool operator==(const RingElem& a, const RingElem& b);
    friend bool operator!=(const RingElem& a, const RingElem& b) { return !(a == b); }

    // Split by total degree; the zero element yields an empty map.
    std::map<unsigned, RingElem> homogeneous_components() const;

    // Formal partial derivative of the normal representative (0-based index).
    // Differentiation never breaks normality, so no reduction is needed.
    RingElem partial_derivative(unsigned i) const;

    // Canonical printing: descending lex term order, coefficient 1 suppressed,
    // e.g. "x1^2*x3 - 2*x2".
    std::string str() const;

  private:
    RingElem(RingSpecPtr spec, TermMap terms) : spec_(std::move(spec)), terms_(std::move(terms)) {}

    RingSpecPtr spec_;
    TermMap terms_;
};

// All normal monomials of total degree k in descending lex order: a basis of
// the homogeneous subspace V_k.
std::vector<Monomial> vk_basis(const RingSpecPtr& spec, unsigned k);
unsigned vk_dimension(const RingSpecPtr& spec, unsigned k);

// The relation element x1^m1 + ... + xn^mn (normalizes to zero by construction).
RingElem relation_element(const RingSpecPtr& spec);

}  // namespace fermat
