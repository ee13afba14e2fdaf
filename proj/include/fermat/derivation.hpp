#pragma once

#include <string>
#include <vector>

#include "fermat/matrix.hpp"
#include "fermat/ring.hpp"

namespace fermat {

// True iff the candidate images define a derivation of the quotient, i.e.
// sum_i m_i x_i^(m_i-1) images[i] normalizes to zero.
bool is_well_defined(const RingSpecPtr& spec, const std::vector<RingElem>& images);

// The certificate residue itself (zero iff well defined).
RingElem well_definedness_residue(const RingSpecPtr& spec, const std::vector<RingElem>& images);

// A derivation of the quotient ring, given by the images of the generators
// x_1..x_n. Construction always runs the well-definedness check; a derivation
// whose certificate failed refuses to act rather than produce ill-defined
// output.
class Derivation {
  public:
    Derivation(RingSpecPtr spec, std::vector<RingElem> images);

    // Canonical generators. d_ij = m_i x_i^(m_i-1) d/dx_j - m_j x_j^(m_j-1) d/dx_i
    // for 1 <= i < j <= n; epsilon = sum (1/m_i) x_i d/dx_i. Both certify.
    static Derivation generator_dij(const RingSpecPtr& spec, unsigned i, unsigned j);
    static Derivation generator_epsilon(const RingSpecPtr& spec);

    const RingSpecPtr& spec() const { return spec_; }
    const std::vector<RingElem>& images() const { return images_; }
    const RingElem& image(unsigned i) const { return images_[i]; }  // 0-based
    bool certified() const { return certified_; }
    const RingElem& residue() const { return residue_; }

    // Leibniz-rule application: differentiate the normal representative, pair
    // with the images, reduce. Throws CertificationError when not certified.
    RingElem apply(const RingElem& f) const;

    bool is_zero() const;

    friend bool operator==(const Derivation& a, const Derivation& b) {
        require_same_spec(a.spec_, b.spec_);
        return a.images_ == b.images_;
    }

  private:
    RingSpecPtr spec_;
    std::vector<RingElem> images_;
    RingElem residue_;
    bool certified_;
};

// d applied s times to f (s = 0 returns f unchanged).
RingElem apply_power(const Derivation& d, unsigned s, const RingElem& f);

// Bounded check that the only derivation with d(x_1) constant and
// d(x_i) in C[x_1..x_(i-1)] of total degree <= degree_bound is zero:
// the well-definedness residue, linear in the unknown coefficients, must have
// a trivial solution space.
bool verify_triangular_vanishing(const RingSpecPtr& spec, unsigned degree_bound);

// Columns of the linear system "sum_t u_t * elems[t] = 0" read coefficientwise:
// one row per monomial in the union of supports, in descending lex order.
// Shared by the triangular check and the linear-derivation-space solver.
Matrix coefficient_system(const RingSpecPtr& spec, const std::vector<RingElem>& elems);

}  // namespace fermat
