#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fermat/linearder.hpp"

namespace fermat {

// The matrix of a linear derivation restricted to the homogeneous subspace
// V_k, in the normal-form monomial basis. Column j holds the coordinates of
// d(basis[j]).
struct VkMatrix {
    unsigned degree;
    std::vector<Monomial> basis;
    Matrix matrix;
};

struct DarbouxCertificate {
    RingElem element;
    CycloNum eigenvalue;
    // A proper Darboux element is nonzero and non-invertible (its support
    // holds a monomial of degree >= 1); constants are degenerate certificates.
    bool proper;
};

// Degreewise kernel of a linear derivation, truncated at max_degree. The
// report never claims anything beyond its bound.
struct KernelReport {
    unsigned max_degree;
    std::map<unsigned, std::vector<RingElem>> kernels;  // k -> nullspace basis
    bool trivial;
    std::optional<unsigned> first_nontrivial;

    // One line per degree "k=<k> dim=<d> basis=<elements>" plus a final
    // "TRIVIAL_UP_TO=<K>" or "NONTRIVIAL at k=<k>".
    std::string str() const;
};

VkMatrix restrict_to_vk(const LinearDerivation& d, unsigned k);

KernelReport kernel_up_to_degree(const LinearDerivation& d, unsigned max_degree);

// Eigenvalue of a normal monomial under the diagonal derivation with
// parameter alpha: alpha * sum_i e_i/m_i.
CycloNum darboux_eigenvalue(const RingSpecPtr& spec, const CycloNum& alpha, const Monomial& mono);

// For uniform m and homogeneous f of degree k the eigenvalue collapses to
// alpha*k/m; the certificate is verified by direct application.
DarbouxCertificate homogeneous_eigenvalue(const RingSpecPtr& spec, const CycloNum& alpha,
                                          const RingElem& f);

// Every monomial in the support of f must share the eigenvalue lambda under
// the diagonal derivation with parameter alpha.
bool eigenvalue_uniqueness_check(const RingSpecPtr& spec, const CycloNum& alpha, const RingElem& f,
                                 const CycloNum& lambda);

// For d = alpha*I + d_s acting on homogeneous f of degree k:
// d(f) = lambda f  iff  d_s(f) = (lambda - k*alpha) f. Checks the right side.
bool shifted_eigen_check(const LinearDerivation& skew, const CycloNum& alpha, const RingElem& f,
                         const CycloNum& lambda);

// First candidate alpha with det([d_s|V_k] + k*alpha*I) != 0 for every
// k = 1..max_degree, which forces ker(d_alpha + d_s) to meet each V_k
// trivially. Spectra are decided by determinant non-vanishing; no roots are
// ever computed.
std::optional<CycloNum> find_alpha(const LinearDerivation& skew, unsigned max_degree,
                                   const std::vector<CycloNum>& candidates);

// Families of skew derivations of B_n^2 with nilpotency index <= 3.
// Odd n: last column alternates (-1, -i, ..., -1, -i); needs 4 | conductor.
LinearDerivation build_odd_family(unsigned n, const FieldPtr& field);
// Even n: last column is (-1, -eps, ..., -eps^(n-2)) with eps a primitive
// (n-1)-th root of unity; needs (n-1) | conductor.
LinearDerivation build_even_family(unsigned n, const FieldPtr& field);

// With d_s skew and locally nilpotent and alpha != 0, the combined derivation
// alpha*I + d_s must have trivial kernel (checked through max_degree).
// Precondition failures throw PreconditionError.
bool verify_lnd_skew_implies_trivial(const LinearDerivation& skew, const CycloNum& alpha,
                                     unsigned max_degree);

// A nonzero kernel element of a nonzero skew derivation of B_n^2: the
// quadratic form of the squared matrix when it survives reduction, otherwise
// a linear form from the nullspace of the transpose, otherwise a degree-2
// nullspace vector.
RingElem skew_kernel_witness(const LinearDerivation& skew);

// Action of a linear derivation on degree-k monomials of the free polynomial
// ring in a subset of the variables (1-based indices). Requires the images of
// the chosen variables to stay inside the chosen span; no quotient reduction
// is applied. This is the restricted action used by the plane-rotation
// example, where the full V_k treatment subsumes it.
Matrix restricted_action_matrix(const LinearDerivation& d, const std::vector<unsigned>& variables,
                                unsigned k);

}  // namespace fermat
