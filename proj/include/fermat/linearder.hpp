#pragma once

#include <optional>
#include <vector>

#include "fermat/derivation.hpp"

namespace fermat {

// Scalar + skew-symmetric split of a linear derivation when m = (2,...,2):
// matrix = alpha*I + skew with skew^T = -skew. The split is unique.
struct Decomposition {
    CycloNum alpha;
    Matrix skew;
};

struct Classification {
    enum class Kind { diagonal, scalar_plus_skew, unclassified };
    Kind kind;
    // Diagonal parameter with entries alpha/m_i (set for Kind::diagonal).
    std::optional<CycloNum> alpha;
    // Set for Kind::scalar_plus_skew.
    std::optional<Decomposition> parts;
};

// A linear derivation d(x_i) = sum_j a_ij x_j together with its associated
// matrix [a_ij]. Construction certifies well-definedness.
class LinearDerivation {
  public:
    static LinearDerivation from_matrix(const RingSpecPtr& spec, const Matrix& matrix);
    // Diagonal derivation d(x_i) = (alpha/m_i) x_i; valid for every m.
    static LinearDerivation diagonal(const RingSpecPtr& spec, const CycloNum& alpha);
    // alpha*I + skew for m = (2,...,2).
    static LinearDerivation scalar_plus_skew(const RingSpecPtr& spec, const CycloNum& alpha,
                                             const Matrix& skew);

    const RingSpecPtr& spec() const { return derivation_.spec(); }
    const Matrix& matrix() const { return matrix_; }
    const Derivation& derivation() const { return derivation_; }

    RingElem apply(const RingElem& f) const { return derivation_.apply(f); }
    bool is_zero() const { return matrix_.is_zero(); }

  private:
    LinearDerivation(Matrix matrix, Derivation derivation);

    Matrix matrix_;
    Derivation derivation_;
};

// Basis of the space of all valid associated matrices: the n^2 entries are
// unknowns constrained by the vanishing of the well-definedness residue.
// Works for arbitrary m and doubles as the independent oracle for the
// classification checks on their stated domains.
std::vector<Matrix> linear_derivation_space(const RingSpecPtr& spec);

// m_i >= 3 everywhere -> diagonal with entries alpha/m_i; m = (2,...,2) ->
// scalar + skew; mixed m -> unclassified (returned as-is).
Classification classify(const LinearDerivation& ld);

// The unique scalar/skew split; requires m = (2,...,2).
Decomposition decompose(const LinearDerivation& ld);

// Local nilpotency decision: nilpotency of the associated matrix. For
// m = (2,...,2) a nilpotent matrix is cross-checked to be skew with zero
// scalar part.
bool is_locally_nilpotent(const LinearDerivation& ld);

}  // namespace fermat
