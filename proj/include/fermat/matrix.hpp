#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fermat/cyclotomic.hpp"

namespace fermat {

// Dense matrix over Q(zeta_k). All arithmetic is exact; there is no pivoting
// beyond first-nonzero because stability is not a concern.
class Matrix {
  public:
    Matrix(FieldPtr field, unsigned rows, unsigned cols);
    static Matrix identity(const FieldPtr& field, unsigned n);

    unsigned rows() const { return rows_; }
    unsigned cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }
    bool is_square() const { return rows_ == cols_; }

    CycloNum& at(unsigned r, unsigned c) { return entries_[r * cols_ + c]; }
    const CycloNum& at(unsigned r, unsigned c) const { return entries_[r * cols_ + c]; }

    bool is_zero() const;
    bool is_skew_symmetric() const;
    Matrix transpose() const;

    Matrix operator-() const;
    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const CycloNum& s, Matrix a);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    // Aligned text table.
    std::string str() const;
    // Machine format: rows joined by ';', entries by ','.
    std::string text() const;

  private:
    FieldPtr field_;
    unsigned rows_;
    unsigned cols_;
    std::vector<CycloNum> entries_;
};

struct RrefResult {
    Matrix reduced;
    unsigned rank;
    std::vector<unsigned> pivot_columns;
};

// Reduced row echelon form by Gauss-Jordan with exact division.
RrefResult rref(const Matrix& m);

// Basis of { v : Mv = 0 }; empty when M is injective. Deterministic: one
// basis vector per free column, in column order, with a 1 in that column.
std::vector<std::vector<CycloNum>> nullspace(const Matrix& m);

// Determinant by Gaussian elimination; throws ShapeError unless square.
CycloNum det(const Matrix& m);

// M^s with M^0 = I; throws ShapeError unless square.
Matrix matrix_power(const Matrix& m, unsigned s);

struct NilpotencyResult {
    bool nilpotent;
    std::optional<unsigned> index;  // least s with M^s = 0
};

// Nilpotency via the Cayley-Hamilton bound: M is nilpotent iff M^n = 0.
NilpotencyResult is_nilpotent(const Matrix& m);

}  // namespace fermat
