#include "fermat/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace fermat {

Matrix::Matrix(FieldPtr field, unsigned rows, unsigned cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      entries_(static_cast<std::size_t>(rows) * cols, CycloNum::zero(field_)) {}

Matrix Matrix::identity(const FieldPtr& field, unsigned n) {
    Matrix m(field, n, n);
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = CycloNum::one(field);
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const CycloNum& e) { return e.is_zero(); });
}

bool Matrix::is_skew_symmetric() const {
    if (!is_square()) return false;
    for (unsigned r = 0; r < rows_; ++r)
        for (unsigned c = r; c < cols_; ++c)
            if (at(r, c) != -at(c, r)) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (unsigned r = 0; r < rows_; ++r)
        for (unsigned c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Matrix Matrix::operator-() const {
    Matrix m = *this;
    for (CycloNum& e : m.entries_) e = -e;
    return m;
}

namespace {
void require_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("matrix shapes differ");
    if (a.field()->conductor() != b.field()->conductor()) throw FieldMismatchError("matrix fields differ");
}
}  // namespace

Matrix& Matrix::operator+=(const Matrix& o) {
    require_same_shape(*this, o);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    require_same_shape(*this, o);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw ShapeError("inner matrix dimensions differ");
    if (a.field()->conductor() != b.field()->conductor()) throw FieldMismatchError("matrix fields differ");
    Matrix out(a.field(), a.rows(), b.cols());
    for (unsigned r = 0; r < a.rows(); ++r)
        for (unsigned k = 0; k < a.cols(); ++k) {
            const CycloNum& f = a.at(r, k);
            if (f.is_zero()) continue;
            for (unsigned c = 0; c < b.cols(); ++c) {
                if (b.at(k, c).is_zero()) continue;
                out.at(r, c) += f * b.at(k, c);
            }
        }
    return out;
}

Matrix operator*(const CycloNum& s, Matrix a) {
    for (CycloNum& e : a.entries_) e = s * e;
    return a;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    if (a.field()->conductor() != b.field()->conductor()) throw FieldMismatchError("matrix fields differ");
    return a.entries_ == b.entries_;
}

std::string Matrix::str() const {
    std::vector<std::string> cells(entries_.size());
    std::vector<std::size_t> width(cols_, 0);
    for (unsigned r = 0; r < rows_; ++r)
        for (unsigned c = 0; c < cols_; ++c) {
            cells[r * cols_ + c] = at(r, c).str();
            width[c] = std::max(width[c], cells[r * cols_ + c].size());
        }
    std::ostringstream out;
    for (unsigned r = 0; r < rows_; ++r) {
        out << "[ ";
        for (unsigned c = 0; c < cols_; ++c) {
            const std::string& s = cells[r * cols_ + c];
            out << std::string(width[c] - s.size(), ' ') << s;
            out << (c + 1 < cols_ ? "  " : " ");
        }
        out << "]\n";
    }
    return out.str();
}

std::string Matrix::text() const {
    std::ostringstream out;
    for (unsigned r = 0; r < rows_; ++r) {
        if (r) out << ";";
        for (unsigned c = 0; c < cols_; ++c) {
            if (c) out << ",";
            out << at(r, c).str();
        }
    }
    return out.str();
}

RrefResult rref(const Matrix& m) {
    Matrix r = m;
    std::vector<unsigned> pivots;
    unsigned row = 0;
    for (unsigned col = 0; col < r.cols() && row < r.rows(); ++col) {
        unsigned p = row;
        while (p < r.rows() && r.at(p, col).is_zero()) ++p;
        if (p == r.rows()) continue;
        for (unsigned c = 0; c < r.cols(); ++c) std::swap(r.at(row, c), r.at(p, c));
        const CycloNum inv = r.at(row, col).inverse();
        for (unsigned c = col; c < r.cols(); ++c)
            if (!r.at(row, c).is_zero()) r.at(row, c) = inv * r.at(row, c);
        for (unsigned i = 0; i < r.rows(); ++i) {
            if (i == row || r.at(i, col).is_zero()) continue;
            const CycloNum f = r.at(i, col);
            for (unsigned c = col; c < r.cols(); ++c)
                if (!r.at(row, c).is_zero()) r.at(i, c) -= f * r.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return RrefResult{std::move(r), static_cast<unsigned>(pivots.size()), std::move(pivots)};
}

namespace {

// Sparse row: (column, value) pairs sorted by column.
using SparseRow = std::vector<std::pair<unsigned, CycloNum>>;

// target -= factor * source, merging sorted rows. factor is taken by value:
// callers pass a reference into target, which the merge moves from.
void sparse_axpy(SparseRow& target, const CycloNum factor, const SparseRow& source) {  // NOLINT

    SparseRow merged;
    merged.reserve(target.size() + source.size());
    auto t = target.begin();
    auto s = source.begin();
    while (t != target.end() || s != source.end()) {
        if (s == source.end() || (t != target.end() && t->first < s->first)) {
            merged.push_back(std::move(*t++));
        } else if (t == target.end() || s->first < t->first) {
            merged.emplace_back(s->first, -(factor * s->second));
            ++s;
        } else {
            CycloNum v = std::move(t->second);
            v -= factor * s->second;
            if (!v.is_zero()) merged.emplace_back(t->first, std::move(v));
            ++t;
            ++s;
        }
    }
    target = std::move(merged);
}

}  // namespace

std::vector<std::vector<CycloNum>> nullspace(const Matrix& m) {
    // Sparse forward elimination. The pivot in each column is the candidate
    // row with the fewest entries, which curbs fill-in; the resulting basis
    // is the one read off the (unique) reduced echelon form either way.
    const FieldPtr& field = m.field();
    std::vector<SparseRow> rows;
    rows.reserve(m.rows());
    for (unsigned r = 0; r < m.rows(); ++r) {
        SparseRow row;
        for (unsigned c = 0; c < m.cols(); ++c)
            if (!m.at(r, c).is_zero()) row.emplace_back(c, m.at(r, c));
        if (!row.empty()) rows.push_back(std::move(row));
    }

    // live[c] lists the unused rows whose leading column is c.
    std::vector<std::vector<std::size_t>> leading(m.cols());
    for (std::size_t r = 0; r < rows.size(); ++r) leading[rows[r].front().first].push_back(r);

    std::vector<int> pivot_row_of_col(m.cols(), -1);
    std::vector<unsigned> pivot_cols;
    for (unsigned col = 0; col < m.cols(); ++col) {
        auto& bucket = leading[col];
        if (bucket.empty()) continue;
        std::size_t pivot = bucket.front();
        for (std::size_t r : bucket)
            if (rows[r].size() < rows[pivot].size() || (rows[r].size() == rows[pivot].size() && r < pivot))
                pivot = r;
        SparseRow& prow = rows[pivot];
        const CycloNum inv = prow.front().second.inverse();
        for (auto& [c, v] : prow) v = inv * v;
        for (std::size_t r : bucket) {
            if (r == pivot) continue;
            sparse_axpy(rows[r], rows[r].front().second, prow);
            if (!rows[r].empty()) leading[rows[r].front().first].push_back(r);
        }
        bucket.clear();
        pivot_row_of_col[col] = static_cast<int>(pivot);
        pivot_cols.push_back(col);
    }

    std::vector<std::vector<CycloNum>> basis;
    for (unsigned col = 0; col < m.cols(); ++col) {
        if (pivot_row_of_col[col] >= 0) continue;
        std::vector<CycloNum> v(m.cols(), CycloNum::zero(field));
        v[col] = CycloNum::one(field);
        // Back-substitute through the pivot rows in reverse column order.
        for (auto pc = pivot_cols.rbegin(); pc != pivot_cols.rend(); ++pc) {
            const SparseRow& prow = rows[pivot_row_of_col[*pc]];
            CycloNum acc = CycloNum::zero(field);
            for (const auto& [c, value] : prow)
                if (c > *pc && !v[c].is_zero()) acc += value * v[c];
            if (!acc.is_zero()) v[*pc] = -acc;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

CycloNum det(const Matrix& m) {
    if (!m.is_square()) throw ShapeError("determinant of a non-square matrix");
    Matrix a = m;
    const unsigned n = a.rows();
    CycloNum result = CycloNum::one(a.field());
    bool negate = false;
    for (unsigned col = 0; col < n; ++col) {
        unsigned p = col;
        while (p < n && a.at(p, col).is_zero()) ++p;
        if (p == n) return CycloNum::zero(a.field());
        if (p != col) {
            for (unsigned c = col; c < n; ++c) std::swap(a.at(col, c), a.at(p, c));
            negate = !negate;
        }
        const CycloNum& pivot = a.at(col, col);
        result *= pivot;
        const CycloNum inv = pivot.inverse();
        for (unsigned r = col + 1; r < n; ++r) {
            if (a.at(r, col).is_zero()) continue;
            const CycloNum f = inv * a.at(r, col);
            for (unsigned c = col; c < n; ++c)
                if (!a.at(col, c).is_zero()) a.at(r, c) -= f * a.at(col, c);
        }
    }
    return negate ? -result : result;
}

Matrix matrix_power(const Matrix& m, unsigned s) {
    if (!m.is_square()) throw ShapeError("power of a non-square matrix");
    Matrix result = Matrix::identity(m.field(), m.rows());
    Matrix base = m;
    while (s > 0) {
        if (s & 1u) result = result * base;
        s >>= 1u;
        if (s) base = base * base;
    }
    return result;
}

NilpotencyResult is_nilpotent(const Matrix& m) {
    if (!m.is_square()) throw ShapeError("nilpotency of a non-square matrix");
    const unsigned n = m.rows();
    Matrix p = m;
    for (unsigned s = 1; s <= n; ++s) {
        if (p.is_zero()) return NilpotencyResult{true, s};
        if (s < n) p = p * m;
    }
    return NilpotencyResult{false, std::nullopt};
}

}  // namespace fermat
