#include <algorithm>
#include <sstream>
#include <optional>

#include "iwasawa/int_matrix.hpp"

namespace iwasawa {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw InvalidInput("ragged matrix literal");
        for (long v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw InvalidInput("matrix rows have inconsistent lengths");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<Integer>>& columns, std::size_t rows) {
    IntMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows) throw InvalidInput("matrix columns have inconsistent lengths");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
}

std::vector<Integer> IntMatrix::column(std::size_t c) const {
    std::vector<Integer> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
    return v;
}

std::vector<Integer> IntMatrix::row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& other) const {
    if (other.rows_ != rows_) throw InvalidInput("hconcat: row count mismatch");
    IntMatrix m(rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < other.cols_; ++j) m(i, cols_ + j) = other(i, j);
    }
    return m;
}

IntMatrix IntMatrix::top_rows(std::size_t count) const {
    IntMatrix m(count, cols_);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    return m;
}

IntMatrix IntMatrix::left_columns(std::size_t count) const {
    IntMatrix m(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, j);
    return m;
}

std::vector<Integer> IntMatrix::apply(const std::vector<Integer>& v) const {
    if (v.size() != cols_) throw InvalidInput("apply: dimension mismatch");
    std::vector<Integer> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw InvalidInput("matrix product: dimension mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("matrix sum: dimension mismatch");
    IntMatrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("matrix difference: dimension mismatch");
    IntMatrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
    return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
    }
    os << ']';
    return os.str();
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

IntMatrix matrix_power(const IntMatrix& m, unsigned long exponent) {
    if (m.rows() != m.cols()) throw InvalidInput("matrix_power: matrix is not square");
    IntMatrix result = IntMatrix::identity(m.rows());
    IntMatrix base = m;
    while (exponent) {
        if (exponent & 1) result = result * base;
        exponent >>= 1;
        if (exponent) base = base * base;
    }
    return result;
}

Integer determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw InvalidInput("determinant: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    // Bareiss
    IntMatrix a = m;
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            a.swap_rows(k, swap);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw InvalidInput("unimodular_inverse: matrix is not square");
    const std::size_t n = m.rows();
    // Gauss-Jordan over Q on [m | I]
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
        a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) throw InvalidInput("unimodular_inverse: singular matrix");
        std::swap(a[p], a[c]);
        const Rational inv = 1 / a[c][c];
        for (auto& x : a[c]) x *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            const Rational f = a[i][c];
            for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    IntMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& x = a[i][n + j];
            if (x.get_den() != 1) throw InvalidInput("unimodular_inverse: matrix is not unimodular");
            inv(i, j) = x.get_num();
        }
    return inv;
}

std::size_t SmithForm::rank() const {
    std::size_t r = 0;
    const std::size_t k = std::min(D.rows(), D.cols());
    while (r < k && D(r, r) != 0) ++r;
    return r;
}

std::vector<Integer> SmithForm::nonzero_diagonal() const {
    std::vector<Integer> d;
    for (std::size_t i = 0, r = rank(); i < r; ++i) d.push_back(D(i, i));
    return d;
}

namespace {

Integer tdiv(const Integer& a, const Integer& b) {
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    SmithForm s{IntMatrix::identity(m), a, IntMatrix::identity(n)};
    IntMatrix& D = s.D;
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            std::size_t pi = m, pj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (D(i, j) == 0) continue;
                    if (pi == m || mpz_cmpabs(D(i, j).get_mpz_t(), D(pi, pj).get_mpz_t()) < 0) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == m) return s;  // remaining block is zero

            D.swap_rows(t, pi);
            s.U.swap_rows(t, pi);
            D.swap_cols(t, pj);
            s.V.swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (D(i, t) == 0) continue;
                const Integer q = -tdiv(D(i, t), D(t, t));
                D.add_row_multiple(i, t, q);
                s.U.add_row_multiple(i, t, q);
                if (D(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (D(t, j) == 0) continue;
                const Integer q = -tdiv(D(t, j), D(t, t));
                D.add_col_multiple(j, t, q);
                s.V.add_col_multiple(j, t, q);
                if (D(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            std::size_t bad_row = m;
            for (std::size_t i = t + 1; i < m && bad_row == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
                        bad_row = i;
                        break;
                    }
            if (bad_row == m) break;
            D.add_row_multiple(t, bad_row, 1);
            s.U.add_row_multiple(t, bad_row, 1);
        }
        if (D(t, t) < 0) {
            D.negate_row(t);
            s.U.negate_row(t);
        }
    }
    return s;
}

IntMatrix integer_kernel(const IntMatrix& a) {
    const SmithForm s = smith_normal_form(a);
    const std::size_t r = s.rank();
    IntMatrix k(a.cols(), a.cols() - r);
    for (std::size_t j = r; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.cols(); ++i) k(i, j - r) = s.V(i, j);
    return k;
}

namespace {

// Coordinates of v with respect to the basis (G V)[:, 0..r) of span(G),
// or empty when v is not in the lattice.
std::optional<std::vector<Integer>> basis_coordinates(const SmithForm& s, const std::vector<Integer>& v) {
    const std::vector<Integer> uv = s.U.apply(v);
    const std::size_t r = s.rank();
    std::vector<Integer> c(r);
    for (std::size_t i = 0; i < uv.size(); ++i) {
        if (i < r) {
            if (!mpz_divisible_p(uv[i].get_mpz_t(), s.D(i, i).get_mpz_t())) return std::nullopt;
            c[i] = uv[i] / s.D(i, i);
        } else if (uv[i] != 0) {
            return std::nullopt;
        }
    }
    return c;
}

}  // namespace

bool lattice_contains(const IntMatrix& generators, const std::vector<Integer>& v) {
    if (v.size() != generators.rows()) throw InvalidInput("lattice_contains: dimension mismatch");
    return basis_coordinates(smith_normal_form(generators), v).has_value();
}

Integer AbelianGroupStructure::order() const {
    if (!finite()) throw InvalidInput("order of an infinite group");
    Integer n = 1;
    for (const auto& d : torsion) n *= d;
    return n;
}

AbelianGroupStructure lattice_quotient(const IntMatrix& outer, const IntMatrix& inner) {
    if (outer.rows() != inner.rows()) throw InvalidInput("lattice_quotient: ambient dimension mismatch");
    const SmithForm s = smith_normal_form(outer);
    const std::size_t r = s.rank();
    IntMatrix coords(r, inner.cols());
    for (std::size_t j = 0; j < inner.cols(); ++j) {
        const auto c = basis_coordinates(s, inner.column(j));
        if (!c) throw VerificationFailure("lattice_quotient: inner lattice not contained in outer lattice");
        for (std::size_t i = 0; i < r; ++i) coords(i, j) = (*c)[i];
    }
    const SmithForm q = smith_normal_form(coords);
    AbelianGroupStructure g;
    for (const auto& d : q.nonzero_diagonal())
        if (d != 1) g.torsion.push_back(d);
    g.free_rank = r - q.rank();
    return g;
}

}  // namespace iwasawa
