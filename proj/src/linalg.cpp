#include "skewlab/linalg.hpp"

#include <algorithm>

namespace skewlab::gf {

Matrix Matrix::identity(const Field& k, std::size_t n) { return scalar(k, n, 1); }

Matrix Matrix::scalar(const Field& k, std::size_t n, Elem c) {
    Matrix m(k, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
    return m;
}

void Matrix::require_field(const Matrix& o) const {
    if (field_ != o.field_) throw Error(ErrorCode::LevelMismatch, "matrices over different fields");
}

Matrix Matrix::operator+(const Matrix& o) const {
    Matrix r = *this;
    r.add_in_place(o);
    return r;
}

void Matrix::add_in_place(const Matrix& o) {
    require_field(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = field_->add(data_[i], o.data_[i]);
}

Matrix Matrix::operator-(const Matrix& o) const {
    require_field(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_->sub(data_[i], o.data_[i]);
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    require_field(o);
    if (cols_ != o.rows_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
    Matrix r(*field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t l = 0; l < cols_; ++l) {
            const Elem a = (*this)(i, l);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r(i, j) = field_->add(r(i, j), field_->mul(a, o(l, j)));
        }
    return r;
}

Vec Matrix::operator*(const Vec& v) const {
    if (v.size() != cols_) throw Error(ErrorCode::InvalidArgument, "vector length mismatch");
    Vec r(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] = field_->add(r[i], field_->mul((*this)(i, j), v[j]));
    return r;
}

Matrix Matrix::scaled(Elem c) const {
    Matrix r = *this;
    for (auto& x : r.data_) x = field_->mul(x, c);
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(*field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

Matrix Matrix::frobenius(std::int64_t k) const {
    Matrix r = *this;
    for (auto& x : r.data_) x = field_->frob(x, k);
    return r;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Elem x) { return x == 0; });
}

Elem Matrix::trace() const {
    Elem t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t = field_->add(t, (*this)(i, i));
    return t;
}

namespace {

// In-place RREF; returns pivot columns.
std::vector<std::size_t> rref(const Field& k, std::vector<Elem>& a, std::size_t rows, std::size_t cols,
                              std::size_t pivot_cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && a[sel * cols + c] == 0) ++sel;
        if (sel == rows) continue;
        if (sel != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a[sel * cols + j], a[r * cols + j]);
        const Elem inv = k.inv(a[r * cols + c]);
        for (std::size_t j = 0; j < cols; ++j) a[r * cols + j] = k.mul(a[r * cols + j], inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const Elem f = a[i * cols + c];
            if (f == 0) continue;
            for (std::size_t j = 0; j < cols; ++j)
                a[i * cols + j] = k.sub(a[i * cols + j], k.mul(f, a[r * cols + j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t Matrix::rank() const {
    std::vector<Elem> a = data_;
    return rref(*field_, a, rows_, cols_, cols_).size();
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    const std::size_t n = rows_, w = 2 * n;
    std::vector<Elem> a(n * w, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i * w + j] = (*this)(i, j);
        a[i * w + n + i] = 1;
    }
    if (rref(*field_, a, n, w, n).size() != n) return std::nullopt;
    Matrix r(*field_, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = a[i * w + n + j];
    return r;
}

Matrix Matrix::kernel() const {
    std::vector<Elem> a = data_;
    const auto pivots = rref(*field_, a, rows_, cols_, cols_);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        Vec v(cols_, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = field_->neg(a[r * cols_ + f]);
        basis.push_back(std::move(v));
    }
    return from_rows(*field_, basis, cols_);
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    const Field& k = m.field();
    const std::size_t rows = m.rows(), cols = m.cols(), w = cols + 1;
    std::vector<Elem> a(rows * w, 0);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) a[i * w + j] = m(i, j);
        a[i * w + cols] = b[i];
    }
    const auto pivots = rref(k, a, rows, w, cols);
    for (std::size_t i = pivots.size(); i < rows; ++i)
        if (a[i * w + cols] != 0) return std::nullopt;
    Vec x(cols, 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r * w + cols];
    return x;
}

Matrix from_rows(const Field& k, std::span<const Vec> rows, std::size_t cols) {
    Matrix m(k, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
}

// ---------------------------------------------------------------------------

Vec Subspace::reduce(const Vec& v) const {
    if (v.size() != dim_) throw Error(ErrorCode::InvalidArgument, "vector length mismatch");
    Vec r = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Elem f = r[pivots_[i]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) r[j] = field_->sub(r[j], field_->mul(f, rows_[i][j]));
    }
    return r;
}

bool Subspace::contains(const Vec& v) const {
    const Vec r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](Elem x) { return x == 0; });
}

bool Subspace::insert(const Vec& v) {
    Vec r = reduce(v);
    std::size_t piv = 0;
    while (piv < dim_ && r[piv] == 0) ++piv;
    if (piv == dim_) return false;
    const Elem inv = field_->inv(r[piv]);
    for (auto& x : r) x = field_->mul(x, inv);
    for (auto& row : rows_) {
        const Elem f = row[piv];
        if (f == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) row[j] = field_->sub(row[j], field_->mul(f, r[j]));
    }
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, piv);
    rows_.insert(rows_.begin() + pos, std::move(r));
    return true;
}

Matrix Subspace::equations() const {
    std::vector<bool> is_pivot(dim_, false);
    for (auto c : pivots_) is_pivot[c] = true;
    std::vector<Vec> eqs;
    for (std::size_t f = 0; f < dim_; ++f) {
        if (is_pivot[f]) continue;
        Vec h(dim_, 0);
        h[f] = 1;
        for (std::size_t r = 0; r < rows_.size(); ++r) h[pivots_[r]] = field_->neg(rows_[r][f]);
        eqs.push_back(std::move(h));
    }
    return from_rows(*field_, eqs, dim_);
}

bool Subspace::operator==(const Subspace& o) const {
    return field_ == o.field_ && dim_ == o.dim_ && pivots_ == o.pivots_ && rows_ == o.rows_;
}

}  // namespace skewlab::gf
