#pragma once

// Exact dense linear algebra over any gf::Field. Everything that needs a linear
// system (representations, intertwiners, duals, idealisers) goes through here.

#include <optional>
#include <span>
#include <vector>

#include "skewlab/gf.hpp"

namespace skewlab::gf {

using Vec = std::vector<Elem>;

class Matrix {
public:
    Matrix() = default;
    Matrix(const Field& k, std::size_t rows, std::size_t cols)
        : field_(&k), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static Matrix identity(const Field& k, std::size_t n);
    static Matrix scalar(const Field& k, std::size_t n, Elem c);

    const Field& field() const { return *field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    const std::vector<Elem>& data() const { return data_; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Vec operator*(const Vec& v) const;
    Matrix scaled(Elem c) const;
    Matrix transpose() const;
    /// Applies y ↦ y^{p^k} to every entry.
    Matrix frobenius(std::int64_t k) const;
    void add_in_place(const Matrix& o);

    bool is_zero() const;
    Elem trace() const;
    std::size_t rank() const;
    std::optional<Matrix> inverse() const;
    /// Basis of {v : A v = 0}, returned as rows of the result.
    Matrix kernel() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    void require_field(const Matrix& o) const;

    const Field* field_ = nullptr;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Elem> data_;
};

/// Solves A x = b; nullopt when inconsistent. Returns one particular solution
/// (free variables set to zero).
std::optional<Vec> solve(const Matrix& a, const Vec& b);

/// Builds a matrix whose rows are the given vectors.
Matrix from_rows(const Field& k, std::span<const Vec> rows, std::size_t cols);

/// A subspace of k^dim kept in reduced row-echelon form.
class Subspace {
public:
    Subspace(const Field& k, std::size_t dim) : field_(&k), dim_(dim) {}

    const Field& field() const { return *field_; }
    std::size_t ambient_dim() const { return dim_; }
    std::size_t dimension() const { return rows_.size(); }

    /// Adds v to the span; returns true iff v was independent.
    bool insert(const Vec& v);
    bool contains(const Vec& v) const;
    /// v minus its projection onto the pivot coordinates (zero iff v is in the span).
    Vec reduce(const Vec& v) const;

    const std::vector<Vec>& basis() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Linear equations H with  v ∈ span  ⇔  H v = 0 (rows of H).
    Matrix equations() const;

    bool operator==(const Subspace& o) const;

private:
    const Field* field_;
    std::size_t dim_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace skewlab::gf
