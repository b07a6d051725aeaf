#ifndef SYLVINV_LINALG_HPP
#define SYLVINV_LINALG_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "sylvinv/polynomial.hpp"

namespace sylvinv {

using RowVector = std::vector<Complex>;
using Column = std::vector<Complex>;

/// Dense complex matrix, row-major.
class DenseMatrix {
   public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data);
    /// Rows given as nested lists; all rows must have equal length.
    static DenseMatrix from_rows(const std::vector<std::vector<Complex>>& rows);
    static DenseMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    Complex operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    std::span<const Complex> data() const noexcept { return data_; }
    std::span<Complex> data() noexcept { return data_; }
    std::span<const Complex> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }

    double max_abs() const noexcept;

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

DenseMatrix transpose(const DenseMatrix& m);
DenseMatrix operator-(const DenseMatrix& l, const DenseMatrix& r);
DenseMatrix operator*(Complex s, const DenseMatrix& m);

/// Matrix product, OpenMP-parallel over output rows.
DenseMatrix multiply(const DenseMatrix& l, const DenseMatrix& r);
/// Single-threaded reference for multiply().
DenseMatrix multiply_serial(const DenseMatrix& l, const DenseMatrix& r);

/// Row vector times matrix.
RowVector multiply(std::span<const Complex> v, const DenseMatrix& m);

double max_norm_distance(const DenseMatrix& l, const DenseMatrix& r);
double max_abs(std::span<const Complex> v) noexcept;

/// ||M - s I||_max for square M.
double distance_to_scaled_identity(const DenseMatrix& m, Complex s);

/// LU factorization with partial pivoting, P M = L U.
class LuDecomposition {
   public:
    explicit LuDecomposition(const DenseMatrix& m);

    /// True when some pivot magnitude fell below 1e-13 * max|entry|.
    bool singular() const noexcept { return singular_; }
    Complex determinant() const noexcept;

    /// Solves M x = b. Throws SingularMatrix when singular().
    Column solve(std::span<const Complex> b) const;

   private:
    std::size_t n_;
    DenseMatrix lu_;
    std::vector<std::size_t> perm_;
    int sign_ = 1;
    bool singular_ = false;
};

/// z with z * S = d: LU of the transpose plus a few refinement steps.
RowVector solve_row_system(const DenseMatrix& s, std::span<const Complex> d);
DenseMatrix inverse(const DenseMatrix& m);
Complex det(const DenseMatrix& m);
/// Adjugate via the Faddeev-LeVerrier recursion; valid for singular matrices.
DenseMatrix adjugate(const DenseMatrix& m);

/// Product of the row 2-norms, an upper bound for |det m|.
double hadamard_bound(const DenseMatrix& m);

}  // namespace sylvinv

#endif
