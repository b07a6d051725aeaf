#include "sylvinv/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>

#include "sylvinv/errors.hpp"

namespace sylvinv {

namespace {

constexpr double kPivotThreshold = 1e-13;
constexpr int kRefinementSteps = 3;

void require_square(const DenseMatrix& m, const char* what) {
    if (!m.is_square() || m.rows() == 0) throw ValidationError(std::string(what) + " requires a nonempty square matrix");
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw ValidationError("matrix data length does not match its shape");
}

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<Complex>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    std::vector<Complex> data;
    data.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c) throw ValidationError("matrix rows have unequal lengths");
        data.insert(data.end(), row.begin(), row.end());
    }
    return DenseMatrix(r, c, std::move(data));
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

double DenseMatrix::max_abs() const noexcept { return sylvinv::max_abs(data_); }

double max_abs(std::span<const Complex> v) noexcept {
    double best = 0.0;
    for (const Complex& c : v) best = std::max(best, std::abs(c));
    return best;
}

DenseMatrix transpose(const DenseMatrix& m) {
    DenseMatrix t(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
    }
    return t;
}

DenseMatrix operator-(const DenseMatrix& l, const DenseMatrix& r) {
    if (l.rows() != r.rows() || l.cols() != r.cols()) throw ValidationError("matrix shape mismatch");
    DenseMatrix out = l;
    for (std::size_t i = 0; i < out.data().size(); ++i) out.data()[i] -= r.data()[i];
    return out;
}

DenseMatrix operator*(Complex s, const DenseMatrix& m) {
    DenseMatrix out = m;
    for (Complex& c : out.data()) c *= s;
    return out;
}

DenseMatrix multiply(const DenseMatrix& l, const DenseMatrix& r) {
    if (l.cols() != r.rows()) throw ValidationError("matrix shape mismatch in product");
    DenseMatrix out(l.rows(), r.cols());
    const auto rows = static_cast<std::ptrdiff_t>(l.rows());
#pragma omp parallel for schedule(static) if (rows * static_cast<std::ptrdiff_t>(r.cols()) > 4096)
    for (std::ptrdiff_t i = 0; i < rows; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        for (std::size_t j = 0; j < r.cols(); ++j) {
            Complex acc{};
            for (std::size_t k = 0; k < l.cols(); ++k) acc += l(ui, k) * r(k, j);
            out(ui, j) = acc;
        }
    }
    return out;
}

DenseMatrix multiply_serial(const DenseMatrix& l, const DenseMatrix& r) {
    if (l.cols() != r.rows()) throw ValidationError("matrix shape mismatch in product");
    DenseMatrix out(l.rows(), r.cols());
    for (std::size_t i = 0; i < l.rows(); ++i) {
        for (std::size_t j = 0; j < r.cols(); ++j) {
            Complex acc{};
            for (std::size_t k = 0; k < l.cols(); ++k) acc += l(i, k) * r(k, j);
            out(i, j) = acc;
        }
    }
    return out;
}

RowVector multiply(std::span<const Complex> v, const DenseMatrix& m) {
    if (v.size() != m.rows()) throw ValidationError("row vector length does not match matrix");
    RowVector out(m.cols());
    for (std::size_t k = 0; k < m.rows(); ++k) {
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[k] * m(k, j);
    }
    return out;
}

double max_norm_distance(const DenseMatrix& l, const DenseMatrix& r) { return (l - r).max_abs(); }

double distance_to_scaled_identity(const DenseMatrix& m, Complex s) {
    require_square(m, "distance_to_scaled_identity");
    double best = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            best = std::max(best, std::abs(m(i, j) - (i == j ? s : Complex{})));
        }
    }
    return best;
}

LuDecomposition::LuDecomposition(const DenseMatrix& m) : n_(m.rows()), lu_(m), perm_(m.rows()) {
    require_square(m, "LU factorization");
    for (std::size_t i = 0; i < n_; ++i) perm_[i] = i;
    const double threshold = kPivotThreshold * m.max_abs();
    for (std::size_t k = 0; k < n_; ++k) {
        std::size_t pivot = k;
        double best = std::abs(lu_(k, k));
        for (std::size_t i = k + 1; i < n_; ++i) {
            const double v = std::abs(lu_(i, k));
            if (v > best) {
                best = v;
                pivot = i;
            }
        }
        if (best <= threshold) {
            singular_ = true;
            if (best == 0.0) continue;
        }
        if (pivot != k) {
            for (std::size_t j = 0; j < n_; ++j) std::swap(lu_(k, j), lu_(pivot, j));
            std::swap(perm_[k], perm_[pivot]);
            sign_ = -sign_;
        }
        const Complex diag = lu_(k, k);
        for (std::size_t i = k + 1; i < n_; ++i) {
            const Complex factor = lu_(i, k) / diag;
            lu_(i, k) = factor;
            if (factor == Complex{}) continue;
            for (std::size_t j = k + 1; j < n_; ++j) lu_(i, j) -= factor * lu_(k, j);
        }
    }
}

Complex LuDecomposition::determinant() const noexcept {
    Complex acc = static_cast<double>(sign_);
    for (std::size_t i = 0; i < n_; ++i) acc *= lu_(i, i);
    return acc;
}

Column LuDecomposition::solve(std::span<const Complex> b) const {
    if (singular_) throw SingularMatrix("matrix is singular to working precision (pivot below 1e-13 * scale)");
    if (b.size() != n_) throw ValidationError("right-hand side length does not match matrix");
    Column x(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        Complex acc = b[perm_[i]];
        for (std::size_t j = 0; j < i; ++j) acc -= lu_(i, j) * x[j];
        x[i] = acc;
    }
    for (std::size_t i = n_; i-- > 0;) {
        Complex acc = x[i];
        for (std::size_t j = i + 1; j < n_; ++j) acc -= lu_(i, j) * x[j];
        x[i] = acc / lu_(i, i);
    }
    return x;
}

RowVector solve_row_system(const DenseMatrix& s, std::span<const Complex> d) {
    require_square(s, "solve_row_system");
    if (d.size() != s.rows()) throw ValidationError("row vector length does not match matrix");
    const std::size_t n = s.rows();
    const LuDecomposition lu(transpose(s));
    RowVector z = lu.solve(d);
    // Iterative refinement, residual accumulated in long double.
    using Wide = std::complex<long double>;
    for (int step = 0; step < kRefinementSteps; ++step) {
        RowVector r(n);
        for (std::size_t c = 0; c < n; ++c) {
            Wide acc(d[c]);
            for (std::size_t k = 0; k < n; ++k) acc -= Wide(z[k]) * Wide(s(k, c));
            r[c] = Complex(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
        }
        const RowVector dz = lu.solve(r);
        for (std::size_t k = 0; k < n; ++k) z[k] += dz[k];
        if (max_abs(dz) <= 1e-16 * max_abs(z)) break;
    }
    return z;
}

DenseMatrix inverse(const DenseMatrix& m) {
    require_square(m, "inverse");
    const LuDecomposition lu(m);
    const std::size_t n = m.rows();
    DenseMatrix out(n, n);
    Column unit(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::fill(unit.begin(), unit.end(), Complex{});
        unit[j] = 1.0;
        const Column x = lu.solve(unit);
        for (std::size_t i = 0; i < n; ++i) out(i, j) = x[i];
    }
    return out;
}

Complex det(const DenseMatrix& m) { return LuDecomposition(m).determinant(); }

DenseMatrix adjugate(const DenseMatrix& a) {
    require_square(a, "adjugate");
    const std::size_t n = a.rows();
    // M_1 = I, c_{n-1} = -tr(A); M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
    // Cayley-Hamilton gives A M_n = -c_0 I, hence adj A = (-1)^(n+1) M_n.
    DenseMatrix mk = DenseMatrix::identity(n);
    for (std::size_t k = 1; k < n; ++k) {
        DenseMatrix am = multiply(a, mk);
        Complex trace{};
        for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
        const Complex coeff = -trace / static_cast<double>(k);
        for (std::size_t i = 0; i < n; ++i) am(i, i) += coeff;
        mk = std::move(am);
    }
    return (n % 2 == 1) ? mk : Complex{-1.0, 0.0} * mk;
}

double hadamard_bound(const DenseMatrix& m) {
    double bound = 1.0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        double sq = 0.0;
        for (const Complex& v : m.row(r)) sq += std::norm(v);
        bound *= std::sqrt(sq);
    }
    return bound;
}

}  // namespace sylvinv
