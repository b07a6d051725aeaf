#ifndef SYLVINV_POLYNOMIAL_HPP
#define SYLVINV_POLYNOMIAL_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace sylvinv {

using Complex = std::complex<double>;

/// Dense univariate polynomial with complex coefficients stored in
/// descending-degree order: coeffs()[0] is the leading coefficient.
///
/// Exact leading zeros are stripped on construction, so the leading
/// coefficient is nonzero unless the polynomial is the zero polynomial,
/// which is stored as the single coefficient 0 and reports degree 0.
/// Non-finite coefficients are rejected with ValidationError.
class Polynomial {
   public:
    Polynomial() : coeffs_{Complex{0.0, 0.0}} {}
    explicit Polynomial(std::vector<Complex> descending);
    Polynomial(std::initializer_list<Complex> descending)
        : Polynomial(std::vector<Complex>(descending)) {}

    static Polynomial constant(Complex value) { return Polynomial(std::vector<Complex>{value}); }
    /// The monic linear factor (lambda - root).
    static Polynomial linear_factor(Complex root) { return Polynomial({Complex{1.0, 0.0}, -root}); }

    std::span<const Complex> coeffs() const noexcept { return coeffs_; }
    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == Complex{}; }
    Complex leading() const noexcept { return coeffs_.front(); }

    /// Coefficient at descending index i (coefficient of lambda^(degree-i)).
    Complex operator[](std::size_t i) const { return coeffs_.at(i); }

    /// Coefficient of lambda^power; zero beyond the degree.
    Complex coefficient_of_power(std::size_t power) const noexcept {
        return power > degree() ? Complex{} : coeffs_[degree() - power];
    }

    /// Descending coefficients left-padded with zeros to the given length.
    /// Throws ValidationError if the polynomial does not fit.
    std::vector<Complex> padded(std::size_t length) const;

    /// Largest coefficient magnitude.
    double max_abs_coeff() const noexcept;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

   private:
    std::vector<Complex> coeffs_;
};

Complex eval(const Polynomial& p, Complex z) noexcept;

/// z^k by repeated squaring (exact for z = 0, unlike std::pow on complex).
Complex int_power(Complex z, int k) noexcept;

/// p and its first `count - 1` derivatives at z: {p(z), p'(z), ..., p^[count-1](z)}.
std::vector<Complex> derivatives_at(const Polynomial& p, Complex z, std::size_t count);

Polynomial derivative(const Polynomial& p, std::size_t order = 1);

struct Deflation {
    Polynomial quotient;
    Complex remainder;
};

/// Synthetic division: p(lambda) = (lambda - root) * quotient(lambda) + remainder.
Deflation deflate(const Polynomial& p, Complex root);

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial sub(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial scale(const Polynomial& p, Complex s);

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) { return add(p, q); }
inline Polynomial operator-(const Polynomial& p, const Polynomial& q) { return sub(p, q); }
inline Polynomial operator*(const Polynomial& p, const Polynomial& q) { return mul(p, q); }
inline Polynomial operator*(Complex s, const Polynomial& p) { return scale(p, s); }

/// Max-norm of the coefficient difference, aligning by power.
double max_coeff_distance(const Polynomial& p, const Polynomial& q);

/// A zero together with its multiplicity.
struct Zero {
    Complex value;
    int multiplicity = 1;
};

/// leading * prod_k (lambda - value_k)^multiplicity_k.
///
/// Construction enforces leading != 0, multiplicities >= 1, and pairwise
/// distinct zero values (ValidationError / DegenerateInput otherwise).
class FactoredPolynomial {
   public:
    FactoredPolynomial(Complex leading, std::vector<Zero> zeros);

    /// Convenience: every listed value is a simple zero.
    static FactoredPolynomial from_simple_zeros(Complex leading, std::span<const Complex> zeros);

    Complex leading() const noexcept { return leading_; }
    std::span<const Zero> zeros() const noexcept { return zeros_; }
    std::size_t degree() const noexcept;
    bool all_simple() const noexcept;

    /// Evaluates directly from the product form.
    Complex eval(Complex z) const noexcept;

    /// Smallest pairwise distance between distinct zeros (infinity when < 2 zeros).
    double min_separation() const noexcept;

   private:
    Complex leading_;
    std::vector<Zero> zeros_;
};

Polynomial from_factored(const FactoredPolynomial& f);

/// Options for the Aberth-Ehrlich simultaneous iteration.
struct RootOptions {
    double tol = 1e-10;  ///< accept z when |p(z)| <= tol * sum_k |p_k| |z|^k
    int max_iterations = 200;
    double step_tol = 1e-13;  ///< converged when max step <= step_tol * (1 + |z|)
};

/// All degree-many zeros of p (simple-zero pathway; multiplicities are not detected).
/// Throws RootFindingFailed when the iteration cap is reached without meeting the tolerance.
std::vector<Complex> find_roots(const Polynomial& p, const RootOptions& options = {});

/// Aberth-Ehrlich iteration started from caller-provided approximations,
/// e.g. the zeros of a nearby polynomial when tracking zeros over time.
std::vector<Complex> refine_roots(const Polynomial& p, std::vector<Complex> initial,
                                  const RootOptions& options = {});

/// Sorts by real part, then imaginary part.
void sort_canonical(std::vector<Complex>& values);

}  // namespace sylvinv

#endif
