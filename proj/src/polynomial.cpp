#include "sylvinv/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sylvinv/errors.hpp"

namespace sylvinv {

namespace {

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

Polynomial::Polynomial(std::vector<Complex> descending) : coeffs_(std::move(descending)) {
    for (const Complex& c : coeffs_) {
        if (!is_finite(c)) throw ValidationError("polynomial coefficient is not finite");
    }
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](Complex c) { return c != Complex{}; });
    if (first == coeffs_.end()) {
        coeffs_.assign(1, Complex{});
    } else {
        coeffs_.erase(coeffs_.begin(), first);
    }
}

std::vector<Complex> Polynomial::padded(std::size_t length) const {
    if (is_zero()) return std::vector<Complex>(length);
    if (coeffs_.size() > length) {
        throw ValidationError("polynomial of degree " + std::to_string(degree()) +
                              " does not fit in " + std::to_string(length) + " coefficient slots");
    }
    std::vector<Complex> out(length - coeffs_.size());
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return out;
}

double Polynomial::max_abs_coeff() const noexcept {
    double best = 0.0;
    for (const Complex& c : coeffs_) best = std::max(best, std::abs(c));
    return best;
}

Complex eval(const Polynomial& p, Complex z) noexcept {
    Complex acc{};
    for (const Complex& c : p.coeffs()) acc = acc * z + c;
    return acc;
}

Complex int_power(Complex z, int k) noexcept {
    Complex acc{1.0, 0.0};
    Complex base = z;
    for (unsigned e = static_cast<unsigned>(k); e != 0; e >>= 1) {
        if (e & 1U) acc *= base;
        base *= base;
    }
    return acc;
}

std::vector<Complex> derivatives_at(const Polynomial& p, Complex z, std::size_t count) {
    // Repeated synthetic division yields Taylor coefficients t_r = p^[r](z) / r!.
    std::vector<Complex> work(p.coeffs().begin(), p.coeffs().end());
    std::vector<Complex> out(count);
    double factorial = 1.0;
    for (std::size_t r = 0; r < count; ++r) {
        if (work.empty()) break;
        Complex acc{};
        for (Complex& c : work) {
            acc = acc * z + c;
            c = acc;
        }
        out[r] = work.back() * factorial;
        work.pop_back();
        factorial *= static_cast<double>(r + 1);
    }
    return out;
}

Polynomial derivative(const Polynomial& p, std::size_t order) {
    if (order == 0) return p;
    if (order > p.degree()) return Polynomial{};
    const std::size_t deg = p.degree();
    std::vector<Complex> out(deg + 1 - order);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const std::size_t power = deg - i;
        double falling = 1.0;
        for (std::size_t k = 0; k < order; ++k) falling *= static_cast<double>(power - k);
        out[i] = p[i] * falling;
    }
    return Polynomial(std::move(out));
}

Deflation deflate(const Polynomial& p, Complex root) {
    const auto c = p.coeffs();
    if (p.degree() == 0) return {Polynomial{}, c[0]};
    std::vector<Complex> q(c.size() - 1);
    Complex acc{};
    for (std::size_t i = 0; i < q.size(); ++i) {
        acc = acc * root + c[i];
        q[i] = acc;
    }
    const Complex remainder = acc * root + c.back();
    return {Polynomial(std::move(q)), remainder};
}

Polynomial add(const Polynomial& p, const Polynomial& q) {
    const std::size_t deg = std::max(p.degree(), q.degree());
    std::vector<Complex> out(deg + 1);
    for (std::size_t power = 0; power <= deg; ++power) {
        out[deg - power] = p.coefficient_of_power(power) + q.coefficient_of_power(power);
    }
    return Polynomial(std::move(out));
}

Polynomial sub(const Polynomial& p, const Polynomial& q) { return add(p, scale(q, Complex{-1.0, 0.0})); }

Polynomial mul(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return Polynomial{};
    const auto a = p.coeffs();
    const auto b = q.coeffs();
    std::vector<Complex> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return Polynomial(std::move(out));
}

Polynomial scale(const Polynomial& p, Complex s) {
    std::vector<Complex> out(p.coeffs().begin(), p.coeffs().end());
    for (Complex& c : out) c *= s;
    return Polynomial(std::move(out));
}

double max_coeff_distance(const Polynomial& p, const Polynomial& q) {
    const std::size_t deg = std::max(p.degree(), q.degree());
    double best = 0.0;
    for (std::size_t power = 0; power <= deg; ++power) {
        best = std::max(best, std::abs(p.coefficient_of_power(power) - q.coefficient_of_power(power)));
    }
    return best;
}

FactoredPolynomial::FactoredPolynomial(Complex leading, std::vector<Zero> zeros)
    : leading_(leading), zeros_(std::move(zeros)) {
    if (!is_finite(leading_)) throw ValidationError("leading coefficient is not finite");
    if (leading_ == Complex{}) throw DegenerateInput("leading coefficient must be nonzero");
    for (std::size_t k = 0; k < zeros_.size(); ++k) {
        if (!is_finite(zeros_[k].value)) throw ValidationError("zero value is not finite");
        if (zeros_[k].multiplicity < 1) throw ValidationError("zero multiplicity must be positive");
        for (std::size_t l = 0; l < k; ++l) {
            if (zeros_[l].value == zeros_[k].value) {
                throw ValidationError("zero values must be pairwise distinct; merge them into one multiplicity");
            }
        }
    }
}

FactoredPolynomial FactoredPolynomial::from_simple_zeros(Complex leading, std::span<const Complex> zeros) {
    std::vector<Zero> out;
    out.reserve(zeros.size());
    for (const Complex& z : zeros) out.push_back({z, 1});
    return FactoredPolynomial(leading, std::move(out));
}

std::size_t FactoredPolynomial::degree() const noexcept {
    std::size_t deg = 0;
    for (const Zero& z : zeros_) deg += static_cast<std::size_t>(z.multiplicity);
    return deg;
}

bool FactoredPolynomial::all_simple() const noexcept {
    return std::all_of(zeros_.begin(), zeros_.end(), [](const Zero& z) { return z.multiplicity == 1; });
}

Complex FactoredPolynomial::eval(Complex z) const noexcept {
    Complex acc = leading_;
    for (const Zero& zero : zeros_) {
        const Complex factor = z - zero.value;
        for (int r = 0; r < zero.multiplicity; ++r) acc *= factor;
    }
    return acc;
}

double FactoredPolynomial::min_separation() const noexcept {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < zeros_.size(); ++k) {
        for (std::size_t l = 0; l < k; ++l) best = std::min(best, std::abs(zeros_[k].value - zeros_[l].value));
    }
    return best;
}

Polynomial from_factored(const FactoredPolynomial& f) {
    std::vector<Complex> acc{f.leading()};
    for (const Zero& zero : f.zeros()) {
        for (int r = 0; r < zero.multiplicity; ++r) {
            // multiply in place by (lambda - value)
            acc.push_back(Complex{});
            for (std::size_t i = acc.size() - 1; i > 0; --i) acc[i] -= zero.value * acc[i - 1];
        }
    }
    return Polynomial(std::move(acc));
}

void sort_canonical(std::vector<Complex>& values) {
    constexpr double grid = 1e-9;
    auto key = [](Complex z) { return std::pair{std::round(z.real() / grid), std::round(z.imag() / grid)}; };
    std::sort(values.begin(), values.end(), [&](Complex l, Complex r) { return key(l) < key(r); });
}

}  // namespace sylvinv
