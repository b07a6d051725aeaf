#include "sylvinv/dyadic_inverse.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "sylvinv/errors.hpp"

namespace sylvinv {

namespace {

double coefficient_scale(const FactoredPolynomial& a, const FactoredPolynomial& b) {
    return std::max(from_factored(a).max_abs_coeff(), from_factored(b).max_abs_coeff());
}

std::string describe(Complex z) {
    std::ostringstream os;
    os << "(" << z.real() << ", " << z.imag() << ")";
    return os.str();
}

double binomial(std::size_t top, std::size_t bottom) {
    double acc = 1.0;
    for (std::size_t t = 1; t <= bottom; ++t) {
        acc *= static_cast<double>(top - bottom + t) / static_cast<double>(t);
    }
    return acc;
}

// row_poly padded into the slots its side occupies.
RowVector padded_row(Side side, const Polynomial& row_poly, std::size_t m, std::size_t n) {
    RowVector row(m + n);
    if (side == Side::a) {
        const RowVector tail = row_poly.padded(m);
        std::copy(tail.begin(), tail.end(), row.begin() + static_cast<std::ptrdiff_t>(n));
    } else {
        const RowVector head = row_poly.padded(n);
        std::copy(head.begin(), head.end(), row.begin());
    }
    return row;
}

Dyad make_dyad(Side side, std::size_t node_index, std::size_t order, Complex node, Complex weight,
               Polynomial row_poly, std::size_t m, std::size_t n) {
    Dyad d;
    d.side = side;
    d.node_index = node_index;
    d.order = order;
    d.node = node;
    d.column = lambda_column(m + n, node, order);
    d.weight = weight;
    d.row = padded_row(side, row_poly, m, n);
    d.row_poly = std::move(row_poly);
    return d;
}

// f / (lambda - zeros[i]) for a simple-zero f, built from the remaining factors.
Polynomial deflated_by_zero(const FactoredPolynomial& f, std::size_t i) {
    const auto zeros = f.zeros();
    std::vector<Complex> acc{f.leading()};
    for (std::size_t r = 0; r < zeros.size(); ++r) {
        if (r == i) continue;
        acc.push_back(Complex{});
        for (std::size_t t = acc.size() - 1; t > 0; --t) acc[t] -= zeros[r].value * acc[t - 1];
    }
    return Polynomial(std::move(acc));
}

// (f / (lambda - zeros[i]))(zeros[i]) from the product form.
Complex deflated_value(const FactoredPolynomial& f, std::size_t i) {
    const auto zeros = f.zeros();
    Complex acc = f.leading();
    for (std::size_t r = 0; r < zeros.size(); ++r) {
        if (r != i) acc *= zeros[i].value - zeros[r].value;
    }
    return acc;
}

void require_simple(const FactoredPolynomial& a, const FactoredPolynomial& b, const char* what) {
    if (!a.all_simple() || !b.all_simple()) {
        throw ValidationError(std::string(what) + " requires simple zeros on both sides");
    }
}

void require_degrees(const FactoredPolynomial& a, const FactoredPolynomial& b) {
    if (a.degree() < 1 || b.degree() < 1) throw DegenerateInput("both polynomials must have degree >= 1");
}

}  // namespace

void check_sylvester_guard(const FactoredPolynomial& a, const FactoredPolynomial& b, const Guards& guards) {
    const double threshold = guards.singular_tol * (1.0 + coefficient_scale(a, b));
    for (const Zero& alpha : a.zeros()) {
        if (std::abs(b.eval(alpha.value)) < threshold) {
            throw SingularSylvester("|b(alpha)| below guard at alpha = " + describe(alpha.value) +
                                    ": a and b (nearly) share a zero, det S ~ 0");
        }
    }
    for (const Zero& beta : b.zeros()) {
        if (std::abs(a.eval(beta.value)) < threshold) {
            throw SingularSylvester("|a(beta)| below guard at beta = " + describe(beta.value) +
                                    ": a and b (nearly) share a zero, det S ~ 0");
        }
    }
}

DyadicDecomposition adj_simple(const FactoredPolynomial& a, const FactoredPolynomial& b) {
    require_degrees(a, b);
    require_simple(a, b, "the adjugate dyadic decomposition");
    const std::size_t m = a.degree();
    const std::size_t n = b.degree();
    const auto alphas = a.zeros();
    const auto betas = b.zeros();

    std::vector<Complex> b_at_alpha(m);
    for (std::size_t i = 0; i < m; ++i) b_at_alpha[i] = b.eval(alphas[i].value);
    std::vector<Complex> a_at_beta(n);
    for (std::size_t j = 0; j < n; ++j) a_at_beta[j] = a.eval(betas[j].value);

    DyadicDecomposition dec{m, n, DecompositionKind::adjugate, {}};
    dec.dyads.reserve(m + n);

    const Complex a_factor = int_power(a.leading(), static_cast<int>(n));
    for (std::size_t i = 0; i < m; ++i) {
        Complex numer = a_factor;
        for (std::size_t r = 0; r < m; ++r) {
            if (r != i) numer *= b_at_alpha[r];
        }
        dec.dyads.push_back(make_dyad(Side::a, i, 0, alphas[i].value, numer / deflated_value(a, i),
                                      deflated_by_zero(a, i), m, n));
    }

    Complex b_factor = int_power(b.leading(), static_cast<int>(m));
    if ((m * n) % 2 == 1) b_factor = -b_factor;
    for (std::size_t j = 0; j < n; ++j) {
        Complex numer = b_factor;
        for (std::size_t s = 0; s < n; ++s) {
            if (s != j) numer *= a_at_beta[s];
        }
        dec.dyads.push_back(make_dyad(Side::b, j, 0, betas[j].value, numer / deflated_value(b, j),
                                      deflated_by_zero(b, j), m, n));
    }
    return dec;
}

DyadicDecomposition inverse_simple(const FactoredPolynomial& a, const FactoredPolynomial& b, const Guards& guards) {
    require_degrees(a, b);
    require_simple(a, b, "the simple-zero inverse decomposition");
    check_sylvester_guard(a, b, guards);
    const std::size_t m = a.degree();
    const std::size_t n = b.degree();
    const auto alphas = a.zeros();
    const auto betas = b.zeros();

    DyadicDecomposition dec{m, n, DecompositionKind::inverse, {}};
    dec.dyads.reserve(m + n);
    for (std::size_t i = 0; i < m; ++i) {
        const Complex weight = 1.0 / (b.eval(alphas[i].value) * deflated_value(a, i));
        dec.dyads.push_back(make_dyad(Side::a, i, 0, alphas[i].value, weight, deflated_by_zero(a, i), m, n));
    }
    for (std::size_t j = 0; j < n; ++j) {
        const Complex weight = 1.0 / (a.eval(betas[j].value) * deflated_value(b, j));
        dec.dyads.push_back(make_dyad(Side::b, j, 0, betas[j].value, weight, deflated_by_zero(b, j), m, n));
    }
    return dec;
}

std::vector<std::vector<Polynomial>> capital_fundamentals(Side side, const FactoredPolynomial& f,
                                                          const Polynomial& other, const FundamentalSet& u,
                                                          const Guards& guards) {
    const auto nodes = f.zeros();
    if (u.polys.size() != nodes.size()) throw ValidationError("fundamental set does not match the zeros of f");
    const double coeff_scale = std::max(other.max_abs_coeff(), from_factored(f).max_abs_coeff());
    const double threshold = guards.singular_tol * (1.0 + coeff_scale);
    const char* other_name = side == Side::a ? "b" : "a";

    std::vector<std::vector<Polynomial>> out(nodes.size());
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        const auto mult = static_cast<std::size_t>(nodes[k].multiplicity);
        if (u.polys[k].size() != mult) throw ValidationError("fundamental set multiplicity mismatch");
        const std::vector<Complex> od = derivatives_at(other, nodes[k].value, mult);
        if (std::abs(od[0]) < threshold) {
            throw SingularSylvester(std::string("|") + other_name + "(" + describe(nodes[k].value) +
                                    ")| below guard: a and b (nearly) share a zero, det S ~ 0");
        }
        std::vector<Polynomial>& caps = out[k];
        caps.resize(mult);
        for (std::size_t i = mult; i-- > 0;) {
            Polynomial acc = u.polys[k][i];
            for (std::size_t i1 = i + 1; i1 < mult; ++i1) {
                acc = acc - scale(caps[i1], binomial(i1, i) * od[i1 - i]);
            }
            caps[i] = scale(acc, 1.0 / od[0]);
        }
    }
    return out;
}

DyadicDecomposition inverse_general(const FactoredPolynomial& a, const FactoredPolynomial& b, const Guards& guards) {
    require_degrees(a, b);
    check_sylvester_guard(a, b, guards);
    const std::size_t m = a.degree();
    const std::size_t n = b.degree();
    const Polynomial a_poly = from_factored(a);
    const Polynomial b_poly = from_factored(b);
    const auto caps_a = capital_fundamentals(Side::a, a, b_poly, hermite_fundamentals(a, guards), guards);
    const auto caps_b = capital_fundamentals(Side::b, b, a_poly, hermite_fundamentals(b, guards), guards);

    DyadicDecomposition dec{m, n, DecompositionKind::inverse, {}};
    dec.dyads.reserve(m + n);
    const Complex one{1.0, 0.0};
    for (std::size_t k = 0; k < caps_a.size(); ++k) {
        for (std::size_t i = 0; i < caps_a[k].size(); ++i) {
            dec.dyads.push_back(make_dyad(Side::a, k, i, a.zeros()[k].value, one, caps_a[k][i], m, n));
        }
    }
    for (std::size_t l = 0; l < caps_b.size(); ++l) {
        for (std::size_t j = 0; j < caps_b[l].size(); ++j) {
            dec.dyads.push_back(make_dyad(Side::b, l, j, b.zeros()[l].value, one, caps_b[l][j], m, n));
        }
    }
    return dec;
}

namespace {

std::vector<RowVector> weighted_rows(const DyadicDecomposition& dec) {
    std::vector<RowVector> rows;
    rows.reserve(dec.dyads.size());
    for (const Dyad& d : dec.dyads) {
        RowVector r = d.row;
        for (Complex& c : r) c *= d.weight;
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace

DenseMatrix materialize(const DyadicDecomposition& dec) {
    const std::size_t size = dec.size();
    const std::vector<RowVector> rows = weighted_rows(dec);
    DenseMatrix out(size, size);
    const auto height = static_cast<std::ptrdiff_t>(size);
#pragma omp parallel for schedule(static) if (size * size * dec.dyads.size() > 32768)
    for (std::ptrdiff_t r = 0; r < height; ++r) {
        const auto ur = static_cast<std::size_t>(r);
        for (std::size_t c = 0; c < size; ++c) {
            Complex acc{};
            for (std::size_t d = 0; d < dec.dyads.size(); ++d) acc += dec.dyads[d].column[ur] * rows[d][c];
            out(ur, c) = acc;
        }
    }
    return out;
}

DenseMatrix materialize_serial(const DyadicDecomposition& dec) {
    const std::size_t size = dec.size();
    DenseMatrix out(size, size);
    for (const Dyad& d : dec.dyads) {
        for (std::size_t r = 0; r < size; ++r) {
            for (std::size_t c = 0; c < size; ++c) out(r, c) += d.column[r] * (d.weight * d.row[c]);
        }
    }
    return out;
}

RowVector apply_left(const DyadicDecomposition& dec, std::span<const Complex> d) {
    const std::size_t size = dec.size();
    if (d.size() != size) throw ValidationError("row vector length does not match the decomposition");
    RowVector out(size);
    for (const Dyad& dyad : dec.dyads) {
        Complex projection{};
        for (std::size_t r = 0; r < size; ++r) projection += d[r] * dyad.column[r];
        const Complex factor = projection * dyad.weight;
        if (factor == Complex{}) continue;
        for (std::size_t c = 0; c < size; ++c) out[c] += factor * dyad.row[c];
    }
    return out;
}

std::vector<RowVector> apply_left_batch(const DyadicDecomposition& dec, std::span<const RowVector> ds) {
    std::vector<RowVector> out(ds.size());
    const auto count = static_cast<std::ptrdiff_t>(ds.size());
#pragma omp parallel for schedule(static) if (ds.size() > 16)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        out[static_cast<std::size_t>(i)] = apply_left(dec, ds[static_cast<std::size_t>(i)]);
    }
    return out;
}

std::vector<RowVector> apply_left_batch_serial(const DyadicDecomposition& dec, std::span<const RowVector> ds) {
    std::vector<RowVector> out;
    out.reserve(ds.size());
    for (const RowVector& d : ds) out.push_back(apply_left(dec, d));
    return out;
}

}  // namespace sylvinv
