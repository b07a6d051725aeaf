#ifndef SYLVINV_JSON_IO_HPP
#define SYLVINV_JSON_IO_HPP

#include <variant>
#include <vector>

#include "json.hpp"

#include "sylvinv/linalg.hpp"
#include "sylvinv/polynomial.hpp"

namespace sylvinv {

using json = nlohmann::json;

// Complex numbers serialize as [re, im]; polynomials as descending lists of them.

json to_json(Complex z);
json to_json(const Polynomial& p);
json to_json(std::span<const Complex> v);
json to_json(const DenseMatrix& m);
json to_json(const FactoredPolynomial& f);

/// Accepts [re, im] or a bare real number.
Complex complex_from_json(const json& j);
std::vector<Complex> complex_list_from_json(const json& j);
DenseMatrix matrix_from_json(const json& j);
std::vector<Zero> zeros_from_json(const json& j);

/// A polynomial given either by coefficients or in factored form:
///   [c0, c1, ...]  or  {"coeffs": [...]}  or
///   {"factored": {"leading": [re, im], "zeros": [{"value": [re, im], "mult": k}, ...]}}
class PolynomialDocument {
   public:
    explicit PolynomialDocument(Polynomial p) : value_(std::move(p)) {}
    explicit PolynomialDocument(FactoredPolynomial f) : value_(std::move(f)) {}

    bool is_factored() const noexcept { return std::holds_alternative<FactoredPolynomial>(value_); }
    const FactoredPolynomial& factored() const { return std::get<FactoredPolynomial>(value_); }
    /// Coefficient form (expanded when factored).
    Polynomial coefficients() const;

   private:
    std::variant<Polynomial, FactoredPolynomial> value_;
};

/// Throws ValidationError (DegenerateInput for a zero leading coefficient) on malformed input.
PolynomialDocument parse_polynomial_document(const json& j);

}  // namespace sylvinv

#endif
