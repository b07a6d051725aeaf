#include "sylvinv/json_io.hpp"

#include <string>

#include "sylvinv/errors.hpp"

namespace sylvinv {

// + 0.0 turns -0.0 into 0.0.
json to_json(Complex z) { return json::array({z.real() + 0.0, z.imag() + 0.0}); }

json to_json(std::span<const Complex> v) {
    json out = json::array();
    for (const Complex& z : v) out.push_back(to_json(z));
    return out;
}

json to_json(const Polynomial& p) { return to_json(p.coeffs()); }

json to_json(const DenseMatrix& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
    return out;
}

json to_json(const FactoredPolynomial& f) {
    json zeros = json::array();
    for (const Zero& z : f.zeros()) zeros.push_back({{"value", to_json(z.value)}, {"mult", z.multiplicity}});
    return {{"factored", {{"leading", to_json(f.leading())}, {"zeros", zeros}}}};
}

Complex complex_from_json(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return {j[0].get<double>(), j[1].get<double>()};
    }
    throw ValidationError("expected a complex number as [re, im] or a real number, got " + j.dump());
}

std::vector<Complex> complex_list_from_json(const json& j) {
    if (!j.is_array()) throw ValidationError("expected a list of complex numbers, got " + j.dump());
    std::vector<Complex> out;
    out.reserve(j.size());
    for (const json& e : j) out.push_back(complex_from_json(e));
    return out;
}

DenseMatrix matrix_from_json(const json& j) {
    if (!j.is_array()) throw ValidationError("expected a matrix as a list of rows");
    std::vector<std::vector<Complex>> rows;
    for (const json& r : j) rows.push_back(complex_list_from_json(r));
    return DenseMatrix::from_rows(rows);
}

std::vector<Zero> zeros_from_json(const json& j) {
    if (!j.is_array()) throw ValidationError("expected a list of zeros");
    std::vector<Zero> out;
    for (const json& z : j) {
        if (!z.is_object() || !z.contains("value")) throw ValidationError("each zero needs a \"value\" field");
        int mult = 1;
        if (z.contains("mult")) {
            if (!z["mult"].is_number_integer()) throw ValidationError("\"mult\" must be an integer");
            mult = z["mult"].get<int>();
        }
        if (mult < 1) throw ValidationError("zero multiplicity must be positive");
        out.push_back({complex_from_json(z["value"]), mult});
    }
    return out;
}

Polynomial PolynomialDocument::coefficients() const {
    if (const auto* f = std::get_if<FactoredPolynomial>(&value_)) return from_factored(*f);
    return std::get<Polynomial>(value_);
}

PolynomialDocument parse_polynomial_document(const json& j) {
    const json* coeffs = nullptr;
    if (j.is_array()) {
        coeffs = &j;
    } else if (j.is_object()) {
        const bool has_coeffs = j.contains("coeffs");
        const bool has_factored = j.contains("factored");
        if (has_coeffs == has_factored) {
            throw ValidationError("polynomial document needs exactly one of \"coeffs\" or \"factored\"");
        }
        if (has_coeffs) {
            coeffs = &j["coeffs"];
        } else {
            const json& f = j["factored"];
            if (!f.is_object() || !f.contains("zeros")) throw ValidationError("\"factored\" needs a \"zeros\" list");
            const Complex leading = f.contains("leading") ? complex_from_json(f["leading"]) : Complex{1.0, 0.0};
            return PolynomialDocument(FactoredPolynomial(leading, zeros_from_json(f["zeros"])));
        }
    } else {
        throw ValidationError("polynomial document must be a coefficient list or an object");
    }
    std::vector<Complex> c = complex_list_from_json(*coeffs);
    if (c.empty()) throw ValidationError("coefficient list is empty");
    if (c.size() > 1 && c.front() == Complex{}) throw DegenerateInput("leading coefficient must be nonzero");
    return PolynomialDocument(Polynomial(std::move(c)));
}

}  // namespace sylvinv
