#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace flagcalc {

using Coeff = boost::multiprecision::cpp_int;
using Exponent = std::vector<int>;

// Graded lexicographic order, largest first: higher total degree wins,
// ties broken so that earlier variables dominate (x1^2 before x1 x2).
struct GrlexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

int exponent_degree(const Exponent& e);

// Sparse multivariate polynomial with exact integer coefficients.
// The term map never stores zero coefficients, so equal polynomials
// have identical term maps.
class Polynomial {
public:
    using TermMap = std::map<Exponent, Coeff, GrlexGreater>;

    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {
        if (nvars < 0) throw std::invalid_argument("Polynomial: negative variable count");
    }

    static Polynomial zero(int nvars) { return Polynomial(nvars); }
    static Polynomial constant(int nvars, const Coeff& c);
    // 1-based variable index.
    static Polynomial variable(int nvars, int i);
    static Polynomial monomial(int nvars, const Exponent& exp, const Coeff& c);
    // c1*x1 + ... + cn*xn
    static Polynomial linear_form(const std::vector<long long>& coords);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    // -1 for the zero polynomial.
    int total_degree() const;
    bool is_homogeneous() const;
    const TermMap& terms() const { return terms_; }
    Coeff coefficient(const Exponent& exp) const;

    void add_term(const Exponent& exp, const Coeff& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Coeff& c) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

private:
    void check_same_vars(const Polynomial& o) const;

    int nvars_ = 0;
    TermMap terms_;
};

// Dense univariate polynomial in t with exact integer coefficients.
class TPoly {
public:
    TPoly() = default;
    static TPoly zero() { return TPoly(); }
    static TPoly constant(const Coeff& c);
    static TPoly monomial(const Coeff& c, int deg);

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for zero.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Coeff coeff(int k) const;
    const std::vector<Coeff>& coeffs() const { return coeffs_; }

    TPoly& operator+=(const TPoly& o);
    TPoly& operator-=(const TPoly& o);
    TPoly operator+(const TPoly& o) const;
    TPoly operator-(const TPoly& o) const;
    TPoly operator*(const TPoly& o) const;
    TPoly operator-() const;
    bool operator==(const TPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const TPoly& o) const { return !(*this == o); }

    // Quotient when the division is exact over the integers, nullopt otherwise.
    std::optional<TPoly> divide_exact(const TPoly& d) const;

private:
    void trim();
    std::vector<Coeff> coeffs_;  // coeffs_[k] multiplies t^k
};

// Substitute x_i := t for every variable.
TPoly specialize_line(const Polynomial& p);

// Substitute x_i := t_i - t_{i+1}; requires nvals == p.nvars() + 1.
Polynomial specialize_tvars(const Polynomial& p, int nvals);

// Exact divisibility by a nonzero linear form in the integer polynomial ring.
bool divisible_by_linear(const Polynomial& p, const Polynomial& linear);

// Fraction-free determinant of a square matrix over the univariate ring.
TPoly tpoly_determinant(std::vector<std::vector<TPoly>> m);

}  // namespace flagcalc
