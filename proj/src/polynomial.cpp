#include "flagcalc/polynomial.hpp"

#include <algorithm>

namespace flagcalc {

int exponent_degree(const Exponent& e) {
    int d = 0;
    for (int k : e) d += k;
    return d;
}

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
    int da = exponent_degree(a), db = exponent_degree(b);
    if (da != db) return da > db;
    return a > b;
}

Polynomial Polynomial::constant(int nvars, const Coeff& c) {
    Polynomial p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
    if (i < 1 || i > nvars) throw std::invalid_argument("Polynomial::variable: index out of range");
    Polynomial p(nvars);
    Exponent e(nvars, 0);
    e[i - 1] = 1;
    p.add_term(e, 1);
    return p;
}

Polynomial Polynomial::monomial(int nvars, const Exponent& exp, const Coeff& c) {
    if (static_cast<int>(exp.size()) != nvars)
        throw std::invalid_argument("Polynomial::monomial: exponent size mismatch");
    Polynomial p(nvars);
    p.add_term(exp, c);
    return p;
}

Polynomial Polynomial::linear_form(const std::vector<long long>& coords) {
    Polynomial p(static_cast<int>(coords.size()));
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0) continue;
        Exponent e(coords.size(), 0);
        e[i] = 1;
        p.add_term(e, coords[i]);
    }
    return p;
}

int Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    return exponent_degree(terms_.begin()->first);
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = exponent_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (exponent_degree(e) != d) return false;
    return true;
}

Coeff Polynomial::coefficient(const Exponent& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Coeff(0) : it->second;
}

void Polynomial::add_term(const Exponent& exp, const Coeff& c) {
    if (static_cast<int>(exp.size()) != nvars_)
        throw std::invalid_argument("Polynomial::add_term: exponent size mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::check_same_vars(const Polynomial& o) const {
    if (nvars_ != o.nvars_)
        throw std::invalid_argument("Polynomial: variable count mismatch");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_vars(o);
    Polynomial r(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exponent e(nvars_);
            for (int k = 0; k < nvars_; ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, -c);
    return r;
}

Polynomial Polynomial::operator*(const Coeff& c) const {
    Polynomial r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.add_term(e, k * c);
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

TPoly TPoly::constant(const Coeff& c) { return monomial(c, 0); }

TPoly TPoly::monomial(const Coeff& c, int deg) {
    TPoly p;
    if (c == 0) return p;
    if (deg < 0) throw std::invalid_argument("TPoly::monomial: negative degree");
    p.coeffs_.assign(deg + 1, 0);
    p.coeffs_[deg] = c;
    return p;
}

Coeff TPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[k];
}

void TPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

TPoly& TPoly::operator+=(const TPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

TPoly TPoly::operator+(const TPoly& o) const {
    TPoly r = *this;
    r += o;
    return r;
}

TPoly TPoly::operator-(const TPoly& o) const {
    TPoly r = *this;
    r -= o;
    return r;
}

TPoly TPoly::operator*(const TPoly& o) const {
    TPoly r;
    if (is_zero() || o.is_zero()) return r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t a = 0; a < coeffs_.size(); ++a) {
        if (coeffs_[a] == 0) continue;
        for (std::size_t b = 0; b < o.coeffs_.size(); ++b)
            r.coeffs_[a + b] += coeffs_[a] * o.coeffs_[b];
    }
    r.trim();
    return r;
}

TPoly TPoly::operator-() const {
    TPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

std::optional<TPoly> TPoly::divide_exact(const TPoly& d) const {
    if (d.is_zero()) return std::nullopt;
    if (is_zero()) return TPoly();
    if (degree() < d.degree()) return std::nullopt;
    TPoly rem = *this;
    TPoly q;
    q.coeffs_.assign(degree() - d.degree() + 1, 0);
    const Coeff& lead = d.coeffs_.back();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        Coeff top = rem.coeffs_.back();
        if (top % lead != 0) return std::nullopt;
        Coeff c = top / lead;
        int shift = rem.degree() - d.degree();
        q.coeffs_[shift] = c;
        rem -= d * TPoly::monomial(c, shift);
    }
    if (!rem.is_zero()) return std::nullopt;
    q.trim();
    return q;
}

TPoly specialize_line(const Polynomial& p) {
    TPoly r;
    for (const auto& [e, c] : p.terms()) r += TPoly::monomial(c, exponent_degree(e));
    return r;
}

Polynomial specialize_tvars(const Polynomial& p, int nvals) {
    if (nvals != p.nvars() + 1)
        throw std::invalid_argument("specialize_tvars: need one more value variable than input variables");
    // x_i -> t_i - t_{i+1}
    std::vector<Polynomial> subs;
    subs.reserve(p.nvars());
    for (int i = 1; i <= p.nvars(); ++i)
        subs.push_back(Polynomial::variable(nvals, i) - Polynomial::variable(nvals, i + 1));
    Polynomial r(nvals);
    for (const auto& [e, c] : p.terms()) {
        Polynomial term = Polynomial::constant(nvals, c);
        for (int i = 0; i < p.nvars(); ++i)
            for (int k = 0; k < e[i]; ++k) term = term * subs[i];
        r += term;
    }
    return r;
}

bool divisible_by_linear(const Polynomial& p, const Polynomial& linear) {
    if (linear.is_zero() || linear.total_degree() != 1)
        throw std::invalid_argument("divisible_by_linear: divisor must be a nonzero linear form");
    if (linear.nvars() != p.nvars())
        throw std::invalid_argument("divisible_by_linear: variable count mismatch");
    if (p.is_zero()) return true;

    const auto& [dexp, dcoeff] = *linear.terms().begin();
    int lead_var = 0;
    while (dexp[lead_var] == 0) ++lead_var;

    Polynomial rem = p;
    while (!rem.is_zero()) {
        const auto& [rexp, rcoeff] = *rem.terms().begin();
        if (rexp[lead_var] == 0) return false;
        if (rcoeff % dcoeff != 0) return false;
        Exponent qexp = rexp;
        qexp[lead_var] -= 1;
        rem -= linear * Polynomial::monomial(p.nvars(), qexp, rcoeff / dcoeff);
    }
    return true;
}

TPoly tpoly_determinant(std::vector<std::vector<TPoly>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("tpoly_determinant: matrix not square");
    if (n == 0) return TPoly::constant(1);

    // Bareiss elimination; all interior divisions are exact.
    int sign = 1;
    TPoly prev = TPoly::constant(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return TPoly::zero();
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                TPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                auto q = num.divide_exact(prev);
                if (!q) throw std::logic_error("tpoly_determinant: inexact Bareiss division");
                m[i][j] = *q;
            }
            m[i][k] = TPoly::zero();
        }
        prev = m[k][k];
    }
    TPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

}  // namespace flagcalc
