#include "flagcalc/pinball.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <unordered_set>

namespace flagcalc {

namespace {

using Rational = boost::multiprecision::cpp_rational;

// sigma values restricted to one column vertex: group index of u -> value of
// the class of u at that vertex, specialized to t.  Contains exactly u <= w.
using ColumnTable = std::unordered_map<std::size_t, TPoly>;

ColumnTable column_table(const WeylGroup& g, std::size_t widx) {
    ColumnTable table;
    for (const auto& [u, value] : billey_all(g.roots(), g.element(widx)))
        table.emplace(g.index_of(u), specialize_line(value));
    return table;
}

TPoly table_value(const ColumnTable& table, std::size_t uidx) {
    auto it = table.find(uidx);
    return it == table.end() ? TPoly::zero() : it->second;
}

std::vector<std::vector<TPoly>> build_matrix(const std::vector<ColumnTable>& columns,
                                             const std::vector<std::size_t>& rolldowns) {
    std::vector<std::vector<TPoly>> m(rolldowns.size());
    for (std::size_t i = 0; i < rolldowns.size(); ++i) {
        m[i].reserve(columns.size());
        for (const ColumnTable& col : columns) m[i].push_back(table_value(col, rolldowns[i]));
    }
    return m;
}

struct PinballSearcher {
    const WeylGroup& g;
    const std::vector<std::size_t>& members;
    const std::vector<ColumnTable>& columns;
    PinballMode mode;
    std::vector<RolldownAssignment> results;
    std::vector<std::size_t> chosen;
    std::unordered_set<std::size_t> occupied;

    bool done() const { return mode == PinballMode::first && !results.empty(); }

    void complete() {
        auto matrix = build_matrix(columns, chosen);
        TPoly det = tpoly_determinant(matrix);
        if (det.is_zero()) return;
        RolldownAssignment a;
        a.fixed_points = members;
        a.rolldowns = chosen;
        a.matrix = std::move(matrix);
        a.det = std::move(det);
        results.push_back(std::move(a));
    }

    void descend(std::size_t depth) {
        if (depth == members.size()) {
            complete();
            return;
        }
        // Unoccupied vertices below the ball, grouped into length bands.
        std::vector<std::size_t> candidates;
        for (const auto& [uidx, value] : columns[depth])
            if (!occupied.count(uidx)) candidates.push_back(uidx);
        std::sort(candidates.begin(), candidates.end());

        std::size_t at = 0;
        while (at < candidates.size()) {
            int band_length = g.length(candidates[at]);
            std::size_t band_end = at;
            while (band_end < candidates.size() && g.length(candidates[band_end]) == band_length)
                ++band_end;
            std::size_t found_before = results.size();
            for (std::size_t k = at; k < band_end; ++k) {
                std::size_t u = candidates[k];
                occupied.insert(u);
                chosen.push_back(u);
                descend(depth + 1);
                chosen.pop_back();
                occupied.erase(u);
                if (done()) return;
            }
            // Balls roll as far down as possible: a higher band is explored
            // only when the entire lower band admits no completion.
            if (results.size() > found_before) return;
            at = band_end;
        }
    }
};

// Integer coefficient of the single monomial c * t^deg; requires the value
// to be exactly that monomial (or zero).
Coeff monomial_coeff(const TPoly& p, int deg) {
    for (int k = 0; k <= p.degree(); ++k) {
        if (k == deg) continue;
        if (p.coeff(k) != 0) throw std::logic_error("expected a homogeneous restriction value");
    }
    return p.coeff(deg);
}

// Unique exact solution of an overdetermined consistent system, if any.
std::optional<std::vector<Rational>> solve_unique(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> rhs) {
    const std::size_t m = a.size();
    const std::size_t k = m == 0 ? 0 : a[0].size();
    std::vector<std::size_t> pivot_row(k);
    std::size_t row = 0;
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t r = row;
        while (r < m && a[r][col] == 0) ++r;
        if (r == m) return std::nullopt;  // no pivot: solution not unique
        std::swap(a[r], a[row]);
        std::swap(rhs[r], rhs[row]);
        Rational piv = a[row][col];
        for (std::size_t c = col; c < k; ++c) a[row][c] /= piv;
        rhs[row] /= piv;
        for (std::size_t r2 = 0; r2 < m; ++r2) {
            if (r2 == row || a[r2][col] == 0) continue;
            Rational f = a[r2][col];
            for (std::size_t c = col; c < k; ++c) a[r2][c] -= f * a[row][c];
            rhs[r2] -= f * rhs[row];
        }
        pivot_row[col] = row;
        ++row;
    }
    for (std::size_t r = row; r < m; ++r)
        if (rhs[r] != 0) return std::nullopt;  // inconsistent
    std::vector<Rational> x(k);
    for (std::size_t col = 0; col < k; ++col) x[col] = rhs[pivot_row[col]];
    return x;
}

std::vector<int> checked_subset(const RootSystem& rs, std::vector<int> subset) {
    std::sort(subset.begin(), subset.end());
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (subset[i] < 1 || subset[i] > rs.rank())
            throw std::invalid_argument("subset index out of range");
        if (i > 0 && subset[i] == subset[i - 1])
            throw std::invalid_argument("subset indices must be distinct");
    }
    return subset;
}

}  // namespace

std::vector<RolldownAssignment> pinball_search(const WeylGroup& g, const FixedPointSet& fps,
                                               PinballMode mode) {
    if (fps.members.empty()) throw std::invalid_argument("pinball_search: empty fixed-point set");
    std::vector<std::size_t> members = fps.members;
    std::sort(members.begin(), members.end());  // canonical order = increasing length
    std::vector<ColumnTable> columns;
    columns.reserve(members.size());
    for (std::size_t widx : members) columns.push_back(column_table(g, widx));

    PinballSearcher searcher{g, members, columns, mode, {}, {}, {}};
    searcher.descend(0);
    return std::move(searcher.results);
}

std::pair<std::vector<std::vector<TPoly>>, TPoly> module_basis_matrix(
    const WeylGroup& g, const std::vector<std::size_t>& fixed_points,
    const std::vector<std::size_t>& rolldowns) {
    if (fixed_points.size() != rolldowns.size())
        throw std::invalid_argument("module_basis_matrix: size mismatch");
    std::vector<ColumnTable> columns;
    columns.reserve(fixed_points.size());
    for (std::size_t widx : fixed_points) columns.push_back(column_table(g, widx));
    auto matrix = build_matrix(columns, rolldowns);
    TPoly det = tpoly_determinant(matrix);
    return {std::move(matrix), std::move(det)};
}

WeylElement subset_product(const RootSystem& rs, const std::vector<int>& subset) {
    auto sorted = checked_subset(rs, subset);
    WeylElement w = identity_element(rs);
    for (int i : sorted) w = product(w, simple_reflection(rs, i));
    if (length(rs, w) != static_cast<int>(sorted.size()))
        throw std::logic_error("subset_product: product of distinct generators not reduced");
    return w;
}

ChevalleyMonkResult chevalley_monk_expand(const WeylGroup& g, int i,
                                          const std::vector<int>& subset) {
    const RootSystem& rs = g.roots();
    if (i < 1 || i > rs.rank())
        throw std::invalid_argument("chevalley_monk_expand: index out of range");
    auto setA = checked_subset(rs, subset);
    const int degA = static_cast<int>(setA.size());

    std::vector<std::vector<int>> covers;
    for (int j = 1; j <= rs.rank(); ++j) {
        if (std::find(setA.begin(), setA.end(), j) != setA.end()) continue;
        auto b = setA;
        b.insert(std::lower_bound(b.begin(), b.end(), j), j);
        covers.push_back(std::move(b));
    }

    FixedPointSet peterson = peterson_fixed_points(g);
    const std::size_t si_idx = g.index_of(simple_reflection(rs, i));
    const std::size_t vA_idx = g.index_of(subset_product(rs, setA));
    std::vector<std::size_t> vB_idx;
    for (const auto& b : covers) vB_idx.push_back(g.index_of(subset_product(rs, b)));

    // One equation per fixed point: every restriction value is an integer
    // multiple of a fixed power of t, so the solve happens over the integers.
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> rhs;
    for (std::size_t widx : peterson.members) {
        ColumnTable col = column_table(g, widx);
        Coeff si_c = monomial_coeff(table_value(col, si_idx), 1);
        Coeff vA_c = monomial_coeff(table_value(col, vA_idx), degA);
        std::vector<Rational> row;
        row.push_back(Rational(vA_c));
        for (std::size_t bk = 0; bk < covers.size(); ++bk)
            row.push_back(Rational(monomial_coeff(table_value(col, vB_idx[bk]), degA + 1)));
        a.push_back(std::move(row));
        rhs.push_back(Rational(si_c * vA_c));
    }

    auto solution = solve_unique(std::move(a), std::move(rhs));
    if (!solution)
        throw std::runtime_error("chevalley_monk_expand: identity has no unique exact solution");
    ChevalleyMonkResult result;
    auto to_integer = [](const Rational& q) {
        if (boost::multiprecision::denominator(q) != 1)
            throw std::runtime_error("chevalley_monk_expand: non-integer coefficient");
        Coeff v = boost::multiprecision::numerator(q);
        if (v < 0) throw std::runtime_error("chevalley_monk_expand: negative coefficient");
        return v;
    };
    result.diagonal = to_integer((*solution)[0]);
    for (std::size_t bk = 0; bk < covers.size(); ++bk)
        result.covers[covers[bk]] = to_integer((*solution)[bk + 1]);
    return result;
}

Coeff giambelli_constant(const WeylGroup& g, const std::vector<int>& subset) {
    const RootSystem& rs = g.roots();
    auto setA = checked_subset(rs, subset);
    if (setA.empty()) throw std::invalid_argument("giambelli_constant: subset must be nonempty");
    const int degA = static_cast<int>(setA.size());

    FixedPointSet peterson = peterson_fixed_points(g);
    const std::size_t vA_idx = g.index_of(subset_product(rs, setA));
    std::vector<std::size_t> si_idx;
    for (int i : setA) si_idx.push_back(g.index_of(simple_reflection(rs, i)));

    std::optional<Coeff> constant;
    for (std::size_t widx : peterson.members) {
        ColumnTable col = column_table(g, widx);
        Coeff prod = 1;
        for (std::size_t k : si_idx) prod *= monomial_coeff(table_value(col, k), 1);
        Coeff base = monomial_coeff(table_value(col, vA_idx), degA);
        if (base == 0) {
            if (prod != 0)
                throw std::runtime_error("giambelli_constant: quotient undefined at a fixed point");
            continue;
        }
        if (prod % base != 0)
            throw std::runtime_error("giambelli_constant: non-integer quotient");
        Coeff c = prod / base;
        if (constant && *constant != c)
            throw std::runtime_error("giambelli_constant: quotient is not constant");
        constant = c;
    }
    if (!constant || *constant <= 0)
        throw std::runtime_error("giambelli_constant: constant missing or not positive");
    return *constant;
}

}  // namespace flagcalc
