#include "flagcalc/grassmannian.hpp"

#include <algorithm>
#include <numeric>

namespace flagcalc {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] < parts[i + 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    for (int v : parts)
        if (v < 0) throw std::invalid_argument("Partition: parts must be nonnegative");
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
}

int Partition::part(int row) const {
    if (row < 1) throw std::invalid_argument("Partition::part: row must be positive");
    return row <= rows() ? parts[row - 1] : 0;
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool Partition::contains(const Partition& other) const {
    for (int r = 1; r <= other.rows(); ++r)
        if (other.part(r) > part(r)) return false;
    return true;
}

bool Partition::fits_in_rectangle(int k, int m) const {
    return rows() <= k && (parts.empty() || parts[0] <= m);
}

bool Partition::has_box(int row, int col) const {
    return row >= 1 && col >= 1 && col <= part(row);
}

MarkedDiagram initial_marking(const Partition& lambda, const Partition& mu) {
    if (!mu.contains(lambda))
        throw std::invalid_argument("initial_marking: lambda must fit inside mu");
    MarkedDiagram d;
    d.shape = mu;
    for (int r = 1; r <= lambda.rows(); ++r)
        for (int c = 1; c <= lambda.part(r); ++c) d.marks.insert({r, c});
    return d;
}

std::vector<MarkedDiagram> excite_moves(const MarkedDiagram& d) {
    std::vector<MarkedDiagram> out;
    for (const auto& [r, c] : d.marks) {
        bool east = d.shape.has_box(r, c + 1) && !d.marks.count({r, c + 1});
        bool south = d.shape.has_box(r + 1, c) && !d.marks.count({r + 1, c});
        bool southeast = d.shape.has_box(r + 1, c + 1) && !d.marks.count({r + 1, c + 1});
        if (!(east && south && southeast)) continue;
        MarkedDiagram next = d;
        next.marks.erase({r, c});
        next.marks.insert({r + 1, c + 1});
        out.push_back(std::move(next));
    }
    return out;
}

std::vector<MarkedDiagram> enumerate_excited(const Partition& lambda, const Partition& mu) {
    std::set<std::set<std::pair<int, int>>> seen;
    std::vector<MarkedDiagram> out;
    std::vector<MarkedDiagram> frontier{initial_marking(lambda, mu)};
    seen.insert(frontier.front().marks);
    auto weight_sum = [](const MarkedDiagram& d) {
        int s = 0;
        for (const auto& [r, c] : d.marks) s += r + c;
        return s;
    };
    while (!frontier.empty()) {
        MarkedDiagram d = std::move(frontier.back());
        frontier.pop_back();
        int before = weight_sum(d);
        for (MarkedDiagram& next : excite_moves(d)) {
            if (weight_sum(next) <= before)
                throw std::logic_error("enumerate_excited: move did not increase mark depth");
            if (seen.insert(next.marks).second) frontier.push_back(std::move(next));
        }
        out.push_back(std::move(d));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<int, int> box_weight(const Partition& mu, int row, int col, int k) {
    if (!mu.has_box(row, col)) throw std::invalid_argument("box_weight: box outside the shape");
    if (k == 0) k = mu.rows();
    if (k < mu.rows()) throw std::invalid_argument("box_weight: ambient rows fewer than mu's rows");
    int shorter_rows = 0;
    for (int r = 1; r <= k; ++r)
        if (mu.part(r) < col) ++shorter_rows;
    int i = col + shorter_rows;
    int j = (k + 1 - row) + mu.part(row);
    return {i, j};
}

Polynomial excited_diagram_polynomial(const Partition& lambda, const Partition& mu, int k,
                                      int nvars) {
    if (k == 0) k = mu.rows();
    if (nvars == 0) nvars = k + (mu.parts.empty() ? 0 : mu.parts[0]);
    if (nvars < 1) nvars = 1;
    Polynomial sum(nvars);
    for (const MarkedDiagram& d : enumerate_excited(lambda, mu)) {
        Polynomial term = Polynomial::constant(nvars, 1);
        for (const auto& [r, c] : d.marks) {
            auto [i, j] = box_weight(mu, r, c, k);
            if (j > nvars)
                throw std::invalid_argument("excited_diagram_polynomial: too few value variables");
            term = term * (Polynomial::variable(nvars, i) - Polynomial::variable(nvars, j));
        }
        sum += term;
    }
    return sum;
}

std::vector<int> grassmannian_permutation(const Partition& lambda, int k, int n) {
    if (k < 0 || n < 1 || k > n)
        throw std::invalid_argument("grassmannian_permutation: need 0 <= k <= n");
    if (!lambda.fits_in_rectangle(k, n - k))
        throw std::invalid_argument("grassmannian_permutation: lambda outside the k x (n-k) box");
    std::vector<int> perm(n, 0);
    std::vector<bool> used(n + 1, false);
    for (int i = 1; i <= k; ++i) {
        int v = i + lambda.part(k + 1 - i);
        perm[i - 1] = v;
        used[v] = true;
    }
    int next = 1;
    for (int j = k + 1; j <= n; ++j) {
        while (used[next]) ++next;
        perm[j - 1] = next;
        used[next] = true;
    }

    int inversions = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (perm[a] > perm[b]) ++inversions;
    if (inversions != lambda.size())
        throw std::logic_error("grassmannian_permutation: length check failed");
    for (int a = 1; a < n; ++a)
        if (perm[a - 1] > perm[a] && a != k)
            throw std::logic_error("grassmannian_permutation: descent outside position k");
    return perm;
}

bool excited_diagrams_match_schubert(const Partition& lambda, const Partition& mu, int k, int n) {
    if (!mu.contains(lambda))
        throw std::invalid_argument("excited_diagrams_match_schubert: lambda must fit inside mu");
    if (!mu.fits_in_rectangle(k, n - k))
        throw std::invalid_argument("excited_diagrams_match_schubert: mu outside the k x (n-k) box");
    RootSystem rs = build_root_system(CartanSpec::named('A', n - 1));
    WeylElement v = element_from_one_line(rs, grassmannian_permutation(lambda, k, n));
    WeylElement w = element_from_one_line(rs, grassmannian_permutation(mu, k, n));
    Polynomial lhs = specialize_tvars(billey(rs, v, w), n);
    Polynomial rhs = excited_diagram_polynomial(lambda, mu, k, n);
    return lhs == rhs;
}

}  // namespace flagcalc
