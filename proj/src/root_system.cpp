#include "flagcalc/root_system.hpp"

#include <algorithm>
#include <deque>

namespace flagcalc {

namespace {

IMat chain_matrix(int n) {
    IMat m = IMat::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = 2;
        if (i + 1 < n) {
            m(i, i + 1) = -1;
            m(i + 1, i) = -1;
        }
    }
    return m;
}

void validate_cartan(const IMat& m) {
    if (m.rows() == 0 || m.rows() != m.cols())
        throw std::invalid_argument("Cartan matrix must be square and nonempty");
    const int n = static_cast<int>(m.rows());
    for (int i = 0; i < n; ++i) {
        if (m(i, i) != 2)
            throw std::invalid_argument("Cartan matrix diagonal entries must equal 2");
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (m(i, j) > 0)
                throw std::invalid_argument("Cartan matrix off-diagonal entries must be <= 0");
            if ((m(i, j) == 0) != (m(j, i) == 0))
                throw std::invalid_argument("Cartan matrix zero pattern must be symmetric");
        }
    }
}

std::vector<Int> coords_of(const IVec& v) {
    return std::vector<Int>(v.data(), v.data() + v.size());
}

Int height(const IVec& v) { return v.sum(); }

// Height ascending; within a height, earlier simple-root coordinates first.
bool canonical_root_less(const IVec& a, const IVec& b) {
    Int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    for (int i = 0; i < a.size(); ++i)
        if (a(i) != b(i)) return a(i) > b(i);
    return false;
}

}  // namespace

CartanSpec CartanSpec::named(char family, int rank) {
    CartanSpec s;
    s.family = family;
    s.rank = rank;
    switch (family) {
        case 'A':
            if (rank < 1) throw std::invalid_argument("family A requires rank >= 1");
            s.matrix = chain_matrix(rank);
            break;
        case 'B':
            if (rank < 2) throw std::invalid_argument("family B requires rank >= 2");
            s.matrix = chain_matrix(rank);
            s.matrix(rank - 1, rank - 2) = -2;
            break;
        case 'C':
            if (rank < 2) throw std::invalid_argument("family C requires rank >= 2");
            s.matrix = chain_matrix(rank);
            s.matrix(rank - 2, rank - 1) = -2;
            break;
        case 'D':
            if (rank < 3) throw std::invalid_argument("family D requires rank >= 3");
            s.matrix = chain_matrix(rank - 1);
            s.matrix.conservativeResize(rank, rank);
            for (int i = 0; i < rank; ++i) {
                s.matrix(rank - 1, i) = 0;
                s.matrix(i, rank - 1) = 0;
            }
            s.matrix(rank - 1, rank - 1) = 2;
            s.matrix(rank - 3, rank - 1) = -1;
            s.matrix(rank - 1, rank - 3) = -1;
            break;
        case 'F':
            if (rank != 4) throw std::invalid_argument("family F requires rank 4");
            s.matrix = chain_matrix(4);
            s.matrix(1, 2) = -2;
            break;
        case 'G':
            if (rank != 2) throw std::invalid_argument("family G requires rank 2");
            s.matrix = IMat::Zero(2, 2);
            s.matrix << 2, -3, -1, 2;
            break;
        default:
            throw std::invalid_argument(std::string("unknown family '") + family + "'");
    }
    validate_cartan(s.matrix);
    return s;
}

CartanSpec CartanSpec::from_matrix(const IMat& m) {
    validate_cartan(m);
    CartanSpec s;
    s.family = 0;
    s.rank = static_cast<int>(m.rows());
    s.matrix = m;
    return s;
}

IVec RootSystem::simple_root(int i) const {
    if (i < 1 || i > rank_) throw std::invalid_argument("simple_root: index out of range");
    IVec v = IVec::Zero(rank_);
    v(i - 1) = 1;
    return v;
}

Int RootSystem::pairing(const IVec& v, int i) const {
    if (i < 1 || i > rank_) throw std::invalid_argument("pairing: index out of range");
    return spec_.matrix.row(i - 1).dot(v);
}

IVec RootSystem::reflect_simple(int i, const IVec& v) const {
    IVec r = v;
    r(i - 1) -= pairing(v, i);
    return r;
}

bool RootSystem::is_positive(const IVec& v) const {
    bool nonzero = false;
    for (int i = 0; i < v.size(); ++i) {
        if (v(i) < 0) return false;
        if (v(i) > 0) nonzero = true;
    }
    return nonzero;
}

bool RootSystem::is_negative(const IVec& v) const { return is_positive(-v); }

int RootSystem::positive_root_index(const IVec& v) const {
    auto key = coords_of(v);
    auto it = std::lower_bound(index_.begin(), index_.end(), key,
                               [](const auto& a, const auto& b) { return a.first < b; });
    if (it == index_.end() || it->first != key) return -1;
    return it->second;
}

const std::pair<std::vector<int>, int>& RootSystem::conjugation_of_root(int root_index) const {
    return conjugations_.at(root_index);
}

RootSystem build_root_system(const CartanSpec& spec, std::size_t max_positive_roots) {
    validate_cartan(spec.matrix);
    RootSystem rs;
    rs.spec_ = spec;
    rs.rank_ = static_cast<int>(spec.matrix.rows());
    const int n = rs.rank_;

    // Breadth-first closure of the simple roots under simple reflections,
    // keeping positive vectors.  Each discovered root remembers a word u and
    // simple index j with root = u(alpha_j).
    std::vector<IVec> roots;
    std::vector<std::pair<std::vector<int>, int>> provenance;
    std::vector<std::pair<std::vector<Int>, int>> seen;
    auto find_seen = [&seen](const std::vector<Int>& key) {
        auto it = std::lower_bound(seen.begin(), seen.end(), key,
                                   [](const auto& a, const auto& b) { return a.first < b; });
        return (it != seen.end() && it->first == key) ? it->second : -1;
    };
    auto insert_seen = [&seen](const std::vector<Int>& key, int pos) {
        auto it = std::lower_bound(seen.begin(), seen.end(), key,
                                   [](const auto& a, const auto& b) { return a.first < b; });
        seen.insert(it, {key, pos});
    };

    std::deque<int> frontier;
    for (int i = 1; i <= n; ++i) {
        IVec alpha = rs.simple_root(i);
        roots.push_back(alpha);
        provenance.push_back({{}, i});
        insert_seen(coords_of(alpha), static_cast<int>(roots.size()) - 1);
        frontier.push_back(static_cast<int>(roots.size()) - 1);
    }

    while (!frontier.empty()) {
        int idx = frontier.front();
        frontier.pop_front();
        IVec base = roots[idx];
        for (int i = 1; i <= n; ++i) {
            IVec img = rs.reflect_simple(i, base);
            if (!rs.is_positive(img)) continue;
            auto key = coords_of(img);
            if (find_seen(key) >= 0) continue;
            if (roots.size() >= max_positive_roots)
                throw std::domain_error(
                    "root enumeration exceeded the cap of " + std::to_string(max_positive_roots) +
                    " positive roots; the Cartan matrix is not of finite type");
            roots.push_back(img);
            auto word = provenance[idx].first;
            word.insert(word.begin(), i);
            provenance.push_back({std::move(word), provenance[idx].second});
            insert_seen(key, static_cast<int>(roots.size()) - 1);
            frontier.push_back(static_cast<int>(roots.size()) - 1);
        }
    }

    std::vector<int> order(roots.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&roots](int a, int b) { return canonical_root_less(roots[a], roots[b]); });

    rs.positive_roots_.reserve(roots.size());
    rs.conjugations_.reserve(roots.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        rs.positive_roots_.push_back(roots[order[pos]]);
        rs.conjugations_.push_back(provenance[order[pos]]);
        rs.index_.push_back({coords_of(roots[order[pos]]), static_cast<int>(pos)});
    }
    std::sort(rs.index_.begin(), rs.index_.end());
    return rs;
}

std::size_t classical_positive_root_count(char family, int rank) {
    std::size_t n = static_cast<std::size_t>(rank);
    switch (family) {
        case 'A': return n * (n + 1) / 2;
        case 'B':
        case 'C': return n * n;
        case 'D': return n * (n - 1);
        case 'G': return 6;
        case 'F': return 24;
        default: throw std::invalid_argument("unknown family");
    }
}

}  // namespace flagcalc
