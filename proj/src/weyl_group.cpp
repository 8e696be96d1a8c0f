#include "flagcalc/weyl_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace flagcalc {

WeylElement identity_element(const RootSystem& rs) {
    WeylElement w;
    w.m = IMat::Identity(rs.rank(), rs.rank());
    w.minv = w.m;
    return w;
}

WeylElement simple_reflection(const RootSystem& rs, int i) {
    if (i < 1 || i > rs.rank()) throw std::invalid_argument("simple_reflection: index out of range");
    const int n = rs.rank();
    WeylElement w;
    w.m = IMat::Identity(n, n);
    for (int j = 1; j <= n; ++j) {
        IVec img = rs.reflect_simple(i, rs.simple_root(j));
        w.m.col(j - 1) = img;
    }
    w.minv = w.m;  // involution
    return w;
}

WeylElement product(const WeylElement& a, const WeylElement& b) {
    WeylElement w;
    w.m = a.m * b.m;
    w.minv = b.minv * a.minv;
    return w;
}

WeylElement inverse(const WeylElement& w) { return WeylElement{w.minv, w.m}; }

IVec apply(const WeylElement& w, const IVec& v) { return w.m * v; }

IVec apply_inverse(const WeylElement& w, const IVec& v) { return w.minv * v; }

std::vector<Int> element_key(const WeylElement& w) {
    return std::vector<Int>(w.m.data(), w.m.data() + w.m.size());
}

WeylElement element_from_word(const RootSystem& rs, const Word& word) {
    WeylElement w = identity_element(rs);
    for (int letter : word) {
        if (letter < 1 || letter > rs.rank())
            throw std::invalid_argument("element_from_word: letter out of range");
        w = product(w, simple_reflection(rs, letter));
    }
    return w;
}

int length(const RootSystem& rs, const WeylElement& w) {
    int len = 0;
    for (const IVec& alpha : rs.positive_roots())
        if (rs.is_negative(w.minv * alpha)) ++len;
    return len;
}

bool is_left_descent(const RootSystem& rs, const WeylElement& w, int i) {
    // l(s_i w) < l(w) iff w^{-1}(alpha_i) is negative.
    IVec v = w.minv.col(i - 1);
    return rs.is_negative(v);
}

bool is_right_descent(const RootSystem& rs, const WeylElement& w, int i) {
    IVec v = w.m.col(i - 1);
    return rs.is_negative(v);
}

Word one_reduced_word(const RootSystem& rs, const WeylElement& w) {
    Word word;
    WeylElement cur = w;
    WeylElement id = identity_element(rs);
    while (cur != id) {
        int descent = 0;
        for (int i = 1; i <= rs.rank(); ++i) {
            if (is_left_descent(rs, cur, i)) {
                descent = i;
                break;
            }
        }
        if (descent == 0) throw std::logic_error("one_reduced_word: no descent on non-identity element");
        word.push_back(descent);
        cur = product(simple_reflection(rs, descent), cur);
    }
    return word;
}

namespace {

void collect_reduced_words(const RootSystem& rs, const WeylElement& w, Word& prefix,
                           std::vector<Word>& out) {
    bool any = false;
    for (int i = 1; i <= rs.rank(); ++i) {
        if (!is_left_descent(rs, w, i)) continue;
        any = true;
        prefix.push_back(i);
        collect_reduced_words(rs, product(simple_reflection(rs, i), w), prefix, out);
        prefix.pop_back();
    }
    if (!any) out.push_back(prefix);  // reached the identity
}

}  // namespace

std::vector<Word> all_reduced_words(const RootSystem& rs, const WeylElement& w) {
    std::vector<Word> out;
    Word prefix;
    collect_reduced_words(rs, w, prefix, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IVec> inversion_set(const RootSystem& rs, const WeylElement& w) {
    std::vector<IVec> out;
    for (const IVec& alpha : rs.positive_roots())
        if (rs.is_negative(w.minv * alpha)) out.push_back(alpha);
    return out;
}

bool bruhat_leq(const RootSystem& rs, const WeylElement& v, const WeylElement& w) {
    int lv = length(rs, v), lw = length(rs, w);
    WeylElement vv = v, ww = w;
    while (true) {
        if (lv == 0) return true;
        if (lv > lw) return false;
        if (lv == lw) return vv == ww;
        int i = 0;
        for (int k = 1; k <= rs.rank(); ++k) {
            if (is_left_descent(rs, ww, k)) {
                i = k;
                break;
            }
        }
        WeylElement si = simple_reflection(rs, i);
        ww = product(si, ww);
        --lw;
        if (is_left_descent(rs, vv, i)) {
            vv = product(si, vv);
            --lv;
        }
    }
}

WeylElement reflection_of_root(const RootSystem& rs, const IVec& alpha) {
    int idx = rs.positive_root_index(alpha);
    if (idx < 0) throw std::invalid_argument("reflection_of_root: not a positive root");
    const auto& [word, j] = rs.conjugation_of_root(idx);
    WeylElement u = element_from_word(rs, word);
    WeylElement sj = simple_reflection(rs, j);
    return product(product(u, sj), inverse(u));
}

WeylGroup::WeylGroup(RootSystem rs, std::size_t max_size) : rs_(std::move(rs)) {
    const int n = rs_.rank();
    std::vector<WeylElement> gens;
    gens.reserve(n);
    for (int i = 1; i <= n; ++i) gens.push_back(simple_reflection(rs_, i));

    std::map<std::vector<Int>, std::size_t> seen;
    std::vector<WeylElement> found;
    std::deque<std::size_t> frontier;
    WeylElement id = identity_element(rs_);
    found.push_back(id);
    seen.emplace(element_key(id), 0);
    frontier.push_back(0);
    while (!frontier.empty()) {
        std::size_t at = frontier.front();
        frontier.pop_front();
        for (int i = 0; i < n; ++i) {
            WeylElement next = product(found[at], gens[i]);
            auto key = element_key(next);
            if (seen.count(key)) continue;
            if (found.size() >= max_size)
                throw std::domain_error("Weyl group enumeration exceeded the cap of " +
                                        std::to_string(max_size) + " elements");
            seen.emplace(std::move(key), found.size());
            found.push_back(std::move(next));
            frontier.push_back(found.size() - 1);
        }
    }

    std::vector<Word> words(found.size());
    std::vector<int> lens(found.size());
    for (std::size_t k = 0; k < found.size(); ++k) {
        words[k] = one_reduced_word(rs_, found[k]);
        lens[k] = static_cast<int>(words[k].size());
    }
    std::vector<std::size_t> order(found.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (lens[a] != lens[b]) return lens[a] < lens[b];
        return words[a] < words[b];
    });

    elements_.reserve(found.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        elements_.push_back(found[order[pos]]);
        words_.push_back(words[order[pos]]);
        lengths_.push_back(lens[order[pos]]);
        index_.emplace(element_key(elements_.back()), pos);
    }
}

std::size_t WeylGroup::index_of(const WeylElement& w) const {
    auto it = index_.find(element_key(w));
    if (it == index_.end()) throw std::invalid_argument("index_of: element not in group");
    return it->second;
}

std::vector<int> WeylGroup::one_line(std::size_t idx) const {
    if (!is_type_a()) throw std::domain_error("one_line: only available for family A");
    return one_line_of_word(rank() + 1, canonical_word(idx));
}

std::vector<int> one_line_of_word(int n_points, const Word& word) {
    std::vector<int> perm(n_points);
    std::iota(perm.begin(), perm.end(), 1);
    // Right-multiplying by s_b swaps the entries in positions b, b+1.
    for (int b : word) std::swap(perm[b - 1], perm[b]);
    return perm;
}

WeylElement element_from_one_line(const RootSystem& rs, const std::vector<int>& perm) {
    const int n = rs.rank();
    if (static_cast<int>(perm.size()) != n + 1)
        throw std::invalid_argument("element_from_one_line: size must be rank+1");
    std::vector<int> pos(n + 2, 0);
    for (int j = 1; j <= n + 1; ++j) {
        int v = perm[j - 1];
        if (v < 1 || v > n + 1 || pos[v] != 0)
            throw std::invalid_argument("element_from_one_line: not a permutation");
        pos[v] = j;
    }
    // w(alpha_j) = e_{w(j)} - e_{w(j+1)} written in simple-root coordinates.
    auto column = [n](int a, int b) {
        IVec v = IVec::Zero(n);
        if (a < b)
            for (int i = a; i < b; ++i) v(i - 1) = 1;
        else
            for (int i = b; i < a; ++i) v(i - 1) = -1;
        return v;
    };
    WeylElement w;
    w.m = IMat::Zero(n, n);
    w.minv = IMat::Zero(n, n);
    for (int j = 1; j <= n; ++j) {
        w.m.col(j - 1) = column(perm[j - 1], perm[j]);
        w.minv.col(j - 1) = column(pos[j], pos[j + 1]);
    }
    return w;
}

BruhatGraph bruhat_graph(const WeylGroup& g) {
    BruhatGraph graph;
    graph.vertex_count = g.size();
    const RootSystem& rs = g.roots();
    for (const IVec& alpha : rs.positive_roots()) {
        WeylElement refl = reflection_of_root(rs, alpha);
        for (std::size_t idx = 0; idx < g.size(); ++idx) {
            std::size_t oidx = g.index_of(product(refl, g.element(idx)));
            if (idx < oidx) graph.edges.push_back({idx, oidx, alpha});
        }
    }
    return graph;
}

}  // namespace flagcalc
