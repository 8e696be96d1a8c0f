#include "flagcalc/billey.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace flagcalc {

Polynomial root_polynomial(const RootSystem& rs, const IVec& alpha) {
    std::vector<long long> coords(alpha.data(), alpha.data() + alpha.size());
    (void)rs;
    return Polynomial::linear_form(coords);
}

std::vector<IVec> roots_of_word(const RootSystem& rs, const Word& word) {
    WeylElement prefix = identity_element(rs);
    std::vector<IVec> roots;
    roots.reserve(word.size());
    for (int letter : word) {
        if (letter < 1 || letter > rs.rank())
            throw std::invalid_argument("roots_of_word: letter out of range");
        IVec r = apply(prefix, rs.simple_root(letter));
        if (!rs.is_positive(r)) throw std::invalid_argument("roots_of_word: word is not reduced");
        roots.push_back(r);
        prefix = product(prefix, simple_reflection(rs, letter));
    }
    if (length(rs, prefix) != static_cast<int>(word.size()))
        throw std::invalid_argument("roots_of_word: word is not reduced");
    return roots;
}

namespace {

struct DpState {
    WeylElement element;
    int length;
    Polynomial value;
};

}  // namespace

std::vector<std::pair<WeylElement, Polynomial>> billey_all_for_word(const RootSystem& rs,
                                                                    const Word& word) {
    const std::vector<IVec> roots = roots_of_word(rs, word);
    const int n = rs.rank();

    // Partial subword products u with their accumulated polynomials; choosing
    // position j is allowed only when it lengthens u, which keeps every
    // chosen subword reduced.
    std::map<std::vector<Int>, DpState> state;
    WeylElement id = identity_element(rs);
    state.emplace(element_key(id), DpState{id, 0, Polynomial::constant(n, 1)});

    for (std::size_t j = 0; j < word.size(); ++j) {
        Polynomial r = root_polynomial(rs, roots[j]);
        WeylElement sj = simple_reflection(rs, word[j]);
        std::vector<std::pair<std::vector<Int>, DpState>> additions;
        for (const auto& [key, st] : state) {
            WeylElement next = product(st.element, sj);
            int next_len = length(rs, next);
            if (next_len <= st.length) continue;
            additions.push_back({element_key(next), DpState{next, next_len, st.value * r}});
        }
        for (auto& [key, add] : additions) {
            auto it = state.find(key);
            if (it == state.end())
                state.emplace(std::move(key), std::move(add));
            else
                it->second.value += add.value;
        }
    }

    std::vector<std::tuple<Word, WeylElement, Polynomial>> decorated;
    decorated.reserve(state.size());
    for (auto& [key, st] : state)
        if (!st.value.is_zero())
            decorated.push_back({one_reduced_word(rs, st.element), st.element, std::move(st.value)});
    std::sort(decorated.begin(), decorated.end(), [](const auto& a, const auto& b) {
        const Word& wa = std::get<0>(a);
        const Word& wb = std::get<0>(b);
        if (wa.size() != wb.size()) return wa.size() < wb.size();
        return wa < wb;
    });
    std::vector<std::pair<WeylElement, Polynomial>> out;
    out.reserve(decorated.size());
    for (auto& [word_v, elem, value] : decorated) out.push_back({elem, std::move(value)});
    return out;
}

std::vector<std::pair<WeylElement, Polynomial>> billey_all(const RootSystem& rs,
                                                           const WeylElement& w) {
    return billey_all_for_word(rs, one_reduced_word(rs, w));
}

Polynomial billey(const RootSystem& rs, const WeylElement& v, const WeylElement& w) {
    for (const auto& [u, value] : billey_all(rs, w))
        if (u == v) return value;
    return Polynomial::zero(rs.rank());
}

GKMClass schubert_class(const WeylGroup& g, const WeylElement& v) {
    GKMClass cls;
    cls.values.assign(g.size(), Polynomial::zero(g.rank()));
    for (std::size_t idx = 0; idx < g.size(); ++idx) {
        for (const auto& [u, value] : billey_all(g.roots(), g.element(idx))) {
            if (u == v) {
                cls.values[idx] = value;
                break;
            }
        }
    }
    return cls;
}

std::vector<GKMClass> all_schubert_classes(const WeylGroup& g) {
    std::vector<GKMClass> classes(g.size());
    for (auto& cls : classes) cls.values.assign(g.size(), Polynomial::zero(g.rank()));
    for (std::size_t widx = 0; widx < g.size(); ++widx) {
        for (const auto& [v, value] : billey_all(g.roots(), g.element(widx)))
            classes[g.index_of(v)].values[widx] = value;
    }
    return classes;
}

GkmCheckResult gkm_check(const WeylGroup& g, const BruhatGraph& graph, const GKMClass& cls) {
    if (cls.values.size() != g.size())
        throw std::invalid_argument("gkm_check: class must be defined on the whole group");
    GkmCheckResult result;
    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
        const BruhatEdge& edge = graph.edges[e];
        Polynomial diff = cls.values[edge.a] - cls.values[edge.b];
        if (!divisible_by_linear(diff, root_polynomial(g.roots(), edge.label))) {
            result.ok = false;
            result.violated_edges.push_back(e);
        }
    }
    return result;
}

GkmCheckResult gkm_check(const WeylGroup& g, const GKMClass& cls) {
    return gkm_check(g, bruhat_graph(g), cls);
}

KumarResult kumar_smooth(const RootSystem& rs, const WeylElement& v, const WeylElement& w) {
    if (!bruhat_leq(rs, v, w))
        throw std::invalid_argument("kumar_smooth: requires v <= w in Bruhat order");
    KumarResult res;
    res.lhs = billey(rs, v, w);
    res.rhs = Polynomial::constant(rs.rank(), 1);
    for (const IVec& alpha : rs.positive_roots()) {
        WeylElement saw = product(reflection_of_root(rs, alpha), w);
        if (!bruhat_leq(rs, v, saw)) res.rhs = res.rhs * root_polynomial(rs, alpha);
    }
    res.smooth = (res.lhs == res.rhs);
    return res;
}

}  // namespace flagcalc
