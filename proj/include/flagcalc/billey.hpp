#pragma once

#include "flagcalc/polynomial.hpp"
#include "flagcalc/weyl_group.hpp"

#include <utility>
#include <vector>

namespace flagcalc {

// Linear form of a root vector in the simple-root variables.
Polynomial root_polynomial(const RootSystem& rs, const IVec& alpha);

// The roots r_j = b_1 b_2 ... b_{j-1}(alpha_{b_j}) attached to a reduced word.
// Throws std::invalid_argument when the word is not reduced.
std::vector<IVec> roots_of_word(const RootSystem& rs, const Word& word);

// sigma_v(w): sum over reduced subwords of a fixed reduced word for w that
// multiply to v, each contributing the product of its roots r_j.
Polynomial billey(const RootSystem& rs, const WeylElement& v, const WeylElement& w);

// All nonzero sigma_v(w) at once, computed by one dynamic-programming sweep
// over an explicit reduced word.  Result is sorted by (length, canonical
// word) of v and contains exactly the v with sigma_v(w) != 0.
std::vector<std::pair<WeylElement, Polynomial>> billey_all_for_word(const RootSystem& rs,
                                                                    const Word& word);
std::vector<std::pair<WeylElement, Polynomial>> billey_all(const RootSystem& rs,
                                                           const WeylElement& w);

// A class in the fixed-point presentation: one polynomial per group element,
// indexed like the group's canonical order.
struct GKMClass {
    std::vector<Polynomial> values;
};

GKMClass schubert_class(const WeylGroup& g, const WeylElement& v);
// One table per group element v, indexed like the group.
std::vector<GKMClass> all_schubert_classes(const WeylGroup& g);

struct GkmCheckResult {
    bool ok = true;
    // Indices into the graph's edge list whose difference fails divisibility.
    std::vector<std::size_t> violated_edges;
};

GkmCheckResult gkm_check(const WeylGroup& g, const BruhatGraph& graph, const GKMClass& cls);
GkmCheckResult gkm_check(const WeylGroup& g, const GKMClass& cls);

struct KumarResult {
    bool smooth = false;
    Polynomial lhs;  // sigma_v(w)
    Polynomial rhs;  // product of alpha over { alpha in Phi+ : v <= s_alpha w fails }
};

// Smoothness of the point wB in the opposite cell closure indexed by v.
// Requires v <= w.
KumarResult kumar_smooth(const RootSystem& rs, const WeylElement& v, const WeylElement& w);

}  // namespace flagcalc
