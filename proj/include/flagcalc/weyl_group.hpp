#pragma once

#include "flagcalc/root_system.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace flagcalc {

// Group element acting on the root lattice; column j of `m` is the image of
// alpha_{j+1} in simple-root coordinates.  The inverse matrix is carried so
// that descent tests are column reads.
struct WeylElement {
    IMat m;
    IMat minv;

    bool operator==(const WeylElement& o) const { return m == o.m; }
    bool operator!=(const WeylElement& o) const { return !(*this == o); }
};

using Word = std::vector<int>;  // simple indices, 1-based

WeylElement identity_element(const RootSystem& rs);
WeylElement simple_reflection(const RootSystem& rs, int i);
WeylElement product(const WeylElement& a, const WeylElement& b);
WeylElement inverse(const WeylElement& w);
IVec apply(const WeylElement& w, const IVec& v);
IVec apply_inverse(const WeylElement& w, const IVec& v);

// Flattened matrix entries, usable as an ordered map key.
std::vector<Int> element_key(const WeylElement& w);

WeylElement element_from_word(const RootSystem& rs, const Word& word);
int length(const RootSystem& rs, const WeylElement& w);
bool is_left_descent(const RootSystem& rs, const WeylElement& w, int i);
bool is_right_descent(const RootSystem& rs, const WeylElement& w, int i);

// Lexicographically smallest reduced word (smallest left descent first).
Word one_reduced_word(const RootSystem& rs, const WeylElement& w);
std::vector<Word> all_reduced_words(const RootSystem& rs, const WeylElement& w);

// N(w) = { alpha in Phi+ : w^{-1}(alpha) < 0 }, in canonical root order.
std::vector<IVec> inversion_set(const RootSystem& rs, const WeylElement& w);

// Bruhat order via the lifting property.
bool bruhat_leq(const RootSystem& rs, const WeylElement& v, const WeylElement& w);

// The reflection s_alpha for a positive root alpha.
WeylElement reflection_of_root(const RootSystem& rs, const IVec& alpha);

// Fully enumerated finite Weyl group, elements sorted by length and then by
// lexicographically smallest reduced word.
class WeylGroup {
public:
    explicit WeylGroup(RootSystem rs, std::size_t max_size = 50000);

    const RootSystem& roots() const { return rs_; }
    int rank() const { return rs_.rank(); }
    std::size_t size() const { return elements_.size(); }
    const WeylElement& element(std::size_t idx) const { return elements_.at(idx); }
    const Word& canonical_word(std::size_t idx) const { return words_.at(idx); }
    int length(std::size_t idx) const { return lengths_.at(idx); }
    std::size_t index_of(const WeylElement& w) const;
    std::size_t identity() const { return 0; }
    std::size_t longest() const { return elements_.size() - 1; }

    bool is_type_a() const { return rs_.spec().family == 'A'; }
    // One-line notation, type A only: entry j is w(j) on {1..rank+1}.
    std::vector<int> one_line(std::size_t idx) const;

private:
    RootSystem rs_;
    std::vector<WeylElement> elements_;
    std::vector<Word> words_;
    std::vector<int> lengths_;
    std::map<std::vector<Int>, std::size_t> index_;
};

// One-line notation helpers for family A (rank n acts on {1..n+1}).
std::vector<int> one_line_of_word(int n_points, const Word& word);
WeylElement element_from_one_line(const RootSystem& rs, const std::vector<int>& perm);

struct BruhatEdge {
    std::size_t a, b;  // endpoint indices with a < b
    IVec label;        // the positive root alpha with s_alpha * elem(a) = elem(b)
};

struct BruhatGraph {
    std::size_t vertex_count = 0;
    std::vector<BruhatEdge> edges;
};

BruhatGraph bruhat_graph(const WeylGroup& g);

}  // namespace flagcalc
