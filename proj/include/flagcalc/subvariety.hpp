#pragma once

#include "flagcalc/billey.hpp"
#include "flagcalc/grassmannian.hpp"
#include "flagcalc/weyl_group.hpp"

#include <string>
#include <vector>

namespace flagcalc {

// Jordan block sizes of the nilpotent, weakly decreasing, summing to n.
struct JordanType {
    Partition blocks;
    explicit JordanType(Partition p) : blocks(std::move(p)) {}
    int n() const { return blocks.size(); }
};

// Weakly increasing h with h(i) >= i; encodes the banded subspace
// { M : M_ab = 0 whenever a > h(b) }.
struct HessenbergFunction {
    std::vector<int> h;  // h[i-1] = h(i), 1-based values

    explicit HessenbergFunction(std::vector<int> values);
    static HessenbergFunction identity(int n);
    static HessenbergFunction full(int n);
    int n() const { return static_cast<int>(h.size()); }
    int operator()(int i) const { return h.at(i - 1); }
};

enum class FixedPointOrigin { springer, hessenberg, peterson, custom };

std::string to_string(FixedPointOrigin origin);

// Members are group indices in the group's canonical (length, word) order.
struct FixedPointSet {
    FixedPointOrigin origin = FixedPointOrigin::custom;
    std::vector<std::size_t> members;
};

// Fixed points of the nilpotent's flag condition, type A only.  The
// nilpotent is taken in lower Jordan form (ones on the subdiagonal within
// blocks) and membership asks the conjugated matrix to satisfy the banded
// condition of h; the Springer case is h = identity.
FixedPointSet springer_fixed_points(const WeylGroup& g, const JordanType& jordan);
FixedPointSet hessenberg_fixed_points(const WeylGroup& g, const JordanType& jordan,
                                      const HessenbergFunction& h);

// Longest elements of the 2^rank standard parabolic subgroups; any type.
FixedPointSet peterson_fixed_points(const WeylGroup& g);

// One value per member, in member order: the class value at the member under
// the one-parameter specialization alpha_i -> t.
std::vector<TPoly> restrict_class(const WeylGroup& g, const GKMClass& cls,
                                  const FixedPointSet& fps);

}  // namespace flagcalc
