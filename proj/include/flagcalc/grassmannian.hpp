#pragma once

#include "flagcalc/billey.hpp"
#include "flagcalc/polynomial.hpp"

#include <set>
#include <utility>
#include <vector>

namespace flagcalc {

// Weakly decreasing nonnegative parts; trailing zeros are dropped.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int rows() const { return static_cast<int>(parts.size()); }
    int part(int row) const;  // 1-based, 0 beyond the last row
    int size() const;         // number of boxes
    bool contains(const Partition& other) const;  // other_i <= this_i for all i
    bool fits_in_rectangle(int k, int m) const;
    bool has_box(int row, int col) const;  // 1-based

    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }
};

// Boxes of an ambient shape with a set of marked boxes, 1-based (row, col),
// row 1 on top.
struct MarkedDiagram {
    Partition shape;
    std::set<std::pair<int, int>> marks;

    bool operator==(const MarkedDiagram& o) const {
        return shape == o.shape && marks == o.marks;
    }
    bool operator<(const MarkedDiagram& o) const {
        if (!(shape == o.shape)) return shape < o.shape;
        return marks < o.marks;
    }
};

// Marks the boxes of lambda inside mu; requires lambda inside mu.
MarkedDiagram initial_marking(const Partition& lambda, const Partition& mu);

// One successor per movable mark: a mark at (r,c) moves to (r+1,c+1) when the
// boxes east, south and southeast of it exist in the shape and are unmarked.
std::vector<MarkedDiagram> excite_moves(const MarkedDiagram& d);

// Closure of the initial marking under moves, deduplicated by mark set.
std::vector<MarkedDiagram> enumerate_excited(const Partition& lambda, const Partition& mu);

// Torus weight (i, j) of a box of mu viewed inside k ambient rows
// (k = 0 means k = number of parts of mu):
//   i = col + #(ambient rows whose row of mu is shorter than col)
//   j = (number of ambient rows at or below the box) + (rightmost column of
//       the box's row).
std::pair<int, int> box_weight(const Partition& mu, int row, int col, int k = 0);

// Sum over marked diagrams of the product of (t_i - t_j) over marked boxes.
// nvars = 0 means the minimal ambient k + mu_1 value variables.
Polynomial excited_diagram_polynomial(const Partition& lambda, const Partition& mu, int k = 0,
                                      int nvars = 0);

// One-line notation of the unique permutation in S_n with w(i) = i +
// lambda_{k+1-i} for i <= k and the remaining values increasing; its only
// descent is at position k and its length is |lambda|.
std::vector<int> grassmannian_permutation(const Partition& lambda, int k, int n);

// Compares the excited-diagram sum with the subword formula computed in the
// rank n-1 group and specialized to the t-variables.
bool excited_diagrams_match_schubert(const Partition& lambda, const Partition& mu, int k, int n);

}  // namespace flagcalc
