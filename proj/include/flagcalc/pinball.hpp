#pragma once

#include "flagcalc/subvariety.hpp"

#include <map>
#include <vector>

namespace flagcalc {

// Injective assignment of a roll-down vertex r(v) <= v to each fixed point,
// together with the restriction matrix and its exact determinant.  Rows
// follow the processing order of the fixed points (weakly increasing
// length); row i holds the restriction of the class indexed by rolldowns[i]
// to the fixed points in the same order.
struct RolldownAssignment {
    std::vector<std::size_t> fixed_points;
    std::vector<std::size_t> rolldowns;
    std::vector<std::vector<TPoly>> matrix;
    TPoly det;
};

enum class PinballMode { first, all };

// Drops one ball per fixed point in weakly increasing length order.  Each
// ball lands on an unoccupied vertex u <= v, searching the available lengths
// from the bottom; a longer landing is considered only when no completion
// exists from the entire lower band.  A completed placement is kept when the
// restriction matrix is invertible (nonzero determinant).
std::vector<RolldownAssignment> pinball_search(const WeylGroup& g, const FixedPointSet& fps,
                                               PinballMode mode);

// Restriction matrix and determinant for an explicit assignment.
std::pair<std::vector<std::vector<TPoly>>, TPoly> module_basis_matrix(
    const WeylGroup& g, const std::vector<std::size_t>& fixed_points,
    const std::vector<std::size_t>& rolldowns);

// v_A: product of the simple reflections indexed by the subset, in
// increasing index order.
WeylElement subset_product(const RootSystem& rs, const std::vector<int>& subset);

struct ChevalleyMonkResult {
    Coeff diagonal;  // coefficient of t * (class of A) on the right-hand side
    std::map<std::vector<int>, Coeff> covers;  // B -> coefficient, |B| = |A|+1, B > A
};

// Expands (class of s_i) * (class of A) over the Peterson fixed points,
// solving the pointwise identity exactly; verifies the coefficients are
// nonnegative integers.  Throws std::runtime_error when the identity cannot
// be solved in that form.
ChevalleyMonkResult chevalley_monk_expand(const WeylGroup& g, int i,
                                          const std::vector<int>& subset);

// The positive integer c with  prod_{i in A} (class of s_i) = c * (class of A)
// pointwise over the Peterson fixed points.  Throws std::runtime_error when
// the quotient is not a single positive integer.
Coeff giambelli_constant(const WeylGroup& g, const std::vector<int>& subset);

}  // namespace flagcalc
