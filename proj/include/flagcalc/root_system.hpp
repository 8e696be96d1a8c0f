#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace flagcalc {

using Int = std::int64_t;
using IVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

// Cartan data: a named finite family or an explicit Cartan matrix.
struct CartanSpec {
    char family = 0;  // 'A','B','C','D','F','G'; 0 when an explicit matrix is given
    int rank = 0;
    IMat matrix;  // entry (i,j) = <alpha_j, alpha_i^vee>

    static CartanSpec named(char family, int rank);
    static CartanSpec from_matrix(const IMat& m);
};

// A finite root system in the simple-root basis.  Positive roots are
// enumerated by closing the simple roots under simple reflections and are
// ordered by height, ties broken with earlier simple-root coordinates first.
class RootSystem {
public:
    int rank() const { return rank_; }
    const CartanSpec& spec() const { return spec_; }
    const IMat& cartan() const { return spec_.matrix; }
    const std::vector<IVec>& positive_roots() const { return positive_roots_; }

    IVec simple_root(int i) const;  // 1-based
    // <v, alpha_i^vee> for 1-based i.
    Int pairing(const IVec& v, int i) const;
    // s_i(v) = v - <v, alpha_i^vee> alpha_i, 1-based i.
    IVec reflect_simple(int i, const IVec& v) const;

    bool is_positive(const IVec& v) const;
    bool is_negative(const IVec& v) const;
    // Index into positive_roots(), or -1.
    int positive_root_index(const IVec& v) const;
    // Word u and simple index j with root = u(alpha_j), for a positive root.
    const std::pair<std::vector<int>, int>& conjugation_of_root(int root_index) const;

    friend RootSystem build_root_system(const CartanSpec& spec, std::size_t max_positive_roots);

private:
    CartanSpec spec_;
    int rank_ = 0;
    std::vector<IVec> positive_roots_;
    std::vector<std::pair<std::vector<int>, int>> conjugations_;
    std::vector<std::pair<std::vector<Int>, int>> index_;  // sorted coords -> position
};

// Enumerates the positive roots; throws std::invalid_argument for malformed
// Cartan matrices and std::domain_error when enumeration exceeds the cap
// (non-finite type).
RootSystem build_root_system(const CartanSpec& spec, std::size_t max_positive_roots = 10000);

// Classical positive-root counts for the named families (used by tests).
std::size_t classical_positive_root_count(char family, int rank);

}  // namespace flagcalc
