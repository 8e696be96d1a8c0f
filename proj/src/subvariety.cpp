#include "flagcalc/subvariety.hpp"

#include <algorithm>

namespace flagcalc {

HessenbergFunction::HessenbergFunction(std::vector<int> values) : h(std::move(values)) {
    const int n = static_cast<int>(h.size());
    for (int i = 1; i <= n; ++i) {
        if (h[i - 1] < i || h[i - 1] > n)
            throw std::invalid_argument("HessenbergFunction: need i <= h(i) <= n");
        if (i > 1 && h[i - 1] < h[i - 2])
            throw std::invalid_argument("HessenbergFunction: must be weakly increasing");
    }
}

HessenbergFunction HessenbergFunction::identity(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    return HessenbergFunction(std::move(v));
}

HessenbergFunction HessenbergFunction::full(int n) {
    return HessenbergFunction(std::vector<int>(n, n));
}

std::string to_string(FixedPointOrigin origin) {
    switch (origin) {
        case FixedPointOrigin::springer: return "springer";
        case FixedPointOrigin::hessenberg: return "hessenberg";
        case FixedPointOrigin::peterson: return "peterson";
        case FixedPointOrigin::custom: return "custom";
    }
    return "custom";
}

namespace {

// Subdiagonal entries (row, col) = (a+1, a) of the nilpotent in lower Jordan
// form with the given block sizes.
std::vector<std::pair<int, int>> jordan_entries(const JordanType& jordan) {
    std::vector<std::pair<int, int>> entries;
    int offset = 0;
    for (int b = 1; b <= jordan.blocks.rows(); ++b) {
        int size = jordan.blocks.part(b);
        for (int j = 1; j < size; ++j) entries.push_back({offset + j + 1, offset + j});
        offset += size;
    }
    return entries;
}

FixedPointSet banded_fixed_points(const WeylGroup& g, const JordanType& jordan,
                                  const HessenbergFunction& h, FixedPointOrigin origin) {
    if (!g.is_type_a())
        throw std::domain_error("nilpotent fixed points are implemented for family A only");
    const int n = g.rank() + 1;
    if (jordan.n() != n)
        throw std::invalid_argument("jordan type must sum to the number of one-line positions");
    if (h.n() != n) throw std::invalid_argument("hessenberg function size mismatch");

    const auto entries = jordan_entries(jordan);
    FixedPointSet fps;
    fps.origin = origin;
    for (std::size_t idx = 0; idx < g.size(); ++idx) {
        std::vector<int> perm = g.one_line(idx);
        std::vector<int> pos(n + 1, 0);
        for (int j = 1; j <= n; ++j) pos[perm[j - 1]] = j;
        bool ok = true;
        for (const auto& [a, b] : entries) {
            // The (a,b) entry of the conjugated matrix sits at (pos(a), pos(b)).
            if (pos[a] > h(pos[b])) {
                ok = false;
                break;
            }
        }
        if (ok) fps.members.push_back(idx);
    }
    return fps;
}

}  // namespace

FixedPointSet springer_fixed_points(const WeylGroup& g, const JordanType& jordan) {
    return banded_fixed_points(g, jordan, HessenbergFunction::identity(g.rank() + 1),
                               FixedPointOrigin::springer);
}

FixedPointSet hessenberg_fixed_points(const WeylGroup& g, const JordanType& jordan,
                                      const HessenbergFunction& h) {
    return banded_fixed_points(g, jordan, h, FixedPointOrigin::hessenberg);
}

FixedPointSet peterson_fixed_points(const WeylGroup& g) {
    const RootSystem& rs = g.roots();
    const int n = rs.rank();
    FixedPointSet fps;
    fps.origin = FixedPointOrigin::peterson;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        WeylElement w = identity_element(rs);
        bool moved = true;
        while (moved) {
            moved = false;
            for (int i = 1; i <= n; ++i) {
                if (!(mask & (1u << (i - 1)))) continue;
                if (!is_right_descent(rs, w, i)) {
                    w = product(w, simple_reflection(rs, i));
                    moved = true;
                    break;
                }
            }
        }
        fps.members.push_back(g.index_of(w));
    }
    std::sort(fps.members.begin(), fps.members.end());
    fps.members.erase(std::unique(fps.members.begin(), fps.members.end()), fps.members.end());
    if (fps.members.size() != (1u << n))
        throw std::logic_error("peterson_fixed_points: parabolic longest elements not distinct");
    return fps;
}

std::vector<TPoly> restrict_class(const WeylGroup& g, const GKMClass& cls,
                                  const FixedPointSet& fps) {
    if (cls.values.size() != g.size())
        throw std::invalid_argument("restrict_class: class must be defined on the whole group");
    std::vector<TPoly> out;
    out.reserve(fps.members.size());
    for (std::size_t idx : fps.members) {
        if (idx >= g.size()) throw std::invalid_argument("restrict_class: member outside group");
        out.push_back(specialize_line(cls.values[idx]));
    }
    return out;
}

}  // namespace flagcalc
