#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lsk/hfun.hpp"

namespace lsk {

enum class LinkType { A, B };

struct LinkInvariants {
    std::int64_t b1 = 0, b2 = 0;
    std::int64_t g1 = 0, g2 = 0;
    std::int64_t linking = 0;
    LinkType type = LinkType::B;
    std::vector<LatticePoint> maximal;
    bool split_with_unknot = false;
    std::optional<LatticePoint> type_a_witness;
};

// b_1 = min{ ceil(s1 - 1) : H(s1, s2) = H(inf, s2) for all s2 }, and
// symmetrically b_2. The column condition is monotone in s1 by the growth
// property; the scan walks inward from the stabilized window edge.
inline std::pair<std::int64_t, std::int64_t> compute_b(const HFunction2D& h) {
    const HalfInt one = HalfInt::whole(1);
    auto col_stable = [&](HalfInt s1) {
        if (h.boundary1(s1) != 0) return false;  // equality must also hold at s2 -> +inf
        for (HalfInt s2 = h.window_lo2(); s2 <= h.window_hi2(); s2 += one)
            if (h.window_at(s1, s2) != h.boundary2(s2)) return false;
        return true;
    };
    auto row_stable = [&](HalfInt s2) {
        if (h.boundary2(s2) != 0) return false;
        for (HalfInt s1 = h.window_lo1(); s1 <= h.window_hi1(); s1 += one)
            if (h.window_at(s1, s2) != h.boundary1(s1)) return false;
        return true;
    };
    HalfInt s1 = h.window_hi1();
    if (!col_stable(s1)) throw inconsistency("window edge column is not stabilized");
    while (s1 > h.window_lo1() && col_stable(s1 - one)) s1 -= one;
    HalfInt s2 = h.window_hi2();
    if (!row_stable(s2)) throw inconsistency("window edge row is not stabilized");
    while (s2 > h.window_lo2() && row_stable(s2 - one)) s2 -= one;
    return {(s1 - one).ceil(), (s2 - one).ceil()};
}

// All maximal lattice points: H(s) = 1 with both upper neighbors 0. Such
// points satisfy g_i + l/2 - 1 <= s_i <= b_i, so the window always contains
// them.
inline std::vector<LatticePoint> maximal_lattice_points(const HFunction2D& h) {
    const HalfInt one = HalfInt::whole(1);
    std::vector<LatticePoint> out;
    for (HalfInt s1 = h.window_lo1(); s1 <= h.window_hi1(); s1 += one)
        for (HalfInt s2 = h.window_lo2(); s2 <= h.window_hi2(); s2 += one)
            if (h.window_at(s1, s2) == 1 && h.eval_unchecked(s1 + one, s2) == 0 &&
                h.eval_unchecked(s1, s2 + one) == 0)
                out.push_back({s1, s2});
    return out;
}

// Type (A): some lattice point has strict H-drops upward in both directions
// while one of the one-variable limits there is already 0. Checked two ways
// (witness search, and the threshold criterion b_i >= g_i + l/2); they must
// agree.
inline std::pair<LinkType, std::optional<LatticePoint>> classify_type(
    const HFunction2D& h, std::int64_t b1, std::int64_t b2, std::int64_t g1, std::int64_t g2) {
    const HalfInt one = HalfInt::whole(1);
    const std::int64_t l = h.linking();
    std::optional<LatticePoint> witness;
    for (HalfInt s1 = h.window_lo1(); s1 <= h.window_hi1() && !witness; s1 += one) {
        for (HalfInt s2 = h.window_lo2(); s2 <= h.window_hi2(); s2 += one) {
            std::int64_t v = h.window_at(s1, s2);
            if (v > h.eval_unchecked(s1 + one, s2) && v > h.eval_unchecked(s1, s2 + one) &&
                (h.boundary1(s1) == 0 || h.boundary2(s2) == 0)) {
                witness = LatticePoint{s1, s2};
                break;
            }
        }
    }
    bool threshold = (2 * b1 >= 2 * g1 + l) || (2 * b2 >= 2 * g2 + l);
    if (witness.has_value() != threshold)
        throw inconsistency("type (A) witness search disagrees with the b_i >= g_i + l/2 "
                            "criterion");
    return {witness ? LinkType::A : LinkType::B, witness};
}

inline bool is_split_with_unknot(const HFunction2D& h, std::int64_t g1, std::int64_t g2) {
    if (h.linking() != 0 || std::min(g1, g2) != 0) return false;
    const HalfInt one = HalfInt::whole(1);
    for (HalfInt s1 = h.window_lo1(); s1 <= h.window_hi1(); s1 += one)
        for (HalfInt s2 = h.window_lo2(); s2 <= h.window_hi2(); s2 += one)
            if (h.window_at(s1, s2) != h.boundary1(s1) + h.boundary2(s2)) return false;
    return true;
}

inline LinkInvariants derive_invariants(const HFunction2D& h) {
    LinkInvariants inv;
    inv.linking = h.linking();
    inv.g1 = h.knot1().genus();
    inv.g2 = h.knot2().genus();
    auto [b1, b2] = compute_b(h);
    inv.b1 = b1;
    inv.b2 = b2;
    auto [type, witness] = classify_type(h, b1, b2, inv.g1, inv.g2);
    inv.type = type;
    inv.type_a_witness = witness;
    inv.maximal = maximal_lattice_points(h);
    inv.split_with_unknot = is_split_with_unknot(h, inv.g1, inv.g2);
    // a maximal lattice point forces type (A); and b_i >= g_i - 1 + l/2
    if (!inv.maximal.empty() && inv.type != LinkType::A)
        throw inconsistency("maximal lattice point found on a type (B) link");
    if (2 * inv.b1 < 2 * inv.g1 - 2 + inv.linking || 2 * inv.b2 < 2 * inv.g2 - 2 + inv.linking)
        throw inconsistency("b_i < g_i - 1 + l/2");
    return inv;
}

}  // namespace lsk
