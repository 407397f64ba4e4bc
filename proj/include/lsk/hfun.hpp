#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lsk/laurent.hpp"

namespace lsk {

// H-function of an L-space knot, determined by its symmetrized Alexander
// polynomial: H(s) = sum_j a_j * max(j - s, 0). The knot lattice is Z.
// Coefficients of a valid input are forced into {-1, 0, 1} by the growth
// property, so values fit comfortably in 64 bits.
class HFunction1D {
public:
    HFunction1D(std::vector<std::pair<std::int64_t, std::int64_t>> coeffs, std::int64_t g)
        : coeffs_(std::move(coeffs)), genus_(g) {}

    std::int64_t genus() const { return genus_; }

    std::int64_t operator()(std::int64_t s) const {
        std::int64_t v = 0;
        for (auto& [j, a] : coeffs_)
            if (j > s) v += a * (j - s);
        return v;
    }

private:
    std::vector<std::pair<std::int64_t, std::int64_t>> coeffs_;
    std::int64_t genus_ = 0;
};

// Validates the polynomial (integer exponents, symmetric, Delta(1) = 1, all
// tail sums in {0,1}) and returns the evaluator. The tail-sum condition is
// exactly the growth property H(s-1) - H(s) in {0,1}; nonnegativity and
// H(s) = 0 iff s >= genus follow from it.
inline HFunction1D knot_h_from_alexander(const LaurentPoly1& delta) {
    if (delta.is_zero()) throw not_lspace_knot("knot polynomial is zero");
    if (!delta.all_integer_exponents())
        throw not_lspace_knot("knot polynomial has non-integer exponents");
    if (!delta.is_symmetric())
        throw not_lspace_knot("knot polynomial is not symmetric");
    if (delta.eval_at_one() != 1)
        throw not_lspace_knot("knot polynomial is not normalized to 1 at t=1");

    std::vector<std::pair<std::int64_t, std::int64_t>> coeffs;
    Int tail = 0;
    // terms() is sorted ascending; walk down from the top so `tail` is the
    // partial sum over exponents >= current.
    const auto& ts = delta.terms();
    for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
        tail += it->second;
        if (tail != 0 && tail != 1)
            throw not_lspace_knot("knot polynomial violates the growth property (tail sum " +
                                  tail.str() + " at exponent " + it->first.str() + ")");
    }
    for (auto& [e, c] : ts)
        coeffs.emplace_back(e.as_integer(), static_cast<std::int64_t>(c));
    std::int64_t g = delta.top_exponent().as_integer();
    return HFunction1D(std::move(coeffs), g);
}

inline std::int64_t genus(const LaurentPoly1& delta) {
    return knot_h_from_alexander(delta).genus();
}

struct HViolation {
    LatticePoint at;
    std::string what;
};

// H-function of a 2-component L-space link on the affine lattice
// (Z + l/2)^2, stored on a finite symmetric window plus the two component
// H-functions. Evaluation outside the window reduces in O(1) to a component
// boundary value or, below the window, through the conjugation symmetry
// H(s) = H(-s) - s1 - s2. Immutable after construction.
class HFunction2D {
public:
    HFunction2D(std::int64_t linking, HFunction1D k1, HFunction1D k2, HalfInt hi1, HalfInt hi2,
                std::vector<std::int64_t> vals)
        : l_(linking),
          k1_(std::move(k1)),
          k2_(std::move(k2)),
          hi1_(hi1),
          hi2_(hi2),
          n1_((hi1.tw) + 1),  // lattice points from -hi to hi, step 1
          n2_((hi2.tw) + 1),
          vals_(std::move(vals)) {}

    std::int64_t linking() const { return l_; }
    const HFunction1D& knot1() const { return k1_; }
    const HFunction1D& knot2() const { return k2_; }
    HalfInt window_hi1() const { return hi1_; }
    HalfInt window_hi2() const { return hi2_; }
    HalfInt window_lo1() const { return -hi1_; }
    HalfInt window_lo2() const { return -hi2_; }

    bool on_lattice(HalfInt s) const { return ((s.tw - l_) % 2) == 0; }

    // H(s1, infinity) = H_1(s1 - l/2)
    std::int64_t boundary1(HalfInt s1) const { return k1_((s1.tw - l_) / 2); }
    // H(infinity, s2) = H_2(s2 - l/2)
    std::int64_t boundary2(HalfInt s2) const { return k2_((s2.tw - l_) / 2); }
    // H_1(l/2 - s1) and H_2(l/2 - s2), the reversed-orientation boundary maps.
    std::int64_t boundary1_mirror(HalfInt s1) const { return k1_((l_ - s1.tw) / 2); }
    std::int64_t boundary2_mirror(HalfInt s2) const { return k2_((l_ - s2.tw) / 2); }

    bool in_window(HalfInt s1, HalfInt s2) const {
        return s1.tw >= -hi1_.tw && s1.tw <= hi1_.tw && s2.tw >= -hi2_.tw && s2.tw <= hi2_.tw;
    }

    std::int64_t window_at(HalfInt s1, HalfInt s2) const {
        std::int64_t i1 = (s1.tw + hi1_.tw) / 2;
        std::int64_t i2 = (s2.tw + hi2_.tw) / 2;
        return vals_[static_cast<std::size_t>(i1 * n2_ + i2)];
    }

    std::int64_t eval(HalfInt s1, HalfInt s2) const {
        if (!on_lattice(s1) || !on_lattice(s2))
            throw lattice_mismatch("H evaluated off the link lattice at (" + s1.str() + ", " +
                                   s2.str() + ")");
        return eval_unchecked(s1, s2);
    }

    std::int64_t eval_unchecked(HalfInt s1, HalfInt s2) const {
        if (s1.tw > hi1_.tw) return boundary2(s2);
        if (s2.tw > hi2_.tw) return boundary1(s1);
        if (s1.tw >= -hi1_.tw && s2.tw >= -hi2_.tw) return window_at(s1, s2);
        // below the window in some coordinate: -s is above or inside
        std::int64_t sum = (s1.tw + s2.tw) / 2;
        HalfInt m1 = -s1, m2 = -s2;
        std::int64_t v;
        if (m1.tw > hi1_.tw) v = boundary2(m2);
        else if (m2.tw > hi2_.tw) v = boundary1(m1);
        else v = window_at(m1, m2);
        return v - sum;
    }

private:
    std::int64_t l_;
    HFunction1D k1_, k2_;
    HalfInt hi1_, hi2_;
    std::int64_t n1_, n2_;
    std::vector<std::int64_t> vals_;
};

// All consistency properties an L-space link H-function must satisfy,
// checked at every window point: nonnegativity, growth steps in {0,1},
// conjugation symmetry, stabilization of the two outermost rows/columns to
// the component H-functions, and the mirrored-column identity
// H(-s1,-s2) - H(inf,-s2) = H(s1,s2) - H(inf,s2+l) + s1 - l/2.
inline std::vector<HViolation> validate_h(const HFunction2D& h) {
    std::vector<HViolation> out;
    const std::int64_t L = h.linking();
    const HalfInt lo1 = h.window_lo1(), lo2 = h.window_lo2();
    const HalfInt hi1 = h.window_hi1(), hi2 = h.window_hi2();
    const HalfInt one = HalfInt::whole(1);
    auto push = [&](HalfInt s1, HalfInt s2, std::string what) {
        out.push_back({LatticePoint{s1, s2}, std::move(what)});
    };
    for (HalfInt s1 = lo1; s1 <= hi1; s1 += one) {
        for (HalfInt s2 = lo2; s2 <= hi2; s2 += one) {
            std::int64_t v = h.window_at(s1, s2);
            if (v < 0) push(s1, s2, "negative value " + std::to_string(v));
            if (s1.tw < hi1.tw) {
                std::int64_t d = v - h.window_at(s1 + one, s2);
                if (d != 0 && d != 1)
                    push(s1, s2, "growth step " + std::to_string(d) + " along s1");
            }
            if (s2.tw < hi2.tw) {
                std::int64_t d = v - h.window_at(s1, s2 + one);
                if (d != 0 && d != 1)
                    push(s1, s2, "growth step " + std::to_string(d) + " along s2");
            }
            std::int64_t sum = (s1.tw + s2.tw) / 2;
            if (h.window_at(-s1, -s2) != v + sum)
                push(s1, s2, "conjugation symmetry H(-s) = H(s) + s1 + s2 fails");
            std::int64_t lhs = h.eval_unchecked(-s1, -s2) - h.boundary2(-s2);
            std::int64_t rhs = v - h.boundary2(s2 + HalfInt::whole(L)) + (s1.tw - L) / 2;
            if (lhs != rhs) push(s1, s2, "mirrored-column identity fails");
        }
    }
    for (HalfInt s2 = lo2; s2 <= hi2; s2 += one) {
        for (HalfInt s1 : {hi1, hi1 - one})
            if (h.window_at(s1, s2) != h.boundary2(s2))
                push(s1, s2, "column not stabilized to the second component H-function");
    }
    for (HalfInt s1 = lo1; s1 <= hi1; s1 += one) {
        for (HalfInt s2 : {hi2, hi2 - one})
            if (h.window_at(s1, s2) != h.boundary1(s1))
                push(s1, s2, "row not stabilized to the first component H-function");
    }
    return out;
}

namespace detail {

inline HalfInt round_up_to_lattice(std::int64_t twice_value, std::int64_t l) {
    // smallest lattice point (tw = l mod 2) with tw >= twice_value
    std::int64_t tw = twice_value;
    if (((tw - l) % 2 + 2) % 2 != 0) tw += 1;
    return HalfInt(tw);
}

}  // namespace detail

// Solves the rectangle recursion
//   H(s1, s2) = H(s1, s2+1) + H(s1+1, s2) - H(s1+1, s2+1) - chi(s1+1, s2+1)
// downward from the stabilized top edges, where chi(a, b) is the coefficient
// of t1^{a-1/2} t2^{b-1/2} in the symmetrized 2-variable polynomial.
inline HFunction2D link_h_from_alexander(const LaurentPoly2& delta2, const LaurentPoly1& delta_1,
                                         const LaurentPoly1& delta_2, std::int64_t l) {
    if (l < 0) throw invalid_params("linking number must be nonnegative (re-orient the link)");
    HFunction1D k1 = knot_h_from_alexander(delta_1);
    HFunction1D k2 = knot_h_from_alexander(delta_2);
    if (!delta2.is_symmetric())
        throw not_lspace_link("2-variable polynomial is not centrally symmetric");
    for (auto& [k, c] : delta2.terms()) {
        // exponents must sit on (Z + (l-1)/2)^2 so that chi lands on the lattice
        if (((k.first.tw - (l - 1)) % 2 + 2) % 2 != 0 ||
            ((k.second.tw - (l - 1)) % 2 + 2) % 2 != 0)
            throw not_lspace_link("2-variable polynomial exponent parity does not match the "
                                  "linking number " + std::to_string(l));
    }

    // Window: stabilization is guaranteed past both the chi support and the
    // component genus; pad by l + 2.
    auto axis_bound = [&](int axis, const HFunction1D& k) {
        std::int64_t m = delta2.max_abs_exponent(axis).tw + 1;  // chi support, doubled
        m = std::max(m, 2 * k.genus() + l);
        return detail::round_up_to_lattice(m + 2 * l + 4, l);
    };
    HalfInt hi1 = axis_bound(1, k1), hi2 = axis_bound(2, k2);

    std::int64_t n1 = hi1.tw + 1, n2 = hi2.tw + 1;
    std::vector<std::int64_t> vals(static_cast<std::size_t>(n1 * n2), 0);
    auto idx = [&](HalfInt s1, HalfInt s2) {
        return static_cast<std::size_t>(((s1.tw + hi1.tw) / 2) * n2 + (s2.tw + hi2.tw) / 2);
    };
    const HalfInt one = HalfInt::whole(1), half1 = HalfInt(1);

    for (HalfInt s2 = -hi2; s2 <= hi2; s2 += one)
        vals[idx(hi1, s2)] = k2((s2.tw - l) / 2);
    for (HalfInt s1 = -hi1; s1 <= hi1; s1 += one)
        vals[idx(s1, hi2)] = k1((s1.tw - l) / 2);

    for (HalfInt s1 = hi1 - one; s1 >= -hi1; s1 -= one) {
        for (HalfInt s2 = hi2 - one; s2 >= -hi2; s2 -= one) {
            Int chi = delta2.coeff(s1 + one - half1, s2 + one - half1);
            Int v = Int(vals[idx(s1, s2 + one)]) + Int(vals[idx(s1 + one, s2)]) -
                    Int(vals[idx(s1 + one, s2 + one)]) - chi;
            vals[idx(s1, s2)] = static_cast<std::int64_t>(v);
        }
    }

    HFunction2D h(l, std::move(k1), std::move(k2), hi1, hi2, std::move(vals));
    auto bad = validate_h(h);
    if (!bad.empty())
        throw not_lspace_link("derived H-function is inconsistent at " + bad.front().at.str() +
                              ": " + bad.front().what +
                              (bad.size() > 1 ? " (+" + std::to_string(bad.size() - 1) +
                                                    " more violations)"
                                              : ""));
    return h;
}

// Builds an H-function directly from a window table (used by catalog entries
// that ship tables instead of polynomials). Same validation as the
// polynomial route.
inline HFunction2D h_from_table(std::int64_t l, const LaurentPoly1& delta_1,
                                const LaurentPoly1& delta_2, HalfInt hi1, HalfInt hi2,
                                const std::vector<std::int64_t>& vals, bool validate = true) {
    if (l < 0) throw invalid_params("linking number must be nonnegative");
    if (((hi1.tw - l) % 2 + 2) % 2 != 0 || ((hi2.tw - l) % 2 + 2) % 2 != 0)
        throw lattice_mismatch("H-table window corners are off the link lattice");
    HFunction1D k1 = knot_h_from_alexander(delta_1);
    HFunction1D k2 = knot_h_from_alexander(delta_2);
    std::size_t need = static_cast<std::size_t>((hi1.tw + 1) * (hi2.tw + 1));
    if (vals.size() != need)
        throw invalid_params("H-table has " + std::to_string(vals.size()) + " values, expected " +
                             std::to_string(need));
    HFunction2D h(l, std::move(k1), std::move(k2), hi1, hi2, vals);
    if (validate) {
        auto bad = validate_h(h);
        if (!bad.empty())
            throw not_lspace_link("H-table is inconsistent at " + bad.front().at.str() + ": " +
                                  bad.front().what);
    }
    return h;
}

// H-function of the link with the first component's orientation reversed,
// re-oriented so the stored linking number stays nonnegative:
// H'(s1, s2) = H(-s1, s2) - s1 - l/2. An involution.
inline HFunction2D reverse_orientation(const HFunction2D& h) {
    const std::int64_t l = h.linking();
    HalfInt hi1 = h.window_hi1(), hi2 = h.window_hi2();
    const HalfInt one = HalfInt::whole(1);
    std::vector<std::int64_t> vals;
    vals.reserve(static_cast<std::size_t>((hi1.tw + 1) * (hi2.tw + 1)));
    for (HalfInt s1 = -hi1; s1 <= hi1; s1 += one)
        for (HalfInt s2 = -hi2; s2 <= hi2; s2 += one)
            vals.push_back(h.eval_unchecked(-s1, s2) - (s1.tw + l) / 2);
    HFunction2D r(l, h.knot1(), h.knot2(), hi1, hi2, std::move(vals));
    auto bad = validate_h(r);
    if (!bad.empty())
        throw inconsistency("orientation-reversed H-function is inconsistent at " +
                            bad.front().at.str() + ": " + bad.front().what);
    return r;
}

}  // namespace lsk
