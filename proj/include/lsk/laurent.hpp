#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "lsk/halfint.hpp"

namespace lsk {

using Int = boost::multiprecision::cpp_int;

// Sparse Laurent polynomial in one variable with half-integer exponents and
// arbitrary-precision integer coefficients. No zero terms are ever stored.
class LaurentPoly1 {
public:
    using Terms = std::map<HalfInt, Int>;

    LaurentPoly1() = default;
    static LaurentPoly1 constant(Int c) {
        LaurentPoly1 f;
        f.add_term(HalfInt::whole(0), std::move(c));
        return f;
    }
    static LaurentPoly1 monomial(HalfInt e, Int c = 1) {
        LaurentPoly1 f;
        f.add_term(e, std::move(c));
        return f;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Int coeff(HalfInt e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(HalfInt e, Int c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, std::move(c));
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    HalfInt top_exponent() const { return terms_.rbegin()->first; }
    HalfInt bottom_exponent() const { return terms_.begin()->first; }

    Int eval_at_one() const {
        Int s = 0;
        for (auto& [e, c] : terms_) s += c;
        return s;
    }

    // coefficient(e) == coefficient(-e) for all e
    bool is_symmetric() const {
        for (auto& [e, c] : terms_)
            if (coeff(-e) != c) return false;
        return true;
    }

    bool all_integer_exponents() const {
        for (auto& [e, c] : terms_)
            if (!e.is_integer()) return false;
        return true;
    }

    friend LaurentPoly1 operator+(const LaurentPoly1& a, const LaurentPoly1& b) {
        LaurentPoly1 r = a;
        for (auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend LaurentPoly1 operator-(const LaurentPoly1& a) {
        LaurentPoly1 r;
        for (auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }
    friend LaurentPoly1 operator-(const LaurentPoly1& a, const LaurentPoly1& b) {
        return a + (-b);
    }
    friend LaurentPoly1 operator*(const LaurentPoly1& a, const LaurentPoly1& b) {
        LaurentPoly1 r;
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    friend bool operator==(const LaurentPoly1& a, const LaurentPoly1& b) {
        return a.terms_ == b.terms_;
    }

    // f(t) -> f(t^p)
    LaurentPoly1 substitute_power(std::int64_t p) const {
        LaurentPoly1 r;
        for (auto& [e, c] : terms_) r.terms_.emplace(p * e, c);
        return r;
    }

    LaurentPoly1 shifted(HalfInt e0) const {
        LaurentPoly1 r;
        for (auto& [e, c] : terms_) r.terms_.emplace(e + e0, c);
        return r;
    }

    // Exact division by the two-term binomial t^a - t^{-a}, a > 0.
    // Throws inconsistency if the division leaves a remainder.
    LaurentPoly1 divide_exact_binomial(HalfInt a) const {
        if (a.tw <= 0) throw invalid_params("divide_exact_binomial: need a > 0");
        if (is_zero()) return {};
        // An exact quotient has exponents within [bottom+a, top-a].
        const HalfInt qlo = bottom_exponent() + a;
        LaurentPoly1 rem = *this;
        LaurentPoly1 quot;
        while (!rem.is_zero()) {
            HalfInt le = rem.top_exponent();
            Int qc = rem.terms_.rbegin()->second;
            HalfInt qe = le - a;
            if (qe < qlo) throw inconsistency("divide_exact_binomial: division is not exact");
            quot.add_term(qe, qc);
            rem.add_term(le, -qc);
            rem.add_term(qe - a, qc);
        }
        return quot;
    }

    std::string str(const std::string& var = "t") const;

private:
    Terms terms_;
};

// Sparse Laurent polynomial in two variables, same conventions.
class LaurentPoly2 {
public:
    using Key = std::pair<HalfInt, HalfInt>;
    using Terms = std::map<Key, Int>;

    LaurentPoly2() = default;
    static LaurentPoly2 constant(Int c) {
        LaurentPoly2 f;
        f.add_term(HalfInt::whole(0), HalfInt::whole(0), std::move(c));
        return f;
    }
    static LaurentPoly2 monomial(HalfInt e1, HalfInt e2, Int c = 1) {
        LaurentPoly2 f;
        f.add_term(e1, e2, std::move(c));
        return f;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Int coeff(HalfInt e1, HalfInt e2) const {
        auto it = terms_.find({e1, e2});
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(HalfInt e1, HalfInt e2, Int c) {
        if (c == 0) return;
        Key k{e1, e2};
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, std::move(c));
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend LaurentPoly2 operator+(const LaurentPoly2& a, const LaurentPoly2& b) {
        LaurentPoly2 r = a;
        for (auto& [k, c] : b.terms_) r.add_term(k.first, k.second, c);
        return r;
    }
    friend LaurentPoly2 operator-(const LaurentPoly2& a) {
        LaurentPoly2 r;
        for (auto& [k, c] : a.terms_) r.terms_.emplace(k, -c);
        return r;
    }
    friend LaurentPoly2 operator-(const LaurentPoly2& a, const LaurentPoly2& b) {
        return a + (-b);
    }
    friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
        LaurentPoly2 r;
        for (auto& [ka, ca] : a.terms_)
            for (auto& [kb, cb] : b.terms_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }
    friend bool operator==(const LaurentPoly2& a, const LaurentPoly2& b) {
        return a.terms_ == b.terms_;
    }

    // axis = 1 or 2: substitute t_axis -> t_axis^p.
    LaurentPoly2 substitute_power(std::int64_t p, int axis = 1) const {
        LaurentPoly2 r;
        for (auto& [k, c] : terms_) {
            Key nk = (axis == 1) ? Key{p * k.first, k.second} : Key{k.first, p * k.second};
            r.terms_.emplace(nk, c);
        }
        return r;
    }

    // Multiply by a one-variable polynomial placed on the given axis.
    LaurentPoly2 times_axis_poly(const LaurentPoly1& f, int axis) const {
        LaurentPoly2 r;
        for (auto& [k, c] : terms_)
            for (auto& [e, cf] : f.terms()) {
                if (axis == 1)
                    r.add_term(k.first + e, k.second, c * cf);
                else
                    r.add_term(k.first, k.second + e, c * cf);
            }
        return r;
    }

    LaurentPoly2 swap_variables() const {
        LaurentPoly2 r;
        for (auto& [k, c] : terms_) r.terms_.emplace(Key{k.second, k.first}, c);
        return r;
    }

    // coefficient(e) == coefficient(-e) up to a global sign would not be
    // enough; the symmetrized polynomial satisfies exact central symmetry.
    bool is_symmetric() const {
        for (auto& [k, c] : terms_)
            if (coeff(-k.first, -k.second) != c) return false;
        return true;
    }

    HalfInt max_abs_exponent(int axis) const {
        HalfInt m = HalfInt::whole(0);
        for (auto& [k, c] : terms_) {
            HalfInt e = (axis == 1) ? k.first : k.second;
            if (e.tw < 0) e = -e;
            if (e > m) m = e;
        }
        return m;
    }

    std::string str(const std::string& v1 = "t1", const std::string& v2 = "t2") const;

private:
    Terms terms_;
};

// (t^{pq/2} - t^{-pq/2}) / (t^{q/2} - t^{-q/2}) expanded as the p-term sum
// sum_{k=0}^{p-1} t^{q(p-1-2k)/2}. Exact, no division performed.
inline LaurentPoly1 quantum_factor(std::int64_t p, std::int64_t q) {
    if (p < 1 || q < 1 || std::gcd(p, q) != 1)
        throw invalid_params("quantum_factor: p, q must be coprime positive integers");
    LaurentPoly1 r;
    for (std::int64_t k = 0; k < p; ++k) r.add_term(HalfInt(q * (p - 1 - 2 * k)), 1);
    return r;
}

// Coefficient of t^s in Delta(t) / (1 - t^{-1}) read as a power series in
// t^{-1}; equals the tail sum of Delta's coefficients at exponents >= s.
inline Int tilde_coeff_knot(const LaurentPoly1& delta, HalfInt s) {
    if (!delta.is_symmetric() || delta.eval_at_one() != 1)
        throw not_lspace_knot(
            "tilde_coeff_knot: polynomial is not symmetric with value 1 at t=1");
    Int sum = 0;
    for (auto& [e, c] : delta.terms())
        if (e >= s) sum += c;
    return sum;
}

inline std::string LaurentPoly1::str(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!out.empty()) out += (c > 0) ? " + " : " - ";
        else if (c < 0) out += "-";
        Int a = abs(c);
        bool unit = (a == 1) && e.tw != 0;
        if (!unit) out += a.str();
        if (e.tw != 0) {
            out += var;
            if (e.tw != 2) out += "^" + e.str();
        }
    }
    return out;
}

inline std::string LaurentPoly2::str(const std::string& v1, const std::string& v2) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [k, c] = *it;
        if (!out.empty()) out += (c > 0) ? " + " : " - ";
        else if (c < 0) out += "-";
        Int a = abs(c);
        bool has_var = k.first.tw != 0 || k.second.tw != 0;
        if (a != 1 || !has_var) out += a.str();
        if (k.first.tw != 0) {
            out += v1;
            if (k.first.tw != 2) out += "^" + k.first.str();
        }
        if (k.second.tw != 0) {
            out += v2;
            if (k.second.tw != 2) out += "^" + k.second.str();
        }
    }
    return out;
}

}  // namespace lsk
