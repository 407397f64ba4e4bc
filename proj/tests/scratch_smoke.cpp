// Temporary scratch harness (deleted before final): verifies the core
// machinery against hand-checked values before the real suites exist.
#include <cstdio>

#include "lsk/hfun.hpp"
#include "lsk/invariants.hpp"
#include "lsk/surgery.hpp"

using namespace lsk;

static LaurentPoly2 whitehead_poly() {
    // -(t1^(1/2)-t1^(-1/2))(t2^(1/2)-t2^(-1/2))
    LaurentPoly1 a = LaurentPoly1::monomial(HalfInt(1)) - LaurentPoly1::monomial(HalfInt(-1));
    LaurentPoly2 f;
    for (auto& [e1, c1] : a.terms())
        for (auto& [e2, c2] : a.terms()) f.add_term(e1, e2, -c1 * c2);
    return f;
}

int main() {
    LaurentPoly1 one = LaurentPoly1::constant(1);
    auto h = link_h_from_alexander(whitehead_poly(), one, one, 0);

    // paper's 5x5 table, rows s2 = 2 down to -2, columns s1 = -2 .. 2
    std::int64_t expect[5][5] = {
        {2, 1, 0, 0, 0},
        {2, 1, 0, 0, 0},
        {2, 1, 1, 0, 0},
        {3, 2, 1, 1, 1},
        {4, 3, 2, 2, 2},
    };
    int bad = 0;
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c) {
            HalfInt s1 = HalfInt::whole(c - 2), s2 = HalfInt::whole(2 - r);
            if (h.eval(s1, s2) != expect[r][c]) {
                std::printf("MISMATCH at (%lld,%lld): got %lld want %lld\n",
                            (long long)s1.as_integer(), (long long)s2.as_integer(),
                            (long long)h.eval(s1, s2), (long long)expect[r][c]);
                ++bad;
            }
        }
    std::printf("whitehead table: %s\n", bad ? "FAIL" : "ok");

    auto inv = derive_invariants(h);
    std::printf("whitehead b=(%lld,%lld) type=%s maximal=%zu split=%d\n", (long long)inv.b1,
                (long long)inv.b2, inv.type == LinkType::A ? "A" : "B", inv.maximal.size(),
                (int)inv.split_with_unknot);

    // surgeries: L-space iff d1>=1 and d2>=1
    for (auto [d1, d2, want] : {std::tuple<int, int, bool>{1, 1, true},
                                {5, 5, true},
                                {-1, -1, false},
                                {-1, 5, false},
                                {1, -1, false},
                                {3, 2, true}}) {
        SurgeryMatrix lam{d1, d2, 0};
        bool got = is_lspace_surgery(h, lam);
        std::printf("wh surgery (%d,%d): %d (want %d) %s\n", d1, d2, (int)got, (int)want,
                    got == want ? "ok" : "FAIL");
    }

    // Hopf link: Delta = 1, l = 1. Surgery (d1,d2) gives the lens space
    // L(d1 d2 - 1, *): L-space whenever det != 0.
    auto hh = link_h_from_alexander(LaurentPoly2::constant(1), one, one, 1);
    auto hinv = derive_invariants(hh);
    std::printf("hopf b=(%lld,%lld) type=%s maximal=%zu\n", (long long)hinv.b1,
                (long long)hinv.b2, hinv.type == LinkType::A ? "A" : "B", hinv.maximal.size());
    std::printf("hopf H(1/2,1/2)=%lld H(-1/2,-1/2)=%lld H(-1/2,1/2)=%lld H(1/2,-5/2)=%lld\n",
                (long long)hh.eval(HalfInt(1), HalfInt(1)),
                (long long)hh.eval(HalfInt(-1), HalfInt(-1)),
                (long long)hh.eval(HalfInt(-1), HalfInt(1)),
                (long long)hh.eval(HalfInt(1), HalfInt(-5)));
    int fails = 0, flagged = 0;
    for (int d1 = -6; d1 <= 6; ++d1)
        for (int d2 = -6; d2 <= 6; ++d2) {
            SurgeryMatrix lam{d1, d2, 1};
            if (lam.det() == 0) continue;
            try {
                bool got = is_lspace_surgery(hh, lam);
                if (!got) {
                    std::printf("hopf surgery (%d,%d) det=%lld NOT lspace?!\n", d1, d2,
                                (long long)lam.det());
                    ++fails;
                }
            } catch (const truncation_infeasible&) {
                ++flagged;
            }
        }
    std::printf("hopf all-lens sweep: %s (%d fails, %d flagged-infeasible)\n",
                fails ? "FAIL" : "ok", fails, flagged);
    return bad + fails;
}
