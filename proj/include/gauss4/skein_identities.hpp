#ifndef GAUSS4_SKEIN_IDENTITIES_HPP
#define GAUSS4_SKEIN_IDENTITIES_HPP

#include <string>
#include <vector>

#include "gauss4/homfly.hpp"
#include "gauss4/invariants.hpp"

namespace gauss4 {

// The consistency identities V1..V10: exact combinations of invariants over
// a skein triple that must vanish identically. A self crossing splits a
// component in L0 (case V1..V7); a joining crossing merges two (V8..V10).
struct SkeinIdentityReport {
    std::vector<std::pair<std::string, Rat>> values;

    bool all_zero() const {
        for (const auto& [name, v] : values)
            if (v != 0) return false;
        return true;
    }
};

namespace detail {

// Invariant lookups against a fixed component arrangement: the skein
// component(s) are listed last, mirroring the identity statements.
struct Arranged {
    const InvariantEngine* eng;
    LinkCode L;

    Rat v2(std::size_t i) const { return eng->v2(self_subdiagram(L, i)); }
    Rat v3_1(std::size_t i) const { return eng->v3_1(self_subdiagram(L, i)); }
    Rat v4_1(std::size_t i) const { return eng->v4_1(self_subdiagram(L, i)); }
    Rat v4_2(std::size_t i) const { return eng->v4_2(self_subdiagram(L, i)); }
    Rat v1(std::size_t i, std::size_t j) const { return eng->v1(sublink(L, {std::min(i, j), std::max(i, j)})); }
    Rat v3_2(std::size_t i, std::size_t j) const { return eng->v3_2(sublink(L, {std::min(i, j), std::max(i, j)})); }
    Rat v4_3(std::size_t i, std::size_t j) const { return eng->v4_3(sublink(L, {std::min(i, j), std::max(i, j)})); }
    Rat v4_4(std::size_t i, std::size_t j, std::size_t k) const {
        std::vector<std::size_t> s{i, j, k};
        std::sort(s.begin(), s.end());
        return eng->v4_4(sublink(L, s));
    }
};

// Moves the components touching crossing `a` to the back, preserving the
// relative order of the rest.
inline LinkCode arrange_last(const LinkCode& L, int a) {
    auto locs = pass_locations(L).at(a);
    std::vector<std::size_t> order;
    for (std::size_t c = 0; c < L.components.size(); ++c)
        if (c != locs.first.comp && c != locs.second.comp) order.push_back(c);
    order.push_back(std::min(locs.first.comp, locs.second.comp));
    if (locs.first.comp != locs.second.comp)
        order.push_back(std::max(locs.first.comp, locs.second.comp));
    LinkCode out;
    for (std::size_t c : order) out.components.push_back(L.components[c]);
    return out;
}

} // namespace detail

// Evaluates every applicable identity at crossing a of L. All values are
// zero exactly when the Gauss-diagram formulas are mutually consistent with
// the skein relation at this crossing.
inline SkeinIdentityReport verify_skein_identities(const LinkCode& L, int a,
                                                   const InvariantEngine& eng) {
    if (!has_crossing(L, a)) throw UnknownCrossing(a);
    SkeinIdentityReport rep;
    auto [Lp, Lm, L0] = skein_triple(L, a);

    if (is_self_crossing(L, a)) {
        // L+/L- have n components with the skein component last; L0 has
        // n+1 with the two offspring last.
        detail::Arranged P{&eng, detail::arrange_last(Lp, a)};
        detail::Arranged M{&eng, detail::arrange_last(Lm, a)};
        detail::Arranged Z{&eng, detail::arrange_last(L0, a)};
        const std::size_t n = P.L.component_count();
        const std::size_t sk = n - 1;       // skein component in L+/L-
        const std::size_t z1 = n - 1, z2 = n; // its two halves in L0

        const Rat lk = Z.v1(z1, z2);
        const Rat sum_s_v2 = P.v2(sk) - M.v2(sk);
        const Rat sum_v2 = P.v2(sk) + M.v2(sk);
        const Rat sum_v2_0 = Z.v2(z1) + Z.v2(z2);

        rep.values.emplace_back("V1", sum_s_v2 - 2 * lk);
        rep.values.emplace_back("V2", (P.v3_1(sk) - M.v3_1(sk)) - sum_v2 + 2 * sum_v2_0 -
                                          lk * lk + Rat(1, 3));
        rep.values.emplace_back("V4", (P.v4_1(sk) - M.v4_1(sk)) -
                                          (P.v3_1(sk) + M.v3_1(sk)) +
                                          2 * (Z.v3_1(z1) + Z.v3_1(z2)) + Z.v3_2(z1, z2) -
                                          Rat(3, 2) * lk * (sum_v2 - 2 * sum_v2_0) -
                                          Rat(1, 3) * lk * lk * lk + Rat(7, 6) * lk);
        rep.values.emplace_back("V5", (P.v4_2(sk) - M.v4_2(sk)) + Z.v3_2(z1, z2) +
                                          Rat(1, 6) * lk -
                                          Rat(1, 2) * lk * (sum_v2 - 2 * sum_v2_0));
        Rat V3(0), V6(0);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            V3 += (P.v3_2(i, sk) - M.v3_2(i, sk)) - 2 * Z.v1(i, z1) * Z.v1(i, z2);
            V6 += (P.v4_3(i, sk) - M.v4_3(i, sk)) - (P.v3_2(i, sk) + M.v3_2(i, sk)) +
                  2 * (Z.v3_2(i, z1) + Z.v3_2(i, z2)) -
                  2 * lk * Z.v1(i, z1) * Z.v1(i, z2);
        }
        if (n >= 2) {
            rep.values.emplace_back("V3", V3);
            rep.values.emplace_back("V6", V6);
        }
        if (n >= 3) {
            Rat V7(0);
            for (std::size_t i = 0; i + 1 < n; ++i)
                for (std::size_t j = i + 1; j + 1 < n; ++j)
                    V7 += (P.v4_4(i, j, sk) - M.v4_4(i, j, sk)) -
                          2 * P.v1(i, j) *
                              (Z.v1(i, z1) * Z.v1(j, z2) + Z.v1(i, z2) * Z.v1(j, z1));
            rep.values.emplace_back("V7", V7);
        }
    } else {
        // L+/L- have n+1 components with the two skein components last; L0
        // has n with the merged component last.
        detail::Arranged P{&eng, detail::arrange_last(Lp, a)};
        detail::Arranged M{&eng, detail::arrange_last(Lm, a)};
        detail::Arranged Z{&eng, detail::arrange_last(L0, a)};
        const std::size_t np = P.L.component_count();
        const std::size_t s1 = np - 2, s2 = np - 1; // skein pair in L+/L-
        const std::size_t merged = Z.L.component_count() - 1;

        const Rat sum_s_v32 = P.v3_2(s1, s2) - M.v3_2(s1, s2);
        const Rat sum_v32 = P.v3_2(s1, s2) + M.v3_2(s1, s2);
        rep.values.emplace_back("V8", sum_s_v32 + 2 * (P.v2(s1) + P.v2(s2)) -
                                          2 * Z.v2(merged) - Rat(1, 3));
        const Rat p = P.v1(s1, s2) - 1;
        rep.values.emplace_back("V9", (P.v4_3(s1, s2) - M.v4_3(s1, s2)) +
                                          2 * (P.v3_1(s1) + P.v3_1(s2)) - 2 * Z.v3_1(merged) +
                                          Rat(1, 2) * p * sum_s_v32 - Rat(1, 2) * sum_v32);
        if (np >= 3) {
            Rat V10(0);
            for (std::size_t i = 0; i + 2 < np; ++i)
                V10 += (P.v4_4(i, s1, s2) - M.v4_4(i, s1, s2)) +
                       2 * (P.v3_2(i, s1) + P.v3_2(i, s2)) - 2 * Z.v3_2(i, merged);
            rep.values.emplace_back("V10", V10);
        }
    }
    return rep;
}

} // namespace gauss4

#endif
