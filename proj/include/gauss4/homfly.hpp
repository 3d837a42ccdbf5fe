#ifndef GAUSS4_HOMFLY_HPP
#define GAUSS4_HOMFLY_HPP

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gauss4/linkcode.hpp"
#include "gauss4/surgery.hpp"
#include "gauss4/xseries.hpp"

namespace gauss4 {

// Exact Homfly polynomial in t and z. z exponents may be negative for
// links, never below -(components-1).
struct HomflyPoly {
    std::map<std::pair<int, int>, Rat> coeffs; // (t_exp, z_exp) -> coefficient

    static HomflyPoly monomial(const Rat& c, int t_exp, int z_exp) {
        HomflyPoly p;
        if (c != 0) p.coeffs[{t_exp, z_exp}] = c;
        return p;
    }

    static HomflyPoly one() { return monomial(Rat(1), 0, 0); }

    bool is_zero() const { return coeffs.empty(); }

    HomflyPoly& operator+=(const HomflyPoly& o) {
        for (const auto& [k, c] : o.coeffs) {
            Rat& slot = coeffs[k];
            slot += c;
            if (slot == 0) coeffs.erase(k);
        }
        return *this;
    }

    friend HomflyPoly operator+(HomflyPoly a, const HomflyPoly& b) { return a += b; }

    friend HomflyPoly operator*(const HomflyPoly& a, const HomflyPoly& b) {
        HomflyPoly out;
        for (const auto& [ka, ca] : a.coeffs)
            for (const auto& [kb, cb] : b.coeffs) {
                auto key = std::make_pair(ka.first + kb.first, ka.second + kb.second);
                Rat& slot = out.coeffs[key];
                slot += ca * cb;
                if (slot == 0) out.coeffs.erase(key);
            }
        return out;
    }

    friend HomflyPoly operator*(const Rat& s, const HomflyPoly& p) {
        HomflyPoly out;
        if (s == 0) return out;
        for (const auto& [k, c] : p.coeffs) out.coeffs[k] = s * c;
        return out;
    }

    friend bool operator==(const HomflyPoly& a, const HomflyPoly& b) {
        return a.coeffs == b.coeffs;
    }
};

// delta = (t - t^-1)/z, the value of a split unlink per extra component.
inline HomflyPoly homfly_delta() {
    HomflyPoly d;
    d.coeffs[{+1, -1}] = 1;
    d.coeffs[{-1, -1}] = -1;
    return d;
}

inline HomflyPoly homfly_delta_pow(std::size_t k) {
    HomflyPoly out = HomflyPoly::one();
    for (std::size_t i = 0; i < k; ++i) out = out * homfly_delta();
    return out;
}

// (L+, L-, L0) at crossing a: sign forced positive, forced negative, and
// the oriented smoothing.
inline std::tuple<LinkCode, LinkCode, LinkCode> skein_triple(const LinkCode& L, int a) {
    if (!has_crossing(L, a)) throw UnknownCrossing(a);
    const int sign = writhe_signs(L).at(a);
    LinkCode plus = sign > 0 ? L : switch_crossing(L, a);
    LinkCode minus = sign > 0 ? switch_crossing(L, a) : L;
    LinkCode zero = smooth(L, {a}, "A");
    return {plus, minus, zero};
}

namespace detail {

// First crossing (in traversal order) met on its underpass; -1 when the
// diagram is descending.
inline int first_defect(const LinkCode& L) {
    std::set<int> seen;
    for (const auto& comp : L.components)
        for (const auto& p : comp) {
            if (seen.count(p.crossing_id)) continue;
            seen.insert(p.crossing_id);
            if (p.strand == Strand::Under) return p.crossing_id;
        }
    return -1;
}

struct HomflySolver {
    std::map<std::string, HomflyPoly> memo;

    HomflyPoly solve(const LinkCode& L) {
        // Split off crossingless circles: each contributes a delta factor.
        LinkCode core;
        std::size_t empties = 0;
        for (const auto& comp : L.components) {
            if (comp.empty()) ++empties;
            else core.components.push_back(comp);
        }
        if (core.components.empty())
            return empties == 0 ? HomflyPoly::one() : homfly_delta_pow(empties - 1);
        HomflyPoly p = solve_core(core);
        return empties == 0 ? p : homfly_delta_pow(empties) * p;
    }

  private:
    HomflyPoly solve_core(const LinkCode& L) {
        const std::string key = canonical_key(L);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;

        HomflyPoly out;
        const int a = first_defect(L);
        if (a < 0) {
            // Descending diagrams are split unlinks.
            out = homfly_delta_pow(L.component_count() - 1);
        } else {
            const int sign = writhe_signs(L).at(a);
            HomflyPoly switched = solve(switch_crossing(L, a));
            HomflyPoly smoothed = solve(smooth(L, {a}, "A"));
            if (sign > 0) {
                // t P+ - t^-1 P- = z P0, solved for P+.
                out = HomflyPoly::monomial(Rat(1), -2, 0) * switched +
                      HomflyPoly::monomial(Rat(1), -1, 1) * smoothed;
            } else {
                out = HomflyPoly::monomial(Rat(1), +2, 0) * switched +
                      HomflyPoly::monomial(Rat(-1), +1, 1) * smoothed;
            }
        }
        memo.emplace(key, out);
        return out;
    }

    // Ids renumbered in first-visit order; basepoints and component order
    // are taken as given (correctness does not depend on the hit rate).
    static std::string canonical_key(const LinkCode& L) {
        std::map<int, int> relabel;
        std::string key;
        for (const auto& comp : L.components) {
            for (const auto& p : comp) {
                auto [it, fresh] = relabel.emplace(p.crossing_id, relabel.size() + 1);
                key += p.strand == Strand::Over ? 'O' : 'U';
                key += std::to_string(it->second);
                key += p.sign > 0 ? '+' : '-';
                (void)fresh;
            }
            key += '/';
        }
        return key;
    }
};

} // namespace detail

// Homfly polynomial by skein recursion toward the descending diagram, with
// P(unknot) = 1 and t P(L+) - t^-1 P(L-) = z P(L0).
inline HomflyPoly homfly(const LinkCode& L) {
    detail::HomflySolver solver;
    return solver.solve(L);
}

// P(e^{Nx/2}, e^{x/2} - e^{-x/2}) truncated at degree four. Throws
// PrincipalPartNonzero if the substituted series keeps a pole at x = 0,
// which signals an inconsistent input polynomial.
//
// Negative z powers shift degrees down, so the expansion is carried out in
// a wider internal window before truncating to the XSeries range.
inline XSeries substitute(const HomflyPoly& P) {
    int min_z = 0;
    for (const auto& [key, c] : P.coeffs) min_z = std::min(min_z, key.second);
    const int W = XSeries::max_exp - min_z; // internal degree bound

    using Dense = std::vector<NPoly>; // index = x degree, 0..W
    auto mul = [&](const Dense& a, const Dense& b) {
        Dense out(W + 1);
        for (int i = 0; i <= W; ++i)
            for (int j = 0; i + j <= W; ++j) out[i + j] += a[i] * b[j];
        return out;
    };

    // exp(k N x / 2) up to degree W.
    auto exp_t = [&](int k) {
        Dense s(W + 1);
        Rat fact(1), pow(1);
        for (int m = 0; m <= W; ++m) {
            if (m > 0) {
                fact *= m;
                pow *= Rat(k, 2);
            }
            s[m] = NPoly::monomial(pow / fact, m);
        }
        return s;
    };

    // zx = z/x = 2 sinh(x/2)/x, a unit power series, and its inverse.
    Dense zx(W + 1);
    {
        Rat fact(1), pow(1); // (1/2)^m / m!, odd m only, via 2 sinh(x/2)
        for (int m = 0; m <= W + 1; ++m) {
            if (m > 0) {
                fact *= m;
                pow *= Rat(1, 2);
            }
            if (m % 2 == 1 && m - 1 <= W) zx[m - 1] = NPoly(2 * pow / fact);
        }
    }
    Dense zx_inv(W + 1);
    zx_inv[0] = NPoly(Rat(1));
    for (int k = 1; k <= W; ++k) {
        NPoly acc;
        for (int j = 0; j < k; ++j) acc += zx[k - j] * zx_inv[j];
        zx_inv[k] = Rat(-1) * acc;
    }

    // Sum of c * exp(t_exp N x/2) * x^{z_exp} * zx^{±...} over the support.
    std::map<int, NPoly> full; // true x exponent -> coefficient
    for (const auto& [key, c] : P.coeffs) {
        const auto [t_exp, z_exp] = key;
        Dense term = exp_t(t_exp);
        const Dense& factor = z_exp >= 0 ? zx : zx_inv;
        for (int i = 0; i < (z_exp >= 0 ? z_exp : -z_exp); ++i) term = mul(term, factor);
        for (int e = 0; e <= W; ++e) {
            if (term[e].is_zero()) continue;
            NPoly& slot = full[e + z_exp];
            slot += c * term[e];
            if (slot.is_zero()) full.erase(e + z_exp);
        }
    }

    XSeries out;
    for (const auto& [e, coeffv] : full) {
        if (e < 0) throw PrincipalPartNonzero("substituted series has a pole at x = 0");
        if (e <= XSeries::max_exp) out.set(e, coeffv);
    }
    return out;
}

} // namespace gauss4

#endif
