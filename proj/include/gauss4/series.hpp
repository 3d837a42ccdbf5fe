#ifndef GAUSS4_SERIES_HPP
#define GAUSS4_SERIES_HPP

#include <array>
#include <vector>

#include "gauss4/invariants.hpp"
#include "gauss4/weights.hpp"

namespace gauss4 {

namespace detail {

inline const Rat& get(const std::map<std::pair<std::size_t, std::size_t>, Rat>& m, std::size_t i,
                      std::size_t j) {
    auto it = m.find(i < j ? std::make_pair(i, j) : std::make_pair(j, i));
    if (it == m.end()) throw MissingInvariant("pair invariant missing from report");
    return it->second;
}

inline XSeries exp_truncated(const XSeries& s) {
    if (!s.is_power_series() || !s.coeff(0).is_zero())
        throw RangeOverflow("exp argument must start at x^1");
    XSeries out = XSeries::one();
    XSeries power = XSeries::one();
    Rat fact(1);
    for (int k = 1; k <= XSeries::max_exp; ++k) {
        power = power * s;
        fact *= k;
        out += (Rat(1) / fact) * power;
    }
    return out;
}

// The 13 multi-circle coefficients w(D:L) of the series expansion, paired
// with their weight-table keys. Sub-link invariants are read off the
// report.
inline std::vector<std::pair<std::string, Rat>> w_coefficients(const InvariantReport& rep,
                                                               std::size_t n) {
    std::vector<std::pair<std::string, Rat>> out;
    auto add = [&](const std::string& key, const Rat& c) {
        if (c != 0) out.emplace_back(key, c);
    };

    Rat ca(0), ec(0), ef(0), fd(0), fe(0), ff(0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Rat& l = get(rep.v1, i, j);
            ca += Rat(1, 2) * l * l;
            ec += Rat(1, 6) * l * l * l;
            fd += Rat(1, 24) * l * l * l * l;
            const Rat& m = get(rep.v3_2, i, j);
            ef += m;
            fe += Rat(1, 2) * l * m;
            ff += get(rep.v4_3, i, j);
        }
    add("wL.ca", ca);
    add("wL.ec", ec);
    add("wL.ef", ef);
    add("wL.fd", fd);
    add("wL.fe", fe);
    add("wL.ff", ff);

    Rat fc(0), fg(0), fh(0), fi(0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const Rat &lij = get(rep.v1, i, j), &ljk = get(rep.v1, j, k),
                          &lik = get(rep.v1, i, k);
                fc += lij * ljk * lik;
                // one center joined to the two others
                fg += Rat(1, 4) * (lij * lij * lik * lik + lij * lij * ljk * ljk +
                                   lik * lik * ljk * ljk);
                fh += lij * lik * Rat(1, 2) * ljk * ljk + lij * ljk * Rat(1, 2) * lik * lik +
                      lik * ljk * Rat(1, 2) * lij * lij;
                auto t = rep.v4_4.find({i, j, k});
                if (t == rep.v4_4.end()) throw MissingInvariant("triple invariant missing");
                fi += t->second;
            }
    add("wL.fc", fc);
    add("wL.fg", fg);
    add("wL.fh", fh);
    add("wL.fi", fi);

    Rat fk(0), fj(0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d) {
                    auto v = [&](std::size_t x, std::size_t y) { return get(rep.v1, x, y); };
                    // two disjoint pairs
                    fk += Rat(1, 4) * (v(a, b) * v(a, b) * v(c, d) * v(c, d) +
                                       v(a, c) * v(a, c) * v(b, d) * v(b, d) +
                                       v(a, d) * v(a, d) * v(b, c) * v(b, c));
                    // the three 4-cycles
                    fj += v(a, b) * v(b, c) * v(c, d) * v(d, a) +
                          v(a, b) * v(b, d) * v(d, c) * v(c, a) +
                          v(a, c) * v(c, b) * v(b, d) * v(d, a);
                }
    add("wL.fk", fk);
    add("wL.fj", fj);
    return out;
}

inline XSeries assemble(const InvariantReport& rep, std::size_t n, const Rat& u_chord1,
                        const Rat& u_c2, const Rat& u_d3, const Rat& u_f4a, const Rat& u_f4b,
                        bool homfly_prefactor) {
    const WeightTable& wt = weight_table();
    XSeries arg;
    if (u_chord1 != 0) arg += u_chord1 * wt.at("wK.chord1");
    arg += u_c2 * wt.at("wK.c2");
    arg += u_d3 * wt.at("wK.d3");
    arg += u_f4a * wt.at("wK.f4a");
    arg += u_f4b * wt.at("wK.f4b");
    XSeries series = exp_truncated(arg);

    XSeries dl = XSeries::one();
    for (const auto& [key, c] : w_coefficients(rep, n)) dl += c * wt.at(key);
    series = series * dl;

    if (homfly_prefactor && n >= 1)
        series = XSeries::monomial(NPoly::monomial(Rat(1), static_cast<int>(n) - 1), 0) * series;
    return series;
}

} // namespace detail

// Degree-4 power series of the Homfly polynomial assembled from the
// invariant report: N^{n-1} W(exp(sum u(D) D) . sum w(D) D) with the
// weight system extended multiplicatively over formal diagram products.
inline XSeries homfly_series(const LinkCode& L, const InvariantReport& rep) {
    const std::size_t n = L.component_count();
    // Constants sit outside the component sums in all four exponent
    // coefficients; for split unlinks this reproduces delta^{n-1} exactly.
    Rat u1(0), u2 = Rat(1, 6), u3(0), u4a = Rat(-1, 360), u4b = Rat(1, 360);
    for (std::size_t i = 0; i < n; ++i) {
        u2 += rep.v2.at(i);
        u3 += rep.v3_1.at(i);
        u4a += rep.v4_1.at(i);
        u4b += rep.v4_2.at(i);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) u1 -= detail::get(rep.v1, i, j);
    return detail::assemble(rep, n, u1, u2, u3, u4a, u4b, true);
}

// Same assembly without the N^{n-1} prefactor and with the bare w(D:L)
// coefficients of the Kontsevich expansion (constants not folded in).
inline XSeries kontsevich_series(const LinkCode& L, const InvariantReport& rep) {
    const std::size_t n = L.component_count();
    Rat u2(0), u3(0), u4a(0), u4b(0);
    for (std::size_t i = 0; i < n; ++i) {
        u2 += rep.v2.at(i);
        u3 += rep.v3_1.at(i);
        u4a += rep.v4_1.at(i);
        u4b += rep.v4_2.at(i);
    }
    return detail::assemble(rep, n, Rat(0), u2, u3, u4a, u4b, false);
}

} // namespace gauss4

#endif
