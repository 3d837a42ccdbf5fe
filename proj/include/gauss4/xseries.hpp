#ifndef GAUSS4_XSERIES_HPP
#define GAUSS4_XSERIES_HPP

#include <map>

#include "gauss4/npoly.hpp"

namespace gauss4 {

// Truncated Laurent series in x with NPoly coefficients. Exponents live in
// [-4, 4]; products silently drop terms above the truncation degree and
// refuse to generate terms below the window.
struct XSeries {
    static constexpr int min_exp = -4;
    static constexpr int max_exp = 4;

    std::map<int, NPoly> terms; // x exponent -> coefficient

    XSeries() = default;
    explicit XSeries(const Rat& c) { set(0, NPoly(c)); }

    static XSeries monomial(const NPoly& c, int x_exp) {
        XSeries s;
        s.set(x_exp, c);
        return s;
    }

    static XSeries one() { return XSeries(Rat(1)); }

    void set(int x_exp, const NPoly& c) {
        if (c.is_zero()) {
            terms.erase(x_exp);
            return;
        }
        if (x_exp < min_exp) throw RangeOverflow("x exponent below truncation window");
        if (x_exp > max_exp) return;
        terms[x_exp] = c;
    }

    NPoly coeff(int x_exp) const {
        auto it = terms.find(x_exp);
        return it == terms.end() ? NPoly() : it->second;
    }

    bool is_zero() const { return terms.empty(); }

    XSeries& operator+=(const XSeries& o) {
        for (const auto& [e, c] : o.terms) {
            NPoly sum = coeff(e) + c;
            set(e, sum);
        }
        return *this;
    }

    XSeries& operator-=(const XSeries& o) {
        for (const auto& [e, c] : o.terms) {
            NPoly sum = coeff(e) - c;
            set(e, sum);
        }
        return *this;
    }

    friend XSeries operator+(XSeries a, const XSeries& b) { return a += b; }
    friend XSeries operator-(XSeries a, const XSeries& b) { return a -= b; }

    friend XSeries operator*(const XSeries& a, const XSeries& b) {
        XSeries out;
        for (const auto& [ea, ca] : a.terms)
            for (const auto& [eb, cb] : b.terms) {
                const int e = ea + eb;
                if (e > max_exp) continue;
                if (e < min_exp) throw RangeOverflow("x exponent below truncation window");
                NPoly sum = out.coeff(e) + ca * cb;
                out.set(e, sum);
            }
        return out;
    }

    friend XSeries operator*(const Rat& s, const XSeries& a) {
        XSeries out;
        for (const auto& [e, c] : a.terms) out.set(e, s * c);
        return out;
    }

    friend bool operator==(const XSeries& a, const XSeries& b) { return a.terms == b.terms; }

    // True when every exponent is nonnegative.
    bool is_power_series() const {
        return terms.empty() || terms.begin()->first >= 0;
    }
};

// Reciprocal of a series with invertible constant term and no pole part.
inline XSeries series_inverse(const XSeries& a) {
    if (!a.is_power_series()) throw RangeOverflow("inverse of a series with a pole");
    NPoly c0 = a.coeff(0);
    if (c0.coeffs.size() != 1 || c0.coeffs.count(0) == 0)
        throw RangeOverflow("inverse requires a scalar unit constant term");
    const Rat u = c0.coeffs.at(0);
    if (u == 0) throw RangeOverflow("inverse of a series with zero constant term");
    // b solves a*b = 1 degree by degree.
    XSeries b;
    b.set(0, NPoly(Rat(1) / u));
    for (int k = 1; k <= XSeries::max_exp; ++k) {
        NPoly acc;
        for (int j = 0; j < k; ++j) acc += a.coeff(k - j) * b.coeff(j);
        b.set(k, (Rat(-1) / u) * acc);
    }
    return b;
}

inline std::string to_string(const XSeries& s) {
    if (s.terms.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : s.terms) {
        if (!out.empty()) out += "  +  ";
        out += "x^" + std::to_string(e) + "*[" + to_string(c) + "]";
    }
    return out;
}

} // namespace gauss4

#endif
