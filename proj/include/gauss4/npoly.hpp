#ifndef GAUSS4_NPOLY_HPP
#define GAUSS4_NPOLY_HPP

#include <map>
#include <string>

#include "gauss4/rational.hpp"

namespace gauss4 {

// Laurent polynomial in N over the rationals, canonical (no zero terms).
struct NPoly {
    std::map<int, Rat> coeffs; // exponent of N -> coefficient

    NPoly() = default;
    explicit NPoly(const Rat& c) {
        if (c != 0) coeffs[0] = c;
    }

    static NPoly monomial(const Rat& c, int n_exp) {
        NPoly p;
        if (c != 0) p.coeffs[n_exp] = c;
        return p;
    }

    bool is_zero() const { return coeffs.empty(); }

    NPoly& operator+=(const NPoly& o) {
        for (const auto& [e, c] : o.coeffs) {
            Rat& slot = coeffs[e];
            slot += c;
            if (slot == 0) coeffs.erase(e);
        }
        return *this;
    }

    NPoly& operator-=(const NPoly& o) {
        for (const auto& [e, c] : o.coeffs) {
            Rat& slot = coeffs[e];
            slot -= c;
            if (slot == 0) coeffs.erase(e);
        }
        return *this;
    }

    friend NPoly operator+(NPoly a, const NPoly& b) { return a += b; }
    friend NPoly operator-(NPoly a, const NPoly& b) { return a -= b; }

    friend NPoly operator*(const NPoly& a, const NPoly& b) {
        NPoly out;
        for (const auto& [ea, ca] : a.coeffs)
            for (const auto& [eb, cb] : b.coeffs) {
                Rat& slot = out.coeffs[ea + eb];
                slot += ca * cb;
                if (slot == 0) out.coeffs.erase(ea + eb);
            }
        return out;
    }

    friend NPoly operator*(const Rat& s, const NPoly& p) {
        NPoly out;
        if (s == 0) return out;
        for (const auto& [e, c] : p.coeffs) out.coeffs[e] = s * c;
        return out;
    }

    friend bool operator==(const NPoly& a, const NPoly& b) { return a.coeffs == b.coeffs; }

    Rat eval(const Rat& n_value) const {
        Rat out(0);
        for (const auto& [e, c] : coeffs) {
            Rat power(1);
            for (int i = 0; i < (e < 0 ? -e : e); ++i) power *= n_value;
            if (e < 0) out += c / power;
            else out += c * power;
        }
        return out;
    }
};

inline std::string to_string(const NPoly& p) {
    if (p.coeffs.empty()) return "0";
    std::string out;
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += "(" + to_string(it->second) + ")";
        if (it->first != 0) out += "*N^" + std::to_string(it->first);
    }
    return out;
}

} // namespace gauss4

#endif
