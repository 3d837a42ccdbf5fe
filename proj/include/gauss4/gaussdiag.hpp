#ifndef GAUSS4_GAUSSDIAG_HPP
#define GAUSS4_GAUSSDIAG_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "gauss4/linkcode.hpp"
#include "gauss4/rational.hpp"

namespace gauss4 {

// Circles with signed chords. Each circle is the cyclic word of chord ids
// met along the corresponding link component; every chord id appears exactly
// twice across all circles. Chord ids equal crossing ids so that P/G/R terms
// stay traceable in debug output.
struct GaussDiagram {
    std::vector<std::vector<int>> circles;
    std::map<int, int> signs; // chord id -> +1|-1

    friend bool operator==(const GaussDiagram& a, const GaussDiagram& b) {
        return a.circles == b.circles && a.signs == b.signs;
    }
};

// Formal rational combination of Gauss diagrams. Kept unreduced: diagrams
// with equal endpoint structure but different signs must not be merged, and
// cancellation happens only at pairing time.
struct GaussSum {
    std::vector<std::pair<Rat, GaussDiagram>> terms;
};

// Gauss diagram of the selected crossings only; circles retain only the
// endpoints of A.
inline GaussDiagram partial_gauss(const LinkCode& L, const std::set<int>& A) {
    for (int id : A)
        if (!has_crossing(L, id)) throw UnknownCrossing(id);
    GaussDiagram G;
    for (const auto& comp : L.components) {
        std::vector<int> circle;
        for (const auto& p : comp)
            if (A.count(p.crossing_id)) circle.push_back(p.crossing_id);
        G.circles.push_back(std::move(circle));
    }
    for (const auto& comp : L.components)
        for (const auto& p : comp)
            if (A.count(p.crossing_id)) G.signs[p.crossing_id] = p.sign;
    return G;
}

inline GaussDiagram gauss(const LinkCode& L) {
    std::set<int> all;
    for (int id : crossing_ids(L)) all.insert(id);
    return partial_gauss(L, all);
}

// Debug form: circles as parenthesized cyclic id lists with sign
// superscripts, e.g. `(1+ 2+ 1+ 2+)`.
inline std::string debug_string(const GaussDiagram& G) {
    std::string out;
    for (const auto& circle : G.circles) {
        out += '(';
        for (std::size_t i = 0; i < circle.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(circle[i]);
            out += G.signs.at(circle[i]) > 0 ? '+' : '-';
        }
        out += ')';
    }
    return out;
}

} // namespace gauss4

#endif
