#ifndef GAUSS4_WEIGHTS_HPP
#define GAUSS4_WEIGHTS_HPP

#include <map>
#include <string>

#include "gauss4/xseries.hpp"

namespace gauss4 {

// su(N) weight values of the series basis diagrams, each an x^deg monomial
// with a Laurent-in-N coefficient. The listed prefactors (-1/2)^k of the
// source table are folded into the values.
using WeightTable = std::map<std::string, XSeries>;

namespace detail {

inline NPoly npoly(std::initializer_list<std::pair<int, Rat>> terms) {
    NPoly p;
    for (const auto& [e, c] : terms)
        if (c != 0) p.coeffs[e] = c;
    return p;
}

} // namespace detail

inline const WeightTable& weight_table() {
    using detail::npoly;
    static const WeightTable table = [] {
        WeightTable t;
        auto put = [&](const std::string& key, int deg, NPoly p) {
            t[key] = XSeries::monomial(p, deg);
        };
        // one-circle generators
        put("wK.chord1", 1, npoly({{1, Rat(1, 2)}, {-1, Rat(-1, 2)}}));          // (N^2-1)/2N
        put("wK.c2", 2, npoly({{2, Rat(-1, 4)}, {0, Rat(1, 4)}}));               // -(N^2-1)/4
        put("wK.d3", 3, npoly({{3, Rat(1, 8)}, {1, Rat(-1, 8)}}));               // N(N^2-1)/8
        put("wK.f4a", 4, npoly({{4, Rat(-1, 16)}, {2, Rat(1, 16)}}));            // -N^2(N^2-1)/16
        put("wK.f4b", 4, npoly({{4, Rat(1, 16)}, {2, Rat(1, 16)}, {0, Rat(-2, 16)}})); // (N^2-1)(N^2+2)/16
        // multi-circle diagrams
        put("wL.ca", 2, npoly({{0, Rat(1, 4)}, {-2, Rat(-1, 4)}}));              // (N^2-1)/4N^2
        put("wL.ec", 3, npoly({{1, Rat(1, 8)}, {-1, Rat(-3, 8)}, {-3, Rat(2, 8)}})); // (N^2-1)(N^2-2)/8N^3
        put("wL.ef", 3, npoly({{1, Rat(-1, 8)}, {-1, Rat(1, 8)}}));              // -(N^2-1)/8N
        put("wL.fc", 3, npoly({{-1, Rat(1, 8)}, {-3, Rat(-1, 8)}}));             // (N^2-1)/8N^3
        put("wL.fd", 4, npoly({{2, Rat(1, 16)}, {0, Rat(-4, 16)}, {-2, Rat(6, 16)}, {-4, Rat(-3, 16)}})); // (N^2-1)(N^4-3N^2+3)/16N^4
        put("wL.fe", 4, npoly({{2, Rat(-1, 16)}, {0, Rat(3, 16)}, {-2, Rat(-2, 16)}})); // -(N^2-1)(N^2-2)/16N^2
        put("wL.ff", 4, npoly({{2, Rat(1, 16)}, {0, Rat(-1, 16)}}));             // (N^2-1)/16
        put("wL.fg", 4, npoly({{0, Rat(1, 16)}, {-2, Rat(-2, 16)}, {-4, Rat(1, 16)}})); // (N^2-1)^2/16N^4
        put("wL.fh", 4, npoly({{0, Rat(1, 16)}, {-2, Rat(-3, 16)}, {-4, Rat(2, 16)}})); // (N^2-1)(N^2-2)/16N^4
        put("wL.fi", 4, npoly({{0, Rat(-1, 16)}, {-2, Rat(1, 16)}}));            // -(N^2-1)/16N^2
        put("wL.fk", 4, npoly({{0, Rat(1, 16)}, {-2, Rat(-2, 16)}, {-4, Rat(1, 16)}})); // (N^2-1)^2/16N^4
        put("wL.fj", 4, npoly({{-2, Rat(1, 16)}, {-4, Rat(-1, 16)}}));           // (N^2-1)/16N^4
        return t;
    }();
    return table;
}

} // namespace gauss4

#endif
