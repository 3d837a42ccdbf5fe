#ifndef GAUSS4_SURGERY_HPP
#define GAUSS4_SURGERY_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gauss4/gaussdiag.hpp"
#include "gauss4/linkcode.hpp"

namespace gauss4 {

// Splitting letters: A = reconnection respecting the original orientations
// (Seifert type), B = the reconnection reversing one arc, C = leave the
// crossing alone.
using SplitWord = std::string;

struct WordCombo {
    std::vector<std::pair<Rat, SplitWord>> terms;

    WordCombo& add(const Rat& coeff, const SplitWord& w) {
        terms.emplace_back(coeff, w);
        return *this;
    }
};

struct LinkCodeSum {
    std::vector<std::pair<Rat, LinkCode>> terms;
};

// How alpha picks the strand on top at a crossing's first encounter. Both
// rules yield a diagram of split unknots; Theorem-level values cannot
// depend on the choice, and the test suite recomputes with each.
enum class AlphaRule { FirstEncounterOver, FirstEncounterUnder };

// Switches crossings so the diagram becomes descending: traverse components
// in index order from each basepoint and make every first encounter an
// overpass (or underpass, under the alternate rule).
inline LinkCode alpha_unknot(const LinkCode& L, AlphaRule rule = AlphaRule::FirstEncounterOver,
                             bool reverse_component_order = false) {
    std::set<int> seen;
    std::set<int> to_switch;
    const Strand want = rule == AlphaRule::FirstEncounterOver ? Strand::Over : Strand::Under;
    std::vector<std::size_t> order(L.components.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    if (reverse_component_order) std::reverse(order.begin(), order.end());
    for (std::size_t c : order)
        for (const auto& p : L.components[c]) {
            if (seen.count(p.crossing_id)) continue;
            seen.insert(p.crossing_id);
            if (p.strand != want) to_switch.insert(p.crossing_id);
        }
    LinkCode out = L;
    for (int id : to_switch) out = switch_crossing(out, id);
    return out;
}

// Q of the splitting definition: replace every selected crossing by the
// reconnection named by its letter, then orient the result. Letters refer
// to original orientations; the replacements are local and disjoint, so
// they are applied simultaneously.
//
// Implementation walks a port graph. Every pass occurrence is a site with
// an in port (even index) and an out port (odd index); arcs join out(s) to
// in(succ(s)). The parity of the port we stand on encodes the direction of
// travel relative to the original orientation, so A joins in/out ports
// across the two sites, B joins like ports (reversing), and a surviving
// site joins its own in and out.
//
// Each resulting circle is oriented so that its lowest surviving pass runs
// forward; a crossing's sign flips iff exactly one of its passes ends up
// reversed, and over/under flags never change.
inline LinkCode smooth(const LinkCode& L, const std::vector<int>& selected, const SplitWord& word) {
    if (selected.size() != word.size())
        throw LengthMismatch("selected crossings and word length differ");
    std::map<int, char> letter;
    for (std::size_t i = 0; i < selected.size(); ++i) {
        if (!has_crossing(L, selected[i])) throw UnknownCrossing(selected[i]);
        if (letter.count(selected[i])) throw LengthMismatch("crossing selected twice");
        const char w = word[i];
        if (w != 'A' && w != 'B' && w != 'C')
            throw LengthMismatch("bad splitting letter");
        letter[selected[i]] = w;
    }

    // Site table.
    std::vector<PassLoc> sites;
    for (std::size_t c = 0; c < L.components.size(); ++c)
        for (std::size_t p = 0; p < L.components[c].size(); ++p)
            sites.push_back({c, p});
    const std::size_t n = sites.size();
    auto pass_at = [&](std::size_t s) -> const Pass& {
        return L.components[sites[s].comp][sites[s].pos];
    };

    std::vector<std::size_t> succ(n);
    {
        std::map<std::pair<std::size_t, std::size_t>, std::size_t> idx;
        for (std::size_t s = 0; s < n; ++s) idx[{sites[s].comp, sites[s].pos}] = s;
        for (std::size_t s = 0; s < n; ++s) {
            const auto& comp = L.components[sites[s].comp];
            succ[s] = idx[{sites[s].comp, (sites[s].pos + 1) % comp.size()}];
        }
    }

    // Arc edges as a port involution: out(s) <-> in(succ(s)).
    std::vector<std::size_t> arc_mate(2 * n);
    for (std::size_t s = 0; s < n; ++s) {
        arc_mate[2 * s + 1] = 2 * succ[s];
        arc_mate[2 * succ[s]] = 2 * s + 1;
    }

    // Site edges.
    std::map<int, std::vector<std::size_t>> sites_of;
    for (std::size_t s = 0; s < n; ++s) sites_of[pass_at(s).crossing_id].push_back(s);
    std::vector<std::size_t> site_mate(2 * n);
    std::vector<bool> survives(n, true);
    for (std::size_t s = 0; s < n; ++s) {
        const int id = pass_at(s).crossing_id;
        auto it = letter.find(id);
        const char w = it == letter.end() ? 'C' : it->second;
        const auto& ss = sites_of[id];
        const std::size_t t = ss[0] == s ? ss[1] : ss[0];
        if (w == 'C') {
            site_mate[2 * s] = 2 * s + 1;
            site_mate[2 * s + 1] = 2 * s;
        } else if (w == 'A') {
            survives[s] = false;
            site_mate[2 * s] = 2 * t + 1; // in(s) <-> out(t)
            site_mate[2 * s + 1] = 2 * t;
        } else {
            survives[s] = false;
            site_mate[2 * s] = 2 * t;         // in(s) <-> in(t)
            site_mate[2 * s + 1] = 2 * t + 1; // out(s) <-> out(t)
        }
    }

    // Alternating walk: arc edge, then site edge. Arriving at an in port
    // means moving forward; at an out port, backward.
    struct Visit {
        std::size_t site;
        bool forward;
    };
    std::vector<bool> seen_port(2 * n, false);
    struct Cycle {
        std::vector<Visit> visits;
        // (smallest surviving site, smallest port): sites are partitioned
        // among cycles, and ports break ties for crossingless circles.
        std::pair<std::size_t, std::size_t> order_key;
    };
    std::vector<Cycle> cycles;

    for (std::size_t start = 0; start < 2 * n; ++start) {
        if (seen_port[start]) continue;
        Cycle cyc;
        cyc.order_key = {n, 2 * n};
        std::size_t p = start;
        do {
            seen_port[p] = true;
            const std::size_t q = arc_mate[p];
            seen_port[q] = true;
            const std::size_t s = q / 2;
            cyc.order_key.second = std::min({cyc.order_key.second, p, q});
            if (survives[s]) {
                cyc.visits.push_back({s, q % 2 == 0});
                cyc.order_key.first = std::min(cyc.order_key.first, s);
            }
            p = site_mate[q];
        } while (p != start);
        cycles.push_back(std::move(cyc));
    }

    // Orient and anchor each cycle at its smallest surviving site.
    for (auto& cyc : cycles) {
        auto& v = cyc.visits;
        if (v.empty()) continue;
        std::size_t best = 0;
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i].site < v[best].site) best = i;
        std::rotate(v.begin(), v.begin() + best, v.end());
        if (!v[0].forward) {
            std::reverse(v.begin() + 1, v.end());
            for (auto& x : v) x.forward = !x.forward;
        }
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const Cycle& a, const Cycle& b) { return a.order_key < b.order_key; });

    std::map<int, int> reversed_count;
    for (const auto& cyc : cycles)
        for (const auto& v : cyc.visits)
            if (!v.forward) ++reversed_count[pass_at(v.site).crossing_id];

    LinkCode out;
    for (const auto& cyc : cycles) {
        std::vector<Pass> comp;
        for (const auto& v : cyc.visits) {
            Pass p = pass_at(v.site);
            if (reversed_count[p.crossing_id] == 1) p.sign = -p.sign;
            comp.push_back(p);
        }
        out.components.push_back(std::move(comp));
    }
    return out;
}

// S(L): the formal sum of the components, each taken alone.
inline LinkCodeSum split_components(const LinkCode& L) {
    LinkCodeSum out;
    for (std::size_t i = 0; i < L.components.size(); ++i)
        out.terms.emplace_back(Rat(1), self_subdiagram(L, i));
    return out;
}

inline std::size_t component_count_after(const LinkCode& L, const std::vector<int>& selected,
                                         const SplitWord& word) {
    return smooth(L, selected, word).component_count();
}

// R = G o alpha o S o Q, extended linearly over a word combination.
inline GaussSum R(const LinkCode& L, const std::vector<int>& selected, const WordCombo& combo,
                  AlphaRule rule = AlphaRule::FirstEncounterOver,
                  bool reverse_component_order = false) {
    GaussSum out;
    for (const auto& [coeff, word] : combo.terms) {
        if (coeff == 0) continue;
        LinkCode q = smooth(L, selected, word);
        for (std::size_t i = 0; i < q.components.size(); ++i) {
            LinkCode k = self_subdiagram(q, i);
            out.terms.emplace_back(coeff, gauss(alpha_unknot(k, rule, reverse_component_order)));
        }
    }
    return out;
}

// G(L) - G(alpha(L)) as a two-term formal sum.
inline GaussSum bar_gauss(const LinkCode& L, AlphaRule rule = AlphaRule::FirstEncounterOver,
                          bool reverse_component_order = false) {
    GaussSum out;
    out.terms.emplace_back(Rat(1), gauss(L));
    out.terms.emplace_back(Rat(-1), gauss(alpha_unknot(L, rule, reverse_component_order)));
    return out;
}

inline GaussSum bar_partial(const LinkCode& L, const std::set<int>& A,
                            AlphaRule rule = AlphaRule::FirstEncounterOver,
                            bool reverse_component_order = false) {
    GaussSum out;
    out.terms.emplace_back(Rat(1), partial_gauss(L, A));
    out.terms.emplace_back(Rat(-1), partial_gauss(alpha_unknot(L, rule, reverse_component_order), A));
    return out;
}

} // namespace gauss4

#endif
