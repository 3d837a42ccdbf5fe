#ifndef GAUSS4_PAIRING_HPP
#define GAUSS4_PAIRING_HPP

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "gauss4/configuration.hpp"
#include "gauss4/gaussdiag.hpp"

namespace gauss4 {

namespace detail {

// Where a chord touches the circles of a diagram: circle index per endpoint.
struct ChordShape {
    int lo_circle = 0;
    int hi_circle = 0; // lo <= hi; equal for self chords
};

template <typename Diagram>
std::map<int, ChordShape> chord_shapes(const Diagram& d) {
    std::map<int, std::vector<int>> touch;
    for (std::size_t c = 0; c < d.circles.size(); ++c)
        for (int id : d.circles[c]) touch[id].push_back(static_cast<int>(c));
    std::map<int, ChordShape> out;
    for (auto& [id, t] : touch) {
        ChordShape s;
        s.lo_circle = std::min(t[0], t[1]);
        s.hi_circle = std::max(t[0], t[1]);
        out[id] = s;
    }
    return out;
}

// Does the cyclic word `have` (chord ids along a G circle, restricted to the
// embedded chords) realize the mapped configuration word `want`?
inline bool cyclic_realizes(const std::vector<int>& have, const std::vector<int>& want) {
    if (have.size() != want.size()) return false;
    const std::size_t n = have.size();
    if (n == 0) return true;
    for (std::size_t r = 0; r < n; ++r) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            ok = have[(r + i) % n] == want[i];
        if (ok) return true;
    }
    return false;
}

struct PairState {
    const GaussDiagram* G;
    const Configuration* C;
    std::vector<int> cfg_chords;              // configuration chord ids
    std::map<int, ChordShape> g_shape, c_shape;
    std::vector<int> circle_map;              // config circle -> G circle
    std::map<int, int> assign;                // config chord -> G chord
    std::set<int> used;                       // G chords already taken
    std::set<std::vector<std::pair<int, int>>> kappas; // dedup classes
};

inline bool circles_consistent(const PairState& st) {
    // Full check of every configuration circle against its image.
    for (std::size_t ci = 0; ci < st.C->circles.size(); ++ci) {
        const auto& word = st.C->circles[ci];
        std::vector<int> want;
        want.reserve(word.size());
        for (int id : word) want.push_back(st.assign.at(id));
        // Image chords with an endpoint on this configuration circle. A
        // joining image chord contributes the single endpoint it has on the
        // image circle; a self image chord contributes both.
        std::set<int> members(want.begin(), want.end());
        const auto& gcirc = st.G->circles[st.circle_map[ci]];
        std::vector<int> have;
        for (int id : gcirc)
            if (members.count(id)) have.push_back(id);
        if (!cyclic_realizes(have, want)) return false;
    }
    return true;
}

inline void record_embedding(PairState& st) {
    std::vector<std::pair<int, int>> kappa;
    kappa.reserve(st.assign.size());
    for (const auto& [cid, gid] : st.assign)
        kappa.emplace_back(gid, st.C->multiplicity.at(cid));
    std::sort(kappa.begin(), kappa.end());
    st.kappas.insert(std::move(kappa));
}

inline void extend(PairState& st, std::size_t k) {
    if (k == st.cfg_chords.size()) {
        if (circles_consistent(st)) record_embedding(st);
        return;
    }
    const int cid = st.cfg_chords[k];
    const ChordShape cs = st.c_shape.at(cid);
    const int gi = st.circle_map[cs.lo_circle];
    const int gj = st.circle_map[cs.hi_circle];
    for (const auto& [gid, gs] : st.g_shape) {
        if (st.used.count(gid)) continue;
        const int glo = std::min(gi, gj), ghi = std::max(gi, gj);
        if (gs.lo_circle != glo || gs.hi_circle != ghi) continue;
        st.assign[cid] = gid;
        st.used.insert(gid);
        extend(st, k + 1);
        st.used.erase(gid);
        st.assign.erase(cid);
    }
}

} // namespace detail

// The pairing <G,C>_chi of Definition-16 type: sum over equivalence classes
// of orientation-preserving embeddings of the configuration into the Gauss
// diagram of prod_c eps(psi(c))^{m(c)}, where two embeddings are identified
// iff they induce the same multiplicity map kappa on G's chords.
inline Rat pair(const GaussDiagram& G, const Configuration& C) {
    if (G.circles.size() != C.circles.size()) return Rat(0);

    detail::PairState st;
    st.G = &G;
    st.C = &C;
    for (int id : C.chord_ids()) st.cfg_chords.push_back(id);
    if (st.cfg_chords.size() > G.signs.size()) return Rat(0);
    st.g_shape = detail::chord_shapes(G);
    st.c_shape = detail::chord_shapes(C);

    const std::size_t n = G.circles.size();
    std::vector<int> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
    do {
        bool fits = true;
        for (std::size_t i = 0; i < n && fits; ++i)
            fits = C.circles[i].size() <= G.circles[perm[i]].size();
        if (!fits) continue;
        st.circle_map = perm;
        detail::extend(st, 0);
    } while (std::next_permutation(perm.begin(), perm.end()));

    Rat total(0);
    for (const auto& kappa : st.kappas) {
        long long e = 1;
        for (const auto& [gid, m] : kappa) {
            int s = G.signs.at(gid);
            e *= (m == 2) ? s * s : s;
        }
        total += e;
    }
    return total;
}

inline Rat pair_sum(const GaussSum& Gs, const ConfigCombo& Cs) {
    Rat total(0);
    for (const auto& [b, g] : Gs.terms)
        for (const auto& [c, d] : Cs.terms) total += b * c * pair(g, d);
    return total;
}

inline Rat pair_sum(const GaussSum& Gs, const Configuration& C) {
    Rat total(0);
    for (const auto& [b, g] : Gs.terms) total += b * pair(g, C);
    return total;
}

inline Rat pair_sum(const GaussDiagram& G, const ConfigCombo& Cs) {
    Rat total(0);
    for (const auto& [c, d] : Cs.terms) total += c * pair(G, d);
    return total;
}

} // namespace gauss4

#endif
