#ifndef GAUSS4_CORPUS_HPP
#define GAUSS4_CORPUS_HPP

#include <numeric>
#include <random>
#include <vector>

#include "gauss4/linkcode.hpp"

namespace gauss4 {

// Closure of a braid word. Letters are nonzero integers: +i is the positive
// generator sigma_i (lower strand crosses over, crossing sign +1), -i its
// inverse. Crossing ids follow the word order, 1-based. Closures are
// realizable diagrams by construction, which is what makes them suitable
// verification inputs.
inline LinkCode braid_closure(const std::vector<int>& word, int strands = 0) {
    int k = strands;
    for (int w : word) {
        if (w == 0) throw ValidationError("braid letter 0");
        k = std::max(k, std::abs(w) + 1);
    }
    if (k < 1) k = 1;

    std::vector<int> strand_at(k);              // position -> strand id
    std::iota(strand_at.begin(), strand_at.end(), 0);
    std::vector<std::vector<Pass>> trace(k);    // strand id -> passes in time order

    for (std::size_t t = 0; t < word.size(); ++t) {
        const int letter = word[t];
        const int i = std::abs(letter) - 1;
        const int id = static_cast<int>(t) + 1;
        const int sign = letter > 0 ? +1 : -1;
        const int lower = strand_at[i], upper = strand_at[i + 1];
        trace[lower].push_back({id, letter > 0 ? Strand::Over : Strand::Under, sign});
        trace[upper].push_back({id, letter > 0 ? Strand::Under : Strand::Over, sign});
        std::swap(strand_at[i], strand_at[i + 1]);
    }

    // Components follow the permutation cycles: position p at the top wires
    // to the strand that started at p.
    std::vector<int> ends_at(k); // strand id -> final position
    for (int p = 0; p < k; ++p) ends_at[strand_at[p]] = p;
    std::vector<bool> used(k, false);
    LinkCode out;
    for (int s = 0; s < k; ++s) {
        if (used[s]) continue;
        std::vector<Pass> comp;
        int cur = s;
        do {
            used[cur] = true;
            comp.insert(comp.end(), trace[cur].begin(), trace[cur].end());
            cur = ends_at[cur];
        } while (cur != s);
        out.components.push_back(std::move(comp));
    }
    validate(out);
    return out;
}

// Random realizable codes: braid closures with shuffled basepoints and
// component order, at most `max_crossings` crossings and `max_components`
// components.
inline std::vector<LinkCode> random_corpus(std::uint64_t seed, std::size_t size,
                                           std::size_t max_crossings = 8,
                                           std::size_t max_components = 3) {
    std::mt19937_64 rng(seed);
    std::vector<LinkCode> out;
    while (out.size() < size) {
        const int strands = std::uniform_int_distribution<int>(2, 4)(rng);
        const std::size_t len =
            std::uniform_int_distribution<std::size_t>(1, max_crossings)(rng);
        std::vector<int> word(len);
        for (auto& w : word) {
            w = std::uniform_int_distribution<int>(1, strands - 1)(rng);
            if (std::uniform_int_distribution<int>(0, 1)(rng)) w = -w;
        }
        LinkCode L = braid_closure(word, strands);
        if (L.component_count() > max_components) continue;
        // Crossingless split circles cannot ride along in text fixtures;
        // keep the random corpus free of them as well.
        bool has_empty = false;
        for (const auto& c : L.components) has_empty |= c.empty();
        if (has_empty) continue;
        for (std::size_t c = 0; c < L.component_count(); ++c) {
            const std::size_t n = L.components[c].size();
            if (n > 1)
                L = rotate_basepoint(L, c, std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
        }
        std::shuffle(L.components.begin(), L.components.end(), rng);
        out.push_back(std::move(L));
    }
    return out;
}

} // namespace gauss4

#endif
