#ifndef GAUSS4_INVARIANTS_HPP
#define GAUSS4_INVARIANTS_HPP

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "gauss4/pairing.hpp"
#include "gauss4/surgery.hpp"

namespace gauss4 {

// Exact values of the degree <= 4 invariants over the component subsets of
// a link, keyed by component indices.
struct InvariantReport {
    std::map<std::size_t, Rat> v2, v3_1, v4_1, v4_2;
    std::map<std::pair<std::size_t, std::size_t>, Rat> v1, v3_2, v4_3;
    std::map<std::array<std::size_t, 3>, Rat> v4_4;
};

// Evaluates the eight invariants against a configuration catalog. The alpha
// rule is a free choice by construction; the test suite recomputes reports
// under the alternates and demands equality.
class InvariantEngine {
  public:
    explicit InvariantEngine(const Catalog& catalog, AlphaRule rule = AlphaRule::FirstEncounterOver,
                             bool reverse_component_order = false, bool prune_zero_factors = true)
        : cat_(&catalog), rule_(rule), rev_(reverse_component_order),
          prune_(prune_zero_factors) {}

    Rat v1(const LinkCode& L) const {
        require_components(L, 2);
        return pair(gauss(L), cat_->at("pat.join"));
    }

    Rat v2(const LinkCode& K) const {
        require_components(K, 1);
        return Rat(-1, 6) + pair_sum(bar(K), cat_->at("v2.D1"));
    }

    Rat v3_1(const LinkCode& K) const {
        require_components(K, 1);
        ConfigCombo combo;
        combo.add(Rat(2), cat_->at("v3.1.D1"))
            .add(Rat(1), cat_->at("v3.1.D2"))
            .add(Rat(1, 2), cat_->at("v3.1.D3"));
        return pair_sum(gauss(K), combo) - I3_1(K);
    }

    Rat v3_2(const LinkCode& L) const {
        require_components(L, 2);
        ConfigCombo combo;
        combo.add(Rat(1), cat_->at("v3.2.D1"))
            .add(Rat(1), cat_->at("v3.2.D2"))
            .add(Rat(1, 3), cat_->at("pat.join"));
        return pair_sum(gauss(L), combo) - I3_2(L);
    }

    Rat v4_1(const LinkCode& K) const {
        require_components(K, 1);
        ConfigCombo combo;
        combo.add(Rat(1), cat_->at("v4.1.D1"))
            .add(Rat(1), cat_->at("v4.1.D2"))
            .add(Rat(2), cat_->at("v4.1.D3"))
            .add(Rat(4), cat_->at("v4.1.D4"))
            .add(Rat(5), cat_->at("v4.1.D5"))
            .add(Rat(7), cat_->at("v4.1.D6"))
            .add(Rat(1, 6), cat_->at("v2.D1"))
            .add(Rat(1, 2), cat_->at("v4.1.E1"))
            .add(Rat(2), cat_->at("v4.1.E2"))
            .add(Rat(2), cat_->at("v4.1.E3"));
        return pair_sum(bar(K), combo) - I4_1_1(K) - I4_1_2(K) + Rat(1, 360);
    }

    Rat v4_2(const LinkCode& K) const {
        require_components(K, 1);
        ConfigCombo combo;
        combo.add(Rat(1), cat_->at("v4.1.D4"))
            .add(Rat(1), cat_->at("v4.1.D5"))
            .add(Rat(1), cat_->at("v4.1.D6"))
            .add(Rat(1, 2), cat_->at("v4.1.E2"))
            .add(Rat(-1, 6), cat_->at("v2.D1"));
        return pair_sum(bar(K), combo) - I4_2(K) - Rat(1, 360);
    }

    Rat v4_3(const LinkCode& L) const {
        require_components(L, 2);
        ConfigCombo combo;
        combo.add(Rat(1), cat_->at("v4.3.A1"))
            .add(Rat(1), cat_->at("v4.3.A2"))
            .add(Rat(2), cat_->at("v4.3.A3"))
            .add(Rat(1), cat_->at("v4.3.A4"))
            .add(Rat(1), cat_->at("v4.3.A5"))
            .add(Rat(1), cat_->at("v4.3.A6"))
            .add(Rat(1, 2), cat_->at("v4.3.A7"))
            .add(Rat(1, 2), cat_->at("v4.3.A8"));
        return pair_sum(bar(L), combo) - I4_3_1(L) - I4_3_2(L);
    }

    Rat v4_4(const LinkCode& L) const {
        require_components(L, 3);
        ConfigCombo combo;
        combo.add(Rat(1), cat_->at("v4.4.B1"))
            .add(Rat(1), cat_->at("v4.4.B2"))
            .add(Rat(1), cat_->at("v4.4.B3"));
        return pair_sum(bar(L), combo) - I4_4(L);
    }

    // Correction terms, exposed for the worked-example checks.
    Rat I3_1(const LinkCode& K) const {
        return single_sum(K, "pat.1chord", word_combo({{1, "C"}, {-1, "A"}}));
    }

    Rat I3_2(const LinkCode& L) const {
        return single_sum(L, "pat.join", word_combo({{1, "A"}, {-1, "C"}}));
    }

    Rat I4_1_1(const LinkCode& K) const {
        return pair_sum_over_pairs(K, "pat.pair.X",
                                   word_combo({{3, "CC"}, {-2, "AC"}, {-2, "CA"}, {1, "BB"}}));
    }

    Rat I4_1_2(const LinkCode& K) const {
        return pair_sum_over_pairs(K, "pat.pair.P",
                                   word_combo({{1, "CC"}, {-1, "AC"}, {-1, "CA"}, {1, "AA"}}));
    }

    Rat I4_2(const LinkCode& K) const {
        return pair_sum_over_pairs(K, "pat.pair.X",
                                   word_combo({{1, "CC"}, {-1, "AC"}, {-1, "CA"}, {1, "BB"}}));
    }

    Rat I4_3_1(const LinkCode& L) const {
        return pair_sum_over_pairs(L, "pat.2join", word_combo({{1, "CC"}, {-1, "BB"}}));
    }

    Rat I4_3_2(const LinkCode& L) const {
        return pair_sum_over_pairs(L, "pat.I432",
                                   word_combo({{1, "AC"}, {1, "CA"}, {-1, "CC"}, {-1, "AA"}}));
    }

    Rat I4_4(const LinkCode& L) const {
        return pair_sum_over_pairs(L, "pat.3chain",
                                   word_combo({{1, "CC"}, {1, "AA"}, {-1, "AC"}, {-1, "CA"}}));
    }

    // Every invariant over every component subset of matching arity; each
    // subset is taken with its internal crossings only.
    InvariantReport all(const LinkCode& L) const {
        InvariantReport rep;
        const std::size_t n = L.component_count();
        for (std::size_t i = 0; i < n; ++i) {
            LinkCode K = self_subdiagram(L, i);
            rep.v2[i] = v2(K);
            rep.v3_1[i] = v3_1(K);
            rep.v4_1[i] = v4_1(K);
            rep.v4_2[i] = v4_2(K);
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                LinkCode P = sublink(L, {i, j});
                rep.v1[{i, j}] = v1(P);
                rep.v3_2[{i, j}] = v3_2(P);
                rep.v4_3[{i, j}] = v4_3(P);
            }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k)
                    rep.v4_4[{i, j, k}] = v4_4(sublink(L, {i, j, k}));
        return rep;
    }

  private:
    const Catalog* cat_;
    AlphaRule rule_;
    bool rev_;
    bool prune_;

    static void require_components(const LinkCode& L, std::size_t n) {
        if (L.component_count() != n)
            throw ArityError("expected " + std::to_string(n) + " components, got " +
                             std::to_string(L.component_count()));
    }

    static WordCombo word_combo(std::initializer_list<std::pair<int, const char*>> terms) {
        WordCombo combo;
        for (const auto& [c, w] : terms) combo.add(Rat(c), w);
        return combo;
    }

    GaussSum bar(const LinkCode& L) const { return bar_gauss(L, rule_, rev_); }

    // sum_a <P({L:a}), pattern> <R({L:a}, combo), v2.D1>
    Rat single_sum(const LinkCode& L, const std::string& pattern, const WordCombo& combo) const {
        const Configuration& pat = cat_->at(pattern);
        const Configuration& dot = cat_->at("v2.D1");
        Rat total(0);
        for (int a : crossing_ids(L)) {
            Rat factor = pair(partial_gauss(L, {a}), pat);
            if (prune_ && factor == 0) continue;
            total += factor * pair_sum(R(L, {a}, combo, rule_, rev_), dot);
        }
        return total;
    }

    // sum over unordered pairs with the bar-P factor; letters pair with the
    // id-sorted selection, which is harmless because every word combo used
    // here is symmetric under position swap.
    Rat pair_sum_over_pairs(const LinkCode& L, const std::string& pattern,
                            const WordCombo& combo) const {
        const Configuration& pat = cat_->at(pattern);
        const Configuration& dot = cat_->at("v2.D1");
        std::vector<int> ids = crossing_ids(L);
        Rat total(0);
        for (std::size_t x = 0; x < ids.size(); ++x)
            for (std::size_t y = x + 1; y < ids.size(); ++y) {
                Rat factor = pair_sum(bar_partial(L, {ids[x], ids[y]}, rule_, rev_), pat);
                if (prune_ && factor == 0) continue;
                total += factor * pair_sum(R(L, {ids[x], ids[y]}, combo, rule_, rev_), dot);
            }
        return total;
    }
};

} // namespace gauss4

#endif
