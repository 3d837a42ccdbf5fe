#ifndef GAUSS4_VERIFY_HPP
#define GAUSS4_VERIFY_HPP

#include <sstream>
#include <string>
#include <vector>

#include "gauss4/corpus.hpp"
#include "gauss4/series.hpp"
#include "gauss4/skein_identities.hpp"
#include "gauss4/sun.hpp"

namespace gauss4 {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void add(const std::string& name, bool pass, const std::string& detail = "") {
        checks.push_back({name, pass, detail});
    }
};

// The end-to-end check of the Gauss-diagram formulas against the skein
// solver: the assembled degree-4 series must equal the substituted Homfly
// polynomial coefficient by coefficient.
inline bool master_oracle_holds(const LinkCode& L, const InvariantEngine& eng,
                                std::string* detail = nullptr) {
    XSeries lhs = homfly_series(L, eng.all(L));
    XSeries rhs = substitute(homfly(L));
    if (lhs == rhs) return true;
    if (detail) *detail = "series mismatch on " + serialize(L);
    return false;
}

inline bool reports_equal(const InvariantReport& a, const InvariantReport& b) {
    return a.v1 == b.v1 && a.v2 == b.v2 && a.v3_1 == b.v3_1 && a.v3_2 == b.v3_2 &&
           a.v4_1 == b.v4_1 && a.v4_2 == b.v4_2 && a.v4_3 == b.v4_3 && a.v4_4 == b.v4_4;
}

// Recomputes the full report under the alternate descending rules and a
// rotated basepoint; every value must be unchanged.
inline bool choice_independence_holds(const LinkCode& L, const Catalog& cat,
                                      std::string* detail = nullptr) {
    InvariantEngine base(cat);
    InvariantReport want = base.all(L);
    const InvariantEngine alts[] = {
        InvariantEngine(cat, AlphaRule::FirstEncounterUnder, false),
        InvariantEngine(cat, AlphaRule::FirstEncounterOver, true),
        InvariantEngine(cat, AlphaRule::FirstEncounterUnder, true),
    };
    for (const auto& alt : alts)
        if (!reports_equal(want, alt.all(L))) {
            if (detail) *detail = "alpha-choice dependence on " + serialize(L);
            return false;
        }
    for (std::size_t c = 0; c < L.component_count(); ++c) {
        if (L.components[c].size() < 2) continue;
        LinkCode rot = rotate_basepoint(L, c, 1 + c % (L.components[c].size() - 1));
        if (!reports_equal(want, base.all(rot))) {
            if (detail) *detail = "basepoint dependence on " + serialize(L);
            return false;
        }
    }
    return true;
}

// Pure-chord weight-table entries against the brute-force su(N) evaluator.
inline const std::map<std::string, Configuration>& pure_chord_table_diagrams() {
    static const std::map<std::string, Configuration> diagrams = {
        {"wK.chord1", make_config("wK.chord1", {{1, 1}})},
        {"wL.ca", make_config("wL.ca", {{1, 2}, {1, 2}})},
        {"wL.ec", make_config("wL.ec", {{1, 2, 3}, {1, 3, 2}})},
        {"wL.fc", make_config("wL.fc", {{1, 2}, {1, 3}, {2, 3}})},
        {"wL.fd", make_config("wL.fd", {{1, 2, 3, 4}, {1, 4, 3, 2}})},
        {"wL.fg", make_config("wL.fg", {{1, 2}, {3, 4}, {1, 2, 3, 4}})},
        {"wL.fh", make_config("wL.fh", {{1, 2}, {1, 3, 4}, {2, 4, 3}})},
        {"wL.fk", make_config("wL.fk", {{1, 2}, {1, 2}, {3, 4}, {3, 4}})},
        {"wL.fj", make_config("wL.fj", {{1, 2}, {1, 3}, {2, 4}, {3, 4}})},
    };
    return diagrams;
}

inline bool weight_table_numeric_check(std::string* detail = nullptr, double tol = 1e-9) {
    const WeightTable& wt = weight_table();
    for (int N : {2, 3}) {
        SunBasis basis = sun_basis(N);
        if (orthonormality_residual(basis) >= 1e-12) {
            if (detail) *detail = "basis orthonormality residual too large";
            return false;
        }
        for (const auto& [key, diagram] : pure_chord_table_diagrams()) {
            int deg = wt.at(key).terms.begin()->first;
            const double want = wt.at(key).coeff(deg).eval(Rat(N)).convert_to<double>();
            const auto got = eval_chord_weight(diagram, basis);
            if (std::abs(got.imag()) >= tol || std::abs(got.real() - want) >= tol) {
                if (detail) *detail = key + " mismatch at N=" + std::to_string(N);
                return false;
            }
        }
    }
    return true;
}

inline std::vector<std::pair<std::string, std::string>> curated_corpus_texts() {
    // Curated diagrams; the braid-closure provenance keeps them realizable.
    return {
        {"unknot", "O1+ U1+"},
        {"unlink2", "O1+ U1+\nO2- U2-"},
        {"unlink3", "O1+ U1+\nO2- U2-\nO3+ U3+"},
        {"hopf_plus", "O1+ U2+\nU1+ O2+"},
        {"hopf_minus", "U1- O2-\nO1- U2-"},
        {"trefoil", "O1+ U2+ O3+ U1+ O2+ U3+"},
        // closure of sigma1^3 sigma1 sigma1^-1: the same trefoil on five
        // crossings
        {"trefoil5", "O1+ U2+ O3+ U4+ U5- U1+ O2+ U3+ O4+ O5-"},
        // closure of (sigma1 sigma2^-1)^2: figure-eight knot
        {"fig8", "O1+ U2- O4- U1+ O3+ U4- O2- U3+"},
        // the 6-crossing worked-example knot
        {"fig9", "U1- O2+ U3+ O1- U4- O5- U6- O3+ U2+ O4- U5- O6-"},
        // Hopf with an extra R2 pair
        {"hopf_r2", "O1+ U2+ O3+ O4-\nU1+ O2+ U3+ U4-"},
        {"chain3", "O1+\nU1+ O2+\nU2+"},
        // closure of (sigma1 sigma2^-1)^3: Borromean-style 3-component link
        {"borromean", "O1+ U2- O4- U5+\nU1+ O3+ U4- O6-\nO2- U3+ O5+ U6-"},
    };
}

inline std::vector<LinkCode> curated_corpus() {
    std::vector<LinkCode> out;
    for (const auto& [name, text] : curated_corpus_texts()) out.push_back(parse_link(text));
    return out;
}

// Full verification: master oracle and choice independence over the corpus,
// the skein identities over its crossings, and the weight-table numerics.
inline VerifyReport verify_suite(const Catalog& cat, std::uint64_t seed, std::size_t size,
                                 std::size_t identity_triples = 50) {
    VerifyReport rep;
    InvariantEngine eng(cat);

    std::vector<LinkCode> corpus = curated_corpus();
    for (LinkCode& L : random_corpus(seed, size)) corpus.push_back(std::move(L));

    std::string detail;
    bool oracle = true, choice = true;
    for (const LinkCode& L : corpus) {
        if (oracle && !master_oracle_holds(L, eng, &detail)) oracle = false;
    }
    rep.add("master-oracle", oracle, oracle ? "" : detail);
    for (const LinkCode& L : corpus)
        if (choice && !choice_independence_holds(L, cat, &detail)) choice = false;
    rep.add("choice-independence", choice, choice ? "" : detail);

    std::size_t self_done = 0, join_done = 0;
    bool identities = true;
    for (const LinkCode& L : corpus) {
        for (int a : crossing_ids(L)) {
            const bool self = is_self_crossing(L, a);
            if (self && self_done >= identity_triples) continue;
            if (!self && join_done >= identity_triples) continue;
            SkeinIdentityReport ir = verify_skein_identities(L, a, eng);
            (self ? self_done : join_done) += 1;
            if (!ir.all_zero()) {
                identities = false;
                std::ostringstream os;
                os << "identity failure at crossing " << a << " of " << serialize(L);
                detail = os.str();
            }
        }
        if (self_done >= identity_triples && join_done >= identity_triples) break;
    }
    {
        std::ostringstream os;
        os << self_done << " self + " << join_done << " joining triples";
        rep.add("skein-identities", identities, identities ? os.str() : detail);
    }

    bool weights = weight_table_numeric_check(&detail);
    rep.add("weight-table", weights, weights ? "" : detail);
    return rep;
}

} // namespace gauss4

#endif
