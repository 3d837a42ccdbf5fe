#ifndef GAUSS4_CONFIGURATION_HPP
#define GAUSS4_CONFIGURATION_HPP

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gauss4/errors.hpp"
#include "gauss4/rational.hpp"

namespace gauss4 {

// An ML diagram: chords of multiplicity 1 or 2 on one to four circles,
// given by per-circle cyclic endpoint words.
struct Configuration {
    std::string key;
    std::vector<std::vector<int>> circles; // cyclic words of chord ids
    std::map<int, int> multiplicity;       // chord id -> 1|2

    std::set<int> chord_ids() const {
        std::set<int> ids;
        for (const auto& c : circles) ids.insert(c.begin(), c.end());
        return ids;
    }
};

struct ConfigCombo {
    std::vector<std::pair<Rat, Configuration>> terms;

    ConfigCombo& add(const Rat& coeff, const Configuration& c) {
        terms.emplace_back(coeff, c);
        return *this;
    }
};

inline void validate(const Configuration& c) {
    std::map<int, int> count;
    for (const auto& w : c.circles)
        for (int id : w) ++count[id];
    for (const auto& [id, n] : count) {
        if (n != 2)
            throw ValidationError("configuration " + c.key + ": chord " +
                                  std::to_string(id) + " has " + std::to_string(n) +
                                  " endpoints");
        auto it = c.multiplicity.find(id);
        if (it == c.multiplicity.end() || (it->second != 1 && it->second != 2))
            throw ValidationError("configuration " + c.key + ": chord " +
                                  std::to_string(id) + " lacks multiplicity 1 or 2");
    }
    if (count.size() != c.multiplicity.size())
        throw ValidationError("configuration " + c.key + ": stray multiplicity entry");
}

// Convenience constructor used by tests and the builtin patterns.
inline Configuration make_config(std::string key, std::vector<std::vector<int>> circles,
                                 std::map<int, int> multiplicity = {}) {
    Configuration c;
    c.key = std::move(key);
    c.circles = std::move(circles);
    c.multiplicity = std::move(multiplicity);
    for (int id : c.chord_ids())
        if (!c.multiplicity.count(id)) c.multiplicity[id] = 1;
    validate(c);
    return c;
}

// The transcribed catalog of Theorem-quality configurations, loaded from
// `configurations.txt`.
struct Catalog {
    std::map<std::string, Configuration> entries;

    const Configuration& at(const std::string& key) const {
        auto it = entries.find(key);
        if (it == entries.end()) throw MissingKey(key);
        return it->second;
    }

    bool has(const std::string& key) const { return entries.count(key) != 0; }
};

inline const std::vector<std::string>& catalog_required_keys() {
    static const std::vector<std::string> keys = {
        "v1.D1", "v2.D1",
        "v3.1.D1", "v3.1.D2", "v3.1.D3",
        "v3.2.D1", "v3.2.D2",
        "v4.1.D1", "v4.1.D2", "v4.1.D3", "v4.1.D4", "v4.1.D5", "v4.1.D6",
        "v4.1.E1", "v4.1.E2", "v4.1.E3",
        "v4.3.A1", "v4.3.A2", "v4.3.A3", "v4.3.A4",
        "v4.3.A5", "v4.3.A6", "v4.3.A7", "v4.3.A8",
        "v4.4.B1", "v4.4.B2", "v4.4.B3",
        "pat.1chord", "pat.join", "pat.pair.X", "pat.pair.P",
        "pat.2join", "pat.I432", "pat.3chain",
    };
    return keys;
}

// Entry format:
//   key: v3.1.D1
//   circles: 1
//   chords: 1:1 2:1 3:1           # chord_id:multiplicity
//   circle1: 1 2 3 1 2 3          # cyclic endpoint word
inline Catalog parse_catalog(std::istream& in) {
    Catalog cat;
    Configuration cur;
    int expect_circles = -1;
    bool open = false;

    auto flush = [&]() {
        if (!open) return;
        if (expect_circles < 0 || static_cast<int>(cur.circles.size()) != expect_circles)
            throw SyntaxError("catalog entry " + cur.key + ": circle count mismatch");
        validate(cur);
        cat.entries[cur.key] = cur;
        cur = Configuration{};
        expect_circles = -1;
        open = false;
    };

    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string field;
        if (!(ls >> field)) continue;
        if (field == "key:") {
            flush();
            open = true;
            if (!(ls >> cur.key)) throw SyntaxError("catalog: key line without a key");
        } else if (field == "circles:") {
            if (!open || !(ls >> expect_circles))
                throw SyntaxError("catalog: bad circles line");
        } else if (field == "chords:") {
            if (!open) throw SyntaxError("catalog: chords line outside entry");
            std::string tok;
            while (ls >> tok) {
                auto colon = tok.find(':');
                if (colon == std::string::npos)
                    throw SyntaxError("catalog: bad chord token '" + tok + "'");
                int id = 0, m = 0;
                try {
                    id = std::stoi(tok.substr(0, colon));
                    m = std::stoi(tok.substr(colon + 1));
                } catch (const std::exception&) {
                    throw SyntaxError("catalog: bad chord token '" + tok + "'");
                }
                cur.multiplicity[id] = m;
            }
        } else if (field.rfind("circle", 0) == 0 && field.back() == ':') {
            if (!open) throw SyntaxError("catalog: circle line outside entry");
            std::vector<int> word;
            int id;
            while (ls >> id) word.push_back(id);
            cur.circles.push_back(std::move(word));
        } else {
            throw SyntaxError("catalog: unexpected field '" + field + "'");
        }
    }
    flush();
    return cat;
}

inline Catalog catalog_load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SyntaxError("cannot open catalog file " + path);
    Catalog cat = parse_catalog(in);
    for (const auto& key : catalog_required_keys())
        if (!cat.has(key)) throw MissingKey(key);
    return cat;
}

} // namespace gauss4

#endif
