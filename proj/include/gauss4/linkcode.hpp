#ifndef GAUSS4_LINKCODE_HPP
#define GAUSS4_LINKCODE_HPP

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gauss4/errors.hpp"

namespace gauss4 {

enum class Strand { Over, Under };

// One visit of a strand to a crossing, as read along the traversal.
struct Pass {
    int crossing_id = 0; // positive
    Strand strand = Strand::Over;
    int sign = +1; // +1 or -1

    friend bool operator==(const Pass& a, const Pass& b) {
        return a.crossing_id == b.crossing_id && a.strand == b.strand && a.sign == b.sign;
    }
};

// An oriented link diagram as per-component signed Gauss sequences.
//
// Every crossing id occurs exactly twice, once over and once under, with
// equal signs. The first token of each component is a distinguished
// basepoint used only for deterministic iteration; realizability in the
// plane is deliberately not checked.
struct LinkCode {
    std::vector<std::vector<Pass>> components;

    std::size_t component_count() const { return components.size(); }

    std::size_t crossing_count() const {
        std::size_t n = 0;
        for (const auto& c : components) n += c.size();
        return n / 2;
    }

    friend bool operator==(const LinkCode& a, const LinkCode& b) {
        return a.components == b.components;
    }
};

// Position of one pass: (component, index within component).
struct PassLoc {
    std::size_t comp = 0;
    std::size_t pos = 0;
};

inline std::map<int, std::pair<PassLoc, PassLoc>> pass_locations(const LinkCode& L) {
    std::map<int, std::vector<PassLoc>> where;
    for (std::size_t c = 0; c < L.components.size(); ++c)
        for (std::size_t p = 0; p < L.components[c].size(); ++p)
            where[L.components[c][p].crossing_id].push_back({c, p});
    std::map<int, std::pair<PassLoc, PassLoc>> out;
    for (auto& [id, locs] : where) {
        if (locs.size() != 2)
            throw ValidationError("crossing id " + std::to_string(id) +
                                  " occurs " + std::to_string(locs.size()) + " times");
        out[id] = {locs[0], locs[1]};
    }
    return out;
}

inline void validate(const LinkCode& L) {
    auto locs = pass_locations(L);
    for (const auto& [id, lp] : locs) {
        if (id <= 0) throw ValidationError("crossing id must be positive");
        const Pass& a = L.components[lp.first.comp][lp.first.pos];
        const Pass& b = L.components[lp.second.comp][lp.second.pos];
        if (a.strand == b.strand)
            throw ValidationError("strand mismatch on id " + std::to_string(id));
        if (a.sign != b.sign)
            throw ValidationError("sign mismatch on id " + std::to_string(id));
    }
}

inline std::vector<int> crossing_ids(const LinkCode& L) {
    std::set<int> ids;
    for (const auto& c : L.components)
        for (const auto& p : c) ids.insert(p.crossing_id);
    return std::vector<int>(ids.begin(), ids.end());
}

inline bool has_crossing(const LinkCode& L, int id) {
    for (const auto& c : L.components)
        for (const auto& p : c)
            if (p.crossing_id == id) return true;
    return false;
}

// True when both passes of `id` lie on one component.
inline bool is_self_crossing(const LinkCode& L, int id) {
    auto locs = pass_locations(L);
    auto it = locs.find(id);
    if (it == locs.end()) throw UnknownCrossing(id);
    return it->second.first.comp == it->second.second.comp;
}

inline std::map<int, int> writhe_signs(const LinkCode& L) {
    std::map<int, int> out;
    for (const auto& c : L.components)
        for (const auto& p : c) out[p.crossing_id] = p.sign;
    return out;
}

// "SGC v1": one component per line, tokens [OU]<digits>[+-],
// `#` starts a comment, blank lines ignored.
inline LinkCode parse_link(const std::string& text) {
    LinkCode L;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream toks(line);
        std::string tok;
        std::vector<Pass> comp;
        while (toks >> tok) {
            if (tok.size() < 3 || (tok[0] != 'O' && tok[0] != 'U'))
                throw SyntaxError("bad token '" + tok + "'");
            char tail = tok.back();
            if (tail != '+' && tail != '-')
                throw SyntaxError("bad token '" + tok + "'");
            const std::string digits = tok.substr(1, tok.size() - 2);
            if (digits.empty() ||
                !std::all_of(digits.begin(), digits.end(),
                             [](unsigned char ch) { return std::isdigit(ch); }))
                throw SyntaxError("bad token '" + tok + "'");
            Pass p;
            p.crossing_id = std::stoi(digits);
            p.strand = tok[0] == 'O' ? Strand::Over : Strand::Under;
            p.sign = tail == '+' ? +1 : -1;
            comp.push_back(p);
        }
        if (!comp.empty()) L.components.push_back(std::move(comp));
    }
    validate(L);
    return L;
}

// Emits tokens in traversal order, components in order. A crossingless
// component serializes to a blank line, which the parser skips; round trips
// are exact for every code whose components all carry at least one pass.
inline std::string serialize(const LinkCode& L) {
    std::string out;
    for (std::size_t c = 0; c < L.components.size(); ++c) {
        for (std::size_t p = 0; p < L.components[c].size(); ++p) {
            const Pass& x = L.components[c][p];
            if (p) out += ' ';
            out += x.strand == Strand::Over ? 'O' : 'U';
            out += std::to_string(x.crossing_id);
            out += x.sign > 0 ? '+' : '-';
        }
        out += '\n';
    }
    return out;
}

// Negates the sign of both passes of `id` and swaps their over/under flags.
inline LinkCode switch_crossing(const LinkCode& L, int id) {
    if (!has_crossing(L, id)) throw UnknownCrossing(id);
    LinkCode out = L;
    for (auto& c : out.components)
        for (auto& p : c)
            if (p.crossing_id == id) {
                p.sign = -p.sign;
                p.strand = p.strand == Strand::Over ? Strand::Under : Strand::Over;
            }
    return out;
}

// Component i with every joining pass deleted: the component as a knot
// diagram of its own.
inline LinkCode self_subdiagram(const LinkCode& L, std::size_t i) {
    if (i >= L.components.size()) throw IndexError("component index out of range");
    std::set<int> self;
    std::map<int, int> count;
    for (const auto& p : L.components[i]) ++count[p.crossing_id];
    for (const auto& [id, n] : count)
        if (n == 2) self.insert(id);
    LinkCode out;
    out.components.emplace_back();
    for (const auto& p : L.components[i])
        if (self.count(p.crossing_id)) out.components[0].push_back(p);
    return out;
}

// Restriction of L to the components in `keep` (given in increasing order),
// holding only crossings internal to that subset.
inline LinkCode sublink(const LinkCode& L, const std::vector<std::size_t>& keep) {
    std::set<int> internal;
    {
        std::map<int, int> count;
        for (std::size_t c : keep) {
            if (c >= L.components.size()) throw IndexError("component index out of range");
            for (const auto& p : L.components[c]) ++count[p.crossing_id];
        }
        for (const auto& [id, n] : count)
            if (n == 2) internal.insert(id);
    }
    LinkCode out;
    for (std::size_t c : keep) {
        std::vector<Pass> comp;
        for (const auto& p : L.components[c])
            if (internal.count(p.crossing_id)) comp.push_back(p);
        out.components.push_back(std::move(comp));
    }
    return out;
}

// Rotates the basepoint of component c by k positions.
inline LinkCode rotate_basepoint(const LinkCode& L, std::size_t c, std::size_t k) {
    if (c >= L.components.size()) throw IndexError("component index out of range");
    LinkCode out = L;
    auto& w = out.components[c];
    if (!w.empty()) std::rotate(w.begin(), w.begin() + (k % w.size()), w.end());
    return out;
}

// Reverses the orientation of every component. Over/under flags are
// unchanged; a self crossing keeps its sign (both strands reversed) and a
// joining crossing keeps its sign only when both components reverse, which
// is the case here.
inline LinkCode reverse_all(const LinkCode& L) {
    LinkCode out = L;
    for (auto& c : out.components) std::reverse(c.begin(), c.end());
    return out;
}

} // namespace gauss4

#endif
