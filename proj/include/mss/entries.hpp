#pragma once

#include <cstring>
#include <optional>
#include <string>
#include <vector>

#include "magic.hpp"

namespace mss {

inline int algebra_rank(const std::string& s) {
    const auto& n = algebra_names();
    auto it = std::find(n.begin(), n.end(), s);
    return it == n.end() ? -1 : static_cast<int>(it - n.begin());
}

struct EntryId {
    std::string left, right;  // empty for d21
    bool d21() const { return left.empty(); }
    std::string name() const { return d21() ? "d21" : left + right; }
};

// Accepts "S1S42", "S42S1", "S42,S1", "S42 S1" or "d21"; the result is in canonical order.
inline std::optional<EntryId> parse_entry(std::string s) {
    if (s == "d21" || s == "d_{2,1}") return EntryId{};
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ',' || c == ' ' || c == '(' || c == ')'; }),
            s.end());
    if (s.rfind("g", 0) == 0) s.erase(0, 1);
    std::vector<std::string> parts;
    std::size_t p = 0;
    while (p < s.size() && parts.size() < 3) {
        bool found = false;
        for (const char* cand : {"S12", "S42", "S1", "S2", "S4", "S8"}) {
            if (s.compare(p, std::strlen(cand), cand) == 0) {
                parts.push_back(cand);
                p += std::strlen(cand);
                found = true;
                break;
            }
        }
        if (!found) return std::nullopt;
    }
    if (parts.size() != 2 || p != s.size()) return std::nullopt;
    if (algebra_rank(parts[0]) > algebra_rank(parts[1])) std::swap(parts[0], parts[1]);
    return EntryId{parts[0], parts[1]};
}

// The 21 entries in canonical order followed by d21.
inline std::vector<std::string> all_entries() {
    std::vector<std::string> out;
    const auto& n = algebra_names();
    for (std::size_t i = 0; i < n.size(); ++i)
        for (std::size_t j = i; j < n.size(); ++j) out.push_back(n[i] + n[j]);
    out.push_back("d21");
    return out;
}

// Entries whose lattice grading is replaced by the Gamma-regrading.
inline bool regraded_entry(const std::string& name) { return name == "S12S12" || name == "S1S12"; }

// Concatenated factor lattices get sequential names: d1, d2 stay, the e-type
// generators become e1, e2, ... (or plain e when there is only one).
inline void rename_lattice(LieSuperalgebra& g) {
    std::size_t ecount = 0;
    for (auto& l : g.lattice)
        if (l[0] == 'e') ++ecount;
    std::size_t k = 0;
    for (auto& l : g.lattice)
        if (l[0] == 'e') l = ecount == 1 ? "e" : "e" + std::to_string(++k);
}

struct BuildOptions {
    bool regrade = true;  // apply the Gamma-regrading to S12S12 and S1S12
};

inline LieSuperalgebra build_entry(const EntryId& id, const BuildOptions& opt = {}) {
    if (id.d21()) return build_d21();
    Factor a = build_factor(id.left), b = build_factor(id.right);
    LieSuperalgebra g = build_magic(a, b);
    rename_lattice(g);
    if (opt.regrade && regraded_entry(g.name)) g = regrade_b12_pair(g);
    return g;
}

inline LieSuperalgebra build_entry(const std::string& name, const BuildOptions& opt = {}) {
    auto id = parse_entry(name);
    if (!id) throw std::invalid_argument("unknown entry: " + name);
    return build_entry(*id, opt);
}

}  // namespace mss
