#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lie.hpp"

namespace mss {

// ---------------------------------------------------------------- degree notation
//
// A degree is written as a signed sum over lattice generator names, e.g.
// "e1-e2-2e", "d-e1-e", "e-(d1+d2)". A pattern may use "±" (or "+-") in place
// of a sign; it denotes every choice of signs. U+2212 is accepted as minus.

namespace detail {

struct DegreeTerm {
    int sign = 1;
    bool pm = false;
    int coeff = 1;
    Degree atom;
};

class DegreeParser {
public:
    DegreeParser(std::string s, const std::vector<std::string>& lattice) : s_(normalize(std::move(s))), lat_(lattice) {}

    std::vector<DegreeTerm> terms() {
        std::vector<DegreeTerm> out;
        skip();
        while (p_ < s_.size()) {
            if (s_[p_] == ')') break;
            out.push_back(term(out.empty()));
            skip();
        }
        return out;
    }

    bool done() const { return p_ == s_.size(); }

private:
    static std::string normalize(std::string s) {
        auto rep = [&](const std::string& from, const std::string& to) {
            for (std::size_t q; (q = s.find(from)) != std::string::npos;) s.replace(q, from.size(), to);
        };
        rep("\xC2\xB1", "~");      // ±
        rep("+-", "~");
        rep("\xE2\x88\x92", "-");  // minus sign
        return s;
    }

    void skip() {
        while (p_ < s_.size() && s_[p_] == ' ') ++p_;
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("degree \"" + s_ + "\": " + why);
    }

    DegreeTerm term(bool first) {
        DegreeTerm t;
        skip();
        if (p_ < s_.size() && (s_[p_] == '+' || s_[p_] == '-' || s_[p_] == '~')) {
            t.sign = s_[p_] == '-' ? -1 : 1;
            t.pm = s_[p_] == '~';
            ++p_;
        } else if (!first) {
            fail("missing sign");
        }
        skip();
        if (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) {
            t.coeff = 0;
            while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) t.coeff = 10 * t.coeff + (s_[p_++] - '0');
        }
        skip();
        if (p_ < s_.size() && s_[p_] == '(') {
            ++p_;
            auto inner = terms();
            if (p_ >= s_.size() || s_[p_] != ')') fail("unbalanced parenthesis");
            ++p_;
            t.atom = Degree(lat_.size(), 0);
            for (auto& it : inner) {
                if (it.pm) fail("± inside parentheses");
                for (std::size_t k = 0; k < lat_.size(); ++k) t.atom[k] += it.sign * it.coeff * it.atom[k];
            }
            return t;
        }
        std::size_t q = p_;
        while (q < s_.size() && std::isalpha(static_cast<unsigned char>(s_[q]))) ++q;
        while (q < s_.size() && std::isdigit(static_cast<unsigned char>(s_[q]))) ++q;
        std::string name = s_.substr(p_, q - p_);
        auto it = std::find(lat_.begin(), lat_.end(), name);
        if (name.empty() || it == lat_.end()) fail("unknown generator \"" + name + "\"");
        p_ = q;
        t.atom = Degree(lat_.size(), 0);
        t.atom[static_cast<std::size_t>(it - lat_.begin())] = 1;
        return t;
    }

    std::string s_;
    const std::vector<std::string>& lat_;
    std::size_t p_ = 0;
};

}  // namespace detail

inline std::set<Degree> expand_pattern(const std::string& s, const std::vector<std::string>& lattice) {
    detail::DegreeParser ps(s, lattice);
    auto terms = ps.terms();
    if (!ps.done() || terms.empty()) throw std::invalid_argument("degree \"" + s + "\": trailing input");
    std::set<Degree> out = {Degree(lattice.size(), 0)};
    for (auto& t : terms) {
        std::set<Degree> next;
        for (auto& d : out)
            for (int s2 : t.pm ? std::vector<int>{1, -1} : std::vector<int>{t.sign}) {
                Degree e = d;
                for (std::size_t k = 0; k < e.size(); ++k) e[k] += s2 * t.coeff * t.atom[k];
                next.insert(e);
            }
        out = std::move(next);
    }
    return out;
}

inline Degree parse_degree(const std::string& s, const std::vector<std::string>& lattice) {
    auto set = expand_pattern(s, lattice);
    if (set.size() != 1) throw std::invalid_argument("degree \"" + s + "\": ± not allowed here");
    return *set.begin();
}

inline std::string format_degree(const Degree& d, const std::vector<std::string>& lattice) {
    std::string out;
    for (std::size_t k = 0; k < d.size(); ++k) {
        int c = d[k];
        if (c == 0) continue;
        if (c < 0) out += "-";
        else if (!out.empty()) out += "+";
        if (std::abs(c) != 1) out += std::to_string(std::abs(c));
        out += lattice[k];
    }
    return out.empty() ? "0" : out;
}

// "-i0(1|v)", "+T'[w.v.v]" or a bare label.
inline Vec parse_signed_label(const std::string& s, const LieSuperalgebra& g) {
    F3 c = 1;
    std::string l = s;
    if (!l.empty() && (l[0] == '-' || l[0] == '+')) {
        if (l[0] == '-') c = -1;
        l.erase(0, 1);
    }
    auto it = std::find(g.labels.begin(), g.labels.end(), l);
    if (it == g.labels.end()) throw std::invalid_argument(g.name + ": no basis vector labelled " + l);
    return c * unit(g.dim, static_cast<std::size_t>(it - g.labels.begin()));
}

// ---------------------------------------------------------------- records

struct GeneratorGolden {
    std::vector<std::string> E, F;
    std::vector<std::vector<int>> H;
    bool xi_free = false;
};

struct ModuleGolden {
    std::string verdict;  // irreducible | irreducible_derived | reducible | report
    std::size_t dim = 0;
    std::vector<std::size_t> summands;
};

struct EntryGolden {
    std::string entry;
    std::size_t even = 0, odd = 0;
    std::vector<std::string> lattice, order;
    std::set<Degree> phi_even, phi_odd;
    std::vector<Degree> pi, pi0;
    std::vector<std::vector<int>> A;
    std::set<int> tau;
    std::vector<std::string> cartan_basis;
    std::optional<GeneratorGolden> generators;
    std::optional<Degree> odd_highest;
    std::string certificate, simplicity;
    std::optional<ModuleGolden> module;
    std::size_t canonicalize_first = 0;
};

struct TablesGolden {
    std::map<std::string, std::pair<std::size_t, std::size_t>> super_dims;
    struct Classical {
        std::string type;
        std::size_t dim = 0;
        std::optional<std::size_t> derived_dim;
    };
    std::map<std::string, Classical> classical;
};

struct EpsilonGolden {
    std::vector<std::string> subsets;
    std::vector<std::vector<int>> table;
};

inline EntryGolden parse_entry_golden(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    EntryGolden e;
    e.entry = j.at("entry");
    e.even = j.at("dims")[0];
    e.odd = j.at("dims")[1];
    e.lattice = j.at("lattice").get<std::vector<std::string>>();
    e.order = j.at("order").get<std::vector<std::string>>();
    for (auto& p : j.at("phi_even")) {
        auto s = expand_pattern(p, e.lattice);
        e.phi_even.insert(s.begin(), s.end());
    }
    for (auto& p : j.at("phi_odd")) {
        auto s = expand_pattern(p, e.lattice);
        e.phi_odd.insert(s.begin(), s.end());
    }
    for (auto& p : j.at("pi")) e.pi.push_back(parse_degree(p, e.lattice));
    if (j.contains("pi0"))
        for (auto& p : j.at("pi0")) e.pi0.push_back(parse_degree(p, e.lattice));
    e.A = j.at("cartan_A").get<std::vector<std::vector<int>>>();
    for (int t : j.at("tau")) e.tau.insert(t);
    if (j.contains("cartan_basis")) e.cartan_basis = j.at("cartan_basis").get<std::vector<std::string>>();
    if (j.contains("generators")) {
        auto& gj = j.at("generators");
        GeneratorGolden gg;
        gg.E = gj.at("E").get<std::vector<std::string>>();
        gg.F = gj.at("F").get<std::vector<std::string>>();
        gg.H = gj.at("H").get<std::vector<std::vector<int>>>();
        gg.xi_free = gj.value("xi_free", false);
        e.generators = gg;
    }
    if (j.contains("odd_highest")) e.odd_highest = parse_degree(j.at("odd_highest"), e.lattice);
    e.certificate = j.at("certificate");
    e.simplicity = j.at("simplicity");
    if (j.contains("module")) {
        auto& mj = j.at("module");
        ModuleGolden m;
        m.verdict = mj.at("verdict");
        m.dim = mj.at("dim");
        if (mj.contains("summands")) m.summands = mj.at("summands").get<std::vector<std::size_t>>();
        e.module = m;
    }
    e.canonicalize_first = j.value("canonicalize_first", 0);
    return e;
}

inline TablesGolden parse_tables_golden(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    TablesGolden t;
    for (auto& [k, v] : j.at("super").items()) t.super_dims[k] = {v[0], v[1]};
    for (auto& [k, v] : j.at("classical").items()) {
        TablesGolden::Classical c;
        c.type = v.at("type");
        c.dim = v.at("dim");
        if (v.contains("derived_dim")) c.derived_dim = v.at("derived_dim").get<std::size_t>();
        t.classical[k] = c;
    }
    return t;
}

inline EpsilonGolden parse_epsilon_golden(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    return {j.at("subsets").get<std::vector<std::string>>(), j.at("table").get<std::vector<std::vector<int>>>()};
}

// ---------------------------------------------------------------- store

// Golden files by file name. Defaults to the copies compiled into the binary;
// a directory overrides them file by file.
class GoldenStore {
public:
    explicit GoldenStore(std::map<std::string, std::string> files) : files_(std::move(files)) {}

    void override_from(const std::filesystem::path& dir) {
        if (!std::filesystem::is_directory(dir)) throw std::runtime_error("golden dir not found: " + dir.string());
        for (auto& e : std::filesystem::directory_iterator(dir)) {
            if (e.path().extension() != ".json") continue;
            std::ifstream in(e.path(), std::ios::binary);
            std::stringstream ss;
            ss << in.rdbuf();
            files_[e.path().filename().string()] = ss.str();
        }
    }

    bool has(const std::string& file) const { return files_.count(file) > 0; }

    const std::string& text(const std::string& file) const {
        auto it = files_.find(file);
        if (it == files_.end()) throw std::runtime_error("golden file missing: " + file);
        return it->second;
    }

    bool has_entry(const std::string& entry) const { return has(entry + ".json"); }
    EntryGolden entry(const std::string& e) const { return parse_entry_golden(text(e + ".json")); }
    TablesGolden tables() const { return parse_tables_golden(text("tables.json")); }
    EpsilonGolden epsilon() const { return parse_epsilon_golden(text("epsilon_S1S42.json")); }

private:
    std::map<std::string, std::string> files_;
};

}  // namespace mss
