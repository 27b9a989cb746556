#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "entries.hpp"

namespace mss {

// Structure-constant dump.
//
//   MSS v1 <left> <right> p=3 dim=<n> even=<a> odd=<b> rank=<r>
//   B <idx> <parity> <block> <deg>          one per basis vector; deg is comma separated, "-" if empty
//   C <i> <j> <k> <coeff>                   one per nonzero constant with i <= j, sorted by (i,j,k)

enum class ExportFormat { sc_text, json };

inline std::optional<ExportFormat> parse_format(const std::string& s) {
    if (s == "sc-text") return ExportFormat::sc_text;
    if (s == "json") return ExportFormat::json;
    return std::nullopt;
}

struct ExportHeader {
    std::string left, right;
    std::size_t dim = 0, even = 0, odd = 0, rank = 0;
};

inline ExportHeader export_header(const LieSuperalgebra& g) {
    auto id = parse_entry(g.name);
    ExportHeader h;
    if (!id || id->d21()) {
        h.left = g.name;
        h.right = "-";
    } else {
        h.left = id->left;
        h.right = id->right;
    }
    h.dim = g.dim;
    h.even = g.even_dim();
    h.odd = g.odd_dim();
    h.rank = g.rank();
    return h;
}

namespace detail {

inline std::string deg_field(const Degree& d) {
    if (d.empty()) return "-";
    std::string s;
    for (std::size_t k = 0; k < d.size(); ++k) s += (k ? "," : "") + std::to_string(d[k]);
    return s;
}

template <class F>
void for_each_upper_term(const LieSuperalgebra& g, F&& f) {
    for (std::size_t i = 0; i < g.dim; ++i)
        for (std::size_t j = i; j < g.dim; ++j) {
            std::vector<Term> ts(g.sc(i, j).begin(), g.sc(i, j).end());
            std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) { return a.k < b.k; });
            for (auto t : ts)
                if (!t.c.zero()) f(i, j, t.k, t.c);
        }
}

}  // namespace detail

inline void write_sc_text(std::ostream& os, const LieSuperalgebra& g) {
    auto h = export_header(g);
    os << "MSS v1 " << h.left << ' ' << h.right << " p=3 dim=" << h.dim << " even=" << h.even << " odd=" << h.odd
       << " rank=" << h.rank << '\n';
    for (std::size_t i = 0; i < g.dim; ++i)
        os << "B " << i << ' ' << g.parity[i] << ' ' << g.blocks[i] << ' ' << detail::deg_field(g.deg[i]) << '\n';
    detail::for_each_upper_term(g, [&](std::size_t i, std::size_t j, std::size_t k, F3 c) {
        os << "C " << i << ' ' << j << ' ' << k << ' ' << int(c.v) << '\n';
    });
}

inline nlohmann::ordered_json to_json(const LieSuperalgebra& g) {
    auto h = export_header(g);
    nlohmann::ordered_json j;
    j["format"] = "MSS";
    j["version"] = 1;
    j["left"] = h.left;
    j["right"] = h.right;
    j["p"] = 3;
    j["dim"] = h.dim;
    j["even"] = h.even;
    j["odd"] = h.odd;
    j["rank"] = h.rank;
    j["lattice"] = g.lattice;
    auto basis = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < g.dim; ++i)
        basis.push_back({{"idx", i}, {"parity", g.parity[i]}, {"block", g.blocks[i]}, {"deg", g.deg[i]}, {"label", g.labels[i]}});
    j["basis"] = std::move(basis);
    auto br = nlohmann::ordered_json::array();
    detail::for_each_upper_term(g, [&](std::size_t a, std::size_t b, std::size_t k, F3 c) {
        br.push_back({a, b, k, int(c.v)});
    });
    j["brackets"] = std::move(br);
    return j;
}

inline void write_export(std::ostream& os, const LieSuperalgebra& g, ExportFormat f) {
    if (f == ExportFormat::sc_text) write_sc_text(os, g);
    else os << to_json(g).dump(1) << '\n';
}

inline std::string export_string(const LieSuperalgebra& g, ExportFormat f = ExportFormat::sc_text) {
    std::ostringstream os;
    write_export(os, g, f);
    return os.str();
}

struct ParsedExport {
    ExportHeader header;
    LieSuperalgebra g;  // labels are "b<idx>"; lattice names are not part of sc-text
};

// Parses sc-text and rebuilds the bracket; throws on malformed input.
inline ParsedExport parse_sc_text(std::istream& is) {
    ParsedExport out;
    std::string line;
    auto fail = [&](const std::string& why) { throw std::runtime_error("sc-text: " + why + ": " + line); };
    if (!std::getline(is, line)) throw std::runtime_error("sc-text: empty input");
    {
        std::istringstream hs(line);
        std::string magic, ver, p;
        hs >> magic >> ver >> out.header.left >> out.header.right >> p;
        if (magic != "MSS" || ver != "v1" || p != "p=3") fail("bad header");
        auto field = [&](const char* key) {
            std::string tok;
            hs >> tok;
            std::string pre = std::string(key) + "=";
            if (tok.rfind(pre, 0) != 0) fail(std::string("missing ") + key);
            return static_cast<std::size_t>(std::stoull(tok.substr(pre.size())));
        };
        out.header.dim = field("dim");
        out.header.even = field("even");
        out.header.odd = field("odd");
        out.header.rank = field("rank");
    }
    auto& g = out.g;
    g.name = out.header.right == "-" ? out.header.left : out.header.left + out.header.right;
    g.dim = out.header.dim;
    std::vector<std::vector<std::pair<std::size_t, F3>>> upper;
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, F3>> cs;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        char tag;
        ls >> tag;
        if (tag == 'B') {
            std::size_t idx;
            int par;
            std::string block, deg;
            if (!(ls >> idx >> par >> block >> deg) || idx != g.parity.size() || (par != 0 && par != 1)) fail("bad basis line");
            g.parity.push_back(par);
            g.blocks.push_back(block);
            g.labels.push_back("b" + std::to_string(idx));
            Degree d;
            if (deg != "-") {
                std::istringstream ds(deg);
                std::string part;
                while (std::getline(ds, part, ',')) d.push_back(std::stoi(part));
            }
            if (d.size() != out.header.rank) fail("degree length differs from rank");
            g.deg.push_back(std::move(d));
        } else if (tag == 'C') {
            std::size_t i, j, k;
            int c;
            if (!(ls >> i >> j >> k >> c) || i > j || c < 1 || c > 2) fail("bad bracket line");
            cs.emplace_back(i, j, k, F3(c));
        } else {
            fail("unknown record");
        }
    }
    if (g.parity.size() != g.dim) throw std::runtime_error("sc-text: basis count differs from dim");
    g.lattice.assign(out.header.rank, "");
    for (std::size_t k = 0; k < out.header.rank; ++k) g.lattice[k] = "x" + std::to_string(k + 1);
    ScBuilder sb(g.dim, g.parity);
    std::map<std::pair<std::size_t, std::size_t>, Vec> acc;
    for (auto& [i, j, k, c] : cs) {
        if (j >= g.dim || k >= g.dim) throw std::runtime_error("sc-text: index out of range");
        auto [it, fresh] = acc.try_emplace({i, j}, g.dim);
        it->second[k] += c;
    }
    for (auto& [ij, v] : acc) sb.set(ij.first, ij.second, v);
    sb.finalize(g);
    if (g.even_dim() != out.header.even || g.odd_dim() != out.header.odd)
        throw std::runtime_error("sc-text: parity counts differ from header");
    return out;
}

inline ParsedExport parse_sc_text(const std::string& text) {
    std::istringstream is(text);
    return parse_sc_text(is);
}

// Number of basis pairs whose bracket differs between two algebras on the same basis.
inline std::size_t bracket_differences(const LieSuperalgebra& a, const LieSuperalgebra& b) {
    if (a.dim != b.dim) return a.dim * a.dim + b.dim * b.dim;
    std::size_t bad = 0;
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            if (basis_bracket(a, i, j) != basis_bracket(b, i, j)) ++bad;
    return bad;
}

}  // namespace mss
