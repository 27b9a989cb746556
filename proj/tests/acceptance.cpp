// Acceptance run: one line per criterion, "criterion N: PASS|FAIL  summary",
// followed by indented detail lines for anything that did not match.
// Usage: mss_acceptance [N...]   (no arguments runs all eleven)

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

#include "mss/export.hpp"
#include "mss/golden_data.hpp"
#include "mss/verify.hpp"
#include "oracle/oracle.hpp"

using namespace mss;

namespace {

struct Outcome {
    bool pass = true;
    std::string summary;
    std::vector<std::string> details;

    void fail(std::string d) {
        pass = false;
        details.push_back(std::move(d));
    }
    void require(bool ok, std::string d) {
        if (!ok) fail(std::move(d));
    }
};

const GoldenStore& store() {
    static const GoldenStore s(embedded_golden_files());
    return s;
}

std::vector<std::string> super_entries() {
    std::vector<std::string> out;
    for (auto& e : all_entries())
        if (e != "d21" && build_entry(e).odd_dim() > 0) out.push_back(e);
    return out;
}

std::vector<std::string> listed_entries() {
    auto v = super_entries();
    v.insert(v.begin(), "d21");
    return v;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_dims(std::size_t e, std::size_t o) { return "(" + std::to_string(e) + "," + std::to_string(o) + ")"; }

Outcome criterion1() {
    // Super dimensions, written out here independently of the golden files.
    const std::vector<std::pair<std::string, std::pair<std::size_t, std::size_t>>> want = {
        {"S1S12", {6, 8}},    {"S1S42", {21, 14}},  {"S2S12", {11, 14}}, {"S2S42", {35, 20}},
        {"S4S12", {24, 26}},  {"S4S42", {66, 32}},  {"S8S12", {55, 50}}, {"S8S42", {133, 56}},
        {"S12S12", {21, 16}}, {"S12S42", {36, 40}}, {"S42S42", {78, 64}},
    };
    Outcome o;
    auto tables = store().tables();
    for (auto& [e, d] : want) {
        auto g = build_entry(e);
        o.require(g.even_dim() == d.first && g.odd_dim() == d.second,
                  e + ": got " + fmt_dims(g.even_dim(), g.odd_dim()) + ", want " + fmt_dims(d.first, d.second));
        o.require(tables.super_dims.at(e) == d, e + ": golden table disagrees with the literal");
    }
    o.summary = "11 super entries checked";
    return o;
}

Outcome criterion2() {
    const std::vector<std::pair<std::string, std::size_t>> want = {
        {"S1S1", 3},  {"S1S2", 8},  {"S1S4", 21}, {"S1S8", 52},  {"S2S2", 16},
        {"S2S4", 35}, {"S2S8", 78}, {"S4S4", 66}, {"S4S8", 133}, {"S8S8", 248},
    };
    Outcome o;
    for (auto& [e, n] : want) {
        auto id = *parse_entry(e);
        auto [fe, fo] = oracle::formula_dims(id.left, id.right);
        auto g = build_entry(id);
        o.require(fo == 0 && static_cast<std::size_t>(fe) == n, e + ": formula gives " + fmt_dims(fe, fo));
        o.require(g.odd_dim() == 0 && g.dim == n, e + ": built dimension " + std::to_string(g.dim));
    }
    auto d = derived_subalgebra(build_entry("S2S8")).dim();
    o.require(d == 77, "S2S8 derived dimension " + std::to_string(d));
    o.summary = "10 classical entries, S2S8 derived dimension " + std::to_string(d);
    return o;
}

Outcome criterion3() {
    Outcome o;
    double super_total = 0, largest = 0;
    std::uint64_t triples = 0;
    for (auto& e : all_entries()) {
        auto g = build_entry(e);
        auto t0 = std::chrono::steady_clock::now();
        auto r = verify_super_jacobi_exhaustive(g);
        double s = seconds_since(t0);
        triples += r.triples;
        if (g.odd_dim() > 0 && e != "d21") super_total += s;
        if (e == "S8S8") largest = s;
        o.require(r.violations == 0, e + ": " + std::to_string(r.violations) + " violations");
        o.require(r.triples == static_cast<std::uint64_t>(g.dim) * g.dim * g.dim, e + ": scan incomplete");
    }
    o.require(largest < 600, "S8S8 took " + std::to_string(largest) + " s");
    o.require(super_total < 300, "super entries took " + std::to_string(super_total) + " s");
    std::ostringstream s;
    s.precision(2);
    s << std::fixed << "22 algebras, " << triples << " triples; S8S8 " << largest << " s, super entries " << super_total
      << " s";
    o.summary = s.str();
    return o;
}

struct Extracted {
    LieSuperalgebra g;
    EntryGolden G;
    RootComparison rc;
    CartanComparison cc;
};

Extracted extract(const std::string& e) {
    Extracted x{build_entry(e), store().entry(e), {}, {}};
    x.rc = compare_roots(x.g, x.G);
    x.cc = compare_cartan(x.g, x.rc.rd, x.G);
    return x;
}

Outcome criterion4() {
    // The listed tau sets, in the order d21 followed by the super entries.
    const std::map<std::string, std::set<int>> tau = {
        {"d21", {2}},       {"S1S42", {2, 3}},     {"S4S42", {4, 6}},   {"S8S42", {6, 7}},
        {"S42S42", {1, 2, 4, 6}}, {"S12S42", {1, 3, 4}}, {"S2S42", {3, 5}}, {"S12S12", {4}},
        {"S1S12", {2}},     {"S4S12", {4}},        {"S8S12", {5}},      {"S2S12", {3}},
    };
    Outcome o;
    std::size_t exact = 0, mod3 = 0, tau_ok = 0, pairing = 0;
    for (auto& e : listed_entries()) {
        auto x = extract(e);
        if (!x.cc.cd.ok()) {
            o.fail(e + ": " + x.cc.cd.problems.front());
            continue;
        }
        o.require(x.G.tau == tau.at(e), e + ": golden tau differs from the literal");
        bool t = x.cc.cd.tau == tau.at(e);
        tau_ok += t;
        o.require(t, e + ": tau " + format_tau(x.cc.cd.tau) + ", want " + format_tau(tau.at(e)));
        exact += x.cc.integer;
        mod3 += x.cc.mod3_ok;
        pairing += x.cc.pairing;
        if (!x.cc.integer) {
            std::string m;
            for (std::size_t k = 0; k < x.cc.integer_mismatches.size() && k < 3; ++k)
                m += (k ? "; " : "") + x.cc.integer_mismatches[k];
            if (x.cc.integer_mismatches.size() > 3) m += "; ...";
            o.fail(e + ": integer entries differ at " + m);
        }
        for (auto& mm : x.cc.mod3_mismatches) o.fail(e + ": differs mod 3 at " + mm);
    }
    o.summary = std::to_string(exact) + "/12 integer matrices exact, " + std::to_string(mod3) + "/12 equal mod 3, " +
                std::to_string(tau_ok) + "/12 tau sets";
    o.details.push_back("lattice pairing alpha_j(H_i) with balanced H_i equals the listing for " + std::to_string(pairing) +
                        "/12 (reported only)");
    return o;
}

Outcome criterion5() {
    Outcome o;
    std::size_t ok = 0;
    std::string canon;
    for (auto& e : listed_entries()) {
        auto x = extract(e);
        bool good = x.rc.phi_even && x.rc.phi_odd && x.rc.pi && !x.rc.canonicalization_failed;
        ok += good;
        if (x.G.canonicalize_first) {
            o.require(x.rc.canonicalizer.has_value(), e + ": no canonicalizing signed permutation");
            if (x.rc.canonicalizer)
                canon += (canon.empty() ? "" : ", ") + e + " " + format_permutation(*x.rc.canonicalizer, x.g.lattice);
        }
        o.require(x.rc.phi_even, e + ": Phi_even differs");
        o.require(x.rc.phi_odd, e + ": Phi_odd differs");
        o.require(x.rc.pi, e + ": Pi " + format_degrees(x.rc.rd.pi, x.g.lattice) + ", listed " +
                               format_degrees(x.G.pi, x.g.lattice));
    }
    o.summary = std::to_string(ok) + "/12 entries match; canonicalizers: " + canon;
    return o;
}

Outcome criterion6() {
    Outcome o;
    std::size_t ok = 0;
    for (auto& e : listed_entries()) {
        auto x = extract(e);
        if (!x.cc.cd.ok()) {
            o.fail(e + ": generators: " + x.cc.cd.problems.front());
            continue;
        }
        auto kind = *parse_kind(x.G.certificate);
        auto cert = presentation_certificate(x.g, x.rc.rd, x.cc.cd, kind);
        ok += cert.pass();
        for (auto& it : cert.items) o.require(it.pass, e + " (" + to_string(kind) + "): " + it.name + " " + it.detail);
    }
    o.summary = std::to_string(ok) + "/12 certificates pass";
    return o;
}

Outcome criterion7() {
    Outcome o;
    std::size_t simple = 0, codim1 = 0;
    for (auto& e : listed_entries()) {
        auto want = (e == "S2S12" || e == "S2S42") ? SimplicityVerdict::derived_simple_codim1
                                                   : SimplicityVerdict::graded_simple;
        auto v = graded_simplicity(build_entry(e)).verdict;
        o.require(v == want, e + ": " + to_string(v) + ", want " + to_string(want));
        simple += v == SimplicityVerdict::graded_simple;
        codim1 += v == SimplicityVerdict::derived_simple_codim1;
    }
    o.summary = std::to_string(simple) + " graded-simple, " + std::to_string(codim1) + " derived simple of codimension 1";
    return o;
}

Outcome criterion8() {
    struct Want {
        std::string entry;
        std::size_t dim;
        bool derived;
        std::vector<std::size_t> summands;  // empty: irreducible
    };
    const std::vector<Want> want = {
        {"S1S42", 14, false, {}},  {"S4S42", 32, false, {}},  {"S8S42", 56, false, {}},
        {"S42S42", 64, false, {}}, {"S12S42", 40, false, {}}, {"S4S12", 26, false, {}},
        {"S8S12", 50, false, {}},  {"S2S12", 14, true, {}},   {"S12S12", 16, false, {8, 8}},
        {"S1S12", 8, false, {4, 4}},
    };
    Outcome o;
    std::size_t ok = 0;
    for (auto& w : want) {
        auto g = build_entry(w.entry);
        auto G = store().entry(w.entry);
        auto rc = compare_roots(g, G);
        auto m = odd_module(g);
        bool good = m.dim == w.dim && representation_violations(g, m) == 0;
        if (w.summands.empty()) {
            auto nr = norton_irreducible(w.derived ? odd_module(g, derived_even_part(g)) : m);
            good = good && nr.verdict == NortonVerdict::irreducible;
            o.require(nr.verdict == NortonVerdict::irreducible, w.entry + ": Norton " + to_string(nr.verdict));
        } else {
            std::vector<Vec> seeds;
            for (auto& h : highest_weight_vectors(g, m, rc.rd.order)) seeds.push_back(h.v);
            auto d = decompose_from(m, seeds);
            std::vector<std::size_t> dims;
            bool parts_irr = true;
            for (auto& s : d.summands) {
                dims.push_back(s.dim());
                ModuleRep sub;
                sub.dim = s.dim();
                Coordinatizer co(s.basis(), m.dim);
                for (auto& a : m.action) {
                    Mat x(sub.dim, sub.dim);
                    for (std::size_t c = 0; c < sub.dim; ++c) x.set_col(c, *co.coords(a * s.basis()[c]));
                    sub.action.push_back(std::move(x));
                }
                parts_irr = parts_irr && norton_irreducible(sub).verdict == NortonVerdict::irreducible;
            }
            bool red = norton_irreducible(m).verdict == NortonVerdict::reducible;
            good = good && d.direct && dims == w.summands && parts_irr && red;
            o.require(d.direct && dims == w.summands, w.entry + ": decomposition does not split as listed");
            o.require(parts_irr, w.entry + ": a summand is not irreducible");
            o.require(red, w.entry + ": Norton does not find the reduction");
        }
        o.require(m.dim == w.dim, w.entry + ": odd dimension " + std::to_string(m.dim));
        ok += good;
    }
    o.summary = std::to_string(ok) + "/10 odd modules as listed";
    return o;
}

Outcome criterion9() {
    Outcome o;
    auto a = exterior_model(ExteriorKind::sp6_lambda3);
    auto b = exterior_model(ExteriorKind::sp8_lambda3);
    auto c = exterior_model(ExteriorKind::sp6_lambda2);
    o.require(a.kernel_dim == 14, "sp6 Lambda^3 kernel " + std::to_string(a.kernel_dim));
    o.require(b.module.dim == 40 && b.sub_in_kernel && b.sub_dim == 8,
              "sp8 quotient " + std::to_string(b.module.dim) + ", W~ dim " + std::to_string(b.sub_dim));
    o.require(c.module.dim == 13 && c.sub_in_kernel, "sp6 Lambda^2 quotient " + std::to_string(c.module.dim));
    for (auto e : {"S1S42", "S12S42", "S4S12"}) {
        auto em = *exterior_match(e);
        auto model = exterior_model(em.kind);
        o.require(expected_odd_weights(model, em) == weight_multiset(odd_module(build_entry(e))),
                  std::string(e) + ": weight multiset differs from " + to_string(em.kind));
    }
    o.summary = "ker " + std::to_string(a.kernel_dim) + ", sp8 quotient " + std::to_string(b.module.dim) +
                ", sp6 Lambda^2 quotient " + std::to_string(c.module.dim) + ", 3 weight multisets";
    return o;
}

Outcome criterion10() {
    Outcome o;
    auto eg = store().epsilon();
    std::vector<unsigned> subsets;
    for (auto& s : eg.subsets) subsets.push_back(*parse_subset(s));
    auto t = epsilon_table(build_entry("S1S42"), subsets);
    std::size_t agree = 0;
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (std::size_t j = 0; j < subsets.size(); ++j) {
            auto& v = t.values[i][j];
            bool ok = v && *v == F3(eg.table[i][j]);
            agree += ok;
            o.require(ok, eg.subsets[i] + " x " + eg.subsets[j] + ": " + (v ? std::to_string(v->v) : "undefined") +
                              ", want " + std::to_string(eg.table[i][j]));
        }
    o.require(subsets.size() == 8, "expected 8 subsets");
    o.summary = std::to_string(agree) + "/64 entries agree";
    return o;
}

Outcome criterion11() {
    Outcome o;
    std::size_t algebras = 0;
    for (auto& n : algebra_names()) {
        auto v = verify_composition_axioms(build_composition(n));
        o.require(v.empty(), n + ": " + (v.empty() ? "" : v.front().str()));
        ++algebras;
    }
    for (int l = 0; l < 3; ++l) {
        auto v = verify_composition_axioms(build_composition("B12bar_lambda", F3(l)));
        o.require(v.empty(), "B12bar lambda=" + std::to_string(l) + ": " + (v.empty() ? "" : v.front().str()));
        ++algebras;
    }
    auto tv = verify_triality_model();
    o.require(tv.empty(), "triality model: " + std::to_string(tv.size()) + " violations");
    std::size_t theta = 0;
    for (auto& n : algebra_names()) {
        auto s = build_composition(n);
        for (auto& t : tri_solve(s)) {
            bool ok = theta_apply(s, theta_apply(s, theta_apply(s, t))) == t;
            o.require(ok, n + ": theta^3 != id");
            ++theta;
        }
    }
    for (auto n : {"S12", "S42"}) o.require(local_triality(build_composition(n)).unique(), std::string(n) + ": local triality not unique");
    std::size_t exported = 0;
    for (auto& e : all_entries()) {
        auto text = export_string(build_entry(e));
        bool ok = export_string(parse_sc_text(text).g) == text;
        o.require(ok, e + ": export round trip differs");
        ++exported;
    }
    o.summary = std::to_string(algebras) + " algebras, " + std::to_string(tv.size()) + " triality-model violations, theta^3 on " +
                std::to_string(theta) + " elements, " + std::to_string(exported) + " round trips";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    std::cout.imbue(std::locale::classic());
    const std::vector<std::function<Outcome()>> all = {criterion1, criterion2, criterion3, criterion4,
                                                       criterion5, criterion6, criterion7, criterion8,
                                                       criterion9, criterion10, criterion11};
    std::vector<int> which;
    for (int i = 1; i < argc; ++i) {
        int n = std::atoi(argv[i]);
        if (n < 1 || n > 11) {
            std::cerr << "usage: mss_acceptance [1-11 ...]\n";
            return 2;
        }
        which.push_back(n);
    }
    if (which.empty())
        for (int n = 1; n <= 11; ++n) which.push_back(n);
    int failed = 0;
    for (int n : which) {
        Outcome r;
        try {
            r = all[n - 1]();
        } catch (const std::exception& e) {
            r.fail(std::string("exception: ") + e.what());
        }
        std::cout << "criterion " << n << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.summary << "\n";
        for (auto& d : r.details) std::cout << "    " << d << "\n";
        std::cout.flush();
        failed += !r.pass;
    }
    return failed ? 1 : 0;
}
