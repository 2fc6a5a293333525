// Acceptance checks: one line per criterion, nonzero exit if any fails.

#include "test_support.hpp"

#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

using namespace coxrack;
using namespace coxrack::testing;

namespace {

struct Check {
    bool ok = true;
    std::vector<std::string> notes;

    void expect(bool cond, const std::string &what)
    {
        if (!cond) {
            ok = false;
            if (notes.size() < 5)
                notes.push_back(what);
        }
    }
};

std::vector<std::string> label_strings(const FiniteRack &r)
{
    std::vector<std::string> out;
    for (const auto &v : *r.labels())
        out.push_back(v.to_string());
    return out;
}

void criterion1(Check &c)
{
    auto rack = coxeter(3, 2, 1, "1,2;2,0");
    c.expect(label_strings(rack) == std::vector<std::string>{"(1,0)", "(1,1)", "(2,0)", "(2,2)"}, "carrier");
    c.expect(rack.table() == one_based({{3, 1, 3, 1}, {2, 4, 2, 4}, {1, 3, 1, 3}, {4, 2, 4, 2}}), "rack matrix");
    auto quandle = coxeter(3, 2, 2, "1,2;2,0");
    c.expect(quandle.table() == one_based({{1, 3, 1, 3}, {4, 2, 4, 2}, {3, 1, 3, 1}, {2, 4, 2, 4}}), "quandle matrix");
}

void criterion2(Check &c)
{
    auto rack = rack_file("hopf_rack.txt");
    auto hopf = pr_invariant(diagram_file("hopf.txt"), rack);
    auto unlink = pr_invariant(diagram_file("unlink2.txt"), rack);
    c.expect(hopf.to_string() == "4 + 4*q1 + 4*q2 + 8*q1*q2", "PR(Hopf) = " + hopf.to_string());
    c.expect(unlink.to_string() == "16 + 8*q1 + 8*q2 + 4*q1*q2", "PR(U2) = " + unlink.to_string());
    c.expect(hopf != unlink, "PR does not separate Hopf from U2");
}

void criterion3(Check &c)
{
    auto trefoil = cp_invariant(diagram_file("trefoil.txt"), coxeter(3, 2, 1, "1,1;1,1"));
    c.expect(trefoil.to_string() == "6*s^3*t^2 + 12*s^9*t^6", "cp(trefoil) = " + trefoil.to_string());
    for (const auto &[e, coeff] : trefoil.terms())
        c.expect(e[0] == 0, "odd framing coefficient nonzero");
    auto torus = cp_invariant(diagram_file("torus_4_2.txt"), coxeter(3, 2, 2, "1,2;2,0"));
    c.expect(torus.to_string() == "4*s^3*t + 4*s^3*t^2 + 8*s^9*t^4", "cp(torus) = " + torus.to_string());
    c.expect(specialize(torus, {{"s", 1}, {"t", 1}}).to_string() == "16", "torus specialization");
}

void criterion4(Check &c)
{
    auto a = coxeter(5, 2, 3, "1,2;2,0");
    auto b = coxeter(5, 2, 1, "1,2;2,0");
    c.expect(a.size() == 16 && b.size() == 16, "carrier sizes");
    c.expect(rack_polynomial(a).to_string() == "16", "alpha=3: " + rack_polynomial(a).to_string());
    c.expect(rack_polynomial(b).to_string() == "16*s^4*t^4", "alpha=1: " + rack_polynomial(b).to_string());
}

void criterion5(Check &c)
{
    auto a = coxeter(3, 2, 1, "1,2;2,0");
    auto b = coxeter(3, 2, 1, "0,2;2,0");
    c.expect(a.table() != b.table(), "racks are identical");
    auto phi = find_isomorphism(a, b);
    c.expect(phi.has_value() && is_isomorphism(a, b, *phi), "no isomorphism found for A vs B");
    c.expect(!find_isomorphism(a, coxeter(3, 2, 2, "1,2;2,0")).has_value(), "alpha=1 and alpha=2 isomorphic");
}

void criterion6(Check &c)
{
    std::mt19937 rng(2024);
    std::size_t built = 0;
    for (std::int64_t nv : {2, 3, 4, 5, 7})
        for (std::size_t m : {1u, 2u}) {
            Modulus n(nv);
            std::uniform_int_distribution<Residue> entry(0, nv - 1);
            for (Residue alpha = 1; alpha < nv; ++alpha) {
                if (!is_unit(alpha, n))
                    continue;
                for (int trial = 0; trial < 20; ++trial) {
                    std::vector<std::vector<Residue>> rows(m, std::vector<Residue>(m));
                    for (std::size_t i = 0; i < m; ++i)
                        for (std::size_t j = i; j < m; ++j)
                            rows[i][j] = rows[j][i] = entry(rng);
                    CoxeterSpec spec(n, m, alpha, SymForm(n, rows));
                    if (carrier(spec).empty())
                        continue;
                    auto r = build_coxeter_rack(spec);
                    ++built;
                    std::string tag = "n=" + std::to_string(nv) + " m=" + std::to_string(m) +
                                      " alpha=" + std::to_string(alpha) + " A=" + spec.form.to_string();
                    c.expect(verify_rack(r.table()).valid(), "verify " + tag);
                    const auto &lab = *r.labels();
                    Residue a2 = n.mul(alpha, alpha);
                    for (std::size_t x = 0; x < r.size(); ++x)
                        for (std::size_t y = 0; y < r.size(); ++y)
                            for (std::size_t z = 0; z < r.size(); ++z)
                                if (bilinear_eval(spec.form, lab[r.op(x, z)], lab[r.op(y, z)]) !=
                                    n.mul(a2, bilinear_eval(spec.form, lab[x], lab[y])))
                                    c.expect(false, "lemma " + tag);
                    if (nv == 2)
                        for (std::size_t x = 0; x < r.size(); ++x)
                            for (std::size_t y = 0; y < r.size(); ++y)
                                if (r.op(x, y) != x)
                                    c.expect(false, "nontrivial over Z2 " + tag);
                    if (alpha == nv - 1)
                        c.expect(is_quandle(r), "alpha=-1 not a quandle " + tag);
                    if (a2 == 1)
                        c.expect(r.table() == r.inverse_table(), "op != inv " + tag);
                    for (Residue beta = 1; beta < nv; ++beta) {
                        if (!is_unit(beta, n))
                            continue;
                        auto rb = build_coxeter_rack(CoxeterSpec(n, m, alpha, spec.form.scaled(beta)));
                        c.expect(*rb.labels() == lab && rb.table() == r.table(), "beta scaling " + tag);
                    }
                }
            }
        }
    c.expect(built > 100, "only " + std::to_string(built) + " racks built");
}

void criterion7(Check &c)
{
    std::vector<FiniteRack> racks{coxeter(3, 2, 1, "1,1;1,1"), coxeter(3, 2, 1, "1,2;2,0"),
                                  coxeter(3, 2, 2, "1,2;2,0"), coxeter(5, 2, 3, "1,2;2,0")};
    auto t3 = diagram_file("trefoil.txt");
    auto t5 = diagram_file("trefoil_w5.txt");
    for (const auto &r : racks) {
        c.expect(pr_invariant(t3, r) == pr_invariant(t5, r), "PR writhe 3 vs 5");
        c.expect(cp_invariant(t3, r) == cp_invariant(t5, r), "cp writhe 3 vs 5");
    }

    std::vector<LinkDiagram> diagrams;
    for (const char *f : {"trefoil.txt", "trefoil_w5.txt", "hopf.txt", "unlink2.txt", "torus_4_2.txt", "unknot.txt"})
        diagrams.push_back(diagram_file(f));
    std::mt19937 rng(7);
    for (int i = 0; i < 30; ++i)
        diagrams.push_back(random_diagram(rng, 6));

    std::vector<FiniteRack> small = small_rack_pool();
    std::erase_if(small, [](const FiniteRack &r) { return r.size() > 6; });
    for (const auto &d : diagrams)
        for (const auto &r : small) {
            // kink placement: delta kinks anywhere on a component give the same count
            for (std::size_t comp = 0; comp < d.components().size(); ++comp) {
                ArcKinks base(d.arc_count(), 0);
                base[d.components()[comp].base_arc()] = 1;
                auto expected = count_colorings(d, base, r);
                for (auto a : d.components()[comp].arcs) {
                    ArcKinks moved(d.arc_count(), 0);
                    moved[a] = 1;
                    c.expect(count_colorings(d, moved, r) == expected, "kink placement");
                }
            }
            if (d.arc_count() <= 6)
                for_each_framing(d.components().size(), rack_rank(r), [&](const std::vector<std::uint64_t> &w) {
                    ArcKinks k = base_arc_kinks(d, w);
                    auto fast = enumerate_colorings_with_kinks(d, k, r);
                    auto slow = brute_force_colorings(d, k, r);
                    std::set<std::vector<std::size_t>> a, b;
                    for (const auto &f : fast)
                        a.insert(f.colors);
                    for (const auto &f : slow)
                        b.insert(f.colors);
                    c.expect(fast.size() == slow.size() && a == b, "oracle mismatch");
                });
        }

    for (const auto &d : diagrams)
        for (const auto &r : racks)
            c.expect(specialize(cp_invariant(d, r), {{"s", 1}, {"t", 1}}) == pr_invariant(d, r), "cp(1,1) != pr");
}

void criterion8(Check &c)
{
    auto d = diagram_file("hopf.txt");
    auto rack = rack_file("hopf_rack.txt");
    auto zero = enumerate_colorings(d, std::vector<std::uint64_t>{0, 0}, rack);
    std::vector<std::vector<std::size_t>> pairs;
    for (const auto &f : zero)
        pairs.push_back({f.colors[d.arc_index("x")] + 1, f.colors[d.arc_index("y")] + 1});
    c.expect(pairs == std::vector<std::vector<std::size_t>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}}, "framing (0,0) table");
    c.expect(enumerate_colorings(d, std::vector<std::uint64_t>{1, 1}, rack).size() == 8, "framing (1,1) count");
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Check &)>>> criteria{
        {"Coxeter construction", criterion1}, {"PR reproduction", criterion2},
        {"cp reproduction", criterion3},      {"rack polynomials", criterion4},
        {"isomorphism", criterion5},          {"property suites", criterion6},
        {"invariance and oracles", criterion7}, {"coloring tables", criterion8}};
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        try {
            criteria[i].second(c);
        } catch (const std::exception &e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        std::cout << (c.ok ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": " << criteria[i].first;
        for (const auto &n : c.notes)
            std::cout << "\n    " << n;
        std::cout << std::endl;
        failures += !c.ok;
    }
    return failures == 0 ? 0 : 1;
}
