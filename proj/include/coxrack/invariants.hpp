#pragma once

/**
 * @file invariants.hpp
 * @brief Rack colorings of framed diagrams and the counting invariants
 * PR(L,T) and cp(L,T).
 *
 * Framings are changed formally: a component whose writhe must grow by
 * delta carries delta positive kinks on one of its arcs, and a kinked arc a
 * enters its undercrossing with colour pi^delta(a) where pi(x) = x |> x.
 */

#include <cstddef>
#include <cstdint>
#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "diagram.hpp"
#include "modring.hpp"
#include "poly.hpp"
#include "rack.hpp"

namespace coxrack {

/// Kink count per arc of a diagram.
using ArcKinks = std::vector<std::uint64_t>;

/// Colours per arc, indexed like LinkDiagram::arc_names().
struct Coloring {
    std::vector<std::size_t> colors;
    bool operator==(const Coloring &) const = default;
    bool operator<(const Coloring &rhs) const { return colors < rhs.colors; }
};

/// Places each component's kinks on its base arc.
inline ArcKinks base_arc_kinks(const LinkDiagram &d, const std::vector<std::uint64_t> &deltas)
{
    if (deltas.size() != d.components().size())
        throw std::domain_error("kink vector has " + std::to_string(deltas.size()) + " entries but the diagram has " +
                                std::to_string(d.components().size()) + " components");
    ArcKinks kinks(d.arc_count(), 0);
    for (std::size_t c = 0; c < deltas.size(); ++c)
        kinks[d.components()[c].base_arc()] = deltas[c];
    return kinks;
}

/// Independent re-check of every crossing and free-loop relation.
inline bool satisfies_relations(const LinkDiagram &d, const ArcKinks &kinks, const FiniteRack &rack,
                                const Coloring &f)
{
    if (f.colors.size() != d.arc_count())
        return false;
    for (auto x : f.colors)
        if (x >= rack.size())
            return false;
    auto kinked = [&](std::size_t arc) { return diagonal_map(rack, f.colors[arc], static_cast<std::int64_t>(kinks[arc])); };
    for (const auto &c : d.crossings())
        if (rack.act(kinked(c.under_in), f.colors[c.over], c.sign) != f.colors[c.under_out])
            return false;
    for (const auto &comp : d.components())
        if (comp.free_loop && kinked(comp.base_arc()) != f.colors[comp.base_arc()])
            return false;
    return true;
}

namespace detail {

class ColoringSearch {
public:
    ColoringSearch(const LinkDiagram &d, const ArcKinks &kinks, const FiniteRack &rack)
        : d_(d), rack_(rack), colors_(d.arc_count(), 0)
    {
        if (kinks.size() != d.arc_count())
            throw std::domain_error("kink vector length does not match arc count");

        std::map<std::uint64_t, std::vector<std::size_t>> power_cache;
        kinked_.resize(d.arc_count());
        for (std::size_t a = 0; a < d.arc_count(); ++a) {
            auto [it, fresh] = power_cache.try_emplace(kinks[a]);
            if (fresh)
                it->second = diagonal_power_table(rack, kinks[a]);
            kinked_[a] = it->second;
        }

        for (const auto &comp : d.components())
            for (std::size_t i = 0; i < comp.arcs.size(); ++i) {
                Step step;
                step.arc = comp.arcs[i];
                step.free_loop = comp.free_loop;
                if (i > 0)
                    step.forced_by = d.leaving_crossing(comp.arcs[i - 1]);
                order_.push_back(step);
            }
        position_.assign(d.arc_count(), 0);
        for (std::size_t s = 0; s < order_.size(); ++s)
            position_[order_[s].arc] = s;

        // Each crossing is checked once all three of its arcs are coloured.
        for (std::size_t c = 0; c < d.crossings().size(); ++c) {
            const auto &x = d.crossings()[c];
            auto last = std::max({position_[x.under_in], position_[x.over], position_[x.under_out]});
            order_[last].completes.push_back(c);
        }
    }

    template <typename Visit>
    void run(Visit &&visit)
    {
        descend(0, visit);
    }

private:
    struct Step {
        std::size_t arc;
        bool free_loop = false;
        std::optional<std::size_t> forced_by;
        std::vector<std::size_t> completes;
    };

    std::size_t image(const Crossing &c) const
    {
        return rack_.act(kinked_[c.under_in][colors_[c.under_in]], colors_[c.over], c.sign);
    }

    template <typename Visit>
    void descend(std::size_t s, Visit &visit)
    {
        if (s == order_.size()) {
            visit(std::as_const(colors_));
            return;
        }
        const Step &step = order_[s];
        if (step.forced_by) {
            const auto &c = d_.crossings()[*step.forced_by];
            if (position_[c.over] < s) {
                try_color(s, image(c), visit);
                return;
            }
        }
        for (std::size_t x = 0; x < rack_.size(); ++x)
            try_color(s, x, visit);
    }

    template <typename Visit>
    void try_color(std::size_t s, std::size_t x, Visit &visit)
    {
        const Step &step = order_[s];
        if (step.free_loop && kinked_[step.arc][x] != x)
            return;
        colors_[step.arc] = x;
        for (auto c : step.completes) {
            const auto &crossing = d_.crossings()[c];
            if (image(crossing) != colors_[crossing.under_out])
                return;
        }
        descend(s + 1, visit);
    }

    const LinkDiagram &d_;
    const FiniteRack &rack_;
    std::vector<std::vector<std::size_t>> kinked_;
    std::vector<Step> order_;
    std::vector<std::size_t> position_;
    std::vector<std::size_t> colors_;
};

} // namespace detail

/**
 * Calls visit(colors) for every colouring of d with the given kink
 * placement, in lexicographic order of the colours along the search order
 * (components in order, arcs in successor order from the base arc).
 *
 * Within a component only the base arc branches unless a later arc's over
 * arc is still uncoloured; every crossing is checked as soon as its three
 * arcs are known.
 */
template <typename Visit>
void for_each_coloring(const LinkDiagram &d, const ArcKinks &kinks, const FiniteRack &rack, Visit &&visit)
{
    detail::ColoringSearch search(d, kinks, rack);
    search.run(visit);
}

inline std::vector<Coloring> enumerate_colorings_with_kinks(const LinkDiagram &d, const ArcKinks &kinks,
                                                            const FiniteRack &rack)
{
    std::vector<Coloring> out;
    for_each_coloring(d, kinks, rack, [&](const std::vector<std::size_t> &colors) { out.push_back({colors}); });
    return out;
}

/// Colourings with `deltas[i]` kinks on the base arc of component i.
inline std::vector<Coloring> enumerate_colorings(const LinkDiagram &d, const std::vector<std::uint64_t> &deltas,
                                                 const FiniteRack &rack)
{
    return enumerate_colorings_with_kinks(d, base_arc_kinks(d, deltas), rack);
}

inline std::uint64_t count_colorings(const LinkDiagram &d, const ArcKinks &kinks, const FiniteRack &rack)
{
    std::uint64_t n = 0;
    for_each_coloring(d, kinks, rack, [&](const std::vector<std::size_t> &) { ++n; });
    return n;
}

/// Calls f(w) for every framing vector w in (Z/N)^c, in lexicographic order.
template <typename F>
void for_each_framing(std::size_t components, std::uint64_t rank, F &&f)
{
    std::vector<std::uint64_t> w(components, 0);
    while (true) {
        f(std::as_const(w));
        std::size_t i = components;
        while (i > 0) {
            --i;
            if (++w[i] < rank)
                break;
            w[i] = 0;
            if (i == 0)
                return;
        }
        if (components == 0)
            return;
    }
}

/// PR(L,T) = sum over w in (Z/N)^c of |Hom(FR(D,w),T)| q^w.
inline MultiPoly pr_invariant(const LinkDiagram &d, const FiniteRack &rack)
{
    const auto rank = rack_rank(rack);
    const std::size_t c = d.components().size();
    MultiPoly p(q_variables(c));
    for_each_framing(c, rank, [&](const std::vector<std::uint64_t> &w) {
        auto kinks = base_arc_kinks(d, framing_deltas(d, w, rank));
        p.add_term(Exponents(w.begin(), w.end()), count_colorings(d, kinks, rack));
    });
    return p;
}

class ModuleDataRequired : public std::domain_error {
public:
    ModuleDataRequired() : std::domain_error("module data required: cp needs a rack built from (Z/nZ)^m") {}
};

/// |Im(f)| and |Span(Im(f))| for a colouring, where Im(f) is the subrack generated by the arc colours.
struct ImageSizes {
    std::uint64_t image;
    std::uint64_t span;
};

inline ImageSizes image_sizes(const FiniteRack &rack, const std::vector<std::size_t> &colors)
{
    if (!rack.labels() || !rack.module_data())
        throw ModuleDataRequired();
    auto image = subrack_closure(rack, colors);
    std::vector<ModVector> gens;
    for (auto x : image)
        gens.push_back((*rack.labels())[x]);
    const auto &m = *rack.module_data();
    return {image.size(), span_enumerate(gens, m.modulus, m.dim).size()};
}

/// cp(L,T) = sum over w and colourings f of q^w s^{|Span(Im f)|} t^{|Im f|}.
inline MultiPoly cp_invariant(const LinkDiagram &d, const FiniteRack &rack)
{
    if (!rack.labels() || !rack.module_data())
        throw ModuleDataRequired();
    const auto rank = rack_rank(rack);
    const std::size_t c = d.components().size();
    auto vars = q_variables(c);
    vars.push_back("s");
    vars.push_back("t");
    MultiPoly p(vars);

    std::map<std::vector<std::size_t>, ImageSizes> cache;
    std::vector<char> used(rack.size());
    for_each_framing(c, rank, [&](const std::vector<std::uint64_t> &w) {
        auto kinks = base_arc_kinks(d, framing_deltas(d, w, rank));
        std::map<Exponents, std::uint64_t> tally;
        for_each_coloring(d, kinks, rack, [&](const std::vector<std::size_t> &colors) {
            std::fill(used.begin(), used.end(), 0);
            for (auto x : colors)
                used[x] = 1;
            std::vector<std::size_t> seed;
            for (std::size_t x = 0; x < used.size(); ++x)
                if (used[x])
                    seed.push_back(x);
            auto it = cache.find(seed);
            if (it == cache.end())
                it = cache.emplace(seed, image_sizes(rack, seed)).first;
            Exponents e(w.begin(), w.end());
            e.push_back(it->second.span);
            e.push_back(it->second.image);
            ++tally[e];
        });
        for (const auto &[e, n] : tally)
            p.add_term(e, n);
    });
    return p;
}

inline MultiPoly specialize(const MultiPoly &p, const std::map<std::string, std::int64_t> &bindings)
{
    return p.specialize(bindings);
}

} // namespace coxrack
