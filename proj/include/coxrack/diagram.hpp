#pragma once

/**
 * @file diagram.hpp
 * @brief Oriented link diagrams as signed crossing codes.
 *
 * Each crossing names the incoming under arc, the over arc and the outgoing
 * under arc. Sign +1 imposes under_out = under_in |> over, sign -1 imposes
 * under_out = under_in |>^{-1} over. Zero-crossing components are counted
 * separately as free loops.
 *
 * File format, one item per line, '#' starts a comment:
 *
 *     loops 2
 *     + x y z
 *     - z x y
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "parse_error.hpp"

namespace coxrack {

struct CrossingCode {
    int sign;
    std::string under_in;
    std::string over;
    std::string under_out;
    std::size_t line = 0;
};

struct Crossing {
    int sign;
    std::size_t under_in;
    std::size_t over;
    std::size_t under_out;
};

struct Component {
    /// Successor order starting from the base arc; a free loop has a single arc.
    std::vector<std::size_t> arcs;
    bool free_loop = false;

    std::size_t base_arc() const { return arcs.front(); }
};

class LinkDiagram {
public:
    /// Free-loop arcs are named "~1", "~2", ...; user labels may not start with '~'.
    static LinkDiagram from_codes(const std::vector<CrossingCode> &codes, std::size_t free_loops = 0)
    {
        LinkDiagram d;
        std::map<std::string, std::size_t> first_in, first_out;
        for (std::size_t c = 0; c < codes.size(); ++c) {
            const auto &code = codes[c];
            if (code.sign != 1 && code.sign != -1)
                throw ParseError(code.line, "crossing sign must be + or -");
            for (const auto *label : {&code.under_in, &code.over, &code.under_out})
                if (label->empty() || label->front() == '~')
                    throw ParseError(code.line, "invalid arc label '" + *label + "'");
            if (auto [it, ok] = first_in.emplace(code.under_in, code.line); !ok)
                throw ParseError(code.line, "arc '" + code.under_in + "' enters a second undercrossing (first at line " +
                                                std::to_string(it->second) + ")");
            if (auto [it, ok] = first_out.emplace(code.under_out, code.line); !ok)
                throw ParseError(code.line, "arc '" + code.under_out + "' leaves a second undercrossing (first at line " +
                                                std::to_string(it->second) + ")");
        }
        for (const auto &code : codes) {
            if (!first_out.count(code.under_in))
                throw ParseError(code.line, "arc '" + code.under_in + "' never leaves an undercrossing");
            if (!first_in.count(code.under_out))
                throw ParseError(code.line, "arc '" + code.under_out + "' never enters an undercrossing");
            if (!first_in.count(code.over))
                throw ParseError(code.line, "unknown over arc '" + code.over + "'");
        }

        for (const auto &[name, line] : first_in)
            d.names_.push_back(name);
        std::map<std::string, std::size_t> index;
        for (std::size_t i = 0; i < d.names_.size(); ++i)
            index[d.names_[i]] = i;
        const std::size_t crossing_arcs = d.names_.size();
        for (std::size_t l = 1; l <= free_loops; ++l)
            d.names_.push_back("~" + std::to_string(l));

        d.leaving_.assign(crossing_arcs, 0);
        for (std::size_t c = 0; c < codes.size(); ++c) {
            const auto &code = codes[c];
            d.crossings_.push_back({code.sign, index[code.under_in], index[code.over], index[code.under_out]});
            d.leaving_[index[code.under_in]] = c;
        }

        d.component_of_.assign(d.names_.size(), 0);
        std::vector<char> seen(crossing_arcs, 0);
        for (std::size_t start = 0; start < crossing_arcs; ++start) {
            if (seen[start])
                continue;
            Component comp;
            for (std::size_t a = start; !seen[a]; a = d.crossings_[d.leaving_[a]].under_out) {
                seen[a] = 1;
                d.component_of_[a] = d.components_.size();
                comp.arcs.push_back(a);
            }
            d.components_.push_back(std::move(comp));
        }
        for (std::size_t a = crossing_arcs; a < d.names_.size(); ++a) {
            d.component_of_[a] = d.components_.size();
            d.components_.push_back({{a}, true});
        }

        d.writhe_.assign(d.components_.size(), 0);
        for (const auto &x : d.crossings_)
            if (d.component_of_[x.under_in] == d.component_of_[x.over])
                d.writhe_[d.component_of_[x.under_in]] += x.sign;
        return d;
    }

    std::size_t arc_count() const noexcept { return names_.size(); }
    const std::string &arc_name(std::size_t a) const { return names_.at(a); }
    const std::vector<std::string> &arc_names() const noexcept { return names_; }
    const std::vector<Crossing> &crossings() const noexcept { return crossings_; }
    const std::vector<Component> &components() const noexcept { return components_; }
    std::size_t component_of(std::size_t arc) const { return component_of_.at(arc); }
    /// Self-writhe of each component under the blackboard framing.
    const std::vector<std::int64_t> &writhe_vector() const noexcept { return writhe_; }

    std::size_t free_loop_count() const
    {
        return static_cast<std::size_t>(
            std::count_if(components_.begin(), components_.end(), [](const Component &c) { return c.free_loop; }));
    }

    /// Index of the crossing at which `arc` passes under; only for non-free-loop arcs.
    std::size_t leaving_crossing(std::size_t arc) const { return leaving_.at(arc); }

    std::size_t arc_index(const std::string &name) const
    {
        auto it = std::find(names_.begin(), names_.end(), name);
        if (it == names_.end())
            throw std::out_of_range("no arc named '" + name + "'");
        return static_cast<std::size_t>(it - names_.begin());
    }

private:
    std::vector<std::string> names_;
    std::vector<Crossing> crossings_;
    std::vector<std::size_t> leaving_;
    std::vector<Component> components_;
    std::vector<std::size_t> component_of_;
    std::vector<std::int64_t> writhe_;
};

inline LinkDiagram parse_diagram(std::istream &in)
{
    std::vector<CrossingCode> codes;
    std::size_t loops = 0;
    bool saw_loops = false;
    std::string raw;
    for (std::size_t line = 1; std::getline(in, raw); ++line) {
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream tokens(raw);
        std::vector<std::string> words;
        for (std::string w; tokens >> w;)
            words.push_back(w);
        if (words.empty())
            continue;
        if (words[0] == "loops") {
            if (saw_loops)
                throw ParseError(line, "'loops' given twice");
            if (words.size() != 2)
                throw ParseError(line, "expected 'loops <count>'");
            try {
                std::size_t used = 0;
                long long v = std::stoll(words[1], &used);
                if (used != words[1].size() || v < 0)
                    throw std::invalid_argument("");
                loops = static_cast<std::size_t>(v);
            } catch (const std::exception &) {
                throw ParseError(line, "loop count must be a non-negative integer");
            }
            saw_loops = true;
            continue;
        }
        if (words.size() != 4 || (words[0] != "+" && words[0] != "-"))
            throw ParseError(line, "expected '<+|-> <under_in> <over> <under_out>'");
        codes.push_back({words[0] == "+" ? 1 : -1, words[1], words[2], words[3], line});
    }
    return LinkDiagram::from_codes(codes, loops);
}

inline LinkDiagram parse_diagram(const std::string &text)
{
    std::istringstream in(text);
    return parse_diagram(in);
}

inline const std::vector<Component> &components_of(const LinkDiagram &d) { return d.components(); }

/// Kinks to add per component so that its writhe is congruent to the target mod N.
inline std::vector<std::uint64_t> framing_deltas(const LinkDiagram &d, const std::vector<std::uint64_t> &target,
                                                 std::uint64_t rank)
{
    if (target.size() != d.components().size())
        throw std::domain_error("framing has " + std::to_string(target.size()) + " entries but the diagram has " +
                                std::to_string(d.components().size()) + " components");
    if (rank == 0)
        throw std::domain_error("rack rank must be positive");
    const auto n = static_cast<std::int64_t>(rank);
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < target.size(); ++i) {
        if (target[i] >= rank)
            throw std::domain_error("framing residue " + std::to_string(target[i]) + " is not below N = " +
                                    std::to_string(rank));
        std::int64_t delta = (static_cast<std::int64_t>(target[i]) - d.writhe_vector()[i]) % n;
        out.push_back(static_cast<std::uint64_t>(delta < 0 ? delta + n : delta));
    }
    return out;
}

} // namespace coxrack
