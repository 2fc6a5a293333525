#pragma once

/**
 * @file rack_io.hpp
 * @brief Rack matrix files.
 *
 * Line 1 holds k, followed by k lines of k space-separated 1-based entries.
 * A Coxeter rack may append a module section after one blank line:
 *
 *     module <n> <m> <alpha> <form>
 *     1 (1,0)
 *     2 (1,1)
 *     ...
 *
 * The module section is checked on read by rebuilding the rack from it.
 */

#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "coxeter.hpp"
#include "parse_error.hpp"
#include "rack.hpp"

namespace coxrack {

namespace detail {

inline std::vector<std::string> split_words(const std::string &line)
{
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string w; in >> w;)
        out.push_back(w);
    return out;
}

inline long long parse_integer(const std::string &word, std::size_t line, const char *what)
{
    try {
        std::size_t used = 0;
        long long v = std::stoll(word, &used);
        if (used == word.size())
            return v;
    } catch (const std::exception &) {
    }
    throw ParseError(line, std::string(what) + " '" + word + "' is not an integer");
}

} // namespace detail

/// The operation table in file form, without validating the rack axioms.
struct RackMatrixFile {
    OpTable table;
    std::optional<CoxeterSpec> module;
};

inline RackMatrixFile read_rack_matrix(std::istream &in)
{
    std::vector<std::string> lines;
    for (std::string l; std::getline(in, l);) {
        if (!l.empty() && l.back() == '\r')
            l.pop_back();
        lines.push_back(l);
    }
    if (lines.empty())
        throw ParseError(1, "empty rack file");

    auto header = detail::split_words(lines[0]);
    if (header.size() != 1)
        throw ParseError(1, "expected the rack size k alone on the first line");
    long long k = detail::parse_integer(header[0], 1, "rack size");
    if (k < 1)
        throw ParseError(1, "rack size must be positive");
    const auto size = static_cast<std::size_t>(k);
    if (lines.size() < size + 1)
        throw ParseError(lines.size() + 1, "expected " + std::to_string(size) + " matrix rows");

    RackMatrixFile file;
    for (std::size_t r = 0; r < size; ++r) {
        const std::size_t line = r + 2;
        auto words = detail::split_words(lines[r + 1]);
        if (words.size() != size)
            throw ParseError(line, "expected " + std::to_string(size) + " entries, found " +
                                       std::to_string(words.size()));
        std::vector<std::size_t> row;
        for (const auto &w : words) {
            long long v = detail::parse_integer(w, line, "entry");
            if (v < 1 || v > k)
                throw ParseError(line, "entry " + w + " is out of range 1.." + std::to_string(k));
            row.push_back(static_cast<std::size_t>(v - 1));
        }
        file.table.push_back(std::move(row));
    }

    std::size_t next = size + 1;
    while (next < lines.size() && detail::split_words(lines[next]).empty())
        ++next;
    if (next == lines.size())
        return file;

    const std::size_t module_line = next + 1;
    auto words = detail::split_words(lines[next]);
    if (words.size() != 5 || words[0] != "module")
        throw ParseError(module_line, "expected 'module <n> <m> <alpha> <form>' after the matrix");
    try {
        Modulus n(detail::parse_integer(words[1], module_line, "modulus"));
        auto m = detail::parse_integer(words[2], module_line, "dimension");
        if (m < 1)
            throw ParseError(module_line, "dimension must be positive");
        auto alpha = detail::parse_integer(words[3], module_line, "alpha");
        file.module.emplace(n, static_cast<std::size_t>(m), alpha, parse_form(words[4], n));
    } catch (const ParseError &) {
        throw;
    } catch (const std::exception &e) {
        throw ParseError(module_line, e.what());
    }

    const auto rebuilt = build_coxeter_rack(*file.module);
    if (rebuilt.table() != file.table)
        throw ParseError(module_line, "module data does not reproduce the matrix");

    std::size_t label = 0;
    for (std::size_t l = next + 1; l < lines.size(); ++l) {
        auto w = detail::split_words(lines[l]);
        if (w.empty())
            continue;
        if (label == size)
            throw ParseError(l + 1, "unexpected content after the label listing");
        const auto &expected = (*rebuilt.labels())[label];
        if (w.size() != 2 || w[0] != std::to_string(label + 1) || w[1] != expected.to_string())
            throw ParseError(l + 1, "expected label line '" + std::to_string(label + 1) + " " +
                                        expected.to_string() + "'");
        ++label;
    }
    if (label != size)
        throw ParseError(lines.size(), "label listing has " + std::to_string(label) + " of " +
                                           std::to_string(size) + " lines");
    return file;
}

/// Reads and validates a rack; a module section attaches labels and module data.
inline FiniteRack load_rack(std::istream &in)
{
    auto file = read_rack_matrix(in);
    if (file.module)
        return build_coxeter_rack(*file.module);
    return FiniteRack::from_table(std::move(file.table));
}

inline void write_rack_matrix(std::ostream &out, const OpTable &table)
{
    out << table.size() << '\n';
    for (const auto &row : table) {
        for (std::size_t j = 0; j < row.size(); ++j)
            out << (j ? " " : "") << row[j] + 1;
        out << '\n';
    }
}

/// Matrix, then the module section when the rack carries module data.
inline void write_rack(std::ostream &out, const FiniteRack &rack)
{
    write_rack_matrix(out, rack.table());
    if (!rack.module_data() || !rack.labels())
        return;
    const auto &m = *rack.module_data();
    out << "\nmodule " << m.modulus.value() << ' ' << m.dim << ' ' << m.alpha << ' ' << m.form.to_string() << '\n';
    for (std::size_t i = 0; i < rack.size(); ++i)
        out << i + 1 << ' ' << (*rack.labels())[i].to_string() << '\n';
}

} // namespace coxrack
