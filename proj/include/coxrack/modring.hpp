#pragma once

/**
 * @file modring.hpp
 * @brief Exact arithmetic over Z/nZ: residues, vectors in (Z/nZ)^m,
 * symmetric bilinear forms and submodule spans.
 *
 * Every residue is stored normalized to [0, n).
 */

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace coxrack {

using Residue = std::int64_t;

class Modulus {
public:
    static constexpr std::int64_t max_value = std::int64_t{1} << 31;

    explicit Modulus(std::int64_t n) : n_(n)
    {
        if (n < 2 || n > max_value)
            throw std::domain_error("modulus must satisfy 2 <= n <= 2^31, got " + std::to_string(n));
    }

    std::int64_t value() const noexcept { return n_; }

    Residue reduce(std::int64_t a) const noexcept
    {
        a %= n_;
        return a < 0 ? a + n_ : a;
    }

    Residue add(Residue a, Residue b) const noexcept { return reduce(a + b); }
    Residue sub(Residue a, Residue b) const noexcept { return reduce(a - b); }
    Residue mul(Residue a, Residue b) const noexcept { return reduce(a * b); }

    bool operator==(const Modulus &) const = default;

private:
    std::int64_t n_;
};

inline void require_residue(Residue a, const Modulus &n)
{
    if (a < 0 || a >= n.value())
        throw std::domain_error("residue " + std::to_string(a) + " is outside [0, " + std::to_string(n.value()) + ")");
}

/// True iff a is invertible mod n.
inline bool is_unit(Residue a, const Modulus &n)
{
    require_residue(a, n);
    return std::gcd(a, n.value()) == 1;
}

/// Inverse of a unit mod n by the extended Euclidean algorithm.
inline Residue inv_mod(Residue a, const Modulus &n)
{
    if (!is_unit(a, n))
        throw std::domain_error(std::to_string(a) + " is not a unit mod " + std::to_string(n.value()));
    std::int64_t r0 = n.value(), r1 = a;
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        std::int64_t s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
    }
    return n.reduce(s0);
}

/// The ring element 1 + 1, i.e. 0 when n = 2.
inline Residue two(const Modulus &n) { return n.reduce(2); }

/**
 * An element of (Z/nZ)^m. Ordering is lexicographic on the entries, which
 * coincides with the order of code().
 */
class ModVector {
public:
    ModVector(Modulus n, std::vector<Residue> entries) : n_(n), entries_(std::move(entries))
    {
        for (auto &e : entries_)
            e = n_.reduce(e);
    }

    static ModVector zero(Modulus n, std::size_t m) { return ModVector(n, std::vector<Residue>(m, 0)); }

    /// Inverse of code(): the vector whose base-n digits (most significant first) are `code`.
    static ModVector from_code(Modulus n, std::size_t m, std::uint64_t code)
    {
        std::vector<Residue> entries(m, 0);
        auto base = static_cast<std::uint64_t>(n.value());
        for (std::size_t i = m; i-- > 0;) {
            entries[i] = static_cast<Residue>(code % base);
            code /= base;
        }
        return ModVector(n, std::move(entries));
    }

    const Modulus &modulus() const noexcept { return n_; }
    std::size_t dim() const noexcept { return entries_.size(); }
    const std::vector<Residue> &entries() const noexcept { return entries_; }
    Residue operator[](std::size_t i) const { return entries_[i]; }

    bool is_zero() const noexcept
    {
        for (auto e : entries_)
            if (e != 0)
                return false;
        return true;
    }

    std::uint64_t code() const noexcept
    {
        std::uint64_t c = 0;
        for (auto e : entries_)
            c = c * static_cast<std::uint64_t>(n_.value()) + static_cast<std::uint64_t>(e);
        return c;
    }

    ModVector operator+(const ModVector &rhs) const
    {
        check_compatible(rhs);
        ModVector out = *this;
        for (std::size_t i = 0; i < entries_.size(); ++i)
            out.entries_[i] = n_.add(entries_[i], rhs.entries_[i]);
        return out;
    }

    ModVector operator-(const ModVector &rhs) const
    {
        check_compatible(rhs);
        ModVector out = *this;
        for (std::size_t i = 0; i < entries_.size(); ++i)
            out.entries_[i] = n_.sub(entries_[i], rhs.entries_[i]);
        return out;
    }

    ModVector scaled(Residue c) const
    {
        ModVector out = *this;
        c = n_.reduce(c);
        for (auto &e : out.entries_)
            e = n_.mul(e, c);
        return out;
    }

    bool operator==(const ModVector &rhs) const { return n_ == rhs.n_ && entries_ == rhs.entries_; }
    bool operator<(const ModVector &rhs) const { return entries_ < rhs.entries_; }

    void check_compatible(const ModVector &rhs) const
    {
        if (!(n_ == rhs.n_) || entries_.size() != rhs.entries_.size())
            throw std::domain_error("vector modulus or dimension mismatch");
    }

    /// "(1,0)" style rendering.
    std::string to_string() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i)
                s += ',';
            s += std::to_string(entries_[i]);
        }
        return s + ")";
    }

private:
    Modulus n_;
    std::vector<Residue> entries_;
};

/// A symmetric m x m matrix over Z/nZ defining <x,y> = x A y^t.
class SymForm {
public:
    SymForm(Modulus n, std::vector<std::vector<Residue>> rows) : n_(n), rows_(std::move(rows))
    {
        const std::size_t m = rows_.size();
        if (m == 0)
            throw std::domain_error("form must have at least one row");
        for (auto &row : rows_) {
            if (row.size() != m)
                throw std::domain_error("form matrix is not square");
            for (auto &e : row)
                e = n_.reduce(e);
        }
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                if (rows_[i][j] != rows_[j][i])
                    throw std::domain_error("form matrix is not symmetric at (" + std::to_string(i + 1) + "," +
                                            std::to_string(j + 1) + ")");
    }

    const Modulus &modulus() const noexcept { return n_; }
    std::size_t dim() const noexcept { return rows_.size(); }
    Residue at(std::size_t i, std::size_t j) const { return rows_.at(i).at(j); }
    const std::vector<std::vector<Residue>> &rows() const noexcept { return rows_; }

    SymForm scaled(Residue beta) const
    {
        auto rows = rows_;
        for (auto &row : rows)
            for (auto &e : row)
                e = n_.mul(e, n_.reduce(beta));
        return SymForm(n_, std::move(rows));
    }

    bool operator==(const SymForm &) const = default;

    /// "1,2;2,0"
    std::string to_string() const
    {
        std::string s;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i)
                s += ';';
            for (std::size_t j = 0; j < rows_[i].size(); ++j) {
                if (j)
                    s += ',';
                s += std::to_string(rows_[i][j]);
            }
        }
        return s;
    }

private:
    Modulus n_;
    std::vector<std::vector<Residue>> rows_;
};

/// Parses the "1,2;2,0" form syntax. Entries may be any integers; they are reduced mod n.
inline SymForm parse_form(std::string_view text, Modulus n)
{
    std::vector<std::vector<Residue>> rows;
    std::string row_text;
    std::istringstream rows_in{std::string(text)};
    while (std::getline(rows_in, row_text, ';')) {
        std::vector<Residue> row;
        std::istringstream cells(row_text);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            std::size_t used = 0;
            long long value = 0;
            try {
                value = std::stoll(cell, &used);
            } catch (const std::exception &) {
                throw std::invalid_argument("form entry '" + cell + "' is not an integer");
            }
            while (used < cell.size() && (cell[used] == ' ' || cell[used] == '\t'))
                ++used;
            if (used != cell.size())
                throw std::invalid_argument("form entry '" + cell + "' is not an integer");
            row.push_back(value);
        }
        rows.push_back(std::move(row));
    }
    return SymForm(n, std::move(rows));
}

/// <x,y> = x A y^t reduced mod n.
inline Residue bilinear_eval(const SymForm &form, const ModVector &x, const ModVector &y)
{
    const auto &n = form.modulus();
    if (!(x.modulus() == n) || !(y.modulus() == n))
        throw std::domain_error("modulus mismatch between form and vectors");
    if (x.dim() != form.dim() || y.dim() != form.dim())
        throw std::domain_error("dimension mismatch between form and vectors");
    Residue acc = 0;
    for (std::size_t i = 0; i < form.dim(); ++i) {
        if (x[i] == 0)
            continue;
        Residue row = 0;
        for (std::size_t j = 0; j < form.dim(); ++j)
            row = n.add(row, n.mul(form.at(i, j), y[j]));
        acc = n.add(acc, n.mul(x[i], row));
    }
    return acc;
}

/**
 * The submodule of (Z/nZ)^m generated by `gens`, sorted lexicographically.
 *
 * Closure iteration from {0}: every reached vector is extended by each
 * generator until nothing new appears. Since every element has finite
 * additive order, non-negative combinations already give every
 * Z-linear combination, so the result is closed under sums and scalars.
 */
inline std::vector<ModVector> span_enumerate(const std::vector<ModVector> &gens, Modulus n, std::size_t m)
{
    for (const auto &g : gens)
        if (!(g.modulus() == n) || g.dim() != m)
            throw std::domain_error("generator modulus or dimension mismatch");

    std::vector<std::uint64_t> gen_codes;
    for (const auto &g : gens)
        gen_codes.push_back(g.code());

    std::uint64_t space = 1;
    for (std::size_t i = 0; i < m; ++i)
        space *= static_cast<std::uint64_t>(n.value());
    if (space > (std::uint64_t{1} << 26))
        throw std::domain_error("module too large for span enumeration");

    std::vector<bool> seen(space, false);
    std::vector<ModVector> frontier{ModVector::zero(n, m)};
    seen[0] = true;
    while (!frontier.empty()) {
        std::vector<ModVector> next;
        for (const auto &v : frontier)
            for (const auto &g : gens) {
                ModVector w = v + g;
                auto c = w.code();
                if (!seen[c]) {
                    seen[c] = true;
                    next.push_back(w);
                }
            }
        frontier = std::move(next);
    }

    std::vector<ModVector> out;
    for (std::uint64_t c = 0; c < space; ++c)
        if (seen[c])
            out.push_back(ModVector::from_code(n, m, c));
    return out;
}

} // namespace coxrack
