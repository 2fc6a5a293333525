#pragma once

/**
 * @file rack.hpp
 * @brief Finite racks given by operation tables.
 *
 * Elements are indexed 0..k-1 internally; all text formats are 1-based.
 * op(i, j) is the index of x_i |> x_j and inv(i, j) the index of
 * x_i |>^{-1} x_j.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "modring.hpp"
#include "poly.hpp"

namespace coxrack {

using OpTable = std::vector<std::vector<std::size_t>>;

/// The (Z/nZ)^m data a Coxeter rack was built from.
struct ModuleData {
    Modulus modulus;
    std::size_t dim;
    Residue alpha;
    SymForm form;

    bool operator==(const ModuleData &) const = default;
};

struct Violation {
    enum class Kind { ColumnNotPermutation, SelfDistributivity };
    Kind kind;
    std::size_t column = 0;                  // ColumnNotPermutation
    std::size_t i = 0, j = 0, l = 0;         // SelfDistributivity

    /// 1-based, e.g. "axiom (i): column 1 is not a permutation".
    std::string describe() const
    {
        if (kind == Kind::ColumnNotPermutation)
            return "axiom (i): column " + std::to_string(column + 1) + " is not a permutation";
        return "axiom (ii): self-distributivity fails at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
               "," + std::to_string(l + 1) + ")";
    }
};

struct ValidationReport {
    static constexpr std::size_t max_listed = 32;

    /// At most max_listed violations, columns first, then triples in lexicographic order.
    std::vector<Violation> violations;
    std::size_t total_violations = 0;

    bool valid() const noexcept { return total_violations == 0; }
};

inline void check_table_shape(const OpTable &op)
{
    const std::size_t k = op.size();
    if (k == 0)
        throw std::invalid_argument("rack table is empty");
    for (std::size_t r = 0; r < k; ++r) {
        if (op[r].size() != k)
            throw std::invalid_argument("rack table row " + std::to_string(r + 1) + " has " +
                                        std::to_string(op[r].size()) + " entries, expected " + std::to_string(k));
        for (std::size_t c = 0; c < k; ++c)
            if (op[r][c] >= k)
                throw std::invalid_argument("rack table entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                                            ") = " + std::to_string(op[r][c] + 1) + " is out of range 1.." +
                                            std::to_string(k));
    }
}

/// Checks both rack axioms over all columns and all k^3 triples.
/// Throws std::invalid_argument on a non-square table or out-of-range entries.
inline ValidationReport verify_rack(const OpTable &op)
{
    check_table_shape(op);
    const std::size_t k = op.size();
    ValidationReport report;
    auto record = [&](Violation v) {
        if (report.violations.size() < ValidationReport::max_listed)
            report.violations.push_back(v);
        ++report.total_violations;
    };

    std::vector<char> hit(k);
    for (std::size_t j = 0; j < k; ++j) {
        std::fill(hit.begin(), hit.end(), 0);
        bool perm = true;
        for (std::size_t i = 0; i < k; ++i) {
            if (hit[op[i][j]])
                perm = false;
            hit[op[i][j]] = 1;
        }
        if (!perm)
            record({Violation::Kind::ColumnNotPermutation, j});
    }

    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t l = 0; l < k; ++l)
                if (op[op[i][j]][l] != op[op[i][l]][op[j][l]])
                    record({Violation::Kind::SelfDistributivity, 0, i, j, l});
    return report;
}

class RackAxiomError : public std::invalid_argument {
public:
    explicit RackAxiomError(const ValidationReport &r)
        : std::invalid_argument("table is not a rack: " + r.violations.front().describe() +
                                (r.total_violations > 1
                                     ? " (and " + std::to_string(r.total_violations - 1) + " more)"
                                     : std::string{})),
          report(r)
    {
    }
    ValidationReport report;
};

/**
 * A validated finite rack. Immutable once constructed; the inverse table is
 * derived from the operation table.
 */
class FiniteRack {
public:
    /// Throws RackAxiomError if `op` fails either axiom.
    static FiniteRack from_table(OpTable op)
    {
        auto report = verify_rack(op);
        if (!report.valid())
            throw RackAxiomError(report);
        return FiniteRack(std::move(op));
    }

    /// Attaches vector labels and module data; labels must be distinct and match the module.
    FiniteRack with_module(std::vector<ModVector> labels, ModuleData data) const
    {
        if (labels.size() != size())
            throw std::invalid_argument("label count does not match rack size");
        for (const auto &v : labels)
            if (!(v.modulus() == data.modulus) || v.dim() != data.dim)
                throw std::invalid_argument("label " + v.to_string() + " does not live in the module");
        FiniteRack out = *this;
        out.labels_ = std::move(labels);
        out.module_ = std::move(data);
        return out;
    }

    std::size_t size() const noexcept { return op_.size(); }
    std::size_t op(std::size_t i, std::size_t j) const { return op_[i][j]; }
    std::size_t inv(std::size_t i, std::size_t j) const { return inv_[i][j]; }
    /// op for sign +1, inv for sign -1.
    std::size_t act(std::size_t i, std::size_t j, int sign) const { return sign >= 0 ? op_[i][j] : inv_[i][j]; }
    const OpTable &table() const noexcept { return op_; }
    const OpTable &inverse_table() const noexcept { return inv_; }

    const std::optional<std::vector<ModVector>> &labels() const noexcept { return labels_; }
    const std::optional<ModuleData> &module_data() const noexcept { return module_; }

    /// pi(i) = i |> i.
    std::size_t diagonal(std::size_t i) const { return op_[i][i]; }

private:
    explicit FiniteRack(OpTable op) : op_(std::move(op)), inv_(op_.size(), std::vector<std::size_t>(op_.size()))
    {
        for (std::size_t i = 0; i < op_.size(); ++i)
            for (std::size_t j = 0; j < op_.size(); ++j)
                inv_[op_[i][j]][j] = i;
    }

    OpTable op_;
    OpTable inv_;
    std::optional<std::vector<ModVector>> labels_;
    std::optional<ModuleData> module_;
};

inline bool is_quandle(const FiniteRack &rack)
{
    for (std::size_t i = 0; i < rack.size(); ++i)
        if (rack.diagonal(i) != i)
            return false;
    return true;
}

/// Cycle lengths of the diagonal permutation, in order of each cycle's smallest element.
inline std::vector<std::size_t> diagonal_cycle_lengths(const FiniteRack &rack)
{
    std::vector<char> seen(rack.size(), 0);
    std::vector<std::size_t> lengths;
    for (std::size_t start = 0; start < rack.size(); ++start) {
        if (seen[start])
            continue;
        std::size_t len = 0;
        for (std::size_t x = start; !seen[x]; x = rack.diagonal(x)) {
            seen[x] = 1;
            ++len;
        }
        lengths.push_back(len);
    }
    return lengths;
}

/// Rack rank N(T): the order of the diagonal permutation.
inline std::uint64_t rack_rank(const FiniteRack &rack)
{
    std::uint64_t n = 1;
    for (auto len : diagonal_cycle_lengths(rack))
        n = std::lcm(n, static_cast<std::uint64_t>(len));
    return n;
}

/// pi^power(i); negative powers walk the inverse permutation.
inline std::size_t diagonal_map(const FiniteRack &rack, std::size_t i, std::int64_t power)
{
    auto n = static_cast<std::int64_t>(rack_rank(rack));
    std::int64_t steps = ((power % n) + n) % n;
    for (std::int64_t s = 0; s < steps; ++s)
        i = rack.diagonal(i);
    return i;
}

/// The table x -> pi^power(x) for non-negative powers.
inline std::vector<std::size_t> diagonal_power_table(const FiniteRack &rack, std::uint64_t power)
{
    std::vector<std::size_t> out(rack.size());
    std::iota(out.begin(), out.end(), std::size_t{0});
    auto n = rack_rank(rack);
    for (std::uint64_t s = 0; s < power % n; ++s)
        for (auto &x : out)
            x = rack.diagonal(x);
    return out;
}

/// Smallest superset of `seed` closed under |> and |>^{-1}, as a sorted index list.
inline std::vector<std::size_t> subrack_closure(const FiniteRack &rack, const std::vector<std::size_t> &seed)
{
    const std::size_t k = rack.size();
    std::vector<char> in(k, 0);
    std::vector<std::size_t> members;
    for (auto s : seed) {
        if (s >= k)
            throw std::out_of_range("seed element out of range");
        if (!in[s]) {
            in[s] = 1;
            members.push_back(s);
        }
    }
    // Every new member is paired with everything already present, in both roles.
    for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = 0; b <= a; ++b) {
            const std::size_t x = members[a], y = members[b];
            for (auto z : {rack.op(x, y), rack.op(y, x), rack.inv(x, y), rack.inv(y, x)})
                if (!in[z]) {
                    in[z] = 1;
                    members.push_back(z);
                }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

/// c(x) = |{y : x |> y = x}|
inline std::size_t row_fix_count(const FiniteRack &rack, std::size_t x)
{
    std::size_t c = 0;
    for (std::size_t y = 0; y < rack.size(); ++y)
        c += rack.op(x, y) == x;
    return c;
}

/// r(x) = |{y : y |> x = y}|
inline std::size_t column_fix_count(const FiniteRack &rack, std::size_t x)
{
    std::size_t r = 0;
    for (std::size_t y = 0; y < rack.size(); ++y)
        r += rack.op(y, x) == y;
    return r;
}

/// Sum over elements x of s^{r(x)} t^{c(x)}.
inline MultiPoly rack_polynomial(const FiniteRack &rack)
{
    MultiPoly p({"s", "t"});
    for (std::size_t x = 0; x < rack.size(); ++x)
        p.add_term({column_fix_count(rack, x), row_fix_count(rack, x)}, 1);
    return p;
}

namespace detail {

struct ElementSignature {
    std::size_t cycle_length;
    std::size_t row_fixes;
    std::size_t column_fixes;
    bool idempotent;
    auto operator<=>(const ElementSignature &) const = default;
};

inline std::vector<ElementSignature> signatures(const FiniteRack &rack)
{
    std::vector<std::size_t> cycle_of(rack.size(), 0);
    std::vector<char> seen(rack.size(), 0);
    for (std::size_t start = 0; start < rack.size(); ++start) {
        if (seen[start])
            continue;
        std::vector<std::size_t> cycle;
        for (std::size_t x = start; !seen[x]; x = rack.diagonal(x)) {
            seen[x] = 1;
            cycle.push_back(x);
        }
        for (auto x : cycle)
            cycle_of[x] = cycle.size();
    }
    std::vector<ElementSignature> out;
    for (std::size_t x = 0; x < rack.size(); ++x)
        out.push_back({cycle_of[x], row_fix_count(rack, x), column_fix_count(rack, x), rack.diagonal(x) == x});
    return out;
}

class IsoSearch {
public:
    IsoSearch(const FiniteRack &a, const FiniteRack &b)
        : a_(a), b_(b), sig_a_(signatures(a)), sig_b_(signatures(b)), map_(a.size(), none), used_(b.size(), 0)
    {
    }

    std::optional<std::vector<std::size_t>> run()
    {
        if (a_.size() != b_.size())
            return std::nullopt;
        auto sa = sig_a_, sb = sig_b_;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb)
            return std::nullopt;
        if (search())
            return map_;
        return std::nullopt;
    }

private:
    static constexpr std::size_t none = static_cast<std::size_t>(-1);

    // Assigns x -> y and propagates everything forced by phi(u |> v) = phi(u) |> phi(v).
    // Returns false on conflict; `trail` records every new assignment for undo.
    bool assign(std::size_t x, std::size_t y, std::vector<std::size_t> &trail)
    {
        std::vector<std::pair<std::size_t, std::size_t>> queue{{x, y}};
        while (!queue.empty()) {
            auto [u, v] = queue.back();
            queue.pop_back();
            if (map_[u] != none) {
                if (map_[u] != v)
                    return false;
                continue;
            }
            if (used_[v] || sig_a_[u] != sig_b_[v])
                return false;
            map_[u] = v;
            used_[v] = 1;
            trail.push_back(u);
            for (std::size_t w = 0; w < map_.size(); ++w) {
                if (map_[w] == none)
                    continue;
                for (auto [p, q] : {std::pair{u, w}, std::pair{w, u}}) {
                    queue.emplace_back(a_.op(p, q), b_.op(map_[p], map_[q]));
                    queue.emplace_back(a_.inv(p, q), b_.inv(map_[p], map_[q]));
                }
            }
        }
        return true;
    }

    void undo(const std::vector<std::size_t> &trail)
    {
        for (auto u : trail) {
            used_[map_[u]] = 0;
            map_[u] = none;
        }
    }

    bool search()
    {
        auto next = std::find(map_.begin(), map_.end(), none);
        if (next == map_.end())
            return true;
        const auto x = static_cast<std::size_t>(next - map_.begin());
        for (std::size_t y = 0; y < b_.size(); ++y) {
            if (used_[y] || sig_a_[x] != sig_b_[y])
                continue;
            std::vector<std::size_t> trail;
            if (assign(x, y, trail) && search())
                return true;
            undo(trail);
        }
        return false;
    }

    const FiniteRack &a_;
    const FiniteRack &b_;
    std::vector<ElementSignature> sig_a_, sig_b_;
    std::vector<std::size_t> map_;
    std::vector<char> used_;
};

} // namespace detail

/**
 * Exhaustive search for phi with phi(x |> y) = phi(x) |> phi(y).
 *
 * Candidates are pruned by per-element signatures (diagonal cycle length,
 * row and column fix counts); each choice propagates through the closure of
 * already-mapped elements before branching further.
 */
inline std::optional<std::vector<std::size_t>> find_isomorphism(const FiniteRack &a, const FiniteRack &b)
{
    return detail::IsoSearch(a, b).run();
}

/// True iff pushing a's table through phi reproduces b's table entrywise.
inline bool is_isomorphism(const FiniteRack &a, const FiniteRack &b, const std::vector<std::size_t> &phi)
{
    if (a.size() != b.size() || phi.size() != a.size())
        return false;
    std::vector<char> hit(b.size(), 0);
    for (auto y : phi) {
        if (y >= b.size() || hit[y])
            return false;
        hit[y] = 1;
    }
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (phi[a.op(i, j)] != b.op(phi[i], phi[j]))
                return false;
    return true;
}

} // namespace coxrack
