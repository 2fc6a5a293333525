#pragma once

/**
 * @file poly.hpp
 * @brief Sparse multivariate polynomials with arbitrary-precision integer
 * coefficients, used as the value type of every counting invariant.
 */

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace coxrack {

using Coefficient = boost::multiprecision::cpp_int;
using Exponents = std::vector<std::uint64_t>;

/**
 * A polynomial over a fixed, ordered list of variable names. Terms with a
 * zero coefficient are never stored, so structural equality is polynomial
 * equality.
 *
 * Canonical term order is graded: ascending total degree, and within one
 * degree descending lexicographic on the exponent tuple (so q1 precedes q2).
 */
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> variables) : variables_(std::move(variables)) {}

    static MultiPoly constant(Coefficient c, std::vector<std::string> variables = {})
    {
        MultiPoly p(std::move(variables));
        p.add_term(Exponents(p.variables_.size(), 0), std::move(c));
        return p;
    }

    const std::vector<std::string> &variables() const noexcept { return variables_; }
    const std::map<Exponents, Coefficient> &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const Exponents &exps, const Coefficient &c)
    {
        if (exps.size() != variables_.size())
            throw std::invalid_argument("exponent tuple length does not match variable count");
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(exps, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    Coefficient coefficient(const Exponents &exps) const
    {
        auto it = terms_.find(exps);
        return it == terms_.end() ? Coefficient{0} : it->second;
    }

    MultiPoly &operator+=(const MultiPoly &rhs)
    {
        if (rhs.variables_ != variables_)
            throw std::invalid_argument("cannot add polynomials over different variables");
        for (const auto &[e, c] : rhs.terms_)
            add_term(e, c);
        return *this;
    }

    friend MultiPoly operator+(MultiPoly lhs, const MultiPoly &rhs) { return lhs += rhs; }

    bool operator==(const MultiPoly &rhs) const
    {
        return variables_ == rhs.variables_ && terms_ == rhs.terms_;
    }

    /// Substitutes integer values for the named variables; unknown names are an error.
    MultiPoly specialize(const std::map<std::string, std::int64_t> &bindings) const
    {
        std::vector<std::optional<std::int64_t>> value(variables_.size());
        for (const auto &[name, v] : bindings) {
            auto it = std::find(variables_.begin(), variables_.end(), name);
            if (it == variables_.end())
                throw std::invalid_argument("unknown variable '" + name + "'");
            value[static_cast<std::size_t>(it - variables_.begin())] = v;
        }
        std::vector<std::string> kept;
        for (std::size_t i = 0; i < variables_.size(); ++i)
            if (!value[i])
                kept.push_back(variables_[i]);

        MultiPoly out(kept);
        for (const auto &[e, c] : terms_) {
            Coefficient coeff = c;
            Exponents rest;
            for (std::size_t i = 0; i < variables_.size(); ++i) {
                if (value[i])
                    coeff *= boost::multiprecision::pow(Coefficient{*value[i]}, static_cast<unsigned>(e[i]));
                else
                    rest.push_back(e[i]);
            }
            out.add_term(rest, coeff);
        }
        return out;
    }

    std::vector<std::pair<Exponents, Coefficient>> canonical_terms() const
    {
        std::vector<std::pair<Exponents, Coefficient>> out(terms_.begin(), terms_.end());
        std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
            auto da = degree(a.first), db = degree(b.first);
            if (da != db)
                return da < db;
            return a.first > b.first;
        });
        return out;
    }

    /// Plain text such as "4 + 4*q1 + 4*q2 + 8*q1*q2"; the zero polynomial prints as "0".
    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        bool first = true;
        for (const auto &[e, c] : canonical_terms()) {
            Coefficient mag = c < 0 ? Coefficient(-c) : c;
            if (first)
                out += c < 0 ? "-" : "";
            else
                out += c < 0 ? " - " : " + ";
            first = false;

            std::string monomial;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0)
                    continue;
                if (!monomial.empty())
                    monomial += '*';
                monomial += variables_[i];
                if (e[i] > 1)
                    monomial += '^' + std::to_string(e[i]);
            }
            if (monomial.empty())
                out += mag.str();
            else if (mag == 1)
                out += monomial;
            else
                out += mag.str() + '*' + monomial;
        }
        return out;
    }

    /// {"variables": [...], "terms": [{"exponents": [...], "coefficient": c}, ...]} in canonical order.
    /// Coefficients beyond 64 bits are emitted as decimal strings.
    nlohmann::json to_json() const
    {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto &[e, c] : canonical_terms()) {
            nlohmann::json coeff;
            if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
                coeff = static_cast<std::int64_t>(c);
            else
                coeff = c.str();
            terms.push_back({{"exponents", e}, {"coefficient", coeff}});
        }
        return {{"variables", variables_}, {"terms", terms}};
    }

private:
    static std::uint64_t degree(const Exponents &e)
    {
        std::uint64_t d = 0;
        for (auto x : e)
            d += x;
        return d;
    }

    std::vector<std::string> variables_;
    std::map<Exponents, Coefficient> terms_;
};

/// q1, ..., qc
inline std::vector<std::string> q_variables(std::size_t components)
{
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= components; ++i)
        out.push_back("q" + std::to_string(i));
    return out;
}

} // namespace coxrack
