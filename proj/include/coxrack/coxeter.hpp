#pragma once

/**
 * @file coxeter.hpp
 * @brief Generalized Coxeter racks CR((Z/nZ)^m, alpha, A).
 *
 * The carrier is the set of vectors x with <x,x> a unit, and
 *
 *     x |> y      = alpha     (x - 2 <x,y> <y,y>^{-1} y)
 *     x |>^{-1} y = alpha^{-1}(x - 2 <x,y> <y,y>^{-1} y)
 *
 * where 2 is the ring element 1 + 1.
 */

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "modring.hpp"
#include "rack.hpp"

namespace coxrack {

struct CoxeterSpec {
    Modulus modulus;
    std::size_t dim;
    Residue alpha;
    SymForm form;

    /// Reduces alpha, then checks that it is a unit and that the form lives in (Z/nZ)^dim.
    CoxeterSpec(Modulus n, std::size_t m, Residue a, SymForm f)
        : modulus(n), dim(m), alpha(n.reduce(a)), form(std::move(f))
    {
        if (m == 0)
            throw std::domain_error("dimension must be at least 1");
        if (!(form.modulus() == modulus))
            throw std::domain_error("form modulus does not match");
        if (form.dim() != dim)
            throw std::domain_error("form is " + std::to_string(form.dim()) + "x" + std::to_string(form.dim()) +
                                    " but dimension is " + std::to_string(dim));
        if (!is_unit(alpha, modulus))
            throw std::domain_error("alpha = " + std::to_string(alpha) + " is not a unit mod " +
                                    std::to_string(modulus.value()));
    }

    ModuleData module_data() const { return {modulus, dim, alpha, form}; }
};

class EmptyCarrierError : public std::domain_error {
public:
    EmptyCarrierError() : std::domain_error("the form has no vectors x with <x,x> a unit; the Coxeter rack is empty") {}
};

/// All x in (Z/nZ)^m with <x,x> a unit, in lexicographic order.
inline std::vector<ModVector> carrier(const CoxeterSpec &spec)
{
    std::uint64_t space = 1;
    for (std::size_t i = 0; i < spec.dim; ++i) {
        space *= static_cast<std::uint64_t>(spec.modulus.value());
        if (space > (std::uint64_t{1} << 24))
            throw std::domain_error("module too large to enumerate");
    }
    std::vector<ModVector> out;
    for (std::uint64_t c = 0; c < space; ++c) {
        auto x = ModVector::from_code(spec.modulus, spec.dim, c);
        if (is_unit(bilinear_eval(spec.form, x, x), spec.modulus))
            out.push_back(std::move(x));
    }
    return out;
}

/// The reflection-like part x - 2 <x,y> <y,y>^{-1} y.
inline ModVector coxeter_reflect(const SymForm &form, const ModVector &x, const ModVector &y)
{
    const auto &n = form.modulus();
    Residue coeff = n.mul(two(n), n.mul(bilinear_eval(form, x, y), inv_mod(bilinear_eval(form, y, y), n)));
    return x - y.scaled(coeff);
}

inline ModVector coxeter_op(const CoxeterSpec &spec, const ModVector &x, const ModVector &y)
{
    return coxeter_reflect(spec.form, x, y).scaled(spec.alpha);
}

inline ModVector coxeter_inv_op(const CoxeterSpec &spec, const ModVector &x, const ModVector &y)
{
    return coxeter_reflect(spec.form, x, y).scaled(inv_mod(spec.alpha, spec.modulus));
}

/// Throws EmptyCarrierError when no vector has unit norm.
inline FiniteRack build_coxeter_rack(const CoxeterSpec &spec)
{
    auto elements = carrier(spec);
    if (elements.empty())
        throw EmptyCarrierError();

    std::unordered_map<std::uint64_t, std::size_t> index;
    for (std::size_t i = 0; i < elements.size(); ++i)
        index.emplace(elements[i].code(), i);
    auto lookup = [&](const ModVector &v) {
        auto it = index.find(v.code());
        if (it == index.end())
            throw std::logic_error("Coxeter operation left the carrier at " + v.to_string());
        return it->second;
    };

    const std::size_t k = elements.size();
    OpTable op(k, std::vector<std::size_t>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            op[i][j] = lookup(coxeter_op(spec, elements[i], elements[j]));

    auto rack = FiniteRack::from_table(std::move(op));

    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (lookup(coxeter_inv_op(spec, elements[i], elements[j])) != rack.inv(i, j))
                throw std::logic_error("Coxeter inverse operation disagrees with the inverted table");

    return rack.with_module(std::move(elements), spec.module_data());
}

} // namespace coxrack
