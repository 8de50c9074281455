#pragma once

// Buchberger's algorithm, grevlex, with the Gebauer-Moeller pair update and
// the normal selection strategy (smallest lcm first).

#include "klein/cubic/polynomial.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace klein {

template <class F>
struct GroebnerResult {
    std::vector<Poly<F>> basis;
    /// Every variable has a pure power among the leading monomials.
    bool zero_dimensional = false;
    std::size_t reductions = 0;
};

/// Full reduction of p modulo the polynomials `g[i]` for i in `active`.
template <class F>
Poly<F> reduce_full(const F& f, Poly<F> p, const std::vector<Poly<F>>& g, const std::vector<std::size_t>& active)
{
    Poly<F> rest;
    while (!p.empty()) {
        const Term<F> lead = p.front();
        const Poly<F>* divisor = nullptr;
        for (std::size_t i : active)
            if (monomial_divides(g[i].front().m, lead.m)) {
                divisor = &g[i];
                break;
            }
        if (!divisor) {
            rest.push_back(lead);
            p.erase(p.begin());
            continue;
        }
        // divisors are monic
        const auto s = f.sub(f.from_int(0), lead.c);
        p = poly_add_scaled(f, p, *divisor, s, monomial_div(lead.m, divisor->front().m));
    }
    return rest;
}

template <class F>
bool leading_terms_zero_dimensional(const std::vector<Poly<F>>& g, const std::vector<std::size_t>& active)
{
    bool seen[kVars] = {};
    for (std::size_t i : active) {
        int v = pure_power_variable(g[i].front().m);
        if (v >= 0) seen[v] = true;
    }
    for (bool s : seen)
        if (!s) return false;
    return true;
}

template <class F>
GroebnerResult<F> groebner_basis(const F& f, const std::vector<Poly<F>>& generators, bool stop_when_zero_dimensional)
{
    struct Pair {
        std::size_t i, j;
        Monomial lcm;
    };
    std::vector<Poly<F>> polys;
    std::vector<std::size_t> active;
    std::vector<Pair> pairs;
    GroebnerResult<F> result;

    auto lt = [&](std::size_t k) -> const Monomial& { return polys[k].front().m; };

    auto update = [&](std::size_t h) {
        const Monomial& th = lt(h);
        // New pairs (h, g), pruned by the chain and coprime criteria.
        std::vector<Pair> c;
        for (std::size_t g : active) c.push_back({g, h, monomial_lcm(lt(g), th)});
        std::vector<Pair> d;
        for (std::size_t k = 0; k < c.size(); ++k) {
            const Pair& p = c[k];
            bool keep = coprime(lt(p.i), th);
            if (!keep) {
                keep = true;
                for (std::size_t m = k + 1; m < c.size() && keep; ++m)
                    if (monomial_divides(c[m].lcm, p.lcm)) keep = false;
                for (const Pair& q : d)
                    if (keep && monomial_divides(q.lcm, p.lcm)) keep = false;
            }
            if (keep) d.push_back(p);
        }
        std::vector<Pair> e;
        for (const Pair& p : d)
            if (!coprime(lt(p.i), th)) e.push_back(p);
        // Old pairs made redundant by h.
        std::vector<Pair> kept;
        for (const Pair& p : pairs) {
            const bool redundant = monomial_divides(th, p.lcm) && monomial_lcm(lt(p.i), th) != p.lcm &&
                                   monomial_lcm(lt(p.j), th) != p.lcm;
            if (!redundant) kept.push_back(p);
        }
        for (const Pair& p : e) kept.push_back(p);
        pairs = std::move(kept);

        std::vector<std::size_t> next;
        for (std::size_t g : active)
            if (!monomial_divides(th, lt(g))) next.push_back(g);
        next.push_back(h);
        active = std::move(next);
    };

    auto insert = [&](Poly<F> p) {
        make_monic(f, p);
        polys.push_back(std::move(p));
        update(polys.size() - 1);
    };

    for (const auto& g : generators) {
        Poly<F> r = reduce_full(f, g, polys, active);
        if (!r.empty()) insert(std::move(r));
    }

    while (!pairs.empty()) {
        if (stop_when_zero_dimensional && leading_terms_zero_dimensional(polys, active)) break;
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k)
            if (grevlex_greater(pairs[best].lcm, pairs[k].lcm)) best = k;
        const Pair p = pairs[best];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

        // S-polynomial of monic polynomials.
        const Poly<F>& a = polys[p.i];
        const Poly<F>& b = polys[p.j];
        Poly<F> s = poly_add_scaled(f, Poly<F>{}, a, f.from_int(1), monomial_div(p.lcm, a.front().m));
        s = poly_add_scaled(f, s, b, f.from_int(-1), monomial_div(p.lcm, b.front().m));
        Poly<F> r = reduce_full(f, std::move(s), polys, active);
        ++result.reductions;
        if (!r.empty()) insert(std::move(r));
    }

    result.zero_dimensional = leading_terms_zero_dimensional(polys, active);
    for (std::size_t k : active) result.basis.push_back(polys[k]);
    return result;
}

}  // namespace klein
