#pragma once

// Shared helpers for the test binaries: parsing shortcuts, seeded random
// generators and a few brute-force reference computations.

#include <gysin/poly_parse.hpp>
#include <gysin/polynomial.hpp>
#include <gysin/spaces.hpp>

#include <random>
#include <vector>

namespace gysin::test {

inline Polynomial P(std::string_view text) { return parse_polynomial(text); }

inline Polynomial var(VarId v) { return Polynomial::variable(v); }

// Random polynomial with up to `terms` terms over `vars`, exponents < max_exp,
// coefficients p/q with |p| <= 9 and q <= 4.
inline Polynomial random_poly(std::mt19937 &rng, const std::vector<VarId> &vars, int terms, int max_exp)
{
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> ex(0, max_exp - 1);
    Polynomial p;
    for (int i = 0; i < terms; ++i) {
        Polynomial m(Rational(num(rng), den(rng)));
        for (const auto &v : vars)
            m = m * var(v).pow(static_cast<unsigned>(ex(rng)));
        p = p + m;
    }
    return p;
}

// e_j of the variables in `vars`.
inline Polynomial elementary(int j, const std::vector<VarId> &vars)
{
    std::vector<Polynomial> e(static_cast<std::size_t>(j) + 1, Polynomial());
    e[0] = Polynomial(1L);
    for (const auto &v : vars)
        for (int i = j; i >= 1; --i)
            e[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i)] + e[static_cast<std::size_t>(i) - 1] * var(v);
    return e[static_cast<std::size_t>(j)];
}

// Random homogeneous class of degree `degree`, symmetric in every z block of
// `spec`: a short sum of products of elementary symmetric polynomials of the
// blocks and torus variables, small integer coefficients.
inline Polynomial random_symmetric_class(std::mt19937 &rng, const SpaceSpec &spec, int degree)
{
    struct Gen {
        Polynomial poly;
        int degree;
    };
    std::vector<Gen> gens;
    for (int g = 1; g <= spec.blocks(); ++g) {
        const auto block = z_block(spec, g);
        for (int j = 1; j <= static_cast<int>(block.size()); ++j)
            gens.push_back({elementary(j, block), j});
    }
    const std::size_t z_gens = gens.size();
    for (int i = 1; i <= spec.n; ++i)
        gens.push_back({var(t_var(i)), 1});

    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> count(1, 3);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Polynomial alpha;
    const int terms = count(rng);
    for (int s = 0; s < terms; ++s) {
        int c = coeff(rng);
        if (c == 0)
            c = 1;
        Polynomial term(static_cast<long>(c));
        int left = degree;
        while (left > 0) {
            std::vector<std::size_t> fit;
            const bool prefer_z = unit(rng) < 0.8;
            for (std::size_t i = 0; i < gens.size(); ++i)
                if (gens[i].degree <= left && (!prefer_z || i < z_gens))
                    fit.push_back(i);
            if (fit.empty())
                for (std::size_t i = z_gens; i < gens.size(); ++i)
                    fit.push_back(i);
            const auto &g = gens[fit[std::uniform_int_distribution<std::size_t>(0, fit.size() - 1)(rng)]];
            term = term * g.poly;
            left -= g.degree;
        }
        alpha = alpha + term;
    }
    return alpha;
}

// Homogeneous polynomial in t of the given degree? Zero counts as homogeneous
// of any degree.
inline bool homogeneous_of_degree(const Polynomial &p, int degree)
{
    if (p.is_zero())
        return true;
    return p.is_homogeneous() && p.total_degree() == degree;
}

} // namespace gysin::test
