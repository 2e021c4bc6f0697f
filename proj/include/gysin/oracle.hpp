#pragma once

/*
 * Fixed-point localization: integral of alpha = sum over torus fixed points p
 * of alpha(p) / e(T_p X).
 *
 * Conventions shared with the residue plans: the z variables of block m take
 * the characters of the m-th tautological subspace, and at a coordinate flag
 * the tangent weights are
 *   type A:     x - y for x in a lower level than y (the complement counts as level k+1);
 *   isotropic:  x + y over unordered pairs of signed basis vectors with x != -y
 *               and level(x) + level(y) < 2k + 2, where a chosen vector has
 *               the level of its block m, its negative has level 2k + 2 - m
 *               and everything else (including the zero weight) sits at k + 1.
 *               Pairs x = y are included for the symplectic families only.
 */

#include <gysin/polynomial.hpp>
#include <gysin/spaces.hpp>

#include <map>
#include <vector>

namespace gysin {

struct FixedPoint {
    std::map<VarId, Polynomial> assignment; // z[m,i] -> +-t_a
    std::vector<Polynomial> tangent_weights;
};

std::vector<FixedPoint> fixed_points(const SpaceSpec &spec);

long point_count(const SpaceSpec &spec);

// Throws NotPolynomial when the localization sum is not a polynomial.
Polynomial abbv_pushforward(const SpaceSpec &spec, const Polynomial &alpha);

} // namespace gysin
