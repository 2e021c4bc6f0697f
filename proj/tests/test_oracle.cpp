#include "support.hpp"

#include <gysin/errors.hpp>
#include <gysin/oracle.hpp>
#include <gysin/schur.hpp>

#include <doctest.h>

#include <algorithm>

using namespace gysin;
using gysin::test::P;

namespace {

std::vector<std::string> sorted_weights(const FixedPoint &p)
{
    std::vector<std::string> out;
    for (const auto &w : p.tangent_weights)
        out.push_back(w.to_string());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SpaceSpec> desk_spaces()
{
    std::vector<SpaceSpec> out;
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= n; ++k)
            out.push_back(SpaceSpec::grassmannian(k, n));
    for (int n = 1; n <= 3; ++n) {
        out.push_back(SpaceSpec::lagrangian(n));
        out.push_back(SpaceSpec::orthogonal_even(n));
        out.push_back(SpaceSpec::orthogonal_odd(n));
    }
    for (auto f : {Family::FlagA, Family::FlagC, Family::FlagSym2n, Family::FlagSym2n1}) {
        out.push_back(SpaceSpec::flag(f, {1, 2}, 2));
        out.push_back(SpaceSpec::flag(f, {1, 2}, 3));
        out.push_back(SpaceSpec::flag(f, {1, 3}, 3));
        out.push_back(SpaceSpec::flag(f, {2}, 3));
    }
    out.push_back(SpaceSpec::flag(Family::FlagA, {1, 2, 3}, 4));
    return out;
}

} // namespace

TEST_CASE("fixed points of the projective line")
{
    const auto pts = fixed_points(SpaceSpec::grassmannian(1, 2));
    REQUIRE(pts.size() == 2);
    CHECK(pts[0].assignment.at(z_var(1, 1)) == P("t[1]"));
    CHECK(sorted_weights(pts[0]) == std::vector<std::string>{"t[1] - t[2]"});
    CHECK(pts[1].assignment.at(z_var(1, 1)) == P("t[2]"));
    CHECK(sorted_weights(pts[1]) == std::vector<std::string>{"-t[1] + t[2]"});
}

TEST_CASE("fixed points of LG(1)")
{
    const auto pts = fixed_points(SpaceSpec::lagrangian(1));
    REQUIRE(pts.size() == 2);
    CHECK(sorted_weights(pts[0]) == std::vector<std::string>{"2*t[1]"});
    CHECK(sorted_weights(pts[1]) == std::vector<std::string>{"-2*t[1]"});
}

TEST_CASE("point counts")
{
    CHECK(point_count(SpaceSpec::grassmannian(2, 4)) == 6);
    CHECK(point_count(SpaceSpec::lagrangian(2)) == 4);
    // both components of the space of maximal isotropic subspaces
    CHECK(point_count(SpaceSpec::orthogonal_even(2)) == 4);
    CHECK(point_count(SpaceSpec::orthogonal_odd(3)) == 8);
    CHECK(point_count(SpaceSpec::flag(Family::FlagA, {1, 2}, 3)) == 6);
    CHECK(point_count(SpaceSpec::flag(Family::FlagC, {1, 2}, 2)) == 8);
    CHECK(point_count(SpaceSpec::flag(Family::FlagA, {1, 3}, 4)) == 12);
}

TEST_CASE("tangent weight counts equal the plan dimension")
{
    for (const auto &spec : desk_spaces()) {
        const int dim = plan_dimension(build_plan(spec, Polynomial(1L)));
        const auto pts = fixed_points(spec);
        CHECK(static_cast<long>(pts.size()) == point_count(spec));
        for (const auto &p : pts) {
            CHECK(static_cast<int>(p.tangent_weights.size()) == dim);
            for (const auto &w : p.tangent_weights)
                CHECK_FALSE(w.is_zero());
        }
    }
}

TEST_CASE("localization examples")
{
    CHECK(abbv_pushforward(SpaceSpec::grassmannian(1, 2), Polynomial(1L)).is_zero());
    CHECK(abbv_pushforward(SpaceSpec::grassmannian(1, 2), P("z[1,1]^2")) == P("t[1]+t[2]"));
    CHECK(abbv_pushforward(SpaceSpec::orthogonal_even(1), Polynomial(1L)) == Polynomial(2L));
    CHECK(abbv_pushforward(SpaceSpec::grassmannian(3, 3), P("5")) == Polynomial(5L));
    CHECK_THROWS_AS(abbv_pushforward(SpaceSpec::grassmannian(2, 3), P("z[1,1]")), NotWeylSymmetric);
}

TEST_CASE("localization reproduces the Lagrangian Schur identity")
{
    for (int n = 1; n <= 2; ++n) {
        const SpaceSpec lg = SpaceSpec::lagrangian(n);
        const auto z = z_block(lg, 1);
        std::map<VarId, Polynomial> squares;
        for (int i = 1; i <= n; ++i)
            squares.emplace(t_var(i), P("t[" + std::to_string(i) + "]^2"));
        for (int w = 0; w <= 2; ++w)
            for (const auto &mu : partitions_of(w, n)) {
                const Partition m = mu.padded(n);
                std::vector<int> lambda;
                for (int i = 0; i < n; ++i)
                    lambda.push_back(2 * m.parts[static_cast<std::size_t>(i)] + n - i);
                const auto expected = schur_poly(m, t_block(lg)).substitute(squares);
                CHECK(abbv_pushforward(lg, schur_poly(Partition(lambda), z)) == expected);
            }
    }
}

TEST_CASE("localization vanishes below the dimension and is invariant")
{
    std::mt19937 rng(51);
    for (const auto &spec : desk_spaces()) {
        const int dim = plan_dimension(build_plan(spec, Polynomial(1L)));
        if (dim > 0)
            CHECK(abbv_pushforward(spec, Polynomial(1L)).is_zero());
        else
            CHECK(abbv_pushforward(spec, Polynomial(1L)) == Polynomial(point_count(spec)));
        Polynomial alpha;
        do {
            alpha = test::random_symmetric_class(rng, spec, dim + 2);
        } while (alpha.involves_block(Block::T));
        const auto out = abbv_pushforward(spec, alpha);
        const auto action = spec.is_isotropic() ? SymmetryAction::SignedPermute : SymmetryAction::Permute;
        CHECK(is_symmetric(out, t_block(spec), action));
    }
}

TEST_CASE("localization agrees with the residue formulas")
{
    std::mt19937 rng(52);
    for (const auto &spec : desk_spaces()) {
        const int dim = plan_dimension(build_plan(spec, Polynomial(1L)));
        for (int extra = 0; extra <= 2; ++extra) {
            const auto alpha = test::random_symmetric_class(rng, spec, dim + extra);
            CHECK_MESSAGE(abbv_pushforward(spec, alpha) == pushforward(spec, alpha),
                          spec.to_string() << " " << alpha.to_string());
        }
    }
}
