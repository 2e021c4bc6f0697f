#include "support.hpp"

#include <gysin/cli.hpp>
#include <gysin/errors.hpp>
#include <gysin/schur.hpp>

#include <doctest.h>

using namespace gysin;
using gysin::test::P;
using gysin::test::var;

namespace {

std::size_t error_position(std::string_view text)
{
    try {
        parse_polynomial(text);
    } catch (const ParseError &e) {
        return e.position();
    }
    FAIL("no parse error for " << text);
    return 0;
}

} // namespace

TEST_CASE("polynomial grammar")
{
    CHECK(P("2*t[1]^2") == var(t_var(1)).pow(2).scaled(Rational(2)));
    CHECK(P("1/2*z[1]") == var(z_var(1, 1)).scaled(Rational(1, 2)));
    CHECK(P("-(t[1] - t[2])^2") == P("-t[1]^2 + 2*t[1]*t[2] - t[2]^2"));
    CHECK(P("  t [ 1 ] * - t[2] ") == P("-t[1]*t[2]"));
    CHECK(P("+3") == Polynomial(3L));
    CHECK(P("v[2,1] + u[3]") == var(v_var(2, 1)) + var(u_var(3)));
    CHECK(P("(1/2)^2") == Polynomial(Rational(1, 4)));
    CHECK(P("0*t[1]").is_zero());
}

TEST_CASE("parse errors carry the offset")
{
    CHECK(error_position("t[1] +") == 6);
    CHECK(error_position("t[1] $ 2") == 5);
    CHECK(error_position("w[1]") == 0);
    CHECK(error_position("t[1,2]") == 0);
    CHECK(error_position("t[0]") == 0);
    CHECK(error_position("z[1]/2") == 4);
    CHECK(error_position("1/0") == 2);
    CHECK(error_position("(t[1]") == 5);
    CHECK(error_position("t[1]^999") == 5);
    CHECK_THROWS_AS(parse_polynomial("s[1](z)"), ParseError);
}

TEST_CASE("classes on a space")
{
    const SpaceSpec lg1 = SpaceSpec::lagrangian(1);
    CHECK(parse_class("s[1](z)", lg1) == var(z_var(1, 1)));

    const SpaceSpec gr12 = SpaceSpec::grassmannian(1, 2);
    CHECK(parse_class("z[1]^2 + t[1]*z[1]", gr12) == P("z[1,1]^2 + t[1]*z[1,1]"));
    CHECK_THROWS_AS(parse_class("z[9]", gr12), UnknownVariable);
    CHECK_THROWS_AS(parse_class("t[3]", gr12), UnknownVariable);
    CHECK_THROWS_AS(parse_class("u[1]", gr12), UnknownVariable);
    CHECK_THROWS_AS(parse_class("z[2,1]", gr12), UnknownVariable);

    const SpaceSpec fl = SpaceSpec::flag(Family::FlagA, {1, 3}, 4);
    CHECK(parse_class("z[2]", fl) == var(z_var(2, 2)));
    CHECK(parse_class("z[1,1]", fl) == var(z_var(1, 1)));
    CHECK_THROWS_AS(parse_class("z[1,2]", fl), UnknownVariable);
    CHECK(parse_class("s[1](z[1])", fl) == var(z_var(1, 1)));
    CHECK(parse_class("s[1,1](z)", fl) == P("z[2,1]*z[2,2] + z[2,1]*z[2,3] + z[2,2]*z[2,3]"));
    CHECK(parse_class("s[2](t)", fl) == complete_homogeneous(2, t_block(fl)));
    CHECK(parse_class("s[1,1](z[1])", fl).is_zero());
    CHECK_THROWS_AS(parse_class("s[1](z[3])", fl), UnknownVariable);
    CHECK_THROWS_AS(parse_class("s[1,2](z)", fl), ParseError);
    CHECK_THROWS_AS(parse_class("q[1](z)", fl), ParseError);
    CHECK_THROWS_AS(parse_class("s[1](w)", fl), ParseError);
}

TEST_CASE("space grammar")
{
    for (const char *text : {"gr:2,4", "lg:3", "og:2,4", "og:2,5", "flA:1,2;3", "flC:1,2;2", "flB:1,2;2", "flD:1;3"})
        CHECK(parse_space(text).to_string() == text);
    CHECK(parse_space("og:3,7").family == Family::OGodd);
    CHECK(parse_space("og:3,6").family == Family::OGeven);
    CHECK(parse_space("flB:1,2;2").family == Family::FlagSym2n);
    CHECK(parse_space("flD:1,2;2").family == Family::FlagSym2n1);
    for (const char *bad : {"gr:3,2", "gr:0,2", "og:2,6", "lg:0", "flA:2,1;3", "flA:1,2,3", "flC:1,3;2", "xx:1", "gr2,4",
                            "gr:a,4", "flA:1,,2;3"})
        CHECK_THROWS_AS(parse_space(bad), InvalidSpace);
}
