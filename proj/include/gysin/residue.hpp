#pragma once

/*
 * Iterated residues at infinity of rational functions whose denominators are
 * products of factors linear in the residue variables.
 *
 * For a single variable x, Res_{x=inf} f is minus the coefficient of 1/x in the
 * expansion of f at x = inf. Variables are eliminated in the given order, the
 * first one innermost, so every expansion is taken in the region
 * |x_1| >> |x_2| >> ... >> |t|.
 */

#include <gysin/polynomial.hpp>

#include <map>
#include <span>
#include <string>
#include <vector>

namespace gysin {

struct LinearFactor {
    std::map<VarId, Rational> linear; // residue variables only, no zero entries
    Polynomial constant;              // parameter variables only

    // Splits p = sum a_v v + c. Throws std::invalid_argument unless p is of
    // degree at most one in the residue variables with rational coefficients
    // there, and nonzero.
    static LinearFactor from_polynomial(const Polynomial &p);

    Polynomial to_polynomial() const;
    bool involves(VarId v) const { return linear.count(v) != 0; }
    std::string to_string() const;

    friend bool operator==(const LinearFactor &a, const LinearFactor &b)
    {
        return a.linear == b.linear && a.constant == b.constant;
    }
};

// prefactor * numerator / prod(denominator); repeated factors encode multiplicity.
struct RationalExpr {
    Polynomial numerator;
    std::vector<LinearFactor> denominator;
    Rational prefactor{1};

    // Residue variables occurring anywhere, sorted.
    std::vector<VarId> residue_variables() const;
    std::string to_string() const;

    friend bool operator==(const RationalExpr &a, const RationalExpr &b)
    {
        return a.numerator == b.numerator && a.denominator == b.denominator && a.prefactor == b.prefactor;
    }
};

enum class CrossingPolicy {
    // Every denominator factor may involve at most one residue variable.
    Strict,
    // Factors may couple variables; each is expanded around its earliest
    // variable in the order. The result then depends on the order in general.
    Iterated,
};

// Throws NotNormalCrossing (Strict policy), NotPolynomial when the leftover
// parameter-only factors do not divide the result, std::invalid_argument when
// `order` misses a residue variable of expr or repeats one.
Polynomial residue_at_infinity(const RationalExpr &expr, std::span<const VarId> order,
                               CrossingPolicy policy = CrossingPolicy::Strict);

// Replaces the residue in each v at its simple pole v = 0 (taken with the sign
// of a residue at infinity): drops the factor a*v, sets v = 0 and scales by -1/a.
// Throws NotSimplePole.
RationalExpr simplify_simple_poles(const RationalExpr &expr, std::span<const VarId> vars);

std::vector<Polynomial> residues_for_orders(const RationalExpr &expr, std::span<const std::vector<VarId>> orders,
                                            CrossingPolicy policy = CrossingPolicy::Iterated);

bool check_order_independence(const RationalExpr &expr, std::span<const std::vector<VarId>> orders,
                              CrossingPolicy policy = CrossingPolicy::Iterated);

} // namespace gysin
