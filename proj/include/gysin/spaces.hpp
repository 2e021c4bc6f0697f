#pragma once

/*
 * Residue integrands for push-forwards to a point.
 *
 * Every plan is an expression in the z variables of the last tautological
 * block (or, for the unsimplified type A plan, in the u/v coordinates) whose
 * iterated residue at infinity, scaled by sign / weyl_order, equals the
 * integral of alpha over the space. Denominators are written as (t - z) and
 * (t + z) factors.
 */

#include <gysin/polynomial.hpp>
#include <gysin/residue.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gysin {

enum class Family {
    Gr,         // Gr(k, n)
    LG,         // Lagrangian Grassmannian in C^2n
    OGeven,     // maximal isotropic subspaces of a symmetric form on C^2n (both components)
    OGodd,      // maximal isotropic subspaces of a symmetric form on C^{2n+1}
    FlagA,      // Fl(d; C^n)
    FlagC,      // isotropic flags, symplectic C^2n
    FlagSym2n,  // isotropic flags, symmetric form on C^2n
    FlagSym2n1, // isotropic flags, symmetric form on C^{2n+1}
};

struct SpaceSpec {
    Family family = Family::Gr;
    std::vector<int> d{1}; // block dimensions d_1 < ... < d_k
    int n = 1;

    static SpaceSpec grassmannian(int k, int n);
    static SpaceSpec lagrangian(int n);
    static SpaceSpec orthogonal_even(int n);
    static SpaceSpec orthogonal_odd(int n);
    static SpaceSpec flag(Family family, std::vector<int> d, int n);

    // Throws InvalidSpace.
    void validate() const;

    int blocks() const { return static_cast<int>(d.size()); }
    int last_dim() const { return d.back(); }
    bool is_flag() const;
    // Families whose torus acts through signed characters +-t.
    bool is_isotropic() const;
    bool has_zero_weight() const { return family == Family::OGodd || family == Family::FlagSym2n1; }
    bool is_symplectic() const { return family == Family::LG || family == Family::FlagC; }

    // Command line form, e.g. "gr:2,4", "og:2,5", "flA:1,2;3".
    std::string to_string() const;

    friend bool operator==(const SpaceSpec &, const SpaceSpec &) = default;
};

// z[g,1..d_g]
std::vector<VarId> z_block(const SpaceSpec &spec, int group);
// t[1..n]
std::vector<VarId> t_block(const SpaceSpec &spec);

long weyl_order(const SpaceSpec &spec);

class IndexMultiset {
public:
    using Pair = std::pair<int, int>;

    void add(Pair p, int multiplicity = 1);
    // Throws NegativeMultiplicity when `other` is not contained in *this.
    IndexMultiset minus(const IndexMultiset &other) const;

    int multiplicity(Pair p) const;
    // Total count with multiplicities.
    int size() const;
    const std::map<Pair, int> &entries() const { return entries_; }

    friend bool operator==(const IndexMultiset &, const IndexMultiset &) = default;

private:
    std::map<Pair, int> entries_;
};

IndexMultiset index_set_a(const std::vector<int> &d);
IndexMultiset index_set_b(const std::vector<int> &d);
// index_set_a(d) minus index_set_b(d)
IndexMultiset index_set_ifl(const std::vector<int> &d);

// Isotropy condition on the last block: 1 for Gr and FlagA,
// prod_{i<j} (z_i + z_j) for the symplectic families and
// prod_{i<=j} (z_i + z_j) for the orthogonal ones.
Polynomial fundamental_class_lift(const SpaceSpec &spec);

// Throws UnknownVariable for variables outside the space and NotWeylSymmetric
// unless alpha is symmetric in each z block.
void check_class(const SpaceSpec &spec, const Polynomial &alpha);

// Odd orthogonal families: the zero weight of the Euler class either cancels
// against prod z_i of the isotropy class, or stays as an explicit factor.
enum class ZeroWeightForm { Cancelled, Uncancelled };

struct PlanOptions {
    ZeroWeightForm zero_weight = ZeroWeightForm::Cancelled;
};

struct IntegrandPlan {
    RationalExpr expr;
    std::vector<VarId> residue_order;
    long weyl_order = 1;
    int sign = 1;
    SpaceSpec space;
    // Number of identical pole configurations folded into expr.prefactor when
    // the flag integrand is reduced to the last block.
    long pole_multiplicity = 1;
    // z-linear factors multiplied into the numerator besides alpha.
    int numerator_linear_factors = 0;
    CrossingPolicy policy = CrossingPolicy::Strict;
};

IntegrandPlan build_plan(const SpaceSpec &spec, const Polynomial &alpha, const PlanOptions &options = {});

// Type A flags over all blocks, written in the coordinates
// u_i = z[k,i], v[m,i] = z[m+1,i] - z[m,i]; residue order v[1,.], ..., v[k-1,.], u.
IntegrandPlan build_plan_unsimplified_flag_a(const SpaceSpec &spec, const Polynomial &alpha);

// sign / weyl_order * residue.
Polynomial evaluate_plan(const IntegrandPlan &plan);

Polynomial pushforward(const SpaceSpec &spec, const Polynomial &alpha);

// Denominator factors - numerator linear factors - residue variables.
int plan_dimension(const IntegrandPlan &plan);

// z[m,i] = u_i - sum_{m<=l<k} v[l,i]
std::map<VarId, Polynomial> z_to_uv(const std::vector<int> &d);
// u_i = z[k,i], v[m,i] = z[m+1,i] - z[m,i]
std::map<VarId, Polynomial> uv_to_z(const std::vector<int> &d);

} // namespace gysin
