#include <gysin/errors.hpp>
#include <gysin/spaces.hpp>

#include <algorithm>

namespace gysin {

SpaceSpec SpaceSpec::grassmannian(int k, int n) { return {Family::Gr, {k}, n}; }
SpaceSpec SpaceSpec::lagrangian(int n) { return {Family::LG, {n}, n}; }
SpaceSpec SpaceSpec::orthogonal_even(int n) { return {Family::OGeven, {n}, n}; }
SpaceSpec SpaceSpec::orthogonal_odd(int n) { return {Family::OGodd, {n}, n}; }
SpaceSpec SpaceSpec::flag(Family family, std::vector<int> d, int n) { return {family, std::move(d), n}; }

bool SpaceSpec::is_flag() const
{
    return family == Family::FlagA || family == Family::FlagC || family == Family::FlagSym2n ||
           family == Family::FlagSym2n1;
}

bool SpaceSpec::is_isotropic() const { return family != Family::Gr && family != Family::FlagA; }

void SpaceSpec::validate() const
{
    if (n < 1)
        throw InvalidSpace("n must be positive");
    if (d.empty())
        throw InvalidSpace("dimension vector is empty");
    if (d.front() < 1)
        throw InvalidSpace("dimensions must be positive");
    for (std::size_t i = 1; i < d.size(); ++i)
        if (d[i] <= d[i - 1])
            throw InvalidSpace("dimensions must be strictly increasing");
    if (d.back() > n)
        throw InvalidSpace("largest dimension exceeds n");
    if (!is_flag()) {
        if (d.size() != 1)
            throw InvalidSpace("Grassmannians have a single block");
        if (family != Family::Gr && d.front() != n)
            throw InvalidSpace("maximal isotropic Grassmannians need d = n");
    }
}

std::string SpaceSpec::to_string() const
{
    auto join = [this] {
        std::string s;
        for (std::size_t i = 0; i < d.size(); ++i)
            s += (i ? "," : "") + std::to_string(d[i]);
        return s + ";" + std::to_string(n);
    };
    switch (family) {
    case Family::Gr:
        return "gr:" + std::to_string(d.front()) + "," + std::to_string(n);
    case Family::LG:
        return "lg:" + std::to_string(n);
    case Family::OGeven:
        return "og:" + std::to_string(n) + "," + std::to_string(2 * n);
    case Family::OGodd:
        return "og:" + std::to_string(n) + "," + std::to_string(2 * n + 1);
    case Family::FlagA:
        return "flA:" + join();
    case Family::FlagC:
        return "flC:" + join();
    case Family::FlagSym2n:
        return "flB:" + join();
    case Family::FlagSym2n1:
        return "flD:" + join();
    }
    return "?";
}

std::vector<VarId> z_block(const SpaceSpec &spec, int group)
{
    std::vector<VarId> out;
    for (int i = 1; i <= spec.d.at(static_cast<std::size_t>(group - 1)); ++i)
        out.push_back(z_var(group, i));
    return out;
}

std::vector<VarId> t_block(const SpaceSpec &spec)
{
    std::vector<VarId> out;
    for (int i = 1; i <= spec.n; ++i)
        out.push_back(t_var(i));
    return out;
}

namespace {

long factorial(int m)
{
    long f = 1;
    for (int i = 2; i <= m; ++i)
        f *= i;
    return f;
}

Polynomial zv(int g, int i) { return Polynomial::variable(z_var(g, i)); }
Polynomial tv(int i) { return Polynomial::variable(t_var(i)); }

LinearFactor factor_of(const Polynomial &p) { return LinearFactor::from_polynomial(p); }

int sign_of(long exponent) { return exponent % 2 == 0 ? 1 : -1; }

// sum_{m<k} d_m (d_{m+1} - 1)
long index_set_b_size(const std::vector<int> &d)
{
    long b = 0;
    for (std::size_t m = 0; m + 1 < d.size(); ++m)
        b += static_cast<long>(d[m]) * (d[m + 1] - 1);
    return b;
}

} // namespace

long weyl_order(const SpaceSpec &spec)
{
    long w = 1;
    for (int dm : spec.d)
        w *= factorial(dm);
    return w;
}

void IndexMultiset::add(Pair p, int multiplicity)
{
    if (p.first == p.second)
        throw std::invalid_argument("diagonal pair in index multiset");
    if (multiplicity > 0)
        entries_[p] += multiplicity;
}

IndexMultiset IndexMultiset::minus(const IndexMultiset &other) const
{
    IndexMultiset out = *this;
    for (const auto &[p, m] : other.entries_) {
        auto it = out.entries_.find(p);
        const int have = it == out.entries_.end() ? 0 : it->second;
        if (have < m)
            throw NegativeMultiplicity("pair (" + std::to_string(p.first) + "," + std::to_string(p.second) +
                                       ") removed more often than present");
        if (have == m)
            out.entries_.erase(it);
        else
            it->second -= m;
    }
    return out;
}

int IndexMultiset::multiplicity(Pair p) const
{
    auto it = entries_.find(p);
    return it == entries_.end() ? 0 : it->second;
}

int IndexMultiset::size() const
{
    int s = 0;
    for (const auto &[p, m] : entries_)
        s += m;
    return s;
}

IndexMultiset index_set_a(const std::vector<int> &d)
{
    IndexMultiset a;
    for (int dm : d)
        for (int i = 1; i <= dm; ++i)
            for (int j = 1; j <= dm; ++j)
                if (i != j)
                    a.add({i, j});
    return a;
}

IndexMultiset index_set_b(const std::vector<int> &d)
{
    IndexMultiset b;
    for (std::size_t m = 0; m + 1 < d.size(); ++m)
        for (int i = 1; i <= d[m + 1]; ++i)
            for (int j = 1; j <= d[m]; ++j)
                if (i != j)
                    b.add({i, j});
    return b;
}

IndexMultiset index_set_ifl(const std::vector<int> &d) { return index_set_a(d).minus(index_set_b(d)); }

Polynomial fundamental_class_lift(const SpaceSpec &spec)
{
    spec.validate();
    const int k = spec.blocks();
    const int r = spec.last_dim();
    Polynomial lift(1L);
    if (!spec.is_isotropic())
        return lift;
    const bool with_diagonal = !spec.is_symplectic();
    for (int i = 1; i <= r; ++i)
        for (int j = with_diagonal ? i : i + 1; j <= r; ++j)
            lift = lift * (zv(k, i) + zv(k, j));
    return lift;
}

void check_class(const SpaceSpec &spec, const Polynomial &alpha)
{
    spec.validate();
    for (const auto &v : alpha.support()) {
        bool ok = false;
        if (v.block == Block::Z)
            ok = v.group >= 1 && v.group <= spec.blocks() && v.slot <= spec.d[static_cast<std::size_t>(v.group - 1)];
        else if (v.block == Block::T)
            ok = v.slot <= spec.n;
        if (!ok)
            throw UnknownVariable("variable " + to_string(v) + " does not belong to " + spec.to_string());
    }
    for (int g = 1; g <= spec.blocks(); ++g) {
        const auto block = z_block(spec, g);
        if (!is_symmetric(alpha, block, SymmetryAction::Permute))
            throw NotWeylSymmetric("class " + alpha.to_string() + " is not symmetric in the variables z[" +
                                   std::to_string(g) + ",*]");
    }
}

IntegrandPlan build_plan(const SpaceSpec &spec, const Polynomial &alpha, const PlanOptions &options)
{
    check_class(spec, alpha);
    const int k = spec.blocks();
    const int r = spec.last_dim();
    const int n = spec.n;

    IntegrandPlan plan;
    plan.space = spec;
    plan.weyl_order = weyl_order(spec);
    plan.residue_order = z_block(spec, k);

    // Identify every earlier block with the leading slots of the last one.
    std::map<VarId, Polynomial> collapse;
    for (int g = 1; g < k; ++g)
        for (int i = 1; i <= spec.d[static_cast<std::size_t>(g - 1)]; ++i)
            collapse.emplace(z_var(g, i), zv(k, i));
    Polynomial numerator = alpha.substitute(collapse);

    const IndexMultiset ifl = index_set_ifl(spec.d);
    for (const auto &[p, mult] : ifl.entries())
        numerator = numerator * (zv(k, p.first) - zv(k, p.second)).pow(static_cast<unsigned>(mult));
    int linear = ifl.size();

    const bool uncancelled = spec.has_zero_weight() && options.zero_weight == ZeroWeightForm::Uncancelled;
    Rational prefactor(1);
    if (spec.is_isotropic()) {
        if (spec.has_zero_weight() && !uncancelled) {
            // prod_{i<=j}(z_i + z_j) / prod z_i = 2^r prod_{i<j}(z_i + z_j)
            for (int i = 1; i <= r; ++i)
                for (int j = i + 1; j <= r; ++j)
                    numerator = numerator * (zv(k, i) + zv(k, j));
            linear += r * (r - 1) / 2;
            prefactor *= Rational(1L << r);
        } else {
            numerator = numerator * fundamental_class_lift(spec);
            linear += spec.is_symplectic() ? r * (r - 1) / 2 : r * (r + 1) / 2;
        }
    }

    std::vector<LinearFactor> den;
    for (int l = 1; l <= r; ++l) {
        for (int m = 1; m <= n; ++m) {
            den.push_back(factor_of(tv(m) - zv(k, l)));
            if (spec.is_isotropic())
                den.push_back(factor_of(tv(m) + zv(k, l)));
        }
        if (uncancelled)
            den.push_back(factor_of(-zv(k, l)));
    }

    // The reduced flag integrand keeps one of the d_{m+1}! / (d_{m+1} - d_m)!
    // equivalent pole configurations of each earlier block.
    long multiplicity = 1;
    for (int m = 0; m + 1 < k; ++m)
        multiplicity *= factorial(spec.d[static_cast<std::size_t>(m) + 1]) /
                        factorial(spec.d[static_cast<std::size_t>(m) + 1] - spec.d[static_cast<std::size_t>(m)]);
    prefactor *= multiplicity;

    long sign_exponent = r + static_cast<long>(r) * n + index_set_b_size(spec.d);
    if (uncancelled)
        sign_exponent += r;

    plan.expr = RationalExpr{numerator, std::move(den), prefactor};
    plan.sign = sign_of(sign_exponent);
    plan.pole_multiplicity = multiplicity;
    plan.numerator_linear_factors = linear;
    plan.policy = CrossingPolicy::Strict;
    return plan;
}

std::map<VarId, Polynomial> z_to_uv(const std::vector<int> &d)
{
    const int k = static_cast<int>(d.size());
    std::map<VarId, Polynomial> out;
    for (int m = 1; m <= k; ++m) {
        for (int i = 1; i <= d[static_cast<std::size_t>(m - 1)]; ++i) {
            Polynomial p = Polynomial::variable(u_var(i));
            for (int l = m; l < k; ++l)
                p = p - Polynomial::variable(v_var(l, i));
            out.emplace(z_var(m, i), p);
        }
    }
    return out;
}

std::map<VarId, Polynomial> uv_to_z(const std::vector<int> &d)
{
    const int k = static_cast<int>(d.size());
    std::map<VarId, Polynomial> out;
    for (int i = 1; i <= d.back(); ++i)
        out.emplace(u_var(i), zv(k, i));
    for (int m = 1; m < k; ++m)
        for (int i = 1; i <= d[static_cast<std::size_t>(m - 1)]; ++i)
            out.emplace(v_var(m, i), zv(m + 1, i) - zv(m, i));
    return out;
}

IntegrandPlan build_plan_unsimplified_flag_a(const SpaceSpec &spec, const Polynomial &alpha)
{
    if (spec.family != Family::FlagA && spec.family != Family::Gr)
        throw InvalidSpace("the unsimplified plan exists for type A flags only");
    check_class(spec, alpha);
    const int k = spec.blocks();
    const auto &d = spec.d;
    const auto to_uv = z_to_uv(d);

    Polynomial numerator = alpha;
    int linear = 0;
    for (int m = 1; m <= k; ++m)
        for (int i = 1; i <= d[static_cast<std::size_t>(m - 1)]; ++i)
            for (int j = 1; j <= d[static_cast<std::size_t>(m - 1)]; ++j)
                if (i != j) {
                    numerator = numerator * (zv(m, i) - zv(m, j));
                    ++linear;
                }
    numerator = numerator.substitute(to_uv);

    std::vector<LinearFactor> den;
    for (int m = 1; m < k; ++m)
        for (int a = 1; a <= d[static_cast<std::size_t>(m)]; ++a)
            for (int b = 1; b <= d[static_cast<std::size_t>(m - 1)]; ++b)
                den.push_back(factor_of((zv(m + 1, a) - zv(m, b)).substitute(to_uv)));
    for (int l = 1; l <= d.back(); ++l)
        for (int c = 1; c <= spec.n; ++c)
            den.push_back(factor_of(tv(c) - Polynomial::variable(u_var(l))));

    IntegrandPlan plan;
    plan.space = spec;
    plan.weyl_order = weyl_order(spec);
    long v_count = 0;
    for (int m = 1; m < k; ++m)
        for (int i = 1; i <= d[static_cast<std::size_t>(m - 1)]; ++i) {
            plan.residue_order.push_back(v_var(m, i));
            ++v_count;
        }
    for (int i = 1; i <= d.back(); ++i)
        plan.residue_order.push_back(u_var(i));

    const long residue_vars = static_cast<long>(plan.residue_order.size());
    plan.sign = sign_of(residue_vars + static_cast<long>(den.size()) + v_count);
    plan.expr = RationalExpr{numerator, std::move(den), Rational(1)};
    plan.numerator_linear_factors = linear;
    plan.policy = CrossingPolicy::Iterated;
    return plan;
}

Polynomial evaluate_plan(const IntegrandPlan &plan)
{
    const Polynomial res = residue_at_infinity(plan.expr, plan.residue_order, plan.policy);
    for (const auto &v : res.support())
        if (v.is_residue())
            throw ResidualVariable("residue variable " + to_string(v) + " survived the push-forward");
    return res.scaled(Rational(plan.sign) / Rational(plan.weyl_order));
}

Polynomial pushforward(const SpaceSpec &spec, const Polynomial &alpha) { return evaluate_plan(build_plan(spec, alpha)); }

int plan_dimension(const IntegrandPlan &plan)
{
    return static_cast<int>(plan.expr.denominator.size()) - plan.numerator_linear_factors -
           static_cast<int>(plan.residue_order.size());
}

} // namespace gysin
