#include <gysin/errors.hpp>
#include <gysin/residue.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gysin {

LinearFactor LinearFactor::from_polynomial(const Polynomial &p)
{
    LinearFactor f;
    std::vector<Polynomial::Term> rest;
    for (const auto &t : p.terms()) {
        int residue_deg = 0;
        int residue_index = -1;
        bool has_param = false;
        for (std::size_t i = 0; i < p.vars().size(); ++i) {
            if (t.mono.exp[i] == 0)
                continue;
            if (p.vars()[i].is_residue()) {
                residue_deg += t.mono.exp[i];
                residue_index = static_cast<int>(i);
            } else {
                has_param = true;
            }
        }
        if (residue_deg == 0) {
            rest.push_back(t);
        } else if (residue_deg == 1 && !has_param) {
            f.linear[p.vars()[static_cast<std::size_t>(residue_index)]] = t.coeff;
        } else {
            throw std::invalid_argument("not a linear factor: " + p.to_string());
        }
    }
    f.constant = Polynomial::from_terms(p.table(), std::move(rest));
    if (f.linear.empty() && f.constant.is_zero())
        throw std::invalid_argument("zero denominator factor");
    if (!f.constant.is_zero())
        f.constant = f.constant.rebased(Polynomial::make_table(f.constant.support()));
    return f;
}

Polynomial LinearFactor::to_polynomial() const
{
    Polynomial p = constant;
    for (const auto &[v, a] : linear)
        p = p + Polynomial::variable(v).scaled(a);
    return p;
}

std::string LinearFactor::to_string() const { return to_polynomial().to_string(); }

std::vector<VarId> RationalExpr::residue_variables() const
{
    std::set<VarId> vars;
    for (const auto &v : numerator.support())
        if (v.is_residue())
            vars.insert(v);
    for (const auto &f : denominator)
        for (const auto &[v, a] : f.linear)
            vars.insert(v);
    return {vars.begin(), vars.end()};
}

std::string RationalExpr::to_string() const
{
    std::string out = gysin::to_string(prefactor) + " * (" + numerator.to_string() + ")";
    if (!denominator.empty()) {
        out += " / (";
        for (std::size_t i = 0; i < denominator.size(); ++i)
            out += (i ? ")*(" : "(") + denominator[i].to_string();
        out += "))";
    }
    return out;
}

namespace {

struct WorkFactor {
    Polynomial poly;           // sum a_v v + c over the working table
    std::set<VarId> variables; // residue variables with a_v != 0
};

// h_K(rho_1, ..., rho_m) for K = 0..kmax.
std::vector<Polynomial> complete_homogeneous_series(const std::vector<Polynomial> &rho, int kmax,
                                                    const Polynomial::TablePtr &table)
{
    const Polynomial one = Polynomial(1L).rebased(table);
    std::vector<Polynomial> h(static_cast<std::size_t>(kmax) + 1, Polynomial().rebased(table));
    h[0] = one;
    for (int k = 1; k <= kmax; ++k)
        h[static_cast<std::size_t>(k)] = h[static_cast<std::size_t>(k) - 1] * rho[0];
    for (std::size_t j = 1; j < rho.size(); ++j)
        for (int k = 1; k <= kmax; ++k)
            h[static_cast<std::size_t>(k)] =
                h[static_cast<std::size_t>(k)] + rho[j] * h[static_cast<std::size_t>(k) - 1];
    return h;
}

} // namespace

Polynomial residue_at_infinity(const RationalExpr &expr, std::span<const VarId> order, CrossingPolicy policy)
{
    {
        std::set<VarId> seen;
        for (const auto &v : order) {
            if (!v.is_residue())
                throw std::invalid_argument("residue order contains parameter variable " + to_string(v));
            if (!seen.insert(v).second)
                throw std::invalid_argument("residue order repeats " + to_string(v));
        }
        for (const auto &v : expr.residue_variables())
            if (!seen.count(v))
                throw std::invalid_argument("residue order misses " + to_string(v));
    }
    for (const auto &f : expr.denominator) {
        if (f.linear.empty() && f.constant.is_zero())
            throw std::invalid_argument("zero denominator factor");
        if (policy == CrossingPolicy::Strict && f.linear.size() > 1)
            throw NotNormalCrossing("factor " + f.to_string() +
                                    " couples several residue variables; poles do not cross normally");
    }
    if (expr.numerator.is_zero() || is_zero(expr.prefactor))
        return Polynomial();

    // One working table for everything so that no intermediate result has to
    // merge tables.
    std::vector<VarId> all(expr.numerator.vars());
    for (const auto &f : expr.denominator) {
        all.insert(all.end(), f.constant.vars().begin(), f.constant.vars().end());
        for (const auto &[v, a] : f.linear)
            all.push_back(v);
    }
    all.insert(all.end(), order.begin(), order.end());
    const auto table = Polynomial::make_table(std::move(all));

    Polynomial num = expr.numerator.rebased(table);
    Rational scale = expr.prefactor;
    scale.canonicalize();
    std::vector<WorkFactor> factors;
    for (const auto &f : expr.denominator) {
        WorkFactor w{f.to_polynomial().rebased(table), {}};
        for (const auto &[v, a] : f.linear)
            w.variables.insert(v);
        factors.push_back(std::move(w));
    }

    // A variable that no denominator factor mentions has no pole at infinity
    // beyond a polynomial, whose residue vanishes.
    for (const auto &v : order) {
        const bool has_pole = std::any_of(factors.begin(), factors.end(),
                                          [&](const WorkFactor &f) { return f.variables.count(v) != 0; });
        if (!has_pole)
            return Polynomial();
    }

    std::map<std::string, std::vector<Polynomial>> series_cache;

    for (std::size_t step = 0; step < order.size(); ++step) {
        const VarId x = order[step];
        const int xi = num.index_of(x);

        std::vector<Polynomial> rho;
        Rational lead_product(1);
        std::vector<WorkFactor> kept;
        std::string cache_key;
        for (auto &f : factors) {
            if (!f.variables.count(x)) {
                kept.push_back(std::move(f));
                continue;
            }
            Rational a;
            std::vector<Polynomial::Term> rest;
            for (const auto &t : f.poly.terms()) {
                if (t.mono.exp[static_cast<std::size_t>(xi)] == 1)
                    a = t.coeff;
                else
                    rest.push_back(t);
            }
            lead_product *= a;
            rho.push_back(Polynomial::from_terms(table, std::move(rest)).scaled(-1 / a));
            cache_key += rho.back().to_string() + ";";
        }
        factors = std::move(kept);
        const int m = static_cast<int>(rho.size());

        // Terms whose exponent in a later variable y stays below (#poles in y) - 1
        // cannot contribute, provided nothing processed before y can raise
        // that exponent again.
        std::vector<std::pair<std::size_t, int>> prune;
        for (std::size_t later = step + 1; later < order.size(); ++later) {
            const VarId y = order[later];
            int poles = 0;
            bool coupled = false;
            auto check = [&](const std::set<VarId> &vars) {
                if (!vars.count(y))
                    return;
                ++poles;
                for (std::size_t s = step; s < later; ++s)
                    if (vars.count(order[s]))
                        coupled = true;
            };
            for (const auto &f : factors)
                check(f.variables);
            if (!rho.empty()) {
                for (const auto &r : rho)
                    if (r.involves(y))
                        coupled = true;
            }
            if (!coupled && poles > 1)
                prune.emplace_back(static_cast<std::size_t>(num.index_of(y)), poles - 1);
        }

        std::map<int, std::vector<Polynomial::Term>> by_power;
        for (const auto &t : num.terms()) {
            const int e = t.mono.exp[static_cast<std::size_t>(xi)];
            if (e < m - 1)
                continue;
            bool keep = true;
            for (const auto &[yi, need] : prune)
                if (t.mono.exp[yi] < need)
                    keep = false;
            if (!keep)
                continue;
            Polynomial::Term stripped = t;
            stripped.mono.exp[static_cast<std::size_t>(xi)] = 0;
            by_power[e].push_back(std::move(stripped));
        }
        if (by_power.empty())
            return Polynomial();

        const int kmax = by_power.rbegin()->first - (m - 1);
        auto &h = series_cache[cache_key];
        if (static_cast<int>(h.size()) <= kmax)
            h = complete_homogeneous_series(rho, kmax, table);

        Polynomial next = Polynomial().rebased(table);
        for (auto &[e, terms] : by_power) {
            const Polynomial part = Polynomial::from_terms(table, std::move(terms));
            next = next + part * h[static_cast<std::size_t>(e - (m - 1))];
        }
        num = std::move(next);
        scale *= -1 / lead_product;
        if (num.is_zero())
            return Polynomial();
    }

    for (const auto &v : num.support())
        if (v.is_residue())
            throw ResidualVariable("residue variable " + to_string(v) + " survived the residue");

    for (const auto &f : factors) {
        try {
            num = exact_div(num, f.poly);
        } catch (const NotDivisible &) {
            throw NotPolynomial("residue is not divisible by the parameter factor " + f.poly.to_string());
        }
    }
    num = num.scaled(scale);
    return num.rebased(Polynomial::make_table(num.support()));
}

RationalExpr simplify_simple_poles(const RationalExpr &expr, std::span<const VarId> vars)
{
    RationalExpr out = expr;
    std::map<VarId, Polynomial> zero;
    for (const auto &v : vars) {
        std::size_t standalone = 0;
        std::size_t where = 0;
        for (std::size_t i = 0; i < out.denominator.size(); ++i) {
            const auto &f = out.denominator[i];
            if (f.linear.size() == 1 && f.involves(v) && f.constant.is_zero()) {
                ++standalone;
                where = i;
            }
        }
        if (standalone != 1)
            throw NotSimplePole(to_string(v) + " does not occur as a simple standalone factor");
        out.prefactor *= -1 / out.denominator[where].linear.at(v);
        out.denominator.erase(out.denominator.begin() + static_cast<std::ptrdiff_t>(where));
        zero.emplace(v, Polynomial());
    }
    for (auto &f : out.denominator) {
        for (const auto &[v, p] : zero)
            f.linear.erase(v);
        if (f.linear.empty() && f.constant.is_zero())
            throw NotSimplePole("a denominator factor vanishes when the simple-pole variables are set to 0");
    }
    out.numerator = out.numerator.substitute(zero);
    return out;
}

std::vector<Polynomial> residues_for_orders(const RationalExpr &expr, std::span<const std::vector<VarId>> orders,
                                            CrossingPolicy policy)
{
    std::vector<Polynomial> out;
    out.reserve(orders.size());
    for (const auto &o : orders)
        out.push_back(residue_at_infinity(expr, o, policy));
    return out;
}

bool check_order_independence(const RationalExpr &expr, std::span<const std::vector<VarId>> orders,
                              CrossingPolicy policy)
{
    const auto values = residues_for_orders(expr, orders, policy);
    return std::all_of(values.begin(), values.end(), [&](const Polynomial &p) { return p == values.front(); });
}

} // namespace gysin
