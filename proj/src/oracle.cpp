#include <gysin/errors.hpp>
#include <gysin/oracle.hpp>

#include <functional>
#include <stdexcept>

namespace gysin {

namespace {

// A signed basis vector e_{+-a}, or the zero-weight vector (index 0).
struct Basis {
    int index = 0;
    int sign = 0;

    Polynomial value() const
    {
        if (index == 0)
            return Polynomial();
        return Polynomial::variable(t_var(index)).scaled(Rational(sign));
    }
    friend bool operator==(const Basis &, const Basis &) = default;
};

// Visits every coordinate flag as the ordered list of chosen basis vectors,
// block after block.
void enumerate(const SpaceSpec &spec, const std::function<void(const std::vector<Basis> &)> &visit)
{
    const int k = spec.blocks();
    std::vector<Basis> chosen;
    std::vector<bool> used(static_cast<std::size_t>(spec.n) + 1, false);

    auto block = [&](auto &&self, int m) -> void {
        if (m == k) {
            visit(chosen);
            return;
        }
        const int prev = m == 0 ? 0 : spec.d[static_cast<std::size_t>(m) - 1];
        const int want = spec.d[static_cast<std::size_t>(m)] - prev;
        auto pick = [&](auto &&again, int from, int left) -> void {
            if (left == 0) {
                self(self, m + 1);
                return;
            }
            for (int a = from; a <= spec.n; ++a) {
                if (used[static_cast<std::size_t>(a)])
                    continue;
                used[static_cast<std::size_t>(a)] = true;
                for (int sign : spec.is_isotropic() ? std::vector<int>{1, -1} : std::vector<int>{1}) {
                    chosen.push_back({a, sign});
                    again(again, a + 1, left - 1);
                    chosen.pop_back();
                }
                used[static_cast<std::size_t>(a)] = false;
            }
        };
        pick(pick, 1, want);
    };
    block(block, 0);
}

FixedPoint make_point(const SpaceSpec &spec, const std::vector<Basis> &chosen)
{
    const int k = spec.blocks();
    FixedPoint p;
    for (int m = 1; m <= k; ++m)
        for (int i = 1; i <= spec.d[static_cast<std::size_t>(m - 1)]; ++i)
            p.assignment.emplace(z_var(m, i), chosen[static_cast<std::size_t>(i - 1)].value());

    auto block_of_position = [&](std::size_t pos) {
        int m = 1;
        while (static_cast<int>(pos) >= spec.d[static_cast<std::size_t>(m - 1)])
            ++m;
        return m;
    };

    if (!spec.is_isotropic()) {
        std::vector<int> level(static_cast<std::size_t>(spec.n) + 1, k + 1);
        for (std::size_t pos = 0; pos < chosen.size(); ++pos)
            level[static_cast<std::size_t>(chosen[pos].index)] = block_of_position(pos);
        for (int a = 1; a <= spec.n; ++a)
            for (int b = 1; b <= spec.n; ++b)
                if (level[static_cast<std::size_t>(a)] < level[static_cast<std::size_t>(b)])
                    p.tangent_weights.push_back(Polynomial::variable(t_var(a)) - Polynomial::variable(t_var(b)));
        return p;
    }

    std::vector<Basis> vectors;
    std::vector<int> level;
    for (int a = 1; a <= spec.n; ++a) {
        for (int sign : {1, -1}) {
            vectors.push_back({a, sign});
            int lv = k + 1;
            for (std::size_t pos = 0; pos < chosen.size(); ++pos) {
                if (chosen[pos].index != a)
                    continue;
                const int m = block_of_position(pos);
                lv = chosen[pos].sign == sign ? m : 2 * k + 2 - m;
            }
            level.push_back(lv);
        }
    }
    if (spec.has_zero_weight()) {
        vectors.push_back({0, 0});
        level.push_back(k + 1);
    }
    const bool diagonal = spec.is_symplectic();
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        for (std::size_t j = diagonal ? i : i + 1; j < vectors.size(); ++j) {
            const Basis &x = vectors[i];
            const Basis &y = vectors[j];
            if (x.index == y.index && x.sign == -y.sign)
                continue; // x = -y, also excludes the zero vector paired with itself
            if (level[i] + level[j] >= 2 * k + 2)
                continue;
            p.tangent_weights.push_back(x.value() + y.value());
        }
    }
    return p;
}

} // namespace

std::vector<FixedPoint> fixed_points(const SpaceSpec &spec)
{
    spec.validate();
    std::vector<FixedPoint> out;
    enumerate(spec, [&](const std::vector<Basis> &chosen) {
        out.push_back(make_point(spec, chosen));
        for (const auto &w : out.back().tangent_weights)
            if (w.is_zero())
                throw std::logic_error("zero tangent weight at a fixed point of " + spec.to_string());
    });
    return out;
}

long point_count(const SpaceSpec &spec)
{
    spec.validate();
    long count = 0;
    enumerate(spec, [&](const std::vector<Basis> &) { ++count; });
    return count;
}

Polynomial abbv_pushforward(const SpaceSpec &spec, const Polynomial &alpha)
{
    check_class(spec, alpha);
    const auto points = fixed_points(spec);

    // Each weight is c * L with L monic; the common denominator is the product
    // of the distinct L to their largest multiplicity at any point.
    struct Local {
        Polynomial restriction;
        std::map<std::string, int> mult;
    };
    std::map<std::string, std::pair<Polynomial, int>> forms;
    std::vector<Local> locals;
    for (const auto &p : points) {
        Local loc{alpha.substitute(p.assignment), {}};
        Rational scale(1);
        for (const auto &w : p.tangent_weights) {
            const Rational c = w.terms().front().coeff;
            const Polynomial monic = w.scaled(1 / c);
            const std::string key = monic.to_string();
            scale *= c;
            const int m = ++loc.mult[key];
            auto [it, inserted] = forms.try_emplace(key, monic, m);
            if (!inserted)
                it->second.second = std::max(it->second.second, m);
        }
        loc.restriction = loc.restriction.scaled(1 / scale);
        locals.push_back(std::move(loc));
    }

    Polynomial sum;
    for (const auto &loc : locals) {
        Polynomial term = loc.restriction;
        if (term.is_zero())
            continue;
        for (const auto &[key, form] : forms) {
            auto it = loc.mult.find(key);
            const int have = it == loc.mult.end() ? 0 : it->second;
            if (form.second > have)
                term = term * form.first.pow(static_cast<unsigned>(form.second - have));
        }
        sum = sum + term;
    }

    for (const auto &[key, form] : forms) {
        for (int e = 0; e < form.second; ++e) {
            try {
                sum = exact_div(sum, form.first);
            } catch (const NotDivisible &) {
                throw NotPolynomial("localization sum over " + spec.to_string() + " is not divisible by " + key);
            }
        }
    }
    return sum.is_zero() ? sum : sum.rebased(Polynomial::make_table(sum.support()));
}

} // namespace gysin
