#include <gysin/schur.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gysin {

Partition::Partition(std::vector<int> p) : parts(std::move(p))
{
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0)
            throw std::invalid_argument("partition parts must be non-negative");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Partition::length() const
{
    return static_cast<int>(std::count_if(parts.begin(), parts.end(), [](int x) { return x > 0; }));
}

Partition Partition::padded(int n) const
{
    if (length() > n)
        throw std::invalid_argument("partition " + to_string() + " has more than " + std::to_string(n) + " parts");
    std::vector<int> p(parts.begin(), parts.begin() + std::min<std::ptrdiff_t>(n, static_cast<std::ptrdiff_t>(parts.size())));
    p.resize(static_cast<std::size_t>(n), 0);
    return Partition(std::move(p));
}

std::string Partition::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i)
        s += (i ? "," : "") + std::to_string(parts[i]);
    return s + ")";
}

bool operator==(const Partition &a, const Partition &b)
{
    const int n = static_cast<int>(std::max(a.parts.size(), b.parts.size()));
    return a.padded(n).parts == b.padded(n).parts;
}

Partition staircase(int n)
{
    std::vector<int> p;
    for (int i = n; i >= 1; --i)
        p.push_back(i);
    return Partition(std::move(p));
}

std::vector<Partition> partitions_of(int weight, int max_parts)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto &&self, int left, int cap) -> void {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_parts)
            return;
        for (int part = std::min(left, cap); part >= 1; --part) {
            cur.push_back(part);
            self(self, left - part, part);
            cur.pop_back();
        }
    };
    if (weight >= 0)
        rec(rec, weight, weight);
    return out;
}

Polynomial schur_poly(const Partition &lambda, std::span<const VarId> vars)
{
    const int n = static_cast<int>(vars.size());
    const Partition lam = lambda.padded(n);
    if (n == 0)
        return Polynomial(1L);

    const auto table = Polynomial::make_table({vars.begin(), vars.end()});
    std::vector<std::size_t> slot(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        slot[static_cast<std::size_t>(j)] =
            static_cast<std::size_t>(std::lower_bound(table->begin(), table->end(), vars[static_cast<std::size_t>(j)]) -
                                     table->begin());

    // Alternant det(x_j^{a_i}) by expansion over permutations.
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Polynomial::Term> terms;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                inversions += perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)];
        Monomial m;
        for (int i = 0; i < n; ++i) {
            const int a = lam.parts[static_cast<std::size_t>(i)] + n - 1 - i;
            if (a > static_cast<int>(kMaxExponent))
                throw std::overflow_error("schur_poly: exponent too large");
            m.exp[slot[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]] = static_cast<std::uint8_t>(a);
        }
        terms.push_back({m, Rational(inversions % 2 ? -1 : 1)});
    } while (std::next_permutation(perm.begin(), perm.end()));

    const Polynomial alternant = Polynomial::from_terms(table, std::move(terms));
    Polynomial s = exact_div(alternant, vandermonde(vars));
    if (!is_symmetric(s, vars, SymmetryAction::Permute))
        throw std::logic_error("schur_poly produced a non-symmetric polynomial");
    return s;
}

std::optional<Partition> decompose_two_mu_plus_rho(const Partition &lambda, int n)
{
    const Partition lam = lambda.padded(n);
    std::vector<int> mu;
    for (int i = 0; i < n; ++i) {
        const int diff = lam.parts[static_cast<std::size_t>(i)] - (n - i);
        if (diff < 0 || diff % 2 != 0)
            return std::nullopt;
        mu.push_back(diff / 2);
    }
    for (std::size_t i = 1; i < mu.size(); ++i)
        if (mu[i] > mu[i - 1])
            return std::nullopt;
    return Partition(std::move(mu));
}

Polynomial complete_homogeneous(int m, std::span<const VarId> vars)
{
    if (m < -1)
        throw std::invalid_argument("complete_homogeneous: degree below -1");
    if (m == -1)
        return Polynomial();
    if (m == 0)
        return Polynomial(1L);
    if (vars.empty())
        return Polynomial();
    if (m > static_cast<int>(kMaxExponent))
        throw std::overflow_error("complete_homogeneous: degree too large");
    const auto table = Polynomial::make_table({vars.begin(), vars.end()});
    std::vector<Polynomial::Term> terms;
    Monomial cur;
    auto rec = [&](auto &&self, std::size_t i, int left) -> void {
        if (i + 1 == table->size()) {
            cur.exp[i] = static_cast<std::uint8_t>(left);
            terms.push_back({cur, Rational(1)});
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur.exp[i] = static_cast<std::uint8_t>(e);
            self(self, i + 1, left - e);
        }
        cur.exp[i] = 0;
    };
    rec(rec, 0, m);
    return Polynomial::from_terms(table, std::move(terms));
}

} // namespace gysin
