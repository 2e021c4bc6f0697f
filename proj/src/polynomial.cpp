#include <gysin/errors.hpp>
#include <gysin/polynomial.hpp>

#include <algorithm>
#include <cstring>
#include <stdexcept>
#include <unordered_map>

namespace gysin {

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational literal '" + s + "'");
    if (sgn(q.get_den()) == 0)
        throw std::invalid_argument("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational &q) { return q.get_str(10); }

std::string to_string(const VarId &v)
{
    switch (v.block) {
    case Block::Z:
        return "z[" + std::to_string(v.group) + "," + std::to_string(v.slot) + "]";
    case Block::T:
        return "t[" + std::to_string(v.slot) + "]";
    case Block::U:
        return "u[" + std::to_string(v.slot) + "]";
    case Block::V:
        return "v[" + std::to_string(v.group) + "," + std::to_string(v.slot) + "]";
    }
    return "?";
}

unsigned Monomial::degree() const noexcept
{
    unsigned d = 0;
    for (auto e : exp)
        d += e;
    return d;
}

std::size_t MonomialHash::operator()(const Monomial &m) const noexcept
{
    std::uint64_t words[kMaxVars / 8];
    std::memcpy(words, m.exp.data(), sizeof(words));
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : words) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 0xbf58476d1ce4e5b9ULL;
        h ^= h >> 31;
    }
    return static_cast<std::size_t>(h);
}

bool grlex_greater(const Monomial &a, const Monomial &b) noexcept
{
    const unsigned da = a.degree();
    const unsigned db = b.degree();
    if (da != db)
        return da > db;
    return a.exp > b.exp;
}

namespace {

const Polynomial::TablePtr &empty_table()
{
    static const Polynomial::TablePtr t = std::make_shared<const Polynomial::VarTable>();
    return t;
}

bool same_table(const Polynomial::TablePtr &a, const Polynomial::TablePtr &b)
{
    return a == b || *a == *b;
}

using Accumulator = std::unordered_map<Monomial, Rational, MonomialHash>;

std::vector<Polynomial::Term> drain(Accumulator &acc)
{
    std::vector<Polynomial::Term> out;
    out.reserve(acc.size());
    for (auto &[m, c] : acc)
        if (!is_zero(c))
            out.push_back({m, std::move(c)});
    std::sort(out.begin(), out.end(),
              [](const Polynomial::Term &x, const Polynomial::Term &y) { return grlex_greater(x.mono, y.mono); });
    return out;
}

std::array<unsigned, kMaxVars> max_exponents(const Polynomial &p)
{
    std::array<unsigned, kMaxVars> mx{};
    for (const auto &t : p.terms())
        for (std::size_t i = 0; i < p.vars().size(); ++i)
            mx[i] = std::max<unsigned>(mx[i], t.mono.exp[i]);
    return mx;
}

} // namespace

Polynomial::Polynomial() : table_(empty_table()) {}

Polynomial::Polynomial(long c) : Polynomial(Rational(c)) {}

Polynomial::Polynomial(const Rational &c) : table_(empty_table())
{
    if (!gysin::is_zero(c)) {
        terms_.push_back({Monomial{}, c});
        terms_.back().coeff.canonicalize();
    }
    finish();
}

Polynomial Polynomial::variable(VarId v)
{
    Polynomial p;
    p.table_ = make_table({v});
    Monomial m;
    m.exp[0] = 1;
    p.terms_.push_back({m, Rational(1)});
    p.finish();
    return p;
}

Polynomial::TablePtr Polynomial::make_table(std::vector<VarId> vars)
{
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    if (vars.size() > kMaxVars)
        throw std::length_error("polynomial uses more than " + std::to_string(kMaxVars) + " variables");
    if (vars.empty())
        return empty_table();
    return std::make_shared<const VarTable>(std::move(vars));
}

Polynomial::TablePtr Polynomial::merge_tables(const TablePtr &a, const TablePtr &b)
{
    if (same_table(a, b) || b->empty())
        return a;
    if (a->empty())
        return b;
    std::vector<VarId> all(*a);
    all.insert(all.end(), b->begin(), b->end());
    return make_table(std::move(all));
}

Polynomial Polynomial::from_terms(TablePtr table, std::vector<Term> terms)
{
    Polynomial p;
    p.table_ = table ? std::move(table) : empty_table();
    std::sort(terms.begin(), terms.end(), [](const Term &x, const Term &y) { return grlex_greater(x.mono, y.mono); });
    for (auto &t : terms) {
        t.coeff.canonicalize();
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
            p.terms_.back().coeff += t.coeff;
        else
            p.terms_.push_back(std::move(t));
    }
    std::erase_if(p.terms_, [](const Term &t) { return gysin::is_zero(t.coeff); });
    p.finish();
    return p;
}

void Polynomial::finish()
{
    total_degree_ = -1;
    block_degree_ = {-1, -1, -1, -1};
    if (terms_.empty())
        return;
    block_degree_ = {0, 0, 0, 0};
    const auto &vars = *table_;
    for (const auto &t : terms_) {
        std::array<int, 4> bd{0, 0, 0, 0};
        int total = 0;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            bd[static_cast<std::size_t>(vars[i].block)] += t.mono.exp[i];
            total += t.mono.exp[i];
        }
        total_degree_ = std::max(total_degree_, total);
        for (std::size_t b = 0; b < 4; ++b)
            block_degree_[b] = std::max(block_degree_[b], bd[b]);
    }
}

bool Polynomial::is_constant() const noexcept { return total_degree_ <= 0; }

Rational Polynomial::constant_term() const
{
    if (!terms_.empty() && terms_.back().mono.degree() == 0)
        return terms_.back().coeff;
    return Rational(0);
}

int Polynomial::index_of(VarId v) const
{
    auto it = std::lower_bound(table_->begin(), table_->end(), v);
    if (it == table_->end() || *it != v)
        return -1;
    return static_cast<int>(it - table_->begin());
}

int Polynomial::degree_in(VarId v) const
{
    const int i = index_of(v);
    if (i < 0)
        return is_zero() ? -1 : 0;
    int d = is_zero() ? -1 : 0;
    for (const auto &t : terms_)
        d = std::max<int>(d, t.mono.exp[static_cast<std::size_t>(i)]);
    return d;
}

bool Polynomial::is_homogeneous() const noexcept
{
    for (const auto &t : terms_)
        if (static_cast<int>(t.mono.degree()) != total_degree_)
            return false;
    return true;
}

std::vector<VarId> Polynomial::support() const
{
    const auto mx = max_exponents(*this);
    std::vector<VarId> out;
    for (std::size_t i = 0; i < table_->size(); ++i)
        if (mx[i] > 0)
            out.push_back((*table_)[i]);
    return out;
}

Polynomial Polynomial::rebased(const TablePtr &table) const
{
    if (same_table(table_, table)) {
        Polynomial p(*this);
        p.table_ = table;
        return p;
    }
    std::array<int, kMaxVars> where{};
    const auto mx = max_exponents(*this);
    for (std::size_t i = 0; i < table_->size(); ++i) {
        auto it = std::lower_bound(table->begin(), table->end(), (*table_)[i]);
        if (it == table->end() || *it != (*table_)[i]) {
            if (mx[i] > 0)
                throw std::logic_error("rebased: target table lacks " + gysin::to_string((*table_)[i]));
            where[i] = -1;
        } else {
            where[i] = static_cast<int>(it - table->begin());
        }
    }
    Polynomial p;
    p.table_ = table;
    p.terms_.reserve(terms_.size());
    for (const auto &t : terms_) {
        Monomial m;
        for (std::size_t i = 0; i < table_->size(); ++i)
            if (where[i] >= 0)
                m.exp[static_cast<std::size_t>(where[i])] = t.mono.exp[i];
        p.terms_.push_back({m, t.coeff});
    }
    // Relabelling preserves the order only when the tables agree on relative
    // positions, which holds because both are sorted by VarId.
    p.finish();
    return p;
}

Polynomial Polynomial::operator-() const
{
    Polynomial p(*this);
    for (auto &t : p.terms_)
        t.coeff = -t.coeff;
    return p;
}

Polynomial Polynomial::scaled(const Rational &c) const
{
    if (gysin::is_zero(c))
        return Polynomial();
    Rational k(c);
    k.canonicalize();
    Polynomial p(*this);
    for (auto &t : p.terms_)
        t.coeff *= k;
    return p;
}

Polynomial Polynomial::pow(unsigned e) const
{
    Polynomial result(1L);
    Polynomial base(*this);
    while (e > 0) {
        if (e & 1U)
            result = result * base;
        e >>= 1U;
        if (e > 0)
            base = base * base;
    }
    return result;
}

namespace {

Polynomial add_impl(const Polynomial &p, const Polynomial &q, bool negate)
{
    const auto table = Polynomial::merge_tables(p.table(), q.table());
    const Polynomial a = p.rebased(table);
    const Polynomial b = q.rebased(table);
    std::vector<Polynomial::Term> out;
    out.reserve(a.size() + b.size());
    auto i = a.terms().begin();
    auto j = b.terms().begin();
    while (i != a.terms().end() || j != b.terms().end()) {
        if (j == b.terms().end() || (i != a.terms().end() && grlex_greater(i->mono, j->mono))) {
            out.push_back(*i++);
        } else if (i == a.terms().end() || grlex_greater(j->mono, i->mono)) {
            out.push_back({j->mono, negate ? Rational(-j->coeff) : j->coeff});
            ++j;
        } else {
            Rational c = negate ? Rational(i->coeff - j->coeff) : Rational(i->coeff + j->coeff);
            if (!is_zero(c))
                out.push_back({i->mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    // Already sorted and free of duplicates; from_terms only recomputes caches.
    return Polynomial::from_terms(table, std::move(out));
}

} // namespace

Polynomial operator+(const Polynomial &p, const Polynomial &q)
{
    if (q.is_zero())
        return p;
    if (p.is_zero())
        return q;
    return add_impl(p, q, false);
}

Polynomial operator-(const Polynomial &p, const Polynomial &q)
{
    if (q.is_zero())
        return p;
    return add_impl(p, q, true);
}

Polynomial operator*(const Polynomial &p, const Polynomial &q)
{
    if (p.is_zero() || q.is_zero())
        return Polynomial();
    const auto table = Polynomial::merge_tables(p.table(), q.table());
    const Polynomial a = p.rebased(table);
    const Polynomial b = q.rebased(table);
    const auto ma = max_exponents(a);
    const auto mb = max_exponents(b);
    for (std::size_t i = 0; i < table->size(); ++i)
        if (ma[i] + mb[i] > kMaxExponent)
            throw std::overflow_error("exponent of " + to_string((*table)[i]) + " exceeds " +
                                      std::to_string(kMaxExponent));
    const std::size_t nv = table->size();
    auto mul_mono = [nv](const Monomial &x, const Monomial &y) {
        Monomial m;
        for (std::size_t i = 0; i < nv; ++i)
            m.exp[i] = static_cast<std::uint8_t>(x.exp[i] + y.exp[i]);
        return m;
    };

    std::vector<Polynomial::Term> out;
    if (a.size() == 1 || b.size() == 1) {
        // Multiplying by a single term preserves the monomial order.
        const Polynomial &single = a.size() == 1 ? a : b;
        const Polynomial &other = a.size() == 1 ? b : a;
        const auto &s = single.terms().front();
        out.reserve(other.size());
        for (const auto &t : other.terms())
            out.push_back({mul_mono(s.mono, t.mono), s.coeff * t.coeff});
        return Polynomial::from_terms(table, std::move(out));
    }

    Accumulator acc;
    acc.reserve(std::min<std::size_t>(a.size() * b.size(), 1U << 20));
    Rational tmp;
    for (const auto &x : a.terms()) {
        for (const auto &y : b.terms()) {
            mpq_mul(tmp.get_mpq_t(), x.coeff.get_mpq_t(), y.coeff.get_mpq_t());
            auto [it, inserted] = acc.try_emplace(mul_mono(x.mono, y.mono), tmp);
            if (!inserted)
                it->second += tmp;
        }
    }
    return Polynomial::from_terms(table, drain(acc));
}

bool operator==(const Polynomial &p, const Polynomial &q)
{
    if (p.size() != q.size())
        return false;
    if (p.is_zero())
        return true;
    if (same_table(p.table(), q.table())) {
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p.terms()[i].mono != q.terms()[i].mono || p.terms()[i].coeff != q.terms()[i].coeff)
                return false;
        return true;
    }
    return (p - q).is_zero();
}

Polynomial Polynomial::substitute(const std::map<VarId, Polynomial> &bindings) const
{
    if (is_zero() || bindings.empty())
        return *this;
    const auto &vars = *table_;
    const auto mx = max_exponents(*this);
    std::vector<std::size_t> bound;
    std::vector<VarId> result_vars;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        auto it = bindings.find(vars[i]);
        if (it != bindings.end() && mx[i] > 0) {
            bound.push_back(i);
            result_vars.insert(result_vars.end(), it->second.vars().begin(), it->second.vars().end());
        } else if (mx[i] > 0) {
            result_vars.push_back(vars[i]);
        }
    }
    if (bound.empty())
        return *this;
    const TablePtr rt = make_table(std::move(result_vars));

    std::vector<std::vector<Polynomial>> powers(bound.size());
    for (std::size_t b = 0; b < bound.size(); ++b) {
        const Polynomial img = bindings.at(vars[bound[b]]).rebased(rt);
        powers[b].push_back(Polynomial(1L).rebased(rt));
        for (unsigned e = 1; e <= mx[bound[b]]; ++e)
            powers[b].push_back(powers[b].back() * img);
    }

    std::vector<int> where(vars.size(), -1);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (std::find(bound.begin(), bound.end(), i) != bound.end() || mx[i] == 0)
            continue;
        where[i] = static_cast<int>(std::lower_bound(rt->begin(), rt->end(), vars[i]) - rt->begin());
    }

    // Group terms by their exponents in the bound variables so that each
    // product of powers is formed once.
    std::map<std::vector<std::uint8_t>, std::vector<Term>> groups;
    for (const auto &t : terms_) {
        std::vector<std::uint8_t> key(bound.size());
        for (std::size_t b = 0; b < bound.size(); ++b)
            key[b] = t.mono.exp[bound[b]];
        Monomial m;
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (where[i] >= 0)
                m.exp[static_cast<std::size_t>(where[i])] = t.mono.exp[i];
        groups[key].push_back({m, t.coeff});
    }

    Polynomial result = Polynomial().rebased(rt);
    for (auto &[key, rest] : groups) {
        Polynomial piece = from_terms(rt, std::move(rest));
        for (std::size_t b = 0; b < bound.size(); ++b)
            if (key[b] > 0)
                piece = piece * powers[b][key[b]];
        result = result + piece;
    }
    return result;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto &t : terms_) {
        const bool negative = sgn(t.coeff) < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        const Rational c = abs(t.coeff);
        std::string mono;
        for (std::size_t i = 0; i < table_->size(); ++i) {
            const unsigned e = t.mono.exp[i];
            if (e == 0)
                continue;
            if (!mono.empty())
                mono += '*';
            mono += gysin::to_string((*table_)[i]);
            if (e > 1)
                mono += '^' + std::to_string(e);
        }
        if (mono.empty())
            out += gysin::to_string(c);
        else if (c == 1)
            out += mono;
        else
            out += gysin::to_string(c) + '*' + mono;
    }
    return out;
}

std::string to_string(const Polynomial &p) { return p.to_string(); }

Polynomial exact_div(const Polynomial &p, const Polynomial &q)
{
    if (q.is_zero())
        throw std::domain_error("exact_div: division by the zero polynomial");
    if (p.is_zero())
        return Polynomial();
    if (q.is_constant())
        return p.scaled(1 / q.constant_term());
    if (q.total_degree() > p.total_degree())
        throw NotDivisible("exact_div: " + q.to_string() + " does not divide " + p.to_string());

    const auto table = Polynomial::merge_tables(p.table(), q.table());
    const Polynomial a = p.rebased(table);
    const Polynomial b = q.rebased(table);
    const std::size_t nv = table->size();
    const auto &lead = b.terms().front();

    std::map<Monomial, Rational, GrlexGreater> rem;
    for (const auto &t : a.terms())
        rem.emplace_hint(rem.end(), t.mono, t.coeff);

    std::vector<Polynomial::Term> quotient;
    Rational c;
    Rational tmp;
    while (!rem.empty()) {
        const auto top = rem.begin();
        Monomial m;
        for (std::size_t i = 0; i < nv; ++i) {
            if (top->first.exp[i] < lead.mono.exp[i])
                throw NotDivisible("exact_div: " + q.to_string() + " does not divide " + p.to_string());
            m.exp[i] = static_cast<std::uint8_t>(top->first.exp[i] - lead.mono.exp[i]);
        }
        c = top->second / lead.coeff;
        rem.erase(top);
        for (std::size_t k = 1; k < b.size(); ++k) {
            const auto &t = b.terms()[k];
            Monomial mm;
            for (std::size_t i = 0; i < nv; ++i)
                mm.exp[i] = static_cast<std::uint8_t>(m.exp[i] + t.mono.exp[i]);
            mpq_mul(tmp.get_mpq_t(), c.get_mpq_t(), t.coeff.get_mpq_t());
            auto [it, inserted] = rem.try_emplace(mm);
            it->second -= tmp;
            if (is_zero(it->second))
                rem.erase(it);
        }
        quotient.push_back({m, c});
    }
    return Polynomial::from_terms(table, std::move(quotient));
}

Polynomial vandermonde(std::span<const VarId> vars)
{
    Polynomial result(1L);
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            result = result * (Polynomial::variable(vars[i]) - Polynomial::variable(vars[j]));
    return result;
}

bool is_symmetric(const Polynomial &p, std::span<const VarId> vars, SymmetryAction action)
{
    for (std::size_t i = 0; i + 1 < vars.size(); ++i) {
        const std::map<VarId, Polynomial> swap{{vars[i], Polynomial::variable(vars[i + 1])},
                                               {vars[i + 1], Polynomial::variable(vars[i])}};
        if (!(p.substitute(swap) == p))
            return false;
    }
    if (action == SymmetryAction::SignedPermute) {
        for (const auto &v : vars) {
            const std::map<VarId, Polynomial> flip{{v, -Polynomial::variable(v)}};
            if (!(p.substitute(flip) == p))
                return false;
        }
    }
    return true;
}

} // namespace gysin
