#pragma once

/*
 * Sparse multivariate polynomials with exact rational coefficients.
 *
 * A Polynomial owns a shared, sorted table of VarId and a list of terms whose
 * exponent vectors are indexed by that table. Terms are kept in descending
 * graded-lexicographic order (total degree first, then lexicographic in table
 * order), never with zero coefficients. Values are immutable once built, so
 * they may be shared freely between threads.
 *
 * Binary operations accept operands over different tables and merge them.
 */

#include <gysin/rational.hpp>
#include <gysin/variable.hpp>

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace gysin {

inline constexpr std::size_t kMaxVars = 32;
inline constexpr unsigned kMaxExponent = 255;

struct Monomial {
    std::array<std::uint8_t, kMaxVars> exp{};

    unsigned degree() const noexcept;
    friend bool operator==(const Monomial &, const Monomial &) = default;
};

struct MonomialHash {
    std::size_t operator()(const Monomial &m) const noexcept;
};

// Strict graded-lex comparison: true iff a comes before b in printing order.
bool grlex_greater(const Monomial &a, const Monomial &b) noexcept;

struct GrlexGreater {
    bool operator()(const Monomial &a, const Monomial &b) const noexcept { return grlex_greater(a, b); }
};

class Polynomial {
public:
    using VarTable = std::vector<VarId>;
    using TablePtr = std::shared_ptr<const VarTable>;

    struct Term {
        Monomial mono;
        Rational coeff;
    };

    Polynomial();
    Polynomial(long c); // NOLINT: integer literals read naturally in formulas
    explicit Polynomial(const Rational &c);

    static Polynomial variable(VarId v);
    // Combines equal monomials, drops zeros and sorts. Exponents index `table`.
    static Polynomial from_terms(TablePtr table, std::vector<Term> terms);
    static TablePtr make_table(std::vector<VarId> vars);
    static TablePtr merge_tables(const TablePtr &a, const TablePtr &b);

    const VarTable &vars() const noexcept { return *table_; }
    const TablePtr &table() const noexcept { return table_; }
    const std::vector<Term> &terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    Rational constant_term() const;

    // -1 for the zero polynomial.
    int total_degree() const noexcept { return total_degree_; }
    int block_degree(Block b) const noexcept { return block_degree_[static_cast<std::size_t>(b)]; }
    int degree_in(VarId v) const;
    bool is_homogeneous() const noexcept;

    // Index of v in the table, or -1.
    int index_of(VarId v) const;
    bool involves(VarId v) const { return degree_in(v) > 0; }
    bool involves_block(Block b) const { return block_degree(b) > 0; }
    // Variables with a positive exponent in some term, in table order.
    std::vector<VarId> support() const;

    // Same polynomial over a larger table; `table` must contain the support.
    Polynomial rebased(const TablePtr &table) const;

    Polynomial operator-() const;
    Polynomial scaled(const Rational &c) const;
    Polynomial pow(unsigned e) const;

    friend Polynomial operator+(const Polynomial &p, const Polynomial &q);
    friend Polynomial operator-(const Polynomial &p, const Polynomial &q);
    friend Polynomial operator*(const Polynomial &p, const Polynomial &q);
    friend bool operator==(const Polynomial &p, const Polynomial &q);

    Polynomial &operator+=(const Polynomial &q) { return *this = *this + q; }
    Polynomial &operator-=(const Polynomial &q) { return *this = *this - q; }
    Polynomial &operator*=(const Polynomial &q) { return *this = *this * q; }

    // Simultaneous substitution; unbound variables are left alone.
    Polynomial substitute(const std::map<VarId, Polynomial> &bindings) const;

    std::string to_string() const;

private:
    void finish(); // recompute the cached degrees

    TablePtr table_;
    std::vector<Term> terms_;
    int total_degree_ = -1;
    std::array<int, 4> block_degree_{-1, -1, -1, -1};
};

inline Polynomial operator*(const Rational &c, const Polynomial &p) { return p.scaled(c); }
inline Polynomial operator*(const Polynomial &p, const Rational &c) { return p.scaled(c); }

// r with r * q == p. Throws NotDivisible when no polynomial quotient exists.
Polynomial exact_div(const Polynomial &p, const Polynomial &q);

// prod_{i<j} (x_i - x_j)
Polynomial vandermonde(std::span<const VarId> vars);

enum class SymmetryAction { Permute, SignedPermute };

// Checks invariance under adjacent transpositions of `vars` and, for
// SignedPermute, under each single sign flip.
bool is_symmetric(const Polynomial &p, std::span<const VarId> vars, SymmetryAction action);

std::string to_string(const Polynomial &p);

} // namespace gysin
