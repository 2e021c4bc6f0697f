#pragma once

#include <gysin/polynomial.hpp>
#include <gysin/schur.hpp>
#include <gysin/spaces.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gysin {

/*
 * Space grammar:
 *   gr:k,n | lg:n | og:n,2n | og:n,2n+1 | flA:d1,...,dk;n | flC:... | flB:... | flD:...
 * flB is the symmetric form on C^2n, flD the symmetric form on C^{2n+1}.
 */
SpaceSpec parse_space(std::string_view text);

/*
 * Classes use the polynomial grammar of poly_parse.hpp. Inside a space:
 *   z[i]      is z[k,i], the last block (the only block for Grassmannians);
 *   s[l1,..](z), s[..](z[g]), s[..](t)  are Schur polynomials in a block.
 * Throws ParseError or UnknownVariable.
 */
Polynomial parse_class(std::string_view text, const SpaceSpec &spec);

enum class OutputFormat { Text, Json };

struct Request {
    SpaceSpec space;
    std::string class_expr;
    bool check_oracle = false;
    bool unsimplified = false;
    OutputFormat output_format = OutputFormat::Text;
};

struct Report {
    std::string space;
    std::string class_expr;
    Polynomial result;
    long weyl_order = 1;
    std::optional<Polynomial> oracle;
    double elapsed_ms = 0;

    std::optional<bool> agree() const;
    int exit_code() const { return agree() == false ? 2 : 0; }
    std::string render(OutputFormat format) const;
};

Report run(const Request &request);

struct TableRow {
    Partition lambda;
    std::optional<Partition> mu;
    Polynomial result;
};

// Push-forwards of s_lambda(z) from LG(n) for every lambda with at most n
// parts and |lambda| <= max_weight, computed on up to `threads` threads.
std::vector<TableRow> lagrangian_schur_table(int n, int max_weight, unsigned threads);
std::string render_table(const std::vector<TableRow> &rows, OutputFormat format);

// Parses "pr:n,maxweight".
std::pair<int, int> parse_table_spec(std::string_view text);

// GYSIN_THREADS if set to a positive integer, else the hardware concurrency.
unsigned thread_budget();

} // namespace gysin
