#pragma once

#include <gysin/polynomial.hpp>

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace gysin {

/*
 * Grammar (whitespace is ignored between tokens):
 *
 *   expr    := ['+' | '-'] term (('+' | '-') term)*
 *   term    := factor ('*' factor)*
 *   factor  := '-' factor | primary ['^' uint]
 *   primary := uint ['/' uint] | var | call | '(' expr ')'
 *   var     := 'z[' uint ']' | 'z[' uint ',' uint ']' | 't[' uint ']'
 *            | 'u[' uint ']' | 'v[' uint ',' uint ']'
 *   call    := ident '[' uint (',' uint)* ']' '(' ident ['[' uint ']'] ')'
 */
struct ParseOptions {
    // Group assigned to the single-index form z[i].
    int default_z_group = 1;

    // Hook for every variable read; may throw UnknownVariable.
    std::function<void(const VarId &, std::size_t position)> check_variable;

    // Resolves calls such as s[2,1](z). The last argument is the text inside
    // the parentheses. Calls are rejected when unset.
    std::function<Polynomial(const std::string &name, const std::vector<int> &indices, const std::string &argument,
                             std::size_t position)>
        call;
};

// Throws ParseError with the offending offset.
Polynomial parse_polynomial(std::string_view text, const ParseOptions &options = {});

} // namespace gysin
