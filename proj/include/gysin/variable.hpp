#pragma once

#include <compare>
#include <string>

namespace gysin {

// Z, U and V are residue variables, T holds the torus characters.
// The enumerator order is the variable order used for printing.
enum class Block : unsigned char { Z, U, V, T };

struct VarId {
    Block block = Block::T;
    int group = 0; // z group g or v level m; 0 for t and u
    int slot = 1;

    friend auto operator<=>(const VarId &, const VarId &) = default;

    bool is_residue() const noexcept { return block != Block::T; }
};

inline VarId z_var(int group, int slot) { return {Block::Z, group, slot}; }
inline VarId t_var(int slot) { return {Block::T, 0, slot}; }
inline VarId u_var(int slot) { return {Block::U, 0, slot}; }
inline VarId v_var(int level, int slot) { return {Block::V, level, slot}; }

// z[g,i], t[i], u[i], v[m,j]
std::string to_string(const VarId &v);

} // namespace gysin
