#pragma once

#include <gysin/polynomial.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gysin {

struct Partition {
    std::vector<int> parts; // weakly decreasing, non-negative

    Partition() = default;
    // Throws std::invalid_argument unless weakly decreasing and non-negative.
    explicit Partition(std::vector<int> p);

    int weight() const;
    // Number of nonzero parts.
    int length() const;
    // Copy padded with zeros (or stripped of trailing zeros) to exactly n parts;
    // throws std::invalid_argument if that would drop a nonzero part.
    Partition padded(int n) const;
    std::string to_string() const; // "(2,1)"; "()" for the empty partition

    friend bool operator==(const Partition &a, const Partition &b);
};

// (n, n-1, ..., 1)
Partition staircase(int n);

// All partitions of `weight` with at most `max_parts` nonzero parts, in
// reverse lexicographic order.
std::vector<Partition> partitions_of(int weight, int max_parts);

// det(x_j^{lambda_i + n - i}) / prod_{i<j} (x_i - x_j)
Polynomial schur_poly(const Partition &lambda, std::span<const VarId> vars);

// mu with lambda = 2 mu + (n, ..., 1), if one exists.
std::optional<Partition> decompose_two_mu_plus_rho(const Partition &lambda, int n);

// h_m; h_0 = 1, h_{-1} = 0.
Polynomial complete_homogeneous(int m, std::span<const VarId> vars);

} // namespace gysin
