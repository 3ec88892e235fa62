#pragma once

#include <vector>

#include "rootfan/linalg.hpp"
#include "rootfan/vector_set.hpp"

namespace rootfan {

// {±(e_i - e_j) : 1 ≤ i < j ≤ n+1} in Z^{n+1}.
VectorSet standard_An(int rank);

// Linear map Z^n → {x ∈ Z^{n+1} : Σx = 0} with e_i ↦ e_i - e_{i+1}.
IntVector cycle_to_An_map(const IntVector& v);

// λ_i = (e_1 + ... + e_i) - i/(n+1) (e_1 + ... + e_{n+1}), 1 ≤ i ≤ n.
RationalVector fundamental_weight(int index, int rank);

// Distinct coordinate permutations of `weight` (the S_{n+1} orbit).
std::vector<RationalVector> permutation_orbit(const RationalVector& weight);

// Image in Q^n of x ∈ Q^{n+1} modulo e_1 + ... + e_{n+1}, written in the basis
// e_1, ..., e_n with e_{n+1} = -(e_1 + ... + e_n): coordinate j is x_j - x_{n+1}.
RationalVector project_to_quotient(const RationalVector& x);

// Union over i of the projected orbits of λ_i. Throws std::logic_error if a
// projected vector is not integral.
VectorSet weyl_orbit_fundamental_weights(int rank);

}  // namespace rootfan
