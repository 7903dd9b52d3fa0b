#pragma once

// Test-only reference computations. None of these share code with the
// library beyond reading a Cartan matrix.

#include <map>
#include <vector>

#include "growth/exactalg.hpp"
#include "growth/intmat.hpp"
#include "growth/subset.hpp"

namespace oracle {

using Counts = std::vector<long long>;

/// Coefficients 0..max_degree of sum t^{2 sum m_i} over coroot-lattice
/// points m with <alpha_i, m> > 0 for i in I and <alpha_j, m> = 0 otherwise.
/// Found by walking the box 0 <= m_i <= max_degree / 2.
Counts open_cone_counts(const growth::IntMatrix& cartan, growth::Subset indices, unsigned max_degree);

/// Degrees of the basic invariants of the Weyl group of the given type.
std::vector<unsigned> invariant_degrees(char type, int rank);
/// prod [d_i]_t.
growth::IntPoly poincare_from_degrees(const std::vector<unsigned>& degrees);
/// prod (1 - t^{d_i}) / ((1 - t)(1 - t^{d_i - 1})).
growth::RatFun affine_growth_from_degrees(const std::vector<unsigned>& degrees);

/// Finite type A_n as permutations of 1..n+1: counts by length of the
/// x in ^J W^K with K cap x^-1 J x = Q.
Counts permutation_p_counts(int n, growth::Subset q, growth::Subset j, growth::Subset k);

/// Affine type A_n as affine permutations of Z with period n+1, enumerated to
/// max_length. Map from Q to counts by length of the double-coset minimal
/// representatives for (J, K).
std::map<growth::Subset, Counts> affine_permutation_p_counts(int n, growth::Subset j, growth::Subset k,
                                                            int max_length);
/// Number of affine permutations of each length, with the length taken from
/// the inversion-count formula rather than the BFS depth.
Counts affine_permutation_length_counts(int n, int max_length);

/// Coefficients 0..degree of a power series given by exact long division.
Counts series_by_division(const growth::RatFun& r, unsigned degree);

}  // namespace oracle
