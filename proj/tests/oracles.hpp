#pragma once

#include <set>
#include <utility>
#include <vector>

#include "floerhp/graded.hpp"

// Independent computation routes used only by tests.  Nothing here touches
// the library's own counting or table code.
namespace oracles {

using Matrix = std::vector<std::vector<long long>>;

// Nonzero invariant factors of an integer matrix (Smith normal form).
std::vector<long long> smith_invariant_factors(Matrix a);

long long integer_rank(const Matrix& a);

// Integral cohomology of a cochain complex 0 -> C^0 -> ... -> C^N -> 0 with
// free terms of the given ranks; maps[n] is the matrix of d^n : C^n ->
// C^{n+1} (rows = dims[n+1], cols = dims[n]).  Unsupplied maps are zero.
floerhp::graded::GradedGroup cochain_cohomology(const std::vector<long long>& dims,
                                                const std::vector<Matrix>& maps);

// Simplicial cohomology of a 1-complex given by its edge list.
floerhp::graded::GradedGroup graph_cohomology(long long num_vertices,
                                              const std::vector<std::pair<int, int>>& edges);

// Sylvester resultant via fraction-free elimination; coefficients ascending.
__int128 resultant(const std::vector<long long>& f, const std::vector<long long>& g);

// Conjugacy classes of M^n = rhs_sign on the unit circle by enumerating the
// 2n-th roots of unity directly (exponent k, order 2n/gcd(k, 2n)), rather
// than through the divisor/totient formula.  Requires n >= 1.
long long count_classes_by_enumeration(long long n, int rhs_sign,
                                       const std::set<long long>& excluded_orders);

}  // namespace oracles
