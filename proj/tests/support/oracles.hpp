#ifndef GSM_TESTS_ORACLES_HPP
#define GSM_TESTS_ORACLES_HPP

#include <gsm/skew.hpp>

#include <string>
#include <vector>

// Checks written without the library's algebra code paths: they read the raw
// structure constants and do their own arithmetic.
namespace oracle {

using namespace gsm;

struct Result {
  bool ok = true;
  std::string witness;
};

/// Dense c[i][j][k] from the sparse table.
std::vector<Scalar> dense_constants(const StructureAlgebra& a);

/// (b_i b_j) b_k = b_i (b_j b_k) for every triple, and u b = b u = b when a
/// unit is present.
Result associative_unital(const StructureAlgebra& a);

/// f(b_i b_j) = f(b_i) f(b_j) for every pair.
Result multiplicative(const StructureAlgebra& src, const StructureAlgebra& dst, const Matrix& f);

/// Rank over Q via integer elimination (rows cleared of denominators, each
/// row divided by its content after every step).
Index integer_rank(const Matrix& m);

/// dim {T : T R = R T for every R} by rank of the stacked Kronecker system.
Index commutant_dim(const std::vector<Matrix>& ops);

/// Right multiplication by v, read off the dense constants.
Matrix right_multiplication(const std::vector<Scalar>& c, Index dim, const Vector& v);

/// For a split biset and the smash algebra of its G-action: the invariant
/// subspace computed as "constant along K-orbits" on the (b_i, x) labels.
Subspace orbit_constant_invariants(const BiSet& biset, const SmashAlgebra& s);

/// Sum over k of the number of labels (b_i, x) with x in Y_{r(k)}.
Index skew_dim_by_count(const BiSet& biset, const SmashAlgebra& s);

/// End(A#X as a right module over its invariants), counted from scratch.
Index end_dim(const BiSet& biset, const SmashAlgebra& s);

}  // namespace oracle

#endif  // GSM_TESTS_ORACLES_HPP
