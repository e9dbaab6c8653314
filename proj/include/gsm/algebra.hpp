#ifndef GSM_ALGEBRA_HPP
#define GSM_ALGEBRA_HPP

#include <gsm/groupoid.hpp>
#include <gsm/gset.hpp>
#include <gsm/linalg.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gsm {

/// One entry c_{ij}^k of a structure-constant table.
struct Term {
  Index index;
  Scalar coeff;
};

/// Finite-dimensional associative algebra over Q given by sparse structure
/// constants b_i b_j = sum_k c_{ij}^k b_k. The unit is optional so that
/// non-unital constructions (a skew ring over non-unital ideals) fit the same
/// type; every other algebra in the library carries one.
class StructureAlgebra {
 public:
  /// `products[i * dim + j]` lists the nonzero terms of b_i b_j (duplicates are
  /// summed, zero coefficients dropped). Throws E_ASSOC, E_UNIT, E_MALFORMED.
  static StructureAlgebra validate(Index dim, std::vector<std::vector<Term>> products,
                                   std::optional<Vector> unit, std::vector<std::string> basis_names = {});

  /// Builds the table from dense products b_i b_j given as coefficient vectors.
  template <typename F>
  static StructureAlgebra from_products(Index dim, F&& product, std::optional<Vector> unit,
                                        std::vector<std::string> basis_names = {}) {
    std::vector<std::vector<Term>> table(static_cast<size_t>(dim * dim));
    for (Index i = 0; i < dim; ++i)
      for (Index j = 0; j < dim; ++j) {
        const Vector v = product(i, j);
        for (Index k = 0; k < dim; ++k)
          if (!v(k).is_zero()) table[static_cast<size_t>(i * dim + j)].push_back({k, v(k)});
      }
    return validate(dim, std::move(table), std::move(unit), std::move(basis_names));
  }

  Index dim() const { return dim_; }
  const std::vector<Term>& terms(Index i, Index j) const { return table_[static_cast<size_t>(i * dim_ + j)]; }
  Vector basis_product(Index i, Index j) const;
  Vector multiply(const Vector& a, const Vector& b) const;
  /// L_a : x -> a x and R_a : x -> x a as dim x dim matrices.
  Matrix left_matrix(const Vector& a) const;
  Matrix right_matrix(const Vector& a) const;

  bool unital() const { return unit_.has_value(); }
  /// Throws E_UNIT when the algebra has no unit.
  const Vector& unit() const;
  const std::optional<Vector>& maybe_unit() const { return unit_; }

  const std::string& basis_name(Index i) const { return names_[static_cast<size_t>(i)]; }
  const std::vector<std::string>& basis_names() const { return names_; }
  Index find_basis(const std::string& name) const;

  /// Exact equality of dimension, constants and unit (names ignored).
  friend bool operator==(const StructureAlgebra& a, const StructureAlgebra& b);

 private:
  StructureAlgebra() = default;
  Index dim_ = 0;
  std::vector<std::vector<Term>> table_;
  std::optional<Vector> unit_;
  std::vector<std::string> names_;
};

/// "2 E11 + -1/2 E21" style rendering for witnesses; "0" for zero.
std::string format_element(const StructureAlgebra& alg, const Vector& v);

/// Unit of an algebra presented without one, by solving u b = b u = b.
std::optional<Vector> find_unit(const StructureAlgebra& alg);

/// The subalgebra on a subspace, in the coordinates of its RREF basis, with
/// its own unit when one exists. Throws E_NOT_CLOSED.
StructureAlgebra induced_subalgebra(const StructureAlgebra& alg, const Subspace& u);

/// span{u v : u in basis(U), v in basis(V)}. Throws E_DIM_MISMATCH.
Subspace product_span(const StructureAlgebra& alg, const Subspace& u, const Subspace& v);

/// Is U a two-sided ideal.
Verdict is_ideal(const StructureAlgebra& alg, const Subspace& u);

/// Linear map between algebras as a (target dim) x (source dim) matrix.
struct AlgebraMap {
  Matrix matrix;
};

Verdict check_multiplicative(const StructureAlgebra& src, const StructureAlgebra& dst, const Matrix& map);
/// Multiplicative and unit to unit.
Verdict check_unital_homomorphism(const StructureAlgebra& src, const StructureAlgebra& dst, const Matrix& map);

/// Basis-aligned grading by a groupoid: deg maps every basis element to a morphism.
class GradedAlgebra {
 public:
  /// Throws E_GRADING (witness (i, j, k)), E_UNIT_DECOMP, E_MALFORMED.
  static GradedAlgebra validate(StructureAlgebra alg, FiniteGroupoid g, std::vector<Index> deg);

  const StructureAlgebra& algebra() const { return alg_; }
  const FiniteGroupoid& groupoid() const { return g_; }
  Index dim() const { return alg_.dim(); }
  Index deg(Index i) const { return deg_[static_cast<size_t>(i)]; }
  const std::vector<Index>& degrees() const { return deg_; }
  /// Basis indices of degree g, ascending.
  const std::vector<Index>& component(Index g) const { return components_[static_cast<size_t>(g)]; }
  /// A_g as a subspace of A.
  Subspace component_space(Index g) const;
  /// 1_e, the degree-id_e part of the unit.
  const Vector& unit_of(Index e) const { return units_[static_cast<size_t>(e)]; }

 private:
  GradedAlgebra(StructureAlgebra alg, FiniteGroupoid g) : alg_(std::move(alg)), g_(std::move(g)) {}
  StructureAlgebra alg_;
  FiniteGroupoid g_;
  std::vector<Index> deg_;
  std::vector<std::vector<Index>> components_;
  std::vector<Vector> units_;
};

/// The homogeneous units 1_e, re-checked against every homogeneous basis element.
std::vector<Vector> homogeneous_units(const GradedAlgebra& ga);

/// kG with basis b_g (named after the morphisms), b_g b_h = b_{gh}.
GradedAlgebra groupoid_algebra(const FiniteGroupoid& g);

/// kG* with v_g v_h = delta_{g,h} v_g and its coalgebra tables.
struct DualGroupoidAlgebra {
  FiniteGroupoid groupoid;
  StructureAlgebra algebra;
  /// Delta(v_g) = sum over h in D_{d(g)} of v_{g h^-1} (x) v_h, as (g h^-1, h) pairs.
  std::vector<std::vector<std::pair<Index, Index>>> coproduct;
  std::vector<Scalar> counit;
  std::vector<Index> antipode;
};

DualGroupoidAlgebra dual_groupoid_algebra(const FiniteGroupoid& g);

/// Counit on identities, S o S = id, coassociativity and multiplicativity of Delta.
Verdict check_dual_identities(const DualGroupoidAlgebra& d);

enum class Side { Left, Right };

/// Finite-dimensional module given by one matrix per algebra basis element,
/// acting on column vectors. For a right module the matrix of b sends m to m b,
/// so act(ab) = act(b) act(a).
class ModuleRep {
 public:
  /// Throws E_MODULE.
  static ModuleRep validate(StructureAlgebra alg, std::vector<Matrix> act, Side side);

  const StructureAlgebra& algebra() const { return alg_; }
  Index dim() const { return dim_; }
  Side side() const { return side_; }
  const Matrix& act(Index i) const { return act_[static_cast<size_t>(i)]; }
  const std::vector<Matrix>& actions() const { return act_; }
  /// Matrix of an arbitrary algebra element.
  Matrix act_vector(const Vector& a) const;

 private:
  ModuleRep(StructureAlgebra alg, Side side) : alg_(std::move(alg)), side_(side) {}
  StructureAlgebra alg_;
  Index dim_ = 0;
  Side side_;
  std::vector<Matrix> act_;
};

ModuleRep regular_module(const StructureAlgebra& alg, Side side);

}  // namespace gsm

#endif  // GSM_ALGEBRA_HPP
