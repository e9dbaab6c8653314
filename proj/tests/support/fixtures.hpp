#ifndef GSM_TESTS_FIXTURES_HPP
#define GSM_TESTS_FIXTURES_HPP

#include <gsm/duality.hpp>
#include <gsm/morita.hpp>

#include <random>
#include <string>
#include <vector>

namespace fx {

using namespace gsm;

/// pair_groupoid(2) on objects e, f: 0 id_e, 1 e->f, 2 f->e, 3 id_f.
FiniteGroupoid pair2();

/// 2x2 matrix units graded by pair2: E11@id_e, E12@f->e, E21@e->f, E22@id_f.
GradedAlgebra m2();
/// Q x Q graded by the identities of pair2 only.
GradedAlgebra qxq();
/// kZ2 graded by Z/2.
GradedAlgebra kz2();

/// pair2 acting on {x, y} with X_e = {x}, X_f = {y}.
GSetAction xef();
/// n disjoint copies of xef: points x0 y0 x1 y1 ...
GSetAction xef_copies(Index n);

/// Left translation of G against right translation by a wide subgroupoid.
BiSet translation_biset(const SubgroupoidView& h);

/// Random split pair2-set with m points over each object, e->f a random bijection.
GSetAction random_pair2_set(std::mt19937_64& rng, Index m);

/// Product biset S x T: pair2 acts on S (random, as above), K acts on T
/// (Z/2 by a random involution, or pair2 by a random bijection), |S x T| <= 8.
BiSet random_biset(std::mt19937_64& rng);

/// Bisets over pair2 (pair with m2()), or over Z/2 when `z2` (pair with kz2()).
struct BisetCase {
  std::string name;
  BiSet biset;
  bool z2 = false;
};
std::vector<BisetCase> biset_battery(std::uint64_t seed = 20240601);

struct NamedMorphism {
  std::string name;
  GSetMorphism phi;
  bool z2 = false;
};
std::vector<NamedMorphism> morphism_battery(std::uint64_t seed = 7);

}  // namespace fx

#endif  // GSM_TESTS_FIXTURES_HPP
