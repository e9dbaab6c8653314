// Acceptance run: one line per criterion, then a summary.
//
// Exit status is 0 when every criterion passes except those listed in
// kKnownRed, which must fail (a known-red criterion that starts passing is
// also an error, so the list cannot go stale silently).

#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"

#include <gsm/duality.hpp>
#include <gsm/morita.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace gsm;
namespace fs = std::filesystem;

namespace {

struct Line {
  bool pass = true;
  std::string summary;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
};

const std::map<int, std::string> kKnownRed = {
    {5,
     "the {u_e, u_e} clause cannot hold: X_e is invariant under the K-action, so for a non-identity k the sum "
     "picks up u_e gamma_k(u_e 1_{k^-1}) != 0. The pointwise system {1_e delta_x, 1_e delta_x} satisfies the "
     "identity and the dimensions and mapOK agree."},
};

template <typename F>
void guarded(Line& line, const std::string& what, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    line.require(false, what + " threw " + e.what());
  }
}

XGradedModule column_module() {
  std::vector<Matrix> act;
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j) {
      Matrix m = Matrix::Zero(2, 2);
      m(i, j) = 1;
      act.push_back(m);
    }
  return validate_xgraded(fx::m2(), fx::xef(), ModuleRep::validate(fx::m2().algebra(), act, Side::Left), {0, 1});
}

const GradedAlgebra& algebra_for(const fx::BisetCase& c) {
  static const GradedAlgebra m2 = fx::m2();
  static const GradedAlgebra kz2 = fx::kz2();
  return c.z2 ? kz2 : m2;
}

Line structural_oracles() {
  Line line;
  std::vector<std::pair<std::string, StructureAlgebra>> all;
  for (const auto& [name, ga] : std::vector<std::pair<std::string, GradedAlgebra>>{
           {"M2", fx::m2()}, {"QxQ", fx::qxq()}, {"kZ2", fx::kz2()}, {"kG", groupoid_algebra(fx::pair2())}})
    all.push_back({name, ga.algebra()});
  all.push_back({"kG*", dual_groupoid_algebra(fx::pair2()).algebra});
  all.push_back({"M2#Xef", smash_product(fx::m2(), fx::xef()).algebra});
  all.push_back({"M2#G", smash_product(fx::m2(), left_translation_action(fx::pair2())).algebra});
  guarded(line, "biset pipeline", [&] {
    for (const fx::BisetCase& c : fx::biset_battery()) {
      const DualityReport r = verify_duality(c.biset, algebra_for(c));
      const char* parts[] = {"smash", "skew", "invariants", "End"};
      for (size_t i = 0; i < r.built.size(); ++i) all.push_back({c.name + "/" + parts[i % 4], r.built[i]});
    }
  });
  guarded(line, "A#kG*", [&] { all.push_back({"M2#kG*", weak_hopf_smash(fx::m2()).smash}); });
  guarded(line, "Morita ring", [&] { all.push_back({"D at x", build_morita_context(fx::m2(), fx::xef(), 0).ring_d}); });

  Index largest = 0;
  for (const auto& [name, alg] : all) {
    const oracle::Result r = oracle::associative_unital(alg);
    line.require(r.ok, name + ": " + r.witness);
    line.require(alg.unital(), name + " has no unit");
    largest = std::max(largest, alg.dim());
  }
  line.summary = std::to_string(all.size()) + " algebras, largest dim " + std::to_string(largest);
  return line;
}

Line induced_morphisms() {
  Line line;
  int count = 0;
  guarded(line, "morphism battery", [&] {
    for (const fx::NamedMorphism& m : fx::morphism_battery()) {
      const GradedAlgebra ga = m.z2 ? fx::kz2() : fx::m2();
      const InducedMorphism f = induced_morphism(m.phi, ga);
      const Index r = oracle::integer_rank(f.map.matrix);
      line.require(oracle::multiplicative(f.source.algebra, f.target.algebra, f.map.matrix).ok,
                   m.name + ": not multiplicative");
      if (m.phi.kind.injective()) line.require(r == f.target.dim(), m.name + ": injective but phi* not onto");
      if (m.phi.kind.surjective()) line.require(r == f.source.dim(), m.name + ": surjective but phi* not 1-1");
      ++count;
    }
  });
  line.require(count >= 5, "fewer than 5 morphisms");
  line.summary = std::to_string(count) + " G-set morphisms";
  return line;
}

Line gamma_actions() {
  Line line;
  int count = 0;
  bool has_ids = false, has_translation = false, has_random = false;
  guarded(line, "biset battery", [&] {
    for (const fx::BisetCase& c : fx::biset_battery()) {
      has_ids = has_ids || c.name == "identities-only";
      has_translation = has_translation || c.name == "translation";
      has_random = has_random || c.name.rfind("random", 0) == 0;
      const GammaAction g = gamma_action(c.biset, algebra_for(c));
      const AlgebraAction& a = g.action;
      // re-validate the produced data from scratch
      validate_algebra_action(a.groupoid, a.algebra, a.ideals, a.isos);
      Index total = 0;
      for (const Subspace& e : a.ideals) total += e.dim();
      line.require(a.direct_sum && total == g.smash.dim(), c.name + ": not a direct sum of the E_p");

      const GSetAction& k = c.biset.k_action();
      for (Index m = 0; m < k.groupoid().size(); ++m)
        line.require(restricted_action(c.biset, m).beta_class.kind == MorphismKind::Iso,
                     c.name + ": beta_" + k.groupoid().morphism_name(m) + " not an isomorphism");

      // lambda_g(o(x)) = o(alpha_g(x)) does not depend on the representative
      const OrbitGSet o = orbit_gset(c.biset);
      const GSetAction& x = c.biset.g_action();
      for (Index m = 0; m < x.groupoid().size(); ++m)
        for (Index p : x.fiber(x.groupoid().dom(m)))
          for (Index q : x.fiber(x.groupoid().dom(m)))
            if (o.orbit_of[static_cast<size_t>(p)] == o.orbit_of[static_cast<size_t>(q)])
              line.require(o.orbit_of[static_cast<size_t>(x.apply(m, p))] ==
                               o.orbit_of[static_cast<size_t>(x.apply(m, q))],
                           c.name + ": lambda ill-defined");
      ++count;
    }
  });
  line.require(count >= 6, "fewer than 6 bisets");
  line.require(has_ids && has_translation && has_random, "battery lacks a required kind");
  line.summary = std::to_string(count) + " bisets (identities-only, translation, Z/2, random)";
  return line;
}

Line fixed_vs_orbit() {
  Line line;
  int count = 0;
  guarded(line, "biset battery", [&] {
    for (const fx::BisetCase& c : fx::biset_battery()) {
      const FixedOrbitReport r = fixed_vs_orbit_image(c.biset, algebra_for(c));
      line.require(r.equal && r.image == r.invariants, c.name + ": image differs from invariants");
      const SmashAlgebra s = smash_product(algebra_for(c), c.biset.g_action());
      line.require(oracle::orbit_constant_invariants(c.biset, s) == r.image, c.name + ": oracle invariants differ");
      ++count;
    }
  });
  line.summary = std::to_string(count) + " bisets, row-reduced bases compared";
  return line;
}

Line galois_duality() {
  Line line;
  guarded(line, "translation biset", [&] {
    const BiSet t = fx::translation_biset(whole_subgroupoid(fx::pair2()));
    const DualityReport r = verify_duality(t, fx::m2());
    const SmashAlgebra s = smash_product(fx::m2(), t.g_action());
    const Index end = oracle::end_dim(t, s);
    const Index skew = oracle::skew_dim_by_count(t, s);
    line.require(r.skew_dim == 16 && skew == 16, "dim skew = " + std::to_string(r.skew_dim) + " (oracle " +
                                                     std::to_string(skew) + ")");
    line.require(r.end_dim == 16 && end == 16, "dim End = " + std::to_string(r.end_dim) + " (oracle " +
                                                   std::to_string(end) + ")");
    line.require(r.map_ok, "mapOK");

    const GammaAction g = gamma_action(t, fx::m2());
    GaloisPairs coarse, fine;
    for (Index e = 0; e < 2; ++e) {
      Vector u = Vector::Zero(g.smash.dim());
      for (Index x : t.g_action().fiber(e)) {
        u += g.smash.idempotent(x);
        fine.push_back({g.smash.idempotent(x), g.smash.idempotent(x)});
      }
      coarse.push_back({u, u});
    }
    const Verdict literal = galois_check(g.action, coarse);
    line.require(literal.ok, "{u_e, u_e}: " + literal.witness);
    line.notes.push_back(std::string("pointwise {1_e delta_x, 1_e delta_x}: ") +
                         (galois_check(g.action, fine).ok ? "holds" : "fails"));
    line.summary = "dims " + std::to_string(r.skew_dim) + "/" + std::to_string(r.end_dim) + " (oracle " +
                   std::to_string(skew) + "/" + std::to_string(end) + "), mapOK " + (r.map_ok ? "true" : "false");
  });
  guarded(line, "control biset", [&] {
    const GSetAction g = trivial_action(pair_groupoid(1), {0});
    const GSetAction k = trivial_action(cyclic_group(2), {0});
    const DualityReport c = verify_duality(BiSet::validate(g, k), groupoid_algebra(pair_groupoid(1)));
    line.require(!c.fully_faithful && !c.map_ok, "non-fully-faithful control reports mapOK");
    line.summary += "; control mapOK " + std::string(c.map_ok ? "true" : "false");
  });
  return line;
}

Line corollaries() {
  Line line;
  guarded(line, "coset duality", [&] {
    const FiniteGroupoid g = fx::pair2();
    const FiniteGroupoid z = cyclic_group(2);
    const std::vector<std::pair<std::string, CosetDualityReport>> cases = {
        {"(pair2, G)", coset_duality(whole_subgroupoid(g), fx::m2())},
        {"(pair2, identities)", coset_duality(identities_subgroupoid(g), fx::m2())},
        {"(Z/2, trivial)", coset_duality(identities_subgroupoid(z), fx::kz2())},
    };
    for (const auto& [name, r] : cases) {
      line.require(r.duality.map_ok, name + ": mapOK");
      line.require(r.cosets_match, name + ": orbits are not the cosets");
      line.require(r.duality.fixed_equals_image, name + ": fixed subalgebra");
    }
  });
  guarded(line, "partial bijections", [&] {
    const PartialBijectionReport p = partial_bijection_duality(fx::xef(), fx::m2());
    line.require(p.duality.fully_faithful && p.duality.map_ok, "I_G(X) on Xef");
  });
  line.summary = "3 coset pairs, I_G(X) on Xef";
  return line;
}

Line module_roundtrips() {
  Line line;
  int fixtures = 0, random = 0;
  guarded(line, "fixture modules", [&] {
    const XGradedModule col = column_module();
    line.require(roundtrip_check(col).ok, "column module");
    const ModuleRep zero = ModuleRep::validate(fx::m2().algebra(), std::vector<Matrix>(4, Matrix(0, 0)), Side::Left);
    line.require(roundtrip_check(validate_xgraded(fx::m2(), fx::xef(), zero, {})).ok, "zero module");
    fixtures += 2;
    for (const SmashAlgebra& s : {smash_product(fx::m2(), fx::xef()), smash_product(fx::kz2(), left_translation_action(cyclic_group(2)))}) {
      line.require(roundtrip_check(s, regular_module(s.algebra, Side::Left)).ok, "regular smash module");
      ++fixtures;
    }
  });
  guarded(line, "random modules", [&] {
    std::mt19937_64 rng(5150);
    const std::vector<SmashAlgebra> rings = {smash_product(fx::m2(), left_translation_action(fx::pair2())),
                                             smash_product(fx::kz2(), left_translation_action(cyclic_group(2)))};
    for (int i = 0; i < 50; ++i) {
      const SmashAlgebra& s = rings[static_cast<size_t>(i % 2)];
      const ModuleRep v = random_smash_module(s, rng, 6);
      const XGradedResult f = to_xgraded(s, v);
      line.require(v.dim() <= 6, "module too large");
      line.require(!f.change_of_basis, "random module " + std::to_string(i) + " needed a change of basis");
      line.require(roundtrip_check(s, v).ok, "random module " + std::to_string(i));
      ++random;
    }
  });
  line.summary = std::to_string(fixtures) + " fixture + " + std::to_string(random) + " random modules over 2 rings";
  return line;
}

Line morita_contexts() {
  Line line;
  int count = 0;
  guarded(line, "contexts", [&] {
    struct Case {
      std::string name;
      GradedAlgebra ga;
      GSetAction action;
      Index x;
    };
    const std::vector<Case> cases = {
        {"M2/Xef at x", fx::m2(), fx::xef(), 0},
        {"M2/Xef at y", fx::m2(), fx::xef(), 1},
        {"kG/Xef at x", groupoid_algebra(fx::pair2()), fx::xef(), 0},
        {"QxQ/Xef at x", fx::qxq(), fx::xef(), 0},
        {"M2/G", fx::m2(), left_translation_action(fx::pair2()), 1},
        {"kZ2/Z2", fx::kz2(), left_translation_action(cyclic_group(2)), 0},
        {"M2/2Xef", fx::m2(), fx::xef_copies(2), 2},
    };
    for (const Case& c : cases) {
      const MoritaContext ctx = build_morita_context(c.ga, c.action, c.x);
      line.require(ctx.checks.ok(), c.name + ": context axioms");
      const StrictnessReport s = strictness_report(ctx);
      if (s.all_points()) line.require(s.square_surjective, c.name + ": perPoint without square surjectivity");
      bool nonempty = true;
      for (Index e = 0; e < c.action.groupoid().object_count(); ++e) nonempty = nonempty && !c.action.fiber(e).empty();
      if (s.square_surjective && nonempty) line.require(s.all_points(), c.name + ": square surjective, perPoint fails");
      line.require(hom_component(c.ga, c.action, c.x, c.x) == stabilizer_subalgebra(c.ga, c.action, c.x).space,
                   c.name + ": V_xx");
      if (c.name == "M2/Xef at x") line.require(s.square_surjective && s.round_surjective, "M2/Xef not strict");
      if (c.name == "QxQ/Xef at x") line.require(!s.morita_equivalent, "QxQ control is strict");
      ++count;
    }
  });
  line.require(count >= 4, "fewer than 4 contexts");
  line.summary = std::to_string(count) + " contexts; M2/Xef strict, QxQ not";
  return line;
}

Line weak_hopf() {
  Line line;
  guarded(line, "A#kG*", [&] {
    const WeakHopfReport w = weak_hopf_smash(fx::m2());
    const SmashAlgebra target = smash_product(fx::m2(), left_translation_action(fx::pair2()));
    const Matrix& psi = w.psi.matrix;
    line.require(psi.rows() == psi.cols() && psi.rows() == target.dim(), "psi is not square");
    line.require(oracle::integer_rank(psi) == target.dim(), "psi not bijective");
    line.require(oracle::multiplicative(w.smash, target.algebra, psi).ok, "psi not multiplicative");
    line.require(psi * w.smash.unit() == target.algebra.unit(), "psi not unital");
    line.require(w.duality.map_ok, "duality mapOK");
    line.summary = "psi " + std::to_string(psi.rows()) + "x" + std::to_string(psi.cols()) + ", mapOK " +
                   (w.duality.map_ok ? "true" : "false");
  });
  return line;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int run_cli(const fs::path& input, const fs::path& output) {
  const std::string cmd = "\"" + std::string(GSM_CLI) + "\" \"" + input.string() + "\" > \"" + output.string() + "\" 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Line cli_determinism() {
  Line line;
  const fs::path dir = fs::temp_directory_path() / ("gsm-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  int files = 0;
  for (const auto& entry : fs::directory_iterator(GSM_SAMPLES_DIR)) {
    if (entry.path().extension() != ".gsm") continue;
    const std::string name = entry.path().filename().string();
    const fs::path a = dir / (name + ".1.json"), b = dir / (name + ".2.json");
    const int ca = run_cli(entry.path(), a), cb = run_cli(entry.path(), b);
    line.require(ca == 0 && cb == 0, name + ": exit " + std::to_string(ca));
    line.require(read_file(a) == read_file(b) && !read_file(a).empty(), name + ": reports differ");
    ++files;
  }
  line.require(files > 0, "no samples found");

  std::string text = read_file(fs::path(GSM_SAMPLES_DIR) / "m2_pair.gsm");
  const std::string good = "mult E21*E12 = E22;";
  const auto at = text.find(good);
  line.require(at != std::string::npos, "constant to corrupt not found");
  if (at != std::string::npos) {
    text.replace(at, good.size(), "mult E21*E12 = E11;");
    const fs::path bad = dir / "corrupt.gsm", out = dir / "corrupt.json";
    std::ofstream(bad) << text;
    const int code = run_cli(bad, out);
    const std::string report = read_file(out);
    line.require(code == 1, "corrupted sample exits " + std::to_string(code));
    line.require(report.find("E_ASSOC") != std::string::npos && report.find("\"witness\"") != std::string::npos,
                 "no witness in the corrupted report");
  }
  fs::remove_all(dir);
  line.summary = std::to_string(files) + " samples run twice; corrupted constant exits 1";
  return line;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Line (*)()> criteria = {structural_oracles, induced_morphisms, gamma_actions, fixed_vs_orbit,
                                             galois_duality,     corollaries,       module_roundtrips,
                                             morita_contexts,    weak_hopf,         cli_determinism};
  int passed = 0, unexpected = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    const Line line = criteria[i]();
    const bool known_red = kKnownRed.count(id) > 0;
    std::cout << "criterion " << id << ": " << (line.pass ? "PASS" : "FAIL") << "  " << line.summary << "\n";
    for (const std::string& n : line.notes) std::cout << "    " << n << "\n";
    if (known_red) std::cout << "    known red: " << kKnownRed.at(id) << "\n";
    if (line.pass) ++passed;
    if (line.pass == known_red) {
      ++unexpected;
      std::cout << "    unexpected: " << (known_red ? "known-red criterion passed" : "criterion failed") << "\n";
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%zu criteria pass, %zu known red, %d unexpected (%.1f s)\n", passed, criteria.size(),
              kKnownRed.size(), unexpected, secs);
  return unexpected == 0 ? 0 : 1;
}
