#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "g2ca/coord.hpp"
#include "g2ca/crystal.hpp"

namespace g2ca {

// Brute-force verification suites.  Each suite checks closed forms and
// tables against first principles over an exhaustive instance set and
// reports every failure with its witness.

struct Failure {
  std::string input;
  std::string expected;
  std::string got;
};

struct SuiteReport {
  std::string suite;
  std::int64_t instances = 0;
  std::vector<Failure> failures;
  bool pass() const { return failures.empty(); }
  void check(bool ok, const std::string& input, const std::string& expected,
             const std::string& got);
};

// Operator indirection so tests can inject a corrupted table and prove the
// suites catch it.  Default ops are the real ones.
struct CrystalOps {
  std::function<std::optional<Coord>(const Coord&, int, int)> raise_op;
  std::function<std::optional<Coord>(const Coord&, int, int)> lower_op;
  static CrystalOps standard();
};

// Definition-level axioms on B_l: mutual inverses, eps/phi bookkeeping,
// Cartan-compatible weights, case-condition totality, closed forms equal
// brute-force string lengths.
SuiteReport axiom_suite(int level, const CrystalOps& ops = CrystalOps::standard());

// Braid relation on B_l ⊗ B_1 ⊗ B_1, both composition orders.
SuiteReport ybe_suite(int level);

// R is a bijection intertwining all operators on B_l ⊗ B_1; the insertion
// algorithm agrees with it everywhere; likewise R-bar on B♮ ⊗ B_1.
SuiteReport iso_suite(int level);

// H recurrence across every raising edge, highest-weight table values,
// constancy on classical components.
SuiteReport energy_suite(int level);

struct ScaBounds {
  int pattern_max_len = 8;   // exhaustive E_1 = 1 classification
  int soliton_max_len = 4;   // one-soliton sweeps
  int carrier_max = 5;
  int commute_max_len = 4;   // exhaustive T_l / f_2 commutation prefix length
  int commute_level_max = 3;
  int step_cap = 64;
  // sections; all on by default
  bool patterns = true;      // E_1 = 1 classification
  bool one_soliton = true;   // speed / energy under T_k
  bool natural_ops = true;   // T♮ dynamics, commutations, label intertwining
  bool theorem4 = true;      // two-body scattering, (l1,l2) in {(2,1),(3,1),(3,2)}

  static ScaBounds only_patterns() { return with(&ScaBounds::patterns); }
  static ScaBounds only_one_soliton() { return with(&ScaBounds::one_soliton); }
  static ScaBounds only_natural_ops() { return with(&ScaBounds::natural_ops); }
  static ScaBounds only_theorem4() { return with(&ScaBounds::theorem4); }

 private:
  static ScaBounds with(bool ScaBounds::* part) {
    ScaBounds b;
    b.patterns = b.one_soliton = b.natural_ops = b.theorem4 = false;
    b.*part = true;
    return b;
  }
};

// Soliton machinery: E_1 = 1 pattern classification, one-soliton speed and
// energy, T♮ label dynamics, T_l / T♮ commutation, label intertwining,
// two-body scattering against the affine A1 rule.
SuiteReport sca_suite(const ScaBounds& bounds = ScaBounds());

std::vector<SuiteReport> run_all_suites(int level_max = 3,
                                        const ScaBounds& bounds = ScaBounds());

}  // namespace g2ca
