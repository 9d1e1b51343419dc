#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "g2ca/a1.hpp"
#include "g2ca/letters.hpp"
#include "g2ca/natural.hpp"
#include "g2ca/rmatrix.hpp"

namespace g2ca {

// A state of the automaton: a row of B_1 letters with trailing vacuum (1s).
struct State {
  std::vector<Letter> cells;

  static std::optional<State> parse(std::string_view tokens);
  std::string str() const;  // tokens joined with single spaces
  friend bool operator==(const State&, const State&) = default;
};

struct CarrierTrace {
  std::vector<Coord> carriers;  // u^(0) ... u^(L)
};

struct EvolveResult {
  State state;
  CarrierTrace trace;
  int energy;  // E_l(p) = -sum H(u^(i) ⊗ b_{i+1})
};

// One T_l sweep.  Refuses states whose rightmost max(l, longest-run)+1
// cells are not vacuum (PaddingError), and checks the carrier returned.
EvolveResult evolve(const State& p, int carrier_level);

int state_energy(const State& p, int carrier_level);

struct NaturalSweep {
  State state;
  Node carrier_out;  // b(p)
};

// The auxiliary evolution with the B♮ carrier seeded at 1'.
NaturalSweep t_natural(const State& p);

// A soliton: a maximal non-vacuum run matching 3^m 2^n, 3^m 2_1 2^n or
// 3^m 2_2 2^n, labeled by an A1 element of level 3*length.
struct SolitonRecord {
  int length = 0;
  int start = 0;  // 0-based cell index
  A1 label;
  friend bool operator==(const SolitonRecord&, const SolitonRecord&) = default;
};

// Records for every run, left to right, or nullopt when some run is not a
// soliton configuration (merged / exotic letters).
std::optional<std::vector<SolitonRecord>> detect_solitons(const State& p);

// Label of a single run (throws InvalidInput if the run is not a soliton):
// read right to left, expand 2/2_1/2_2/3 to the triples 111/112/122/222,
// count ones and twos.
A1 soliton_label(std::span<const Letter> run);

// Phase of a soliton at time t under carrier r: k = start - min(r, len) * t.
// The associated affine element is z^{-k} label.
int track_phase(const SolitonRecord& rec, int t, int carrier_level);

// ------------------------------------------------------------------
// Scattering prediction (affine A1 calculus).
// ------------------------------------------------------------------

// Two-body rule for a longer soliton meeting a shorter one: R-hat with the
// shifted energy 2*l2 + H-hat.  Returns the outgoing pair and the phase
// shift (k2' - k2 = k1 - k1').  Throws unless l1 > l2.
struct TwoBody {
  AffA1 out_first;   // shorter soliton, now in front
  AffA1 out_second;  // longer soliton
  int shift;
};
TwoBody predict_two_body(const AffA1& longer, const AffA1& shorter);

// m-body prediction, factorized into two-body steps.  Requires strictly
// decreasing lengths; throws InvalidInput otherwise.
std::vector<AffA1> predict_multi(std::span<const AffA1> incoming);

// ------------------------------------------------------------------
// Simulation until separation.
// ------------------------------------------------------------------

struct SeparationResult {
  bool separated = false;
  int time = 0;                        // step at which separation was found
  std::vector<SolitonRecord> records;  // records at that step
  State state;                         // state at that step
  std::string verdict;                 // human-readable outcome
};

// Evolves with T_r until every run is a soliton, speeds are nondecreasing
// left to right, and the next two rows are exact free advances.  Padding
// exhaustion or the step cap yields separated = false with a verdict.
SeparationResult run_until_separated(State p, int carrier_level, int step_cap = 64);

struct ScatteringReport {
  bool valid_initial = false;        // initial state is an m-soliton state
  bool lengths_decreasing = false;   // l1 > l2 > ... hypothesis
  std::vector<AffA1> incoming;
  std::vector<AffA1> predicted;      // empty unless hypothesis holds
  std::vector<AffA1> simulated;      // empty unless separation reached
  std::vector<int> shifts;           // per-soliton exponent change (simulated)
  bool separated = false;
  int time = 0;
  bool agreement = false;
  std::string verdict;
};

// Full pipeline: detect, predict, simulate until separation, compare.
ScatteringReport compare_scattering(const State& initial, int carrier_level,
                                    int step_cap = 64);

}  // namespace g2ca
