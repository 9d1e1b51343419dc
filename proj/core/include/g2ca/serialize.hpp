#pragma once

#include <string>
#include <vector>

#include "g2ca/sca.hpp"
#include "g2ca/verify.hpp"

namespace g2ca {

// Deterministic renderings of crystal graphs and run artifacts.  JSON
// documents have sorted keys and enumeration-ordered arrays, so byte-equal
// output is reproducible across runs.

std::string crystal_dot(int level);
std::string crystal_json(int level);

struct TraceDocument {
  int carrier_level = 0;
  int steps = 0;
  std::vector<State> rows;                                        // steps + 1 rows
  std::vector<int> energies;                                      // E_r of each row
  std::vector<std::optional<std::vector<SolitonRecord>>> solitons;  // per row
};

TraceDocument make_trace(const State& initial, int carrier_level, int steps);

std::string trace_json(const TraceDocument& doc, const ScatteringReport* report = nullptr);

std::string report_json(const SuiteReport& report);
std::string scattering_json(const ScatteringReport& report);

std::string scattering_text(const ScatteringReport& report);

}  // namespace g2ca
