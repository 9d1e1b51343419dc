#include "g2ca/sca.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "g2ca/errors.hpp"

namespace g2ca {

std::optional<State> State::parse(std::string_view tokens) {
  State s;
  std::istringstream is{std::string(tokens)};
  std::string tok;
  while (is >> tok) {
    auto lt = parse_letter(tok);
    if (!lt) return std::nullopt;
    s.cells.push_back(*lt);
  }
  if (s.cells.empty()) return std::nullopt;
  return s;
}

std::string State::str() const {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ' ';
    out += token(cells[i]);
  }
  return out;
}

namespace {

int longest_run(const State& p) {
  int best = 0, cur = 0;
  for (Letter x : p.cells) {
    cur = (x == Letter::l1) ? 0 : cur + 1;
    best = std::max(best, cur);
  }
  return best;
}

int trailing_vacuum(const State& p) {
  int n = 0;
  for (auto it = p.cells.rbegin(); it != p.cells.rend() && *it == Letter::l1; ++it) ++n;
  return n;
}

void require_padding(const State& p, int carrier_level) {
  if (longest_run(p) == 0) return;  // pure vacuum needs no room
  const int need = std::max(carrier_level, longest_run(p)) + 1;
  if (trailing_vacuum(p) < need) {
    throw PaddingError("state needs " + std::to_string(need) +
                           " trailing vacuum cells for carrier level " +
                           std::to_string(carrier_level) + " but has " +
                           std::to_string(trailing_vacuum(p)),
                       static_cast<int>(p.cells.size()) - 1);
  }
}

}  // namespace

EvolveResult evolve(const State& p, int carrier_level) {
  require_padding(p, carrier_level);
  const Coord u_l = Coord::hw(carrier_level);
  EvolveResult out;
  out.state.cells.reserve(p.cells.size());
  out.trace.carriers.reserve(p.cells.size() + 1);
  out.energy = 0;
  Coord u = u_l;
  out.trace.carriers.push_back(u);
  int last_loaded = -1;
  for (std::size_t i = 0; i < p.cells.size(); ++i) {
    RResult r = r_apply(u, carrier_level, p.cells[i]);
    out.state.cells.push_back(r.first);
    out.energy -= r.energy;
    u = r.second;
    out.trace.carriers.push_back(u);
    if (!(u == u_l)) last_loaded = static_cast<int>(i);
  }
  if (!(u == u_l)) {
    throw PaddingError("carrier did not return to u_l; cell " +
                           std::to_string(last_loaded) + " absorbed the defect",
                       last_loaded);
  }
  return out;
}

int state_energy(const State& p, int carrier_level) {
  return evolve(p, carrier_level).energy;
}

NaturalSweep t_natural(const State& p) {
  NaturalSweep out;
  out.state.cells.reserve(p.cells.size());
  Node n = Node::n1;
  for (Letter x : p.cells) {
    auto [lt, nn] = rbar_apply(n, x);
    out.state.cells.push_back(lt);
    n = nn;
  }
  out.carrier_out = n;
  return out;
}

namespace {

// ones/twos of the i_l triple of a letter, or nullptr if not a soliton letter.
const int* triple_of(Letter x) {
  static constexpr int k2[2] = {3, 0}, k21[2] = {2, 1}, k22[2] = {1, 2}, k3[2] = {0, 3};
  switch (x) {
    case Letter::l2: return k2;
    case Letter::l2_1: return k21;
    case Letter::l2_2: return k22;
    case Letter::l3: return k3;
    default: return nullptr;
  }
}

bool soliton_pattern(std::span<const Letter> run) {
  std::size_t i = 0;
  while (i < run.size() && run[i] == Letter::l3) ++i;
  if (i < run.size() && (run[i] == Letter::l2_1 || run[i] == Letter::l2_2)) ++i;
  while (i < run.size() && run[i] == Letter::l2) ++i;
  return i == run.size() && !run.empty();
}

}  // namespace

A1 soliton_label(std::span<const Letter> run) {
  if (!soliton_pattern(run))
    throw InvalidInput("soliton_label: run is not a soliton configuration");
  A1 label{0, 0};
  for (auto it = run.rbegin(); it != run.rend(); ++it) {
    const int* tr = triple_of(*it);
    label.x1 += tr[0];
    label.x2 += tr[1];
  }
  return label;
}

std::optional<std::vector<SolitonRecord>> detect_solitons(const State& p) {
  std::vector<SolitonRecord> recs;
  const auto& c = p.cells;
  std::size_t i = 0;
  while (i < c.size()) {
    if (c[i] == Letter::l1) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < c.size() && c[j] != Letter::l1) ++j;
    std::span<const Letter> run(c.data() + i, j - i);
    if (!soliton_pattern(run)) return std::nullopt;
    recs.push_back(SolitonRecord{static_cast<int>(j - i), static_cast<int>(i),
                                 soliton_label(run)});
    i = j;
  }
  return recs;
}

int track_phase(const SolitonRecord& rec, int t, int carrier_level) {
  return rec.start - std::min(carrier_level, rec.length) * t;
}

TwoBody predict_two_body(const AffA1& longer, const AffA1& shorter) {
  const int l1 = longer.elem.level() / 3;
  const int l2 = shorter.elem.level() / 3;
  if (longer.elem.level() % 3 || shorter.elem.level() % 3)
    throw InvalidInput("predict_two_body: labels must live in level 3*length");
  if (l1 <= l2) throw InvalidInput("predict_two_body: requires l1 > l2");
  auto [first, second] = a1_aff_r(longer, shorter, 2 * l2);
  return TwoBody{first, second, 2 * l2 + a1_h_hat(longer.elem, shorter.elem)};
}

std::vector<AffA1> predict_multi(std::span<const AffA1> incoming) {
  for (std::size_t i = 0; i + 1 < incoming.size(); ++i)
    if (incoming[i].elem.level() <= incoming[i + 1].elem.level())
      throw InvalidInput("predict_multi: soliton lengths must strictly decrease");
  std::vector<AffA1> st(incoming.begin(), incoming.end());
  const int m = static_cast<int>(st.size());
  // Bubble the longest soliton to the back, then the next, ...
  for (int pass = 0; pass < m - 1; ++pass) {
    for (int i = 0; i + 1 < m - pass; ++i) {
      const int l2 = st[static_cast<std::size_t>(i + 1)].elem.level() / 3;
      auto [a, b] = a1_aff_r(st[static_cast<std::size_t>(i)],
                             st[static_cast<std::size_t>(i + 1)], 2 * l2);
      st[static_cast<std::size_t>(i)] = a;
      st[static_cast<std::size_t>(i + 1)] = b;
    }
  }
  return st;
}

namespace {

// Free advance: every soliton shifted right by its speed, vacuum elsewhere.
std::optional<State> free_advance(const State& p, const std::vector<SolitonRecord>& recs,
                                  int r) {
  State out;
  out.cells.assign(p.cells.size(), Letter::l1);
  for (const auto& rec : recs) {
    const int shift = std::min(r, rec.length);
    if (rec.start + shift + rec.length > static_cast<int>(out.cells.size()))
      return std::nullopt;
    for (int k = 0; k < rec.length; ++k)
      out.cells[static_cast<std::size_t>(rec.start + shift + k)] =
          p.cells[static_cast<std::size_t>(rec.start + k)];
  }
  return out;
}

bool speeds_nondecreasing(const std::vector<SolitonRecord>& recs, int r) {
  for (std::size_t i = 0; i + 1 < recs.size(); ++i)
    if (std::min(r, recs[i].length) > std::min(r, recs[i + 1].length)) return false;
  return true;
}

}  // namespace

SeparationResult run_until_separated(State p, int carrier_level, int step_cap) {
  SeparationResult res;
  // Look-ahead window: window[0] is the row at time `t`.
  std::vector<State> window{std::move(p)};
  int t = 0;
  bool padding_out = false;
  const auto ensure = [&](int ahead) {
    while (!padding_out && static_cast<int>(window.size()) <= ahead) {
      try {
        window.push_back(evolve(window.back(), carrier_level).state);
      } catch (const PaddingError&) {
        padding_out = true;
      }
    }
    return static_cast<int>(window.size()) > ahead;
  };

  while (t <= step_cap) {
    auto recs = detect_solitons(window[0]);
    if (recs && !recs->empty() && speeds_nondecreasing(*recs, carrier_level)) {
      bool free = true;
      auto probe_recs = *recs;
      for (int ahead = 1; ahead <= 2 && free; ++ahead) {
        const auto expect = free_advance(window[static_cast<std::size_t>(ahead - 1)],
                                         probe_recs, carrier_level);
        if (!expect || !ensure(ahead) ||
            !(*expect == window[static_cast<std::size_t>(ahead)])) {
          free = false;
          break;
        }
        for (auto& rec : probe_recs) rec.start += std::min(carrier_level, rec.length);
      }
      if (free) {
        res.separated = true;
        res.time = t;
        res.records = *recs;
        res.state = window[0];
        res.verdict = "separated";
        return res;
      }
    }
    if (!ensure(1)) {
      res.time = t;
      res.state = window[0];
      res.verdict = "did not separate: ran out of lattice padding";
      return res;
    }
    window.erase(window.begin());
    ++t;
  }
  res.time = step_cap;
  res.state = window[0];
  res.verdict = "did not separate within " + std::to_string(step_cap) + " steps";
  return res;
}

ScatteringReport compare_scattering(const State& initial, int carrier_level, int step_cap) {
  ScatteringReport rep;
  auto recs0 = detect_solitons(initial);
  if (!recs0 || recs0->empty()) {
    rep.verdict = "initial state is not an m-soliton state";
    return rep;
  }
  rep.valid_initial = true;
  for (const auto& rec : *recs0)
    rep.incoming.push_back(AffA1{-track_phase(rec, 0, carrier_level), rec.label});

  rep.lengths_decreasing = true;
  for (std::size_t i = 0; i + 1 < recs0->size(); ++i)
    if ((*recs0)[i].length <= (*recs0)[i + 1].length) rep.lengths_decreasing = false;

  if (rep.lengths_decreasing && recs0->size() >= 2)
    rep.predicted = predict_multi(rep.incoming);
  else if (recs0->size() < 2)
    rep.predicted = rep.incoming;  // nothing to scatter

  SeparationResult sim = run_until_separated(initial, carrier_level, step_cap);
  rep.separated = sim.separated;
  rep.time = sim.time;
  rep.verdict = sim.verdict;
  if (!rep.lengths_decreasing)
    rep.verdict = "lengths not strictly decreasing; " + rep.verdict;
  if (sim.separated) {
    for (const auto& rec : sim.records)
      rep.simulated.push_back(AffA1{-track_phase(rec, sim.time, carrier_level), rec.label});
    if (rep.simulated.size() == rep.incoming.size()) {
      for (std::size_t i = 0; i < rep.simulated.size(); ++i) {
        // Outgoing order reverses the incoming lengths; shift of soliton i is
        // the exponent change of the factor carrying its label.
        const std::size_t k = rep.simulated.size() - 1 - i;
        rep.shifts.push_back(rep.simulated[k].exp - rep.incoming[i].exp);
      }
    }
    rep.agreement = !rep.predicted.empty() && rep.predicted == rep.simulated;
  }
  return rep;
}

}  // namespace g2ca
