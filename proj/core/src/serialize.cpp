#include "g2ca/serialize.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "g2ca/crystal.hpp"

namespace g2ca {
namespace {

using nlohmann::json;

json aff_json(const AffA1& a) {
  return json{{"exp", a.exp}, {"label", {a.elem.x1, a.elem.x2}}};
}

json aff_list_json(const std::vector<AffA1>& xs) {
  json arr = json::array();
  for (const auto& a : xs) arr.push_back(aff_json(a));
  return arr;
}

json records_json(const std::vector<SolitonRecord>& recs, int t, int carrier) {
  json arr = json::array();
  for (const auto& rec : recs) {
    arr.push_back(json{{"start", rec.start},
                       {"length", rec.length},
                       {"label", {rec.label.x1, rec.label.x2}},
                       {"phase", track_phase(rec, t, carrier)}});
  }
  return arr;
}

std::string aff_str(const AffA1& a) {
  return "z^" + std::to_string(a.exp) + "(" + std::to_string(a.elem.x1) + "," +
         std::to_string(a.elem.x2) + ")";
}

std::string aff_list_str(const std::vector<AffA1>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += " ";
    out += aff_str(xs[i]);
  }
  return out.empty() ? "-" : out;
}

}  // namespace

std::string crystal_dot(int level) {
  const auto elems = enumerate_level(level);
  std::ostringstream os;
  os << "digraph crystal_B" << level << " {\n  rankdir=TB;\n";
  for (std::size_t k = 0; k < elems.size(); ++k) {
    os << "  n" << k << " [label=\"";
    if (level == 1) {
      if (auto lt = coord_letter(elems[k])) os << token(*lt) << ' ';
    }
    os << '(';
    for (int i = 0; i < 6; ++i) {
      if (i) os << ',';
      os << elems[k].v[static_cast<std::size_t>(i)];
    }
    os << ")\"];\n";
  }
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (int i = 0; i < 3; ++i) {
      if (auto img = lower(elems[k], i, level)) {
        const auto it = std::lower_bound(elems.begin(), elems.end(), *img);
        os << "  n" << k << " -> n" << (it - elems.begin()) << " [label=\"" << i
           << "\"];\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

std::string crystal_json(int level) {
  const auto elems = enumerate_level(level);
  json doc;
  doc["level"] = level;
  doc["size"] = elems.size();
  json nodes = json::array();
  for (std::size_t k = 0; k < elems.size(); ++k) {
    json node{{"index", k}, {"sixths", elems[k].v}};
    if (level == 1) {
      if (auto lt = coord_letter(elems[k])) node["letter"] = std::string(token(*lt));
    }
    nodes.push_back(std::move(node));
  }
  doc["elements"] = std::move(nodes);
  json edges = json::array();
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (int i = 0; i < 3; ++i) {
      if (auto img = lower(elems[k], i, level)) {
        const auto it = std::lower_bound(elems.begin(), elems.end(), *img);
        edges.push_back(json{{"color", i}, {"from", k}, {"to", it - elems.begin()}});
      }
    }
  }
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

TraceDocument make_trace(const State& initial, int carrier_level, int steps) {
  TraceDocument doc;
  doc.carrier_level = carrier_level;
  doc.steps = steps;
  doc.rows.push_back(initial);
  for (int t = 0; t < steps; ++t)
    doc.rows.push_back(evolve(doc.rows.back(), carrier_level).state);
  for (const State& row : doc.rows) {
    doc.energies.push_back(state_energy(row, carrier_level));
    doc.solitons.push_back(detect_solitons(row));
  }
  return doc;
}

std::string trace_json(const TraceDocument& doc, const ScatteringReport* report) {
  json out;
  out["carrier_level"] = doc.carrier_level;
  out["steps"] = doc.steps;
  json rows = json::array();
  for (const State& row : doc.rows) {
    json cells = json::array();
    for (Letter x : row.cells) cells.push_back(std::string(token(x)));
    rows.push_back(std::move(cells));
  }
  out["rows"] = std::move(rows);
  out["energy"] = doc.energies;
  json sol = json::array();
  for (std::size_t t = 0; t < doc.solitons.size(); ++t) {
    if (doc.solitons[t])
      sol.push_back(records_json(*doc.solitons[t], static_cast<int>(t), doc.carrier_level));
    else
      sol.push_back(nullptr);
  }
  out["solitons"] = std::move(sol);
  if (report) out["scattering"] = json::parse(scattering_json(*report));
  return out.dump(2) + "\n";
}

std::string report_json(const SuiteReport& report) {
  json out;
  out["suite"] = report.suite;
  out["instances"] = report.instances;
  out["pass"] = report.pass();
  json fails = json::array();
  for (const auto& f : report.failures)
    fails.push_back(json{{"input", f.input}, {"expected", f.expected}, {"got", f.got}});
  out["failures"] = std::move(fails);
  return out.dump(2) + "\n";
}

std::string scattering_json(const ScatteringReport& report) {
  json out;
  out["valid_initial"] = report.valid_initial;
  out["lengths_decreasing"] = report.lengths_decreasing;
  out["incoming"] = aff_list_json(report.incoming);
  out["predicted"] = aff_list_json(report.predicted);
  out["simulated"] = aff_list_json(report.simulated);
  out["shifts"] = report.shifts;
  out["separated"] = report.separated;
  out["time"] = report.time;
  out["agreement"] = report.agreement;
  out["verdict"] = report.verdict;
  return out.dump(2) + "\n";
}

std::string scattering_text(const ScatteringReport& report) {
  std::ostringstream os;
  os << "incoming:  " << aff_list_str(report.incoming) << "\n";
  os << "predicted: " << aff_list_str(report.predicted) << "\n";
  os << "simulated: " << aff_list_str(report.simulated);
  if (report.separated) os << "   (separated at t=" << report.time << ")";
  os << "\n";
  if (!report.shifts.empty()) {
    os << "shifts:   ";
    for (int s : report.shifts) os << ' ' << (s >= 0 ? "+" : "") << s;
    os << "\n";
  }
  os << "verdict:   " << report.verdict << "\n";
  os << "agreement: " << (report.agreement ? "yes" : "no") << "\n";
  return os.str();
}

}  // namespace g2ca
