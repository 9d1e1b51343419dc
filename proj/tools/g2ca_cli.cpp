// Command-line front end: enumerate/export crystals, apply the combinatorial
// R, run the automaton, verify the brute-force suites.
//
// Exit codes: 0 success, 1 verdict failure (suite failure or scattering
// mismatch), 2 usage or input error.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "g2ca/errors.hpp"
#include "g2ca/serialize.hpp"
#include "g2ca/verify.hpp"

namespace {

using namespace g2ca;

constexpr int kOk = 0;
constexpr int kVerdict = 1;
constexpr int kUsage = 2;

// "1/3"-style rational in thirds -> sixth-units.
bool parse_entry(const std::string& s, int& sixths) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      sixths = 6 * std::stoi(s);
      return true;
    }
    const int num = std::stoi(s.substr(0, slash));
    const int den = std::stoi(s.substr(slash + 1));
    if (den != 3 && den != 6) return false;
    sixths = num * (6 / den);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

std::optional<Coord> parse_coord(const std::string& tok) {
  if (tok.size() < 2 || tok.front() != '(' || tok.back() != ')') return std::nullopt;
  std::string inner = tok.substr(1, tok.size() - 2);
  for (char& c : inner)
    if (c == ',') c = ' ';
  std::istringstream is(inner);
  Coord out;
  std::string entry;
  int k = 0;
  while (is >> entry) {
    if (k >= 6 || !parse_entry(entry, out.v[static_cast<std::size_t>(k)]))
      return std::nullopt;
    ++k;
  }
  if (k != 6) return std::nullopt;
  return out;
}

struct Lhs {
  Coord b1;
  std::vector<Letter> tableau;  // empty when b1 was given as a coordinate
  bool have_tableau = false;
  Letter b2 = Letter::empty;
};

// "<b1 tokens> . <b2 token>" where b1 is a tableau word, "e", or "(...)".
std::optional<Lhs> parse_lhs(const std::string& text, int level, std::string& error) {
  std::istringstream is(text);
  std::vector<std::string> toks;
  std::string tok;
  while (is >> tok) toks.push_back(tok);
  const auto dot = std::find(toks.begin(), toks.end(), ".");
  if (dot == toks.end() || dot + 1 == toks.end() || dot + 2 != toks.end()) {
    error = "expected \"<b1 tokens> . <b2 token>\"";
    return std::nullopt;
  }
  Lhs out;
  const std::vector<std::string> left(toks.begin(), dot);
  if (left.empty()) {
    error = "empty first factor";
    return std::nullopt;
  }
  if (left.size() == 1 && left[0].front() == '(') {
    auto c = parse_coord(left[0]);
    if (!c) {
      error = "bad coordinate " + left[0];
      return std::nullopt;
    }
    const auto viol = membership_violation(*c, level);
    if (viol != MembershipError::ok) {
      error = "first factor not in B_" + std::to_string(level) + ": " + std::string(describe(viol));
      return std::nullopt;
    }
    out.b1 = *c;
  } else if (left.size() == 1 && left[0] == "e") {
    out.b1 = Coord{};
    out.have_tableau = true;
  } else {
    for (const auto& t : left) {
      auto lt = parse_letter(t);
      if (!lt || *lt == Letter::empty) {
        error = "bad tableau letter " + t;
        return std::nullopt;
      }
      out.tableau.push_back(*lt);
    }
    if (!validate_tableau(out.tableau)) {
      error = "not a valid one-row tableau";
      return std::nullopt;
    }
    if (static_cast<int>(out.tableau.size()) > level) {
      error = "tableau longer than the level";
      return std::nullopt;
    }
    out.b1 = tableau_coord(out.tableau);
    out.have_tableau = true;
  }
  // second factor: letter or level-1 coordinate
  const std::string& right = *(dot + 1);
  if (right.front() == '(') {
    auto c = parse_coord(right);
    if (!c) {
      error = "bad coordinate " + right;
      return std::nullopt;
    }
    auto lt = coord_letter(*c);
    if (!lt) {
      error = std::string("second factor not in B_1: ") + describe(membership_violation(*c, 1));
      return std::nullopt;
    }
    out.b2 = *lt;
  } else {
    auto lt = parse_letter(right);
    if (!lt) {
      error = "bad letter " + right;
      return std::nullopt;
    }
    out.b2 = *lt;
  }
  return out;
}

int cmd_enum(int level, const std::string& format) {
  if (format == "dot") {
    std::cout << crystal_dot(level);
  } else {
    std::cout << crystal_json(level);
  }
  return kOk;
}

int cmd_r(int level, const std::string& lhs_text, const std::string& algo) {
  std::string error;
  auto lhs = parse_lhs(lhs_text, level, error);
  if (!lhs) {
    std::cerr << "error: " << error << "\n";
    return kUsage;
  }
  Letter first;
  std::vector<Letter> image;
  const RResult canonical = r_apply(lhs->b1, level, lhs->b2);
  if (algo == "insertion") {
    auto word = lhs->have_tableau && !lhs->tableau.empty()
                    ? lhs->tableau
                    : coord_tableau(lhs->b1, level);
    std::tie(first, image) = r_insertion(word, lhs->b2, level);
  } else {
    first = canonical.first;
    image = coord_tableau(canonical.second, level);
  }
  std::cout << token(first) << " .";
  for (Letter x : image) std::cout << ' ' << token(x);
  if (image.empty()) std::cout << " e";
  std::cout << "\nH = " << canonical.energy << "\n";
  return kOk;
}

int cmd_sca(const std::string& state_text, int carrier, int steps,
            const std::string& format, bool predict, int step_cap) {
  auto state = State::parse(state_text);
  if (!state) {
    std::cerr << "error: bad state tokens\n";
    return kUsage;
  }
  TraceDocument doc;
  ScatteringReport rep;
  try {
    doc = make_trace(*state, carrier, steps);
    if (predict) rep = compare_scattering(*state, carrier, step_cap);
  } catch (const PaddingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (format == "json") {
    std::cout << trace_json(doc, predict ? &rep : nullptr);
  } else {
    for (const State& row : doc.rows) std::cout << row.str() << "\n";
    if (predict) std::cout << scattering_text(rep);
  }
  if (predict && !rep.agreement) return kVerdict;
  return kOk;
}

int cmd_verify(const std::string& suite, int level, const ScaBounds& bounds,
               const std::string& format) {
  std::vector<SuiteReport> reports;
  if (suite == "axioms") {
    for (int l = 1; l <= level; ++l) reports.push_back(axiom_suite(l));
  } else if (suite == "ybe") {
    for (int l = 1; l <= level; ++l) reports.push_back(ybe_suite(l));
  } else if (suite == "iso") {
    for (int l = 1; l <= level; ++l) reports.push_back(iso_suite(l));
  } else if (suite == "energy") {
    for (int l = 1; l <= level; ++l) reports.push_back(energy_suite(l));
  } else if (suite == "sca") {
    reports.push_back(sca_suite(bounds));
  } else if (suite == "all") {
    reports = run_all_suites(level, bounds);
  } else {
    std::cerr << "error: unknown suite " << suite
              << " (axioms|ybe|iso|energy|sca|all)\n";
    return kUsage;
  }
  bool pass = true;
  for (const auto& rep : reports) {
    pass = pass && rep.pass();
    if (format == "json") {
      std::cout << report_json(rep);
    } else {
      std::cout << rep.suite << ": " << (rep.pass() ? "PASS" : "FAIL") << " ("
                << rep.instances << " checks)\n";
      for (std::size_t k = 0; k < rep.failures.size() && k < 10; ++k) {
        const auto& f = rep.failures[k];
        std::cout << "  at " << f.input << ": expected " << f.expected << ", got "
                  << f.got << "\n";
      }
      if (rep.failures.size() > 10)
        std::cout << "  ... " << rep.failures.size() - 10 << " more\n";
    }
  }
  return pass ? kOk : kVerdict;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"G2(1) perfect-crystal combinatorics and its soliton cellular automaton"};
  app.require_subcommand(1);

  int level = 1;
  std::string enum_format = "dot";
  std::string sca_format = "text";
  std::string verify_format = "text";
  std::string lhs;
  std::string algo = "path";
  std::string state_text;
  int carrier = 10;
  int steps = 0;
  bool predict = false;
  ScaBounds bounds;
  std::string suite;

  auto* enum_cmd = app.add_subcommand("enum", "Enumerate and export a crystal graph");
  enum_cmd->add_option("--level", level, "crystal level")->required()->check(CLI::PositiveNumber);
  enum_cmd->add_option("--format", enum_format, "dot|json")
      ->check(CLI::IsMember({"dot", "json"}))
      ->capture_default_str();

  auto* r_cmd = app.add_subcommand("r", "Apply the combinatorial R to b1 . b2");
  r_cmd->add_option("--level", level, "level of the first factor")
      ->required()
      ->check(CLI::PositiveNumber);
  r_cmd->add_option("--lhs", lhs, "\"<b1 tokens> . <b2>\" (letters or (a,b,c,d,e,f))")
      ->required();
  r_cmd->add_option("--algo", algo, "path|insertion")
      ->check(CLI::IsMember({"path", "insertion"}))
      ->capture_default_str();

  auto* sca_cmd = app.add_subcommand("sca", "Run the soliton cellular automaton");
  sca_cmd->add_option("--state", state_text, "initial row of letter tokens")->required();
  sca_cmd->add_option("--carrier", carrier, "carrier level r")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sca_cmd->add_option("--steps", steps, "number of time steps")->required();
  sca_cmd->add_option("--format", sca_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  sca_cmd->add_flag("--predict", predict, "compare against the scattering rule");
  sca_cmd->add_option("--step-cap", bounds.step_cap, "separation search cap")
      ->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", suite, "axioms|ybe|iso|energy|sca|all")->required();
  verify_cmd->add_option("--level", level, "max crystal level")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify_cmd->add_option("--max-length", bounds.pattern_max_len, "pattern search length")
      ->capture_default_str();
  verify_cmd->add_option("--max-soliton", bounds.soliton_max_len, "soliton length bound")
      ->capture_default_str();
  verify_cmd->add_option("--max-carrier", bounds.carrier_max, "carrier bound")
      ->capture_default_str();
  verify_cmd->add_option("--format", verify_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kOk : kUsage;
  }

  try {
    if (enum_cmd->parsed()) return cmd_enum(level, enum_format);
    if (r_cmd->parsed()) return cmd_r(level, lhs, algo);
    if (sca_cmd->parsed()) return cmd_sca(state_text, carrier, steps, sca_format, predict,
                                          bounds.step_cap);
    if (verify_cmd->parsed()) {
      if (!verify_cmd->count("--level")) level = (suite == "ybe") ? 2 : 3;
      return cmd_verify(suite, level, bounds, verify_format);
    }
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PaddingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
