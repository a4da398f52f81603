#include "thv/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "thv/errors.hpp"
#include "thv/fields_json.hpp"
#include "thv/structure_json.hpp"

namespace thv::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command;
  int t = 1;
  std::string format;
  std::string out;
  std::optional<std::string> l1, l2, l3, k1, k3, h;
  std::optional<std::string> level, max_level;
  std::optional<long> max_mode, max_index;
  std::optional<std::string> m, n;
  std::optional<std::string> a, b;
  std::optional<std::string> x, y;
  std::string v = "|0>";
  long window_min = -6, window_max = 6;
};

struct Report {
  io::json json;
  std::string text;
  std::optional<std::string> csv = std::nullopt;
  bool ok = true;
};

// Each parse failure names the flag it came from.
template <class F>
auto field(const std::string& flag, F&& parse) -> decltype(parse()) {
  try {
    return parse();
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError("--" + flag + ": " + e.what());
  }
}

ParamPoly poly(const std::string& flag, const std::string& text) {
  return field(flag, [&] { return ParamPoly::parse(text); });
}

Rational rational(const std::string& flag, const std::string& text) {
  const ParamPoly p = poly(flag, text);
  const auto v = p.constant_value();
  if (!v) throw UsageError("--" + flag + ": expected a rational number, got '" + text + "'");
  return *v;
}

const std::string& required(const std::string& flag, const std::optional<std::string>& v) {
  if (!v) throw UsageError("--" + flag + ": required by this command");
  return *v;
}

Rational level_on_lattice(const std::string& flag, const std::string& text, int t) {
  const Rational lvl = rational(flag, text);
  if (!(lvl * Rational(t)).is_integer())
    throw UsageError("--" + flag + ": level " + lvl.str() + " is not a multiple of 1/" + std::to_string(t));
  return lvl;
}

Module make_module(const Options& o) {
  if (o.t < 1) throw UsageError("--t: must be >= 1");
  if (o.t == 1) {
    for (const auto& [flag, v] : {std::pair{"k1", &o.k1}, {"k3", &o.k3}, {"h", &o.h}})
      if (*v) throw UsageError(std::string("--") + flag + ": only twisted modules (t >= 2) take this parameter");
    return Module(ModuleDescriptor::vacuum(poly("l1", o.l1.value_or("l1")), poly("l2", o.l2.value_or("l2")),
                                           poly("l3", o.l3.value_or("l3"))));
  }
  if (o.l2) throw UsageError("--l2: twisted modules (t >= 2) have no c2");
  // k1 and k3 default to the l1 and l3 bindings.
  const ParamPoly k1 = o.k1 ? poly("k1", *o.k1) : poly("l1", o.l1.value_or("l1"));
  const ParamPoly k3 = o.k3 ? poly("k3", *o.k3) : poly("l3", o.l3.value_or("l3"));
  return Module(ModuleDescriptor::twisted_verma(o.t, k1, k3, poly("h", o.h.value_or("h"))));
}

Report cmd_bracket(const Options& o) {
  const AlgebraDescriptor alg(o.t);
  const auto x = field("x", [&] { return AlgebraElement::parse(required("x", o.x)); });
  const auto y = field("y", [&] { return AlgebraElement::parse(required("y", o.y)); });
  for (const auto& [g, c] : x.terms()) field("x", [&] { validate(g, alg); return 0; });
  for (const auto& [g, c] : y.terms()) field("y", [&] { validate(g, alg); return 0; });
  const auto r = bracket(x, y, alg);
  return {io::json{{"t", o.t}, {"x", x.str()}, {"y", y.str()}, {"bracket", r.str()}}, r.str()};
}

Report cmd_act(const Options& o) {
  const Module mod = make_module(o);
  const auto x = field("x", [&] { return AlgebraElement::parse(required("x", o.x)); });
  for (const auto& [g, c] : x.terms()) field("x", [&] { validate(g, mod.algebra()); return 0; });
  const auto v = field("v", [&] { return mod.parse_vector(o.v); });
  const auto r = mod.act(x, v);
  return {io::json{{"module", io::to_json(mod.descriptor())},
                   {"x", x.str()},
                   {"v", v.str()},
                   {"result", io::to_json(r)},
                   {"text", r.str()}},
          r.str()};
}

Report cmd_basis(const Options& o) {
  const Module mod = make_module(o);
  const Rational lvl = level_on_lattice("level", required("level", o.level), o.t);
  io::json words = io::json::array(), monos = io::json::array();
  std::string text;
  for (const auto& b : mod.basis_at_level(lvl)) {
    monos.push_back(io::to_json(b));
    words.push_back(mod.word_str(b));
    text += mod.word_str(b) + "\n";
  }
  return {io::json{{"t", o.t}, {"level", lvl.str()}, {"basis", monos}, {"words", words}}, text};
}

Report cmd_dim(const Options& o) {
  const Module mod = make_module(o);
  std::vector<Rational> levels;
  if (o.level) {
    levels.push_back(level_on_lattice("level", *o.level, o.t));
  } else {
    levels = mod.levels_up_to(level_on_lattice("max-level", required("max-level", o.max_level), o.t));
  }
  io::json rows = io::json::array();
  std::string text, csv = "level,dim\n";
  for (const auto& l : levels) {
    const auto d = mod.graded_dimension(l);
    rows.push_back(io::json{{"level", l.str()}, {"dim", d}});
    text += "dim " + l.str() + " = " + std::to_string(d) + "\n";
    csv += l.str() + "," + std::to_string(d) + "\n";
  }
  return {io::json{{"t", o.t}, {"dims", rows}}, text, csv};
}

std::string character_text(const std::vector<CharacterRow>& rows) {
  std::ostringstream s;
  s << "level  verma_dim  irr_dim  nullity\n";
  for (const auto& r : rows) s << r.level << "  " << r.verma_dim << "  " << r.irr_dim << "  " << r.nullity << "\n";
  return s.str();
}

Module concrete_verma(const Options& o, const char* command) {
  if (o.t < 2) throw UsageError(std::string("--t: ") + command + " needs a twisted module (t >= 2)");
  const Module mod = make_module(o);
  for (const auto& [name, p] : mod.descriptor().params)
    if (!p.is_constant())
      throw UsageError("--" + name + ": " + command + " needs a concrete rational value, got '" + p.str() + "'");
  return mod;
}

Report cmd_character(const Options& o) {
  const Module mod = concrete_verma(o, "character");
  const Rational max = level_on_lattice("max-level", required("max-level", o.max_level), o.t);
  const auto rows = irreducible_character(mod, max);
  return {io::json{{"module", io::to_json(mod.descriptor())}, {"character", io::to_json(rows)}},
          character_text(rows), io::to_csv(rows)};
}

Report cmd_irrdim(const Options& o) {
  const Module mod = concrete_verma(o, "irrdim");
  const Rational lvl = level_on_lattice("level", required("level", o.level), o.t);
  if (lvl.sign() < 0) throw UsageError("--level: must be >= 0");
  const auto rows = irreducible_character(mod, lvl);
  const CharacterRow& r = rows.back();
  return {io::json{{"module", io::to_json(mod.descriptor())}, {"level", r.level.str()}, {"irr_dim", r.irr_dim},
                   {"verma_dim", r.verma_dim}, {"nullity", r.nullity}},
          std::to_string(r.irr_dim) + "\n", io::to_csv({r})};
}

Report cmd_gram(const Options& o) {
  if (o.t < 2) throw UsageError("--t: gram needs a twisted module (t >= 2)");
  const Module mod = make_module(o);
  const Rational lvl = level_on_lattice("level", required("level", o.level), o.t);
  if (lvl.sign() <= 0) throw UsageError("--level: must be positive");
  const GramMatrix g = gram_matrix(mod, lvl);
  std::string text;
  for (const auto& row : g.entries) {
    std::string line;
    for (const auto& e : row) line += (line.empty() ? "" : ", ") + e.str();
    text += "[" + line + "]\n";
  }
  io::json j = io::to_json(g);
  j["module"] = io::to_json(mod.descriptor());
  return {j, text};
}

Report cmd_singular(const Options& o) {
  const Module mod = concrete_verma(o, "singular");
  const Rational lvl = level_on_lattice("level", required("level", o.level), o.t);
  io::json vs = io::json::array();
  std::string text;
  for (const auto& v : singular_vectors(mod, lvl)) {
    vs.push_back(io::json{{"vector", io::to_json(v)}, {"text", v.str()}});
    text += v.str() + "\n";
  }
  return {io::json{{"module", io::to_json(mod.descriptor())}, {"level", lvl.str()}, {"singular", vs}}, text};
}

Report cmd_aut(const Options& o) {
  const Rational l2 = rational("l2", required("l2", o.l2));
  const Rational l3 = rational("l3", required("l3", o.l3));
  const AutReport r = automorphism_group(l2, l3);
  std::string text = std::string(aut_case_name(r.label)) + "\n";
  for (const auto& c : r.trace) text += "  " + c.relation + ": " + c.constraint.str() + " = 0\n";
  return {io::to_json(r), text};
}

Report cmd_check_jacobi(const Options& o) {
  if (o.t < 1) throw UsageError("--t: must be >= 1");
  const long max_index = o.max_index.value_or(5);
  if (max_index < 0) throw UsageError("--max-index: must be >= 0");
  const AxiomReport r = check_lie_axioms(AlgebraDescriptor(o.t), max_index);
  io::json j{{"t", o.t},
             {"max_index", max_index},
             {"generators", r.generators},
             {"pairs", r.pairs},
             {"antisymmetry_failures", r.antisymmetry_failures},
             {"triples", r.triples},
             {"jacobi_failures", r.jacobi_failures},
             {"ok", r.ok()}};
  std::string text = "antisymmetry: " + std::to_string(r.pairs) + " pairs, " +
                     std::to_string(r.antisymmetry_failures) + " failures\njacobi: " + std::to_string(r.triples) +
                     " triples, " + std::to_string(r.jacobi_failures) + " failures\n";
  return {j, text, std::nullopt, r.ok()};
}

Report cmd_check_commutator(const Options& o) {
  const Module mod = make_module(o);
  if (o.m || o.n || o.a || o.b) {
    const FieldId a = field("a", [&] { return field_from_name(o.a.value_or("Omega")); });
    const FieldId b = field("b", [&] { return field_from_name(o.b.value_or("Omega")); });
    const Rational m = rational("m", required("m", o.m));
    const Rational n = rational("n", required("n", o.n));
    const ModuleVector v = field("v", [&] { return mod.parse_vector(o.v); });
    const CommutatorReport r = field("m", [&] { return verify_commutator(mod, a, b, m, n, v); });
    return {io::to_json(r),
            "lhs: " + r.lhs.str() + "\nrhs: " + r.rhs.str() +
                "\nrhs_formula: " + (r.rhs_formula ? r.rhs_formula->str() : std::string("n/a")) +
                "\nequal: " + (r.ok() ? "true" : "false") + "\n",
            std::nullopt, r.ok()};
  }
  const long max_mode = o.max_mode.value_or(3);
  const Rational max_level = level_on_lattice("max-level", o.max_level.value_or("3"), o.t);
  const CommutatorSweep s = commutator_sweep(mod, max_mode, max_level);
  io::json failed = io::json::array();
  for (const auto& r : s.failed) failed.push_back(io::to_json(r));
  io::json j{{"module", io::to_json(mod.descriptor())},
             {"max_mode", max_mode},
             {"max_level", max_level.str()},
             {"checks", s.checks},
             {"failures", s.failures},
             {"failed", failed},
             {"ok", s.ok()}};
  std::string text = "commutator checks: " + std::to_string(s.checks) + ", failures: " + std::to_string(s.failures) + "\n";
  for (const auto& r : s.failed)
    text += "  " + std::string(field_name(r.a)) + "_" + r.m.str() + " " + std::string(field_name(r.b)) + "_" +
            r.n.str() + " on " + r.v.str() + "\n";
  return {j, text, std::nullopt, s.ok()};
}

Report cmd_check_delta(const Options& o) {
  const Window w{o.window_min * o.t, o.window_max * o.t, o.window_min * o.t, o.window_max * o.t};
  if (w.empty()) throw UsageError("--window-min: must not exceed --window-max");
  std::vector<std::pair<long, long>> cases;
  const auto integer = [&](const std::string& flag, const std::string& text) {
    const Rational r = rational(flag, text);
    if (!r.is_integer() || r.sign() < 0) throw UsageError("--" + flag + ": expected a nonnegative integer");
    return *r.to_long();
  };
  if (o.m || o.n) {
    cases.emplace_back(integer("m", required("m", o.m)), integer("n", required("n", o.n)));
  } else {
    for (long m = 1; m <= 4; ++m)
      for (long n = 0; n < m; ++n) cases.emplace_back(m, n);
  }
  io::json reports = io::json::array();
  std::string text;
  bool ok = true;
  for (const auto& [m, n] : cases) {
    const DeltaReport r = field("window-min", [&] { return delta_identity_check(m, n, w, o.t); });
    reports.push_back(io::to_json(r));
    text += "m=" + std::to_string(m) + " n=" + std::to_string(n) + ": " +
            (r.holds_in_window ? "holds" : "nonzero: " + r.residual.str()) + "\n";
    // The identity is only claimed for m > n.
    if (m > n && !r.holds_in_window) ok = false;
  }
  return {io::json{{"t", o.t}, {"reports", reports}, {"ok", ok}}, text, std::nullopt, ok};
}

Report cmd_check_conformal(const Options& o) {
  const Rational l1 = rational("l1", required("l1", o.l1));
  const Rational l2 = rational("l2", required("l2", o.l2));
  const Rational l3 = rational("l3", required("l3", o.l3));
  if (l3.is_zero()) throw UsageError("--l3: must be nonzero");
  const Rational max_level = level_on_lattice("max-level", o.max_level.value_or("4"), 1);
  const ConformalReport r = conformal_decomposition_check(l1, l2, l3, max_level, o.max_mode.value_or(3));
  std::string text = "central charge " + r.central_charge.str() + "\ncommute: " + std::to_string(r.commute_checks) +
                     " checks, " + std::to_string(r.commute_failures) + " failures\nvirasoro: " +
                     std::to_string(r.virasoro_checks) + " checks, " + std::to_string(r.virasoro_failures) +
                     " failures\n";
  for (const auto& f : r.failures) text += "  " + f + "\n";
  return {io::to_json(r), text, std::nullopt, r.ok()};
}

using Command = std::function<Report(const Options&)>;

const std::map<std::string, std::pair<Command, const char*>>& commands() {
  static const std::map<std::string, std::pair<Command, const char*>> table{
      {"bracket", {cmd_bracket, "text"}},
      {"act", {cmd_act, "text"}},
      {"basis", {cmd_basis, "text"}},
      {"dim", {cmd_dim, "text"}},
      {"character", {cmd_character, "json"}},
      {"gram", {cmd_gram, "json"}},
      {"irrdim", {cmd_irrdim, "json"}},
      {"singular", {cmd_singular, "json"}},
      {"aut", {cmd_aut, "json"}},
      {"check-jacobi", {cmd_check_jacobi, "json"}},
      {"check-commutator", {cmd_check_commutator, "json"}},
      {"check-delta", {cmd_check_delta, "json"}},
      {"check-conformal", {cmd_check_conformal, "json"}},
  };
  return table;
}

void build_app(CLI::App& app, Options& o) {
  app.set_help_flag("--help", "Print this help and exit");
  std::vector<std::string> names;
  for (const auto& [name, entry] : commands()) names.push_back(name);
  app.add_option("command", o.command, "Job to run")->required()->check(CLI::IsMember(names));
  app.set_config("--config", "", "TOML-style file of option values; flags given on the command line win");
  app.add_option("--t", o.t, "Twist: 1 for the vacuum module, >= 2 for twisted Verma modules");
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", o.out, "Write the report to this file instead of stdout");
  app.add_option("--l1", o.l1, "Value of c1 (vacuum) or default for k1");
  app.add_option("--l2", o.l2, "Value of c2 (vacuum only)");
  app.add_option("--l3", o.l3, "Value of c3 (vacuum) or default for k3");
  app.add_option("--k1", o.k1, "Value of k1 (twisted)");
  app.add_option("--k3", o.k3, "Value of k3 (twisted)");
  app.add_option("--h", o.h, "L0 eigenvalue on the cyclic vector (twisted)");
  app.add_option("--level", o.level, "Level, a multiple of 1/t");
  app.add_option("--max-level", o.max_level, "Highest level, a multiple of 1/t");
  app.add_option("--max-mode", o.max_mode, "Largest |mode| in sweeps");
  app.add_option("--max-index", o.max_index, "Largest |index| of generators in check-jacobi");
  app.add_option("--m", o.m, "First mode index (check-commutator) or power m (check-delta)");
  app.add_option("--n", o.n, "Second mode index (check-commutator) or derivative order n (check-delta)");
  app.add_option("--a", o.a, "First field: Omega or Igen");
  app.add_option("--b", o.b, "Second field: Omega or Igen");
  app.add_option("--x", o.x, "Algebra element, e.g. \"L[2]\" or \"2*I[-1/2] + k3\"");
  app.add_option("--y", o.y, "Second algebra element for bracket");
  app.add_option("--v", o.v, "Module vector, e.g. \"I[-1]L[-2]|0>\"");
  app.add_option("--window-min", o.window_min, "Smallest exponent of x1 and x2 in check-delta");
  app.add_option("--window-max", o.window_max, "Largest exponent of x1 and x2 in check-delta");
}

int emit(const Options& o, const Report& r, std::ostream& out) {
  const std::string format = o.format.empty() ? commands().at(o.command).second : o.format;
  std::string body;
  if (format == "json") {
    body = r.json.dump(2) + "\n";
  } else if (format == "csv") {
    if (!r.csv) throw UsageError("--format: csv is not available for " + o.command);
    body = *r.csv;
  } else {
    body = r.text;
    if (!body.empty() && body.back() != '\n') body += '\n';
  }
  if (o.out.empty()) {
    out << body;
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) throw UsageError("--out: cannot open '" + o.out + "' for writing");
    file << body;
  }
  return r.ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Structure computations for the twisted Heisenberg-Virasoro vertex algebra", "thv"};
  Options o;
  build_app(app, o);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    const Report r = commands().at(o.command).first(o);
    return emit(o, r, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << o.command << ": " << e.what() << "\n";
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"thv"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace thv::cli
