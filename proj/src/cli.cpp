#include "wonder/cli.hpp"

#include "wonder/json_io.hpp"
#include "wonder/render.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <future>
#include <set>
#include <sstream>
#include <thread>

namespace wonder {

namespace {

struct Settings {
  std::string input;
  std::string output;
  std::string format = "text";
  std::optional<int> max_degree;
  std::optional<int> budget;
  int jobs = 0;
  std::string nested;
  bool search = false;
};

struct Outcome {
  int code = Ok;
  Json json;
  std::string text;
};

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string vec_text(const std::vector<long>& v) {
  std::vector<std::string> s;
  for (long x : v) s.push_back(std::to_string(x));
  return "(" + join(s, ",") + ")";
}

Json json_longs(const std::vector<long>& v) {
  Json out = Json::array();
  for (long x : v) out.push_back(x);
  return out;
}

JobSpec load_job(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Schema, "cannot read input file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::Schema, std::string("invalid JSON: ") + e.what());
  }
  try {
    return job_from_json(j);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::Schema, e.what());
  }
}

struct Context {
  JobSpec job;
  std::shared_ptr<const LayerPoset> poset;
  int max_degree = 0;
  int jobs = 1;

  std::vector<int> selected() const {
    std::vector<int> ids;
    if (!job.building) {
      for (int i = 0; i < poset->size(); ++i) ids.push_back(i);
      return ids;
    }
    for (auto& l : *job.building) {
      int id = poset->find(l);
      if (id < 0) throw Error(ErrorCode::NotBuilding, "building member is not an element of L'");
      ids.push_back(id);
    }
    return ids;
  }

  BuildingSet building() const { return make_building_set(poset, selected()); }

  std::vector<Sublattice> lattices() const {
    std::vector<Sublattice> out;
    for (auto& e : poset->elements())
      if (std::find(out.begin(), out.end(), e.gamma()) == out.end()) out.push_back(e.gamma());
    return out;
  }
};

std::string nested_name(const NestedSet& s) {
  std::vector<std::string> parts;
  for (int m : s.members) parts.push_back("G" + std::to_string(m + 1));
  for (int r : s.rays) parts.push_back("D" + std::to_string(r));
  return "{" + join(parts, ",") + "}";
}

NestedSet parse_nested(const std::string& spec, const BuildingSet& building, const Fan& fan) {
  NestedSet s;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }), tok.end());
    if (tok.empty()) continue;
    int idx = 0;
    try {
      std::size_t used = 0;
      idx = std::stoi(tok.substr(1), &used);
      if (used + 1 != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Schema, "bad nested-set token '" + tok + "'");
    }
    if (tok[0] == 'G' && idx >= 1 && idx <= building.size())
      s.members.push_back(idx - 1);
    else if (tok[0] == 'D' && idx >= 0 && idx < fan.ray_count())
      s.rays.push_back(idx);
    else
      throw Error(ErrorCode::Schema, "nested-set token out of range '" + tok + "'");
  }
  return s;
}

bool sane_ranks(const HilbertResult& h) {
  auto r = trim(h.ranks);
  if (r.empty() || r.front() != 1 || r.back() != 1) return false;
  for (std::size_t k = 0; k < r.size(); ++k)
    if (r[k] != r[r.size() - 1 - k]) return false;
  return h.torsion_free();
}

Json mat_json(const IntMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_long(m(i, j)));
    out.push_back(row);
  }
  return out;
}

Json violation_json(const Fan& fan, const SignViolation& v) {
  return Json{{"cone", format_cone(fan, v.cone)}, {"basis_row", v.basis_index},
              {"positive_ray", format_ray(fan.ray(v.positive_ray))}, {"negative_ray", format_ray(fan.ray(v.negative_ray))}};
}

Json report_json(const Fan& fan, const FanReport& r) {
  Json cones = Json::array();
  for (auto& c : r.cones) cones.push_back(format_cone(fan, c));
  Json msgs = Json::array();
  for (auto& m : r.messages) msgs.push_back(m);
  return Json{{"passed", r.passed}, {"cones", cones}, {"messages", msgs}};
}

void goodness_into(const Fan& fan, const GoodnessReport& g, Outcome& o) {
  o.json["smooth"] = report_json(fan, g.smooth);
  o.json["complete"] = report_json(fan, g.complete);
  std::ostringstream os;
  os << "smooth: " << (g.smooth.passed ? "pass" : "fail") << "\n";
  for (auto& m : g.smooth.messages) os << "  " << m << "\n";
  os << "complete: " << (g.complete.passed ? "pass" : "fail") << "\n";
  for (auto& m : g.complete.messages) os << "  " << m << "\n";
  Json lats = Json::array();
  for (auto& l : g.lattices) {
    Json e{{"gamma", mat_json(l.lattice.basis())}, {"compatible", report_json(fan, l.compat)}};
    e["equal_sign_basis"] = l.basis ? mat_json(*l.basis) : Json(nullptr);
    Json vs = Json::array();
    if (!l.basis)
      for (auto& v : l.sign.violations) vs.push_back(violation_json(fan, v));
    e["violations"] = vs;
    lats.push_back(e);

    std::vector<std::string> rows;
    for (Eigen::Index i = 0; i < l.lattice.rank(); ++i) rows.push_back(format_ray(l.lattice.basis().row(i).transpose()));
    os << "lattice <" << join(rows, ",") << ">: compatible " << (l.compat.passed ? "pass" : "fail") << ", equal-sign basis "
       << (l.basis ? "found" : "missing") << "\n";
    for (auto& m : l.compat.messages) os << "  " << m << "\n";
    if (!l.basis)
      for (auto& v : l.sign.violations)
        os << "  equal-sign violation: " << format_cone(fan, v.cone) << " basis row " << v.basis_index << " pairs "
           << format_ray(fan.ray(v.positive_ray)) << " > 0 and " << format_ray(fan.ray(v.negative_ray)) << " < 0\n";
  }
  o.json["lattices"] = lats;
  o.text += os.str();
}

Outcome cmd_validate(const Context& ctx) {
  Outcome o;
  o.json["command"] = "validate";
  auto good = validate_good(ctx.job.fan, ctx.lattices(), ctx.job.basis_bound);
  goodness_into(ctx.job.fan, good, o);
  auto ids = ctx.selected();
  Report b = validate_building(ids, *ctx.poset);
  Report w = validate_well_connected(ids, *ctx.poset);
  auto rep = [](const Report& r) {
    Json m = Json::array();
    for (auto& x : r.messages) m.push_back(x);
    return Json{{"passed", r.passed}, {"messages", m}};
  };
  o.json["building"] = rep(b);
  o.json["well_connected"] = rep(w);
  o.text += std::string("building: ") + (b.passed ? "pass" : "fail") + "\n";
  for (auto& m : b.messages) o.text += "  " + m + "\n";
  o.text += std::string("well connected: ") + (w.passed ? "pass" : "fail") + "\n";
  for (auto& m : w.messages) o.text += "  " + m + "\n";
  bool passed = good.passed && b.passed && w.passed;
  o.json["passed"] = passed;
  o.text += std::string("validate: ") + (passed ? "pass" : "fail") + "\n";
  o.code = passed ? Ok : ValidationFailure;
  return o;
}

Outcome cmd_poset(const Context& ctx) {
  Outcome o;
  o.json = Json{{"command", "poset"}};
  Json p = to_json(*ctx.poset);
  o.json["ambient_rank"] = p["ambient_rank"];
  o.json["elements"] = p["elements"];
  std::ostringstream os;
  os << "L' has " << ctx.poset->size() << " elements\n";
  for (int a = 0; a < ctx.poset->size(); ++a) {
    const Layer& l = ctx.poset->element(a);
    std::vector<std::string> eqs, above;
    for (Eigen::Index i = 0; i < l.gamma().rank(); ++i)
      eqs.push_back("chi" + format_ray(l.gamma().basis().row(i).transpose()) + " = " + format_rational(l.phi()[std::size_t(i)]));
    for (int b = 0; b < ctx.poset->size(); ++b)
      if (b != a && ctx.poset->below(a, b)) above.push_back("L" + std::to_string(b));
    os << "  L" << a << " codim " << l.codim() << ": " << join(eqs, ", ");
    if (!above.empty()) os << "  < " << join(above, ",");
    os << "\n";
  }
  o.text = os.str();
  return o;
}

Outcome cmd_nested(const Context& ctx) {
  Outcome o;
  BuildingSet b = ctx.building();
  Json g = Json::array(), gp = Json::array();
  std::ostringstream os;
  auto plain = enumerate_nested(b);
  auto plus = enumerate_nested_plus(b, ctx.job.fan);
  os << "nested sets of G: " << plain.size() << "\n";
  for (auto& s : plain) {
    g.push_back(nested_name(NestedSet{s, {}}));
    os << "  " << nested_name(NestedSet{s, {}}) << "\n";
  }
  os << "nested sets of G+: " << plus.size() << "\n";
  for (auto& s : plus) {
    gp.push_back(nested_name(s));
    os << "  " << nested_name(s) << "\n";
  }
  o.json = Json{{"command", "nested"}, {"G", g}, {"G_plus", gp}};
  o.text = os.str();
  return o;
}

Outcome presentation_outcome(const char* command, const ModelPresentation& p, int max_degree) {
  Outcome o;
  HilbertResult h = hilbert_function(p, max_degree);
  bool ok = sane_ranks(h);
  o.json = Json{{"command", command}};
  Json body = to_json(p, h);
  for (auto& [k, v] : body.items()) o.json[k] = v;
  o.json["passed"] = ok;
  o.text = render_text(p, h);
  if (!ok) o.text += "checks: fail (torsion, or ranks not palindromic with b_0 = top = 1)\n";
  o.code = ok ? Ok : ValidationFailure;
  return o;
}

Outcome cmd_present(const Context& ctx) {
  auto ring = std::make_shared<const DanilovRing>(ctx.job.fan);
  PresentationOptions opts;
  opts.basis_bound = ctx.job.basis_bound;
  return presentation_outcome("present", assemble_model_ideal(ring, ctx.building(), opts), ctx.max_degree);
}

Outcome cmd_stratum(const Context& ctx, const std::string& spec) {
  auto ring = std::make_shared<const DanilovRing>(ctx.job.fan);
  BuildingSet b = ctx.building();
  NestedSet s = parse_nested(spec, b, ctx.job.fan);
  PresentationOptions opts;
  opts.basis_bound = ctx.job.basis_bound;
  return presentation_outcome("stratum", assemble_stratum_ideal(ring, b, s, opts), ctx.max_degree);
}

Outcome cmd_betti(const Context& ctx) {
  Outcome o;
  BuildingSet b = ctx.building();
  std::vector<Layer> layers;
  for (int i = 0; i < b.size(); ++i) layers.push_back(b.layer(i));
  BlowupPlan plan = model_betti_plan(ctx.job.fan, layers);
  o.json = Json{{"command", "betti"}};
  Json body = to_json(plan);
  for (auto& [k, v] : body.items()) o.json[k] = v;
  std::ostringstream os;
  os << "start: " << vec_text(plan.start) << "\n";
  for (auto& s : plan.steps) {
    os << "  blow up G" << s.member + 1 << " (codim " << s.codim << ")";
    if (s.codim > 1) os << " center " << vec_text(s.center);
    os << " -> " << vec_text(s.after) << "\n";
  }
  os << "betti: " << vec_text(plan.result) << "\n";
  o.text = os.str();
  return o;
}

Outcome cmd_check(const Context& ctx) {
  Outcome o;
  BuildingSet b = ctx.building();
  auto ring = std::make_shared<const DanilovRing>(ctx.job.fan);
  PresentationOptions opts;
  opts.basis_bound = ctx.job.basis_bound;
  auto oracle_task = [&] { return model_betti(ctx.job.fan, b); };
  std::future<BettiVector> oracle_future;
  if (ctx.jobs > 1) oracle_future = std::async(std::launch::async, oracle_task);
  HilbertResult h = hilbert_function(assemble_model_ideal(ring, b, opts), ctx.max_degree);
  BettiVector oracle = ctx.jobs > 1 ? oracle_future.get() : oracle_task();
  VerifyReport r = verify(h.ranks, oracle, h.torsion_free());
  auto hil = trim(h.ranks), orc = trim(oracle);
  o.json = Json{{"command", "check"}, {"hilbert", json_longs(hil)}, {"oracle", json_longs(orc)}, {"verify", to_json(r)}};
  std::ostringstream os;
  os << "hilbert " << vec_text(hil) << (r.passed ? " = " : " vs ") << "oracle " << vec_text(orc) << ": "
     << (r.passed ? "pass" : "fail") << "\n";
  for (auto& m : r.messages) os << "  " << m << "\n";
  o.text = os.str();
  o.code = r.passed ? Ok : ValidationFailure;
  return o;
}

Outcome cmd_goodfan(const Context& ctx, bool search, unsigned long seed) {
  Outcome o;
  o.json = Json{{"command", "goodfan"}, {"seed", seed}};
  auto lattices = ctx.lattices();
  if (!search) {
    auto good = validate_good(ctx.job.fan, lattices, ctx.job.basis_bound);
    goodness_into(ctx.job.fan, good, o);
    o.json["passed"] = good.passed;
    o.text += std::string("good: ") + (good.passed ? "pass" : "fail") + "\n";
    o.code = good.passed ? Ok : ValidationFailure;
    return o;
  }
  const int budget = ctx.job.budget.value_or(64);
  GoodFanSearch s = search_good_fan(ctx.job.fan, lattices, budget, ctx.job.basis_bound);
  Json steps = Json::array();
  std::ostringstream os;
  os << "seed: " << seed << "\n";
  for (auto& [cone, ray] : s.steps) {
    Json r = Json::array();
    for (Eigen::Index i = 0; i < ray.size(); ++i) r.push_back(to_long(ray(i)));
    steps.push_back(Json{{"face", cone}, {"ray", r}});
    os << "  subdivide at " << format_ray(ray) << "\n";
  }
  o.json["budget"] = budget;
  o.json["passed"] = s.passed;
  o.json["subdivisions"] = s.subdivisions;
  o.json["steps"] = steps;
  o.json["fan"] = to_json(s.fan);
  os << "subdivisions: " << s.subdivisions << " of budget " << budget << "\n";
  os << "search: " << (s.passed ? "pass" : "budget exhausted") << "\n";
  os << "fan: " << to_json(s.fan).dump() << "\n";
  o.text = os.str();
  o.code = s.passed ? Ok : BudgetExhausted;
  return o;
}

unsigned long read_seed() {
  const char* env = std::getenv("WONDER_SEED");
  if (!env) return 0;
  try {
    return std::stoul(env);
  } catch (const std::exception&) {
    throw Error(ErrorCode::Schema, "WONDER_SEED is not a non-negative integer");
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohomology of projective wonderful models of toric arrangements", "wonder"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings st;
  app.add_option("--input", st.input, "job JSON file")->required();
  app.add_option("--output", st.output, "write the artifact here instead of stdout");
  app.add_option("--format", st.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--max-degree", st.max_degree, "highest degree computed (default rank + 1)");
  app.add_option("--budget", st.budget, "subdivision budget for goodfan --search");
  app.add_option("--jobs", st.jobs, "worker threads (default: available cores)");

  app.add_subcommand("validate", "fan goodness and building checks");
  app.add_subcommand("poset", "emit the poset L'");
  app.add_subcommand("nested", "enumerate nested sets of G and G+");
  app.add_subcommand("present", "presentation of the cohomology of the model");
  auto* stratum = app.add_subcommand("stratum", "presentation of a boundary stratum");
  stratum->add_option("--nested", st.nested, "nested set, e.g. \"G1,D0\"")->required();
  app.add_subcommand("betti", "Betti numbers from the blowup oracle");
  app.add_subcommand("check", "presentation, oracle and comparison");
  auto* goodfan = app.add_subcommand("goodfan", "good-fan validation or repair");
  goodfan->add_flag("--search", st.search, "subdivide until good or out of budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? Ok : SchemaError;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  Outcome o;
  try {
    Context ctx;
    ctx.job = load_job(st.input);
    if (st.budget) ctx.job.budget = st.budget;
    if (st.max_degree) ctx.job.max_degree = st.max_degree;
    ctx.max_degree = ctx.job.max_degree.value_or(int(ctx.job.rank) + 1);
    if (ctx.max_degree < 0) throw Error(ErrorCode::Schema, "max degree must be non-negative");
    ctx.jobs = st.jobs > 0 ? st.jobs : int(std::max(1u, std::thread::hardware_concurrency()));
    ctx.poset = std::make_shared<const LayerPoset>(build_layer_poset(ctx.job.layers));
    const unsigned long seed = read_seed();

    if (command == "validate") o = cmd_validate(ctx);
    else if (command == "poset") o = cmd_poset(ctx);
    else if (command == "nested") o = cmd_nested(ctx);
    else if (command == "present") o = cmd_present(ctx);
    else if (command == "stratum") o = cmd_stratum(ctx, st.nested);
    else if (command == "betti") o = cmd_betti(ctx);
    else if (command == "check") o = cmd_check(ctx);
    else o = cmd_goodfan(ctx, st.search, seed);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::Schema ? SchemaError : ValidationFailure;
  }

  std::string body = st.format == "json" ? o.json.dump(2) + "\n" : o.text;
  if (st.output.empty()) {
    out << body;
  } else {
    std::ofstream f(st.output);
    if (!f) {
      err << "error: cannot write '" << st.output << "'\n";
      return SchemaError;
    }
    f << body;
  }
  return o.code;
}

}  // namespace wonder
