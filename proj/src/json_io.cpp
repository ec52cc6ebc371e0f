#include "wonder/json_io.hpp"

#include <set>

namespace wonder {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorCode::Schema, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema(std::string("missing field '") + key + "'");
  return j.at(key);
}

long long as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) schema(where + ": expected an integer");
  return j.get<long long>();
}

IntVector vector_from_json(const Json& j, Eigen::Index rank, const std::string& where) {
  if (!j.is_array()) schema(where + ": expected an array");
  if (Eigen::Index(j.size()) != rank) schema(where + ": expected length " + std::to_string(rank));
  IntVector v(rank);
  for (Eigen::Index i = 0; i < rank; ++i) v(i) = Integer(long(as_int(j[std::size_t(i)], where)));
  return v;
}

Json row_to_json(const IntRow& r) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < r.size(); ++i) out.push_back(to_long(r(i)));
  return out;
}

Json matrix_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(row_to_json(m.row(i)));
  return out;
}

Json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Json longs(const std::vector<long>& v) {
  Json out = Json::array();
  for (long x : v) out.push_back(x);
  return out;
}

Json ints(const std::vector<int>& v) {
  Json out = Json::array();
  for (int x : v) out.push_back(x);
  return out;
}

std::string member_name(int index) { return "G" + std::to_string(index + 1); }

}  // namespace

Json to_json(const Fan& fan) {
  Json rays = Json::array();
  for (auto& r : fan.rays()) rays.push_back(row_to_json(r.transpose()));
  Json cones = Json::array();
  for (auto& c : fan.max_cones()) cones.push_back(ints(c));
  return Json{{"rank", fan.rank()}, {"rays", rays}, {"max_cones", cones}};
}

Fan fan_from_json(const Json& j) {
  if (!j.is_object()) schema("fan: expected an object");
  const long long rank = as_int(field(j, "rank"), "fan.rank");
  if (rank < 0) schema("fan.rank: negative");
  const Json& rays = field(j, "rays");
  const Json& cones = field(j, "max_cones");
  if (!rays.is_array() || !cones.is_array()) schema("fan: rays and max_cones must be arrays");
  std::vector<IntVector> rv;
  for (std::size_t i = 0; i < rays.size(); ++i)
    rv.push_back(vector_from_json(rays[i], rank, "fan.rays[" + std::to_string(i) + "]"));
  std::vector<Cone> cv;
  for (std::size_t i = 0; i < cones.size(); ++i) {
    if (!cones[i].is_array()) schema("fan.max_cones: expected arrays of ray indices");
    Cone c;
    for (auto& x : cones[i]) c.push_back(int(as_int(x, "fan.max_cones")));
    cv.push_back(std::move(c));
  }
  return Fan(rank, std::move(rv), std::move(cv));
}

Json to_json(const Layer& layer) {
  Json phi = Json::array();
  for (auto& v : layer.phi()) phi.push_back(format_rational(v));
  return Json{{"gamma", matrix_to_json(layer.gamma().basis())}, {"phi", phi}};
}

Layer layer_from_json(const Json& j, Eigen::Index rank) {
  if (!j.is_object()) schema("layer: expected an object");
  const Json& gamma = field(j, "gamma");
  const Json& phi = field(j, "phi");
  if (!gamma.is_array() || !phi.is_array()) schema("layer: gamma and phi must be arrays");
  if (gamma.size() != phi.size()) schema("layer: gamma and phi differ in length");
  if (gamma.empty()) schema("layer: empty gamma");
  IntMatrix chars(Eigen::Index(gamma.size()), rank);
  std::vector<Rational> values;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    chars.row(Eigen::Index(i)) = vector_from_json(gamma[i], rank, "layer.gamma").transpose();
    if (phi[i].is_string()) {
      try {
        values.push_back(parse_rational(phi[i].get<std::string>()));
      } catch (const std::exception&) {
        schema("layer.phi: bad rational '" + phi[i].get<std::string>() + "'");
      }
    } else if (phi[i].is_number_integer()) {
      values.emplace_back(long(phi[i].get<long long>()));
    } else {
      schema("layer.phi: expected strings like \"1/2\"");
    }
  }
  return Layer::from_equations(chars, values);
}

Json polynomial_to_json(const Polynomial& p, int ray_count) {
  Json out = Json::array();
  for (auto& [m, c] : p.terms()) {
    Json exp = Json::object();
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      int iv = int(v);
      exp[iv < ray_count ? "c:" + std::to_string(iv) : "t:" + std::to_string(iv - ray_count + 1)] = m[v];
    }
    out.push_back(Json{{"coef", integer_json(c)}, {"exp", exp}});
  }
  return out;
}

Polynomial polynomial_from_json(const Json& j, int ray_count, int member_count) {
  const int total = ray_count + member_count;
  Polynomial p(total);
  if (!j.is_array()) schema("polynomial: expected an array of terms");
  for (auto& term : j) {
    const Json& coef = field(term, "coef");
    Integer c;
    if (coef.is_number_integer())
      c = Integer(long(coef.get<long long>()));
    else if (coef.is_string())
      c = Integer(coef.get<std::string>());
    else
      schema("polynomial: bad coefficient");
    Monomial m(std::size_t(total), 0);
    for (auto& [key, e] : field(term, "exp").items()) {
      if (key.size() < 3 || key[1] != ':') schema("polynomial: bad variable '" + key + "'");
      int idx = std::stoi(key.substr(2));
      int var = key[0] == 'c' ? idx : key[0] == 't' ? ray_count + idx - 1 : -1;
      if (var < 0 || var >= total || (key[0] == 'c' && idx >= ray_count) || (key[0] == 't' && idx < 1))
        schema("polynomial: variable out of range '" + key + "'");
      m[std::size_t(var)] = int(as_int(e, "polynomial exponent"));
    }
    p.add_term(m, c);
  }
  return p;
}

JobSpec job_from_json(const Json& j) {
  if (!j.is_object()) schema("job: expected an object");
  JobSpec job;
  job.fan = fan_from_json(field(j, "fan"));
  job.rank = job.fan.rank();
  if (j.contains("rank") && as_int(j.at("rank"), "rank") != job.rank) schema("rank disagrees with fan.rank");
  const Json& layers = field(j, "layers");
  if (!layers.is_array()) schema("layers: expected an array");
  for (auto& l : layers) job.layers.push_back(layer_from_json(l, job.rank));
  if (j.contains("building")) {
    const Json& b = j.at("building");
    if (b.is_string()) {
      if (b.get<std::string>() != "all") schema("building: expected \"all\" or a list of layers");
    } else if (b.is_array()) {
      std::vector<Layer> sel;
      for (auto& l : b) sel.push_back(layer_from_json(l, job.rank));
      job.building = std::move(sel);
    } else {
      schema("building: expected \"all\" or a list of layers");
    }
  }
  if (j.contains("options")) {
    const Json& o = j.at("options");
    if (!o.is_object()) schema("options: expected an object");
    if (o.contains("max_degree")) job.max_degree = int(as_int(o.at("max_degree"), "options.max_degree"));
    if (o.contains("budget")) job.budget = int(as_int(o.at("budget"), "options.budget"));
    if (o.contains("basis_bound")) job.basis_bound = int(as_int(o.at("basis_bound"), "options.basis_bound"));
  }
  return job;
}

Json to_json(const JobSpec& job) {
  Json layers = Json::array();
  for (auto& l : job.layers) layers.push_back(to_json(l));
  Json out{{"rank", job.rank}, {"fan", to_json(job.fan)}, {"layers", layers}};
  if (job.building) {
    Json b = Json::array();
    for (auto& l : *job.building) b.push_back(to_json(l));
    out["building"] = b;
  } else {
    out["building"] = "all";
  }
  Json options = Json::object();
  if (job.max_degree) options["max_degree"] = *job.max_degree;
  if (job.budget) options["budget"] = *job.budget;
  options["basis_bound"] = job.basis_bound;
  out["options"] = options;
  return out;
}

Json to_json(const LayerPoset& poset) {
  Json elements = Json::array();
  for (int a = 0; a < poset.size(); ++a) {
    Json e = to_json(poset.element(a));
    e["id"] = a;
    e["codim"] = poset.codim(a);
    std::vector<int> above;
    for (int b = 0; b < poset.size(); ++b)
      if (b != a && poset.below(a, b)) above.push_back(b);
    e["contained_in"] = ints(above);
    elements.push_back(e);
  }
  return Json{{"ambient_rank", poset.ambient_rank()}, {"elements", elements}};
}

Json to_json(const ModelPresentation& p, const HilbertResult& h) {
  const int rc = p.ray_count();
  Json c_vars = Json::array();
  for (int r = 0; r < rc; ++r) c_vars.push_back(Json{{"name", "c:" + std::to_string(r)}, {"ray", row_to_json(p.base->fan().ray(r).transpose())}});
  Json base{{"fan", to_json(p.base->fan())}, {"variables", c_vars}, {"reference_cone", ints(p.base->reference_cone())}};

  Json t_vars = Json::array();
  for (int i = 0; i < p.member_count(); ++i) {
    Json t = to_json(p.building.layer(i));
    t = Json{{"name", "t:" + std::to_string(i + 1)}, {"member", member_name(i)}, {"element", p.building.members[std::size_t(i)]},
             {"gamma", t["gamma"]}, {"phi", t["phi"]}};
    t_vars.push_back(t);
  }

  Json rels = Json::array();
  for (auto& r : p.relations) {
    Json prov = Json::object();
    const Provenance& pv = r.provenance;
    if (pv.member >= 0) prov["i"] = pv.member + 1;
    if (r.group == RelationGroup::F || r.group == RelationGroup::F0) {
      Json a = Json::array();
      for (int x : pv.subset) a.push_back(x + 1);
      prov["A"] = a;
    }
    if (!pv.folded.empty()) {
      Json s = Json::array();
      for (int x : pv.folded) s.push_back(x + 1);
      prov["S_i"] = s;
    }
    if (pv.component == -1) prov["M"] = "X";
    if (pv.component >= 0) prov["M"] = pv.component;
    if (pv.ray >= 0) prov["r"] = pv.ray;
    if (!pv.nonface.empty()) prov["nonface"] = ints(pv.nonface);
    if (pv.coordinate >= 0) prov["coordinate"] = pv.coordinate;
    rels.push_back(Json{{"group", to_string(r.group)}, {"provenance", prov}, {"poly", polynomial_to_json(r.poly, rc)}});
  }

  Json torsion = Json::array();
  for (auto& t : h.torsion) {
    Json d = Json::array();
    for (auto& x : t) d.push_back(integer_json(x));
    torsion.push_back(d);
  }
  Json out{{"base_ring", base}, {"t_vars", t_vars}, {"relations", rels},
           {"hilbert", longs(h.ranks)}, {"torsion", torsion}};
  if (p.stratum) {
    Json s{{"members", Json::array()}, {"rays", ints(p.stratum->rays)}};
    for (int m : p.stratum->members) s["members"].push_back(member_name(m));
    out["stratum"] = s;
  }
  return out;
}

Json to_json(const BlowupPlan& plan) {
  Json steps = Json::array();
  for (auto& s : plan.steps)
    steps.push_back(Json{{"member", member_name(s.member)}, {"codim", s.codim}, {"center", longs(s.center)}, {"after", longs(s.after)}});
  return Json{{"start", longs(plan.start)}, {"steps", steps}, {"betti", longs(plan.result)}};
}

Json to_json(const VerifyReport& r) {
  Json msgs = Json::array();
  for (auto& m : r.messages) msgs.push_back(m);
  return Json{{"passed", r.passed}, {"messages", msgs}, {"mismatched_degrees", ints(r.mismatched_degrees)}};
}

}  // namespace wonder
