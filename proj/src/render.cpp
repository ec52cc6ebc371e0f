#include "wonder/render.hpp"

#include <algorithm>
#include <sstream>

namespace wonder {

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string member_list(const std::vector<int>& members) {
  std::vector<std::string> names;
  for (int m : members) names.push_back("t" + std::to_string(m + 1));
  return "{" + join(names, ",") + "}";
}

std::string layer_text(const Layer& l) {
  std::vector<std::string> eqs;
  const IntMatrix& b = l.gamma().basis();
  for (Eigen::Index i = 0; i < b.rows(); ++i)
    eqs.push_back("chi" + format_ray(b.row(i).transpose()) + " = " + format_rational(l.phi()[std::size_t(i)]));
  return join(eqs, ", ");
}

}  // namespace

std::string ray_name(const IntVector& ray) {
  std::vector<std::string> parts;
  for (Eigen::Index i = 0; i < ray.size(); ++i) {
    const Integer& x = ray(i);
    parts.push_back(x > 0 ? "+" + x.get_str() : x.get_str());
  }
  return "c(" + join(parts, ",") + ")";
}

std::string render_polynomial(const Polynomial& p, const Fan& fan) {
  if (p.is_zero()) return "0";
  const int rc = fan.ray_count();
  std::vector<std::pair<Monomial, Integer>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [&](auto& a, auto& b) {
    Monomial ta(a.first.begin() + rc, a.first.end()), tb(b.first.begin() + rc, b.first.end());
    if (ta != tb) return ta > tb;
    return a.first > b.first;
  });
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const auto& [m, c] = terms[k];
    std::vector<std::string> factors;
    for (std::size_t v = std::size_t(rc); v < m.size(); ++v)
      if (m[v]) factors.push_back("t" + std::to_string(int(v) - rc + 1) + (m[v] > 1 ? "^" + std::to_string(m[v]) : ""));
    for (int v = 0; v < rc; ++v)
      if (m[std::size_t(v)])
        factors.push_back(ray_name(fan.ray(v)) + (m[std::size_t(v)] > 1 ? "^" + std::to_string(m[std::size_t(v)]) : ""));
    Integer mag = abs_value(c);
    std::string body = join(factors, "*");
    if (body.empty())
      body = mag.get_str();
    else if (mag != 1)
      body = mag.get_str() + "*" + body;
    if (k == 0)
      out += (c < 0 ? "-" : "") + body;
    else
      out += (c < 0 ? " - " : " + ") + body;
  }
  return out;
}

std::string render_text(const ModelPresentation& p, const HilbertResult& h) {
  const Fan& fan = p.base->fan();
  std::ostringstream os;
  std::vector<std::string> cs;
  for (auto& r : fan.rays()) cs.push_back(ray_name(r));
  os << "base ring: Z[" << join(cs, ", ") << "]";
  std::vector<std::string> ref;
  for (int r : p.base->reference_cone()) ref.push_back(ray_name(fan.ray(r)));
  os << "  (eliminated: " << join(ref, ", ") << ")\n";
  if (p.member_count() == 0) {
    os << "t variables: none\n";
  } else {
    os << "t variables:\n";
    for (int i = 0; i < p.member_count(); ++i)
      os << "  t" << i + 1 << ": " << layer_text(p.building.layer(i)) << "\n";
  }
  if (p.stratum) {
    std::vector<std::string> s;
    for (int m : p.stratum->members) s.push_back("G" + std::to_string(m + 1));
    for (int r : p.stratum->rays) s.push_back("D" + std::to_string(r));
    os << "stratum: {" << join(s, ",") << "}\n";
  }

  for (RelationGroup g : {RelationGroup::SR, RelationGroup::Linear, RelationGroup::StratumC, RelationGroup::TC,
                          RelationGroup::F, RelationGroup::F0}) {
    bool header = false;
    for (auto& rel : p.relations) {
      if (rel.group != g) continue;
      if (!header) {
        os << "relations " << to_string(g) << ":\n";
        header = true;
      }
      const Provenance& pv = rel.provenance;
      std::vector<std::string> tag;
      if (pv.member >= 0) tag.push_back("i=" + std::to_string(pv.member + 1));
      if (g == RelationGroup::F || g == RelationGroup::F0) tag.push_back("A=" + member_list(pv.subset));
      if (!pv.folded.empty()) tag.push_back("S_i=" + member_list(pv.folded));
      if (pv.component == -1) tag.push_back("M=X");
      if (pv.component >= 0) tag.push_back("M=L" + std::to_string(pv.component));
      if (pv.ray >= 0) tag.push_back("r=" + ray_name(fan.ray(pv.ray)));
      if (!pv.nonface.empty()) {
        std::vector<std::string> nf;
        for (int r : pv.nonface) nf.push_back(ray_name(fan.ray(r)));
        tag.push_back("nonface={" + join(nf, ",") + "}");
      }
      if (pv.coordinate >= 0) tag.push_back("coordinate=" + std::to_string(pv.coordinate));
      os << "  " << render_polynomial(rel.poly, fan);
      if (!tag.empty()) os << "    [" << join(tag, " ") << "]";
      os << "\n";
    }
  }
  std::vector<std::string> hs;
  for (long x : h.ranks) hs.push_back(std::to_string(x));
  os << "hilbert: (" << join(hs, ",") << ")\n";
  if (!h.torsion_free()) {
    os << "torsion:";
    for (std::size_t d = 0; d < h.torsion.size(); ++d)
      for (auto& x : h.torsion[d]) os << " deg" << d << ":Z/" << x.get_str();
    os << "\n";
  }
  return os.str();
}

}  // namespace wonder
