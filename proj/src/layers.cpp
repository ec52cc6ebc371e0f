#include "wonder/layers.hpp"

#include <algorithm>

namespace wonder {

Layer::Layer(Sublattice gamma, std::vector<Rational> phi) : gamma_(std::move(gamma)), phi_(std::move(phi)) {
  if (!gamma_.saturated()) throw Error(ErrorCode::NotSplit, "layer lattice is not a split summand");
  if (Eigen::Index(phi_.size()) != gamma_.rank())
    throw Error(ErrorCode::Schema, "phi needs one value per basis vector of gamma");
  for (auto& v : phi_) v = mod_one(v);
}

Layer Layer::from_equations(const IntMatrix& characters, const std::vector<Rational>& values) {
  if (Eigen::Index(values.size()) != characters.rows())
    throw Error(ErrorCode::Schema, "one phi value per gamma row required");
  Sublattice span(characters.cols(), characters);
  if (!span.saturated()) throw Error(ErrorCode::NotSplit, "layer lattice is not a split summand");
  auto sol = solve_torsion_congruences(characters, values);
  if (sol.values.empty()) throw Error(ErrorCode::Schema, "inconsistent phi values");
  return Layer(sol.saturation, sol.values.front());
}

Layer Layer::whole(Eigen::Index ambient_rank) { return Layer(Sublattice::zero(ambient_rank), {}); }

Rational Layer::value(const IntRow& chi) const {
  auto coords = gamma_.coordinates(chi);
  if (!coords) throw std::invalid_argument("character is not in the layer lattice");
  Rational acc = 0;
  for (Eigen::Index i = 0; i < coords->size(); ++i) acc += Rational((*coords)(i)) * phi_[std::size_t(i)];
  return mod_one(acc);
}

bool layer_less(const Layer& a, const Layer& b) {
  if (a.codim() != b.codim()) return a.codim() < b.codim();
  if (a.gamma().basis() != b.gamma().basis()) return lex_less(a.gamma().basis(), b.gamma().basis());
  return a.phi() < b.phi();
}

std::vector<Layer> intersect_layers(const std::vector<Layer>& layers) {
  if (layers.empty()) throw std::invalid_argument("intersect_layers needs at least one layer");
  const Eigen::Index n = layers.front().ambient_rank();
  Eigen::Index rows = 0;
  for (auto& l : layers) rows += l.codim();
  IntMatrix gens(rows, n);
  std::vector<Rational> values;
  Eigen::Index r = 0;
  for (auto& l : layers) {
    if (l.ambient_rank() != n) throw std::invalid_argument("layers live in different tori");
    if (l.codim() > 0) gens.middleRows(r, l.codim()) = l.gamma().basis();
    r += l.codim();
    values.insert(values.end(), l.phi().begin(), l.phi().end());
  }
  if (rows == 0) return {Layer::whole(n)};
  auto sol = solve_torsion_congruences(gens, values);
  std::vector<Layer> out;
  for (auto& v : sol.values) out.emplace_back(sol.saturation, v);
  std::sort(out.begin(), out.end(), layer_less);
  return out;
}

bool layer_inclusion(const Layer& a, const Layer& b) {
  if (!a.gamma().contains(b.gamma())) return false;
  for (Eigen::Index i = 0; i < b.codim(); ++i)
    if (a.value(b.gamma().basis().row(i)) != b.phi()[std::size_t(i)]) return false;
  return true;
}

bool closure_nonempty_with_orbit(const Layer& layer, const Cone& cone, const Fan& fan) {
  for (int r : cone)
    if (!layer.gamma().annihilates(fan.ray(r))) return false;
  return true;
}

Layer restrict_layer(const Layer& z, const QuotientChart& chart, const Layer& h) {
  if (!layer_inclusion(h, z)) throw Error(ErrorCode::NotContained, "layer is not inside the ambient layer");
  const Eigen::Index s = chart.gamma_rank(), q = chart.quotient_rank();
  const IntMatrix& basis = chart.basis();
  IntMatrix projected(h.codim(), q);
  std::vector<Rational> values;
  for (Eigen::Index i = 0; i < h.codim(); ++i) {
    IntRow a = chart.character_coordinates(h.gamma().basis().row(i));
    projected.row(i) = a.tail(q);
    Rational v = h.phi()[std::size_t(i)];
    for (Eigen::Index j = 0; j < s; ++j) v -= Rational(a(j)) * z.value(basis.row(j));
    values.push_back(v);
  }
  return Layer::from_equations(projected, values);
}

LayerPoset::LayerPoset(std::vector<Layer> elements) : elements_(std::move(elements)) {
  ambient_ = elements_.empty() ? 0 : elements_.front().ambient_rank();
  const std::size_t k = elements_.size();
  below_.assign(k, std::vector<bool>(k, false));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) below_[a][b] = layer_inclusion(elements_[a], elements_[b]);
}

int LayerPoset::find(const Layer& layer) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), layer, layer_less);
  if (it != elements_.end() && *it == layer) return int(it - elements_.begin());
  return -1;
}

std::vector<int> LayerPoset::meet(const std::vector<int>& ids) const {
  if (ids.empty()) throw std::invalid_argument("meet of no elements");
  std::vector<Layer> parts;
  for (int id : ids) parts.push_back(element(id));
  std::vector<int> out;
  for (auto& c : intersect_layers(parts)) {
    int id = find(c);
    if (id < 0) throw std::logic_error("layer poset is not closed under intersection");
    out.push_back(id);
  }
  return out;
}

LayerPoset build_layer_poset(const std::vector<Layer>& arrangement) {
  std::vector<Layer> items;
  for (auto& l : arrangement) {
    if (!l.gamma().saturated()) throw Error(ErrorCode::NotSplit, "arrangement lattice is not a split summand");
    if (l.codim() == 0) continue;
    if (std::find(items.begin(), items.end(), l) == items.end()) items.push_back(l);
  }
  // Pairwise closure: the components of a triple intersection are components
  // of (component of a pair) meet (third layer).
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      for (auto& c : intersect_layers({items[i], items[j]}))
        if (std::find(items.begin(), items.end(), c) == items.end()) items.push_back(c);
  std::sort(items.begin(), items.end(), layer_less);
  return LayerPoset(std::move(items));
}

}  // namespace wonder
