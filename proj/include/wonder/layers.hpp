#pragma once

#include "wonder/fan.hpp"

#include <optional>
#include <vector>

namespace wonder {

/// A layer: the coset {t : chi(t) = phi(chi), chi in Gamma} of a subtorus.
/// phi holds torsion values on the canonical basis rows of gamma, in [0, 1).
class Layer {
 public:
  Layer() = default;
  Layer(Sublattice gamma, std::vector<Rational> phi);

  /// Layer cut out by chi_i(t) = values_i for the given character rows.
  /// Throws NotSplit if the rows do not span a saturated lattice, and
  /// Schema if the values are inconsistent.
  static Layer from_equations(const IntMatrix& characters, const std::vector<Rational>& values);
  /// The whole torus (Gamma = 0).
  static Layer whole(Eigen::Index ambient_rank);

  const Sublattice& gamma() const { return gamma_; }
  const std::vector<Rational>& phi() const { return phi_; }
  Eigen::Index codim() const { return gamma_.rank(); }
  Eigen::Index ambient_rank() const { return gamma_.ambient_rank(); }

  /// phi(chi) for chi in gamma.
  Rational value(const IntRow& chi) const;

  friend bool operator==(const Layer& a, const Layer& b) { return a.gamma_ == b.gamma_ && a.phi_ == b.phi_; }

 private:
  Sublattice gamma_;
  std::vector<Rational> phi_;
};

/// Codimension, then canonical basis, then phi.
bool layer_less(const Layer& a, const Layer& b);

/// Connected components of the intersection inside the torus; empty when
/// the intersection is empty.  The empty list of layers intersects to the torus.
std::vector<Layer> intersect_layers(const std::vector<Layer>& layers);

/// a is contained in b.
bool layer_inclusion(const Layer& a, const Layer& b);

/// The closure of the layer meets the orbit of the cone.
bool closure_nonempty_with_orbit(const Layer& layer, const Cone& cone, const Fan& fan);

/// A layer H inside Z rewritten as a layer of the torus of Z, in the chart of Gamma_Z.
Layer restrict_layer(const Layer& z, const QuotientChart& chart, const Layer& h);

/// The poset L' of closures of layers and of components of their intersections.
class LayerPoset {
 public:
  LayerPoset() = default;
  /// Elements must already be closed under intersection and sorted by layer_less.
  explicit LayerPoset(std::vector<Layer> elements);

  int size() const { return int(elements_.size()); }
  Eigen::Index ambient_rank() const { return ambient_; }
  const Layer& element(int id) const { return elements_[std::size_t(id)]; }
  const std::vector<Layer>& elements() const { return elements_; }
  Eigen::Index codim(int id) const { return element(id).codim(); }

  /// Element a is contained in element b (reflexive).
  bool below(int a, int b) const { return below_[std::size_t(a)][std::size_t(b)]; }
  int find(const Layer& layer) const;

  /// Component ids of the intersection of the given (nonempty) id set.
  std::vector<int> meet(const std::vector<int>& ids) const;

 private:
  Eigen::Index ambient_ = 0;
  std::vector<Layer> elements_;
  std::vector<std::vector<bool>> below_;
};

/// Closure of the arrangement under intersection; throws NotSplit when an
/// input lattice is not a split summand.
LayerPoset build_layer_poset(const std::vector<Layer>& arrangement);

}  // namespace wonder
