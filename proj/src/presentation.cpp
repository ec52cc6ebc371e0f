#include "wonder/presentation.hpp"

#include <algorithm>
#include <map>

namespace wonder {

const char* to_string(RelationGroup g) {
  switch (g) {
    case RelationGroup::SR: return "SR";
    case RelationGroup::Linear: return "linear";
    case RelationGroup::TC: return "tc";
    case RelationGroup::F: return "F";
    case RelationGroup::F0: return "F0";
    case RelationGroup::StratumC: return "stratum_c";
  }
  return "?";
}

namespace {

std::vector<std::vector<int>> subsets_of(const std::vector<int>& items) {
  std::vector<std::vector<int>> out;
  for (unsigned long mask = 0; mask < (1ul << items.size()); ++mask) {
    std::vector<int> s;
    for (std::size_t i = 0; i < items.size(); ++i)
      if (mask & (1ul << i)) s.push_back(items[i]);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<int> range(int m) {
  std::vector<int> out(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) out[std::size_t(i)] = i;
  return out;
}

IntMatrix canonical_dense(const std::vector<SparseRow>& rows, Eigen::Index cols) {
  IntMatrix m = IntMatrix::Zero(Eigen::Index(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (auto& [c, x] : rows[i]) m(Eigen::Index(i), c) = x;
  if (m.rows() == 0) return m;
  return hermite_normal_form(m).basis();
}

class Assembler {
 public:
  Assembler(std::shared_ptr<const DanilovRing> base, const BuildingSet& building, const PresentationOptions& options)
      : base_(std::move(base)), building_(building), options_(options) {
    check_model_inputs(*base_, building_, options_.basis_bound);
    out_.base = base_;
    out_.building = building_;
    nv_ = out_.total_vars();
  }

  ModelPresentation model() {
    ring_relations();
    tc_relations();
    for (int i = 0; i < building_.size(); ++i)
      for (auto& a : subsets_of(above(i))) f_relation(i, a, {});
    for (auto& a : subsets_of(range(building_.size()))) {
      if (a.size() < 2 || !meets_empty(a)) continue;
      bool minimal = true;
      for (std::size_t drop = 0; drop < a.size() && minimal; ++drop) {
        auto sub = a;
        sub.erase(sub.begin() + long(drop));
        minimal = !meets_empty(sub);
      }
      if (minimal) f0_relation(a);
    }
    return std::move(out_);
  }

  ModelPresentation stratum(const NestedSet& s) {
    if (s.members.empty() && s.rays.empty()) return model();
    NestedSet sorted = s;
    std::sort(sorted.members.begin(), sorted.members.end());
    std::sort(sorted.rays.begin(), sorted.rays.end());
    if (!is_nested_plus(sorted, building_, base_->fan()))
      throw Error(ErrorCode::NotNested, "not a nested set of G+");
    out_.stratum = sorted;
    ring_relations();

    // Classes of boundary divisors that miss the stratum.
    const Fan& fan = base_->fan();
    std::vector<bool> killed(std::size_t(fan.ray_count()), false);
    std::vector<int> reason(std::size_t(fan.ray_count()), -1);
    for (int r = 0; r < fan.ray_count(); ++r) {
      Cone c = sorted.rays;
      if (std::find(c.begin(), c.end(), r) == c.end()) c.push_back(r);
      if (!fan.is_cone(c)) killed[std::size_t(r)] = true;
    }
    for (int g : sorted.members)
      for (int r = 0; r < fan.ray_count(); ++r)
        if (!killed[std::size_t(r)] && !building_.layer(g).gamma().annihilates(fan.ray(r))) {
          killed[std::size_t(r)] = true;
          reason[std::size_t(r)] = g;
        }
    for (int r = 0; r < fan.ray_count(); ++r)
      if (killed[std::size_t(r)]) {
        Relation rel{RelationGroup::StratumC, {}, Polynomial::variable(nv_, r)};
        rel.provenance.ray = r;
        rel.provenance.member = reason[std::size_t(r)];
        out_.relations.push_back(std::move(rel));
      }

    tc_relations();
    for (int i = 0; i < building_.size(); ++i) {
      std::vector<int> folded;
      for (int h : sorted.members)
        if (strictly_below(i, h)) folded.push_back(h);
      for (auto& a : subsets_of(above(i))) f_relation(i, a, folded);
    }
    // Products of t's whose divisors miss the stratum.
    for (auto& a : subsets_of(range(building_.size()))) {
      if (a.empty() || nested_with(a, sorted)) continue;
      bool minimal = true;
      for (std::size_t drop = 0; drop < a.size() && minimal; ++drop) {
        auto sub = a;
        sub.erase(sub.begin() + long(drop));
        minimal = nested_with(sub, sorted);
      }
      if (minimal) f0_relation(a);
    }
    return std::move(out_);
  }

 private:
  bool strictly_below(int i, int j) const {
    const auto& poset = *building_.poset;
    int a = building_.members[std::size_t(i)], b = building_.members[std::size_t(j)];
    return a != b && poset.below(a, b);
  }

  std::vector<int> above(int i) const {
    std::vector<int> out;
    for (int j = 0; j < building_.size(); ++j)
      if (strictly_below(i, j)) out.push_back(j);
    return out;
  }

  std::vector<int> elements(const std::vector<int>& members) const {
    std::vector<int> out;
    for (int j : members) out.push_back(building_.members[std::size_t(j)]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  bool meets_empty(const std::vector<int>& members) const {
    return building_.poset->meet(elements(members)).empty();
  }

  bool nested_with(const std::vector<int>& a, const NestedSet& s) const {
    NestedSet u = s;
    u.members.insert(u.members.end(), a.begin(), a.end());
    std::sort(u.members.begin(), u.members.end());
    u.members.erase(std::unique(u.members.begin(), u.members.end()), u.members.end());
    return is_nested_plus(u, building_, base_->fan());
  }

  Polynomial t(int member) const { return Polynomial::variable(nv_, out_.t_var(member)); }

  void ring_relations() {
    const auto& sr = base_->stanley_reisner();
    for (std::size_t i = 0; i < sr.size(); ++i) {
      Relation rel{RelationGroup::SR, {}, sr[i].extended(nv_)};
      rel.provenance.nonface = base_->minimal_nonfaces()[i];
      out_.relations.push_back(std::move(rel));
    }
    const auto& lin = base_->linear_relations();
    for (std::size_t i = 0; i < lin.size(); ++i) {
      Relation rel{RelationGroup::Linear, {}, lin[i].extended(nv_)};
      rel.provenance.coordinate = int(i);
      out_.relations.push_back(std::move(rel));
    }
  }

  void tc_relations() {
    const Fan& fan = base_->fan();
    for (int i = 0; i < building_.size(); ++i)
      for (int r = 0; r < fan.ray_count(); ++r)
        if (!building_.layer(i).gamma().annihilates(fan.ray(r))) {
          Relation rel{RelationGroup::TC, {}, t(i) * Polynomial::variable(nv_, r)};
          rel.provenance.member = i;
          rel.provenance.ray = r;
          out_.relations.push_back(std::move(rel));
        }
  }

  const PolyInT& lifting(int i, int component) {
    auto key = std::make_pair(i, component);
    auto it = liftings_.find(key);
    if (it != liftings_.end()) return it->second;
    const Layer& g = building_.layer(i);
    const Layer m = component < 0 ? Layer::whole(g.ambient_rank()) : building_.poset->element(component);
    PolyInT p = lift_chern_relative(g, m, *base_, options_.basis_bound).coefficients;
    if (options_.lifting) {
      p = options_.lifting(i, component, p);
      for (auto& c : p) c = base_->normal_form(c);
    }
    return liftings_.emplace(key, std::move(p)).first->second;
  }

  void f_relation(int i, const std::vector<int>& a, const std::vector<int>& folded) {
    std::vector<int> cut = a;
    cut.insert(cut.end(), folded.begin(), folded.end());
    int component = -1;
    const int gi = building_.members[std::size_t(i)];
    if (!cut.empty()) {
      int found = 0;
      for (int c : building_.poset->meet(elements(cut)))
        if (building_.poset->below(gi, c)) {
          component = c;
          ++found;
        }
      if (found != 1) throw std::logic_error("G_i must lie in exactly one component of the intersection");
    }
    const PolyInT& p = lifting(i, component);
    Polynomial sub(nv_);
    for (int h = 0; h < building_.size(); ++h)
      if (h == i || strictly_below(h, i)) sub -= t(h);
    Polynomial f = evaluate([&] {
      PolyInT ext;
      for (auto& c : p) ext.push_back(c.extended(nv_));
      return ext;
    }(), sub);
    for (int j : a) f = f * t(j);
    Relation rel{RelationGroup::F, {}, std::move(f)};
    rel.provenance.member = i;
    rel.provenance.subset = a;
    rel.provenance.folded = folded;
    rel.provenance.component = component;
    out_.relations.push_back(std::move(rel));
  }

  void f0_relation(const std::vector<int>& a) {
    Polynomial f = Polynomial::constant(nv_, 1);
    for (int j : a) f = f * t(j);
    Relation rel{RelationGroup::F0, {}, std::move(f)};
    rel.provenance.subset = a;
    out_.relations.push_back(std::move(rel));
  }

  std::shared_ptr<const DanilovRing> base_;
  const BuildingSet& building_;
  const PresentationOptions& options_;
  ModelPresentation out_;
  int nv_ = 0;
  std::map<std::pair<int, int>, PolyInT> liftings_;
};

}  // namespace

void check_model_inputs(const DanilovRing& base, const BuildingSet& building, int bound) {
  const auto& poset = *building.poset;
  for (int i = 0; i < building.size(); ++i)
    for (int j = i + 1; j < building.size(); ++j) {
      int a = building.members[std::size_t(i)], b = building.members[std::size_t(j)];
      if (a != b && poset.below(b, a)) throw Error(ErrorCode::BadOrder, "order does not refine inclusion");
    }
  std::vector<Sublattice> lattices;
  for (auto& l : poset.elements())
    if (std::find(lattices.begin(), lattices.end(), l.gamma()) == lattices.end()) lattices.push_back(l.gamma());
  auto good = validate_good(base.fan(), lattices, bound);
  if (!good.passed) throw Error(ErrorCode::NotGood, "fan is not good for the arrangement");
}

GradedIdeal ModelPresentation::ideal() const {
  const int nv = total_vars();
  std::vector<Polynomial> gens;
  for (auto& r : relations) {
    Polynomial e = base->eliminate(r.poly);
    if (r.group == RelationGroup::Linear) {
      if (!e.is_zero()) throw std::logic_error("linear relation survives elimination");
      continue;
    }
    if (!e.is_zero()) gens.push_back(std::move(e));
  }
  return GradedIdeal(nv, base->free_mask(nv), std::move(gens));
}

int ModelPresentation::dimension() const {
  int n = int(base->fan().rank());
  if (stratum) n -= int(stratum->members.size() + stratum->rays.size());
  return n;
}

ModelPresentation assemble_model_ideal(std::shared_ptr<const DanilovRing> base, const BuildingSet& building,
                                       const PresentationOptions& options) {
  return Assembler(std::move(base), building, options).model();
}

ModelPresentation assemble_stratum_ideal(std::shared_ptr<const DanilovRing> base, const BuildingSet& building,
                                         const NestedSet& s, const PresentationOptions& options) {
  return Assembler(std::move(base), building, options).stratum(s);
}

HilbertResult hilbert_function(const ModelPresentation& p, int max_degree) {
  GradedIdeal ideal = p.ideal();
  HilbertResult out;
  for (int d = 0; d <= max_degree; ++d) {
    const Slice& s = ideal.slice(d);
    out.ranks.push_back(s.quotient_rank());
    out.torsion.push_back(s.torsion);
  }
  return out;
}

bool ideal_equal_up_to(const ModelPresentation& a, const ModelPresentation& b, int max_degree) {
  if (a.total_vars() != b.total_vars() || !(a.base->fan() == b.base->fan()))
    throw Error(ErrorCode::DegreeMismatch, "presentations have different base rings");
  return same_slices_up_to(a.ideal(), b.ideal(), max_degree);
}

IntMatrix presentation_slice(const ModelPresentation& p, int d) {
  GradedIdeal ideal = p.ideal();
  const Slice& s = ideal.slice(d);
  return canonical_dense(s.basis, Eigen::Index(s.monomials.size()));
}

IntMatrix stratum_annihilator_slice(const ModelPresentation& model, const NestedSet& s, int d) {
  GradedIdeal ideal = model.ideal();
  const int n = int(model.base->fan().rank());
  const int nv = model.total_vars();
  const Slice& top = ideal.slice(n);
  if (top.quotient_rank() != 1) throw std::logic_error("model has no fundamental class");
  const Eigen::Index ntop = Eigen::Index(top.monomials.size());
  IntMatrix top_rows = IntMatrix::Zero(Eigen::Index(top.basis.size()), ntop);
  for (std::size_t i = 0; i < top.basis.size(); ++i)
    for (auto& [c, x] : top.basis[i]) top_rows(Eigen::Index(i), c) = x;
  IntMatrix functional = top_rows.rows() == 0 ? IntMatrix::Identity(1, 1) : integer_kernel(top_rows);
  if (functional.rows() != 1) throw std::logic_error("top slice is not of rank one");

  Polynomial cls = Polynomial::constant(nv, 1);
  for (int g : s.members) cls = cls * Polynomial::variable(nv, model.t_var(g));
  for (int r : s.rays) cls = cls * Polynomial::variable(nv, r);
  cls = model.base->eliminate(cls);

  const Slice& here = ideal.slice(d);
  const Eigen::Index nd = Eigen::Index(here.monomials.size());
  const int codeg = n - d - int(s.members.size() + s.rays.size());
  if (codeg < 0) return IntMatrix::Identity(nd, nd);
  auto partners = monomials_of_degree(ideal.active(), codeg);
  IntMatrix pairing = IntMatrix::Zero(nd, Eigen::Index(partners.size()));
  for (Eigen::Index i = 0; i < nd; ++i)
    for (std::size_t j = 0; j < partners.size(); ++j) {
      Polynomial prod = Polynomial::monomial(here.monomials[std::size_t(i)]) *
                        Polynomial::monomial(partners[j]) * cls;
      Integer v = 0;
      for (auto& [m, c] : prod.terms()) v += c * functional(0, top.column.at(m));
      pairing(i, Eigen::Index(j)) = v;
    }
  IntMatrix ker = integer_kernel(IntMatrix(pairing.transpose()));
  if (ker.rows() == 0) return IntMatrix(0, nd);
  return hermite_normal_form(ker).basis();
}

}  // namespace wonder
