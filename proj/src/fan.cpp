#include "wonder/fan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace wonder {

namespace {

bool lex_less_vec(const IntVector& a, const IntVector& b) {
  for (Eigen::Index i = 0; i < std::min(a.size(), b.size()); ++i)
    if (a(i) != b(i)) return a(i) < b(i);
  return a.size() < b.size();
}

Integer pairing(const IntRow& chi, const IntVector& v) {
  Integer p = 0;
  for (Eigen::Index j = 0; j < chi.size(); ++j) p += chi(j) * v(j);
  return p;
}

IntMatrix ray_matrix(const Fan& fan, const Cone& cone) {
  IntMatrix m(Eigen::Index(cone.size()), fan.rank());
  for (std::size_t i = 0; i < cone.size(); ++i) m.row(Eigen::Index(i)) = fan.ray(cone[i]).transpose();
  return m;
}

bool unimodular_rows(const IntMatrix& m) {
  if (m.rows() == 0) return true;
  auto snf = smith_normal_form(m);
  if (snf.rank != m.rows()) return false;
  for (auto& d : snf.divisors())
    if (d != 1) return false;
  return true;
}

// Solves lambda * rows = target over Q; nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_rational(const IntMatrix& rows, const IntVector& target) {
  const Eigen::Index k = rows.rows(), n = rows.cols();
  // Columns of the system are the rays; build the n x (k+1) augmented matrix.
  std::vector<std::vector<Rational>> a(std::size_t(n), std::vector<Rational>(std::size_t(k + 1)));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) a[i][j] = Rational(rows(j, i));
    a[i][k] = Rational(target(i));
  }
  std::vector<Eigen::Index> pivot_col;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < k && r < n; ++c) {
    Eigen::Index p = r;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[r]);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (Eigen::Index j = c; j <= k; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (Eigen::Index i = r; i < n; ++i)
    if (a[i][k] != 0) return std::nullopt;
  std::vector<Rational> lambda(std::size_t(k), Rational(0));
  for (Eigen::Index i = 0; i < r; ++i) lambda[pivot_col[i]] = a[i][k] / a[i][pivot_col[i]];
  return lambda;
}

std::vector<IntRow> coherent_combinations(const Fan& fan, const IntMatrix& basis, Eigen::Index width, int bound) {
  const Eigen::Index s = basis.rows();
  std::vector<IntRow> out;
  IntRow a = IntRow::Zero(s);
  std::vector<long> digits(std::size_t(width), -bound);
  while (true) {
    Eigen::Index first = -1;
    for (Eigen::Index i = 0; i < width; ++i) {
      a(i) = Integer(digits[i]);
      if (first < 0 && digits[i] != 0) first = i;
    }
    if (first >= 0 && digits[first] > 0 && sign_coherent(fan, IntRow(a * basis))) out.push_back(a);
    Eigen::Index i = 0;
    while (i < width && digits[i] == bound) digits[i++] = -bound;
    if (i == width) break;
    ++digits[i];
  }
  auto weight = [](const IntRow& v) {
    Integer w = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) w += abs_value<Integer>(v(i));
    return w;
  };
  std::stable_sort(out.begin(), out.end(), [&](const IntRow& x, const IntRow& y) {
    Integer wx = weight(x), wy = weight(y);
    if (wx != wy) return wx < wy;
    for (Eigen::Index i = 0; i < x.size(); ++i)
      if (x(i) != y(i)) return abs_value<Integer>(x(i)) < abs_value<Integer>(y(i));
    return false;
  });
  return out;
}

class BasisSearch {
 public:
  BasisSearch(std::vector<IntRow> inner, std::vector<IntRow> outer, Eigen::Index k, Eigen::Index s)
      : inner_(std::move(inner)), outer_(std::move(outer)), k_(k), s_(s) {}

  std::optional<IntMatrix> run() {
    IntMatrix chosen(0, s_);
    if (extend(chosen, 0)) return result_;
    return std::nullopt;
  }

 private:
  bool extend(const IntMatrix& chosen, std::size_t start) {
    if (++nodes_ > kNodeLimit) return false;
    const Eigen::Index depth = chosen.rows();
    if (depth == s_) {
      result_ = chosen;
      return true;
    }
    const bool inner_phase = depth < k_;
    const auto& pool = inner_phase ? inner_ : outer_;
    for (std::size_t c = inner_phase ? start : (depth == k_ ? 0 : start); c < pool.size(); ++c) {
      IntMatrix trial(depth + 1, s_);
      trial.topRows(depth) = chosen;
      trial.row(depth) = pool[c];
      // Inner rows must form a basis of the first k coordinates.
      IntMatrix test = inner_phase ? IntMatrix(trial.leftCols(k_)) : trial;
      if (!unimodular_rows(test)) continue;
      if (extend(trial, c + 1)) return true;
      if (nodes_ > kNodeLimit) return false;
    }
    return false;
  }

  static constexpr long kNodeLimit = 200000;
  std::vector<IntRow> inner_, outer_;
  Eigen::Index k_, s_;
  long nodes_ = 0;
  IntMatrix result_;
};

}  // namespace

Fan::Fan(Eigen::Index rank, std::vector<IntVector> rays, std::vector<Cone> max_cones)
    : rank_(rank), rays_(std::move(rays)), max_cones_(std::move(max_cones)) {
  if (rank_ < 0) throw Error(ErrorCode::MalformedFan, "negative rank");
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    const auto& r = rays_[i];
    if (r.size() != rank_) throw Error(ErrorCode::MalformedFan, "ray " + std::to_string(i) + " has wrong length");
    Integer g = 0;
    for (Eigen::Index j = 0; j < r.size(); ++j) g = gcd(g, r(j));
    if (g != 1) throw Error(ErrorCode::MalformedFan, "ray " + format_ray(r) + " is not primitive");
    for (std::size_t j = 0; j < i; ++j)
      if (rays_[j] == r) throw Error(ErrorCode::MalformedFan, "ray " + format_ray(r) + " repeated");
  }
  if (max_cones_.empty()) throw Error(ErrorCode::MalformedFan, "fan has no cones");
  std::vector<bool> used(rays_.size(), false);
  for (auto& c : max_cones_) {
    for (int i : c)
      if (i < 0 || i >= ray_count()) throw Error(ErrorCode::MalformedFan, "ray index out of range");
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end())
      throw Error(ErrorCode::MalformedFan, "max cone repeats a ray");
    if (wonder::rank(ray_matrix(*this, c)) != Eigen::Index(c.size()))
      throw Error(ErrorCode::MalformedFan, "max cone " + format_cone(*this, c) + " is not simplicial");
    for (int i : c) used[std::size_t(i)] = true;
  }
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i]) throw Error(ErrorCode::MalformedFan, "ray " + format_ray(rays_[i]) + " lies in no cone");
  std::set<Cone> seen;
  for (auto& c : max_cones_)
    if (!seen.insert(c).second) throw Error(ErrorCode::MalformedFan, "max cone listed twice");
  for (auto& a : max_cones_)
    for (auto& b : max_cones_)
      if (a != b && std::includes(b.begin(), b.end(), a.begin(), a.end()))
        throw Error(ErrorCode::MalformedFan, "max cone " + format_cone(*this, a) + " is a face of another");
}

Fan Fan::point() { return Fan(0, {}, {Cone{}}); }

std::vector<Cone> Fan::all_cones() const {
  std::set<Cone> faces;
  for (auto& c : max_cones_) {
    const std::size_t k = c.size();
    for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
      Cone f;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1ul << i)) f.push_back(c[i]);
      faces.insert(f);
    }
  }
  std::vector<Cone> out(faces.begin(), faces.end());
  std::stable_sort(out.begin(), out.end(), [](const Cone& a, const Cone& b) { return a.size() < b.size(); });
  return out;
}

bool Fan::is_cone(const Cone& rays) const {
  Cone sorted = rays;
  std::sort(sorted.begin(), sorted.end());
  for (auto& c : max_cones_)
    if (std::includes(c.begin(), c.end(), sorted.begin(), sorted.end())) return true;
  return false;
}

int Fan::find_ray(const IntVector& v) const {
  for (std::size_t i = 0; i < rays_.size(); ++i)
    if (rays_[i].size() == v.size() && rays_[i] == v) return int(i);
  return -1;
}

Fan canonicalize(const Fan& fan) {
  std::vector<int> order(std::size_t(fan.ray_count()));
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = int(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return lex_less_vec(fan.ray(a), fan.ray(b)); });
  std::vector<int> where(order.size());
  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < order.size(); ++i) {
    where[std::size_t(order[i])] = int(i);
    rays.push_back(fan.ray(order[i]));
  }
  std::vector<Cone> cones;
  for (auto& c : fan.max_cones()) {
    Cone d;
    for (int i : c) d.push_back(where[std::size_t(i)]);
    std::sort(d.begin(), d.end());
    cones.push_back(d);
  }
  std::sort(cones.begin(), cones.end());
  return Fan(fan.rank(), rays, cones);
}

std::string format_ray(const IntVector& ray) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < ray.size(); ++i) os << (i ? "," : "") << ray(i).get_str();
  os << ")";
  return os.str();
}

std::string format_cone(const Fan& fan, const Cone& cone) {
  std::string out = "cone(";
  for (std::size_t i = 0; i < cone.size(); ++i) out += (i ? "," : "") + format_ray(fan.ray(cone[i]));
  return out + ")";
}

FanReport validate_smooth(const Fan& fan) {
  FanReport report;
  for (auto& c : fan.max_cones())
    if (!unimodular_rows(ray_matrix(fan, c))) report.fail(c, format_cone(fan, c) + " is not unimodular");
  return report;
}

FanReport validate_complete(const Fan& fan) {
  FanReport report;
  const auto n = std::size_t(fan.rank());
  const auto& cones = fan.max_cones();
  if (n == 0) {
    if (cones.size() != 1 || !cones.front().empty()) report.fail({}, "rank-0 fan must be a single point");
    return report;
  }
  for (auto& c : cones)
    if (c.size() != n) report.fail(c, format_cone(fan, c) + " is not full-dimensional");
  if (!report.passed) return report;

  std::map<Cone, std::vector<std::size_t>> walls;
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t drop = 0; drop < n; ++drop) {
      Cone w;
      for (std::size_t j = 0; j < n; ++j)
        if (j != drop) w.push_back(cones[i][j]);
      walls[w].push_back(i);
    }
  std::vector<std::size_t> parent(cones.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto& [wall, owners] : walls) {
    if (owners.size() != 2) {
      report.fail(wall, "wall " + format_cone(fan, wall) + " lies in " + std::to_string(owners.size()) +
                            " max cones");
      continue;
    }
    parent[find(owners[0])] = find(owners[1]);
  }
  for (std::size_t i = 1; i < cones.size(); ++i)
    if (find(i) != find(0)) {
      report.fail(cones[i], "max cones are not connected through walls");
      break;
    }
  return report;
}

FanReport cone_face_compat(const Fan& fan, const Sublattice& gamma) {
  FanReport report;
  const Eigen::Index s = gamma.rank();
  if (s == 0) return report;
  for (auto& c : fan.max_cones()) {
    std::vector<IntVector> out;  // pairing vectors of rays outside V_Gamma
    for (int r : c) {
      IntVector w = gamma.basis() * fan.ray(r);
      bool zero = true;
      for (Eigen::Index i = 0; i < s; ++i) zero = zero && w(i) == 0;
      if (!zero) out.push_back(w);
    }
    // A positive dependency among the out-vectors is a point of the relative
    // interior of a face meeting V_Gamma with no ray in it.  Minimal supports
    // have a one-dimensional kernel, so checking circuits is enough.
    const std::size_t m = out.size();
    bool bad = false;
    for (unsigned long mask = 1; mask < (1ul << m) && !bad; ++mask) {
      std::vector<std::size_t> support;
      for (std::size_t i = 0; i < m; ++i)
        if (mask & (1ul << i)) support.push_back(i);
      if (Eigen::Index(support.size()) > s + 1) continue;
      IntMatrix w(s, Eigen::Index(support.size()));
      for (std::size_t j = 0; j < support.size(); ++j) w.col(Eigen::Index(j)) = out[support[j]];
      IntMatrix ker = integer_kernel(w);
      if (ker.rows() != 1) continue;
      bool pos = true, neg = true;
      for (Eigen::Index j = 0; j < ker.cols(); ++j) {
        pos = pos && ker(0, j) > 0;
        neg = neg && ker(0, j) < 0;
      }
      bad = pos || neg;
    }
    if (bad) report.fail(c, format_cone(fan, c) + " meets V_Gamma outside its faces");
  }
  return report;
}

EqualSignReport equal_sign_check(const Fan& fan, const IntMatrix& basis) {
  EqualSignReport report;
  for (auto& c : fan.max_cones())
    for (Eigen::Index i = 0; i < basis.rows(); ++i) {
      int pos = -1, neg = -1;
      for (int r : c) {
        Integer p = pairing(basis.row(i), fan.ray(r));
        if (p > 0 && pos < 0) pos = r;
        if (p < 0 && neg < 0) neg = r;
      }
      if (pos >= 0 && neg >= 0) {
        report.passed = false;
        report.violations.push_back({c, int(i), pos, neg});
      }
    }
  return report;
}

bool sign_coherent(const Fan& fan, const IntRow& chi) {
  for (auto& c : fan.max_cones()) {
    bool pos = false, neg = false;
    for (int r : c) {
      Integer p = pairing(chi, fan.ray(r));
      pos = pos || p > 0;
      neg = neg || p < 0;
    }
    if (pos && neg) return false;
  }
  return true;
}

std::optional<AdaptedBasis> find_equal_sign_adapted_basis(const Fan& fan, const Sublattice& outer,
                                                          const Sublattice& inner, int bound) {
  AdaptedBasis ab = adapted_basis(outer, inner);
  if (equal_sign_check(fan, ab.vectors).passed) return ab;
  const Eigen::Index s = ab.vectors.rows(), k = ab.split_index;
  auto inner_pool = coherent_combinations(fan, ab.vectors, k, bound);
  auto outer_pool = coherent_combinations(fan, ab.vectors, s, bound);
  auto coeffs = BasisSearch(std::move(inner_pool), std::move(outer_pool), k, s).run();
  if (!coeffs) return std::nullopt;
  AdaptedBasis found;
  found.split_index = k;
  found.vectors = *coeffs * ab.vectors;
  return found;
}

std::optional<IntMatrix> find_equal_sign_basis(const Fan& fan, const Sublattice& gamma, int bound) {
  auto ab = find_equal_sign_adapted_basis(fan, gamma, Sublattice::zero(gamma.ambient_rank()), bound);
  if (!ab) return std::nullopt;
  return ab->vectors;
}

GoodnessReport validate_good(const Fan& fan, const std::vector<Sublattice>& lattices,
                             const std::vector<IntMatrix>& bases) {
  if (bases.size() != lattices.size()) throw std::invalid_argument("one candidate basis per lattice required");
  GoodnessReport report;
  report.smooth = validate_smooth(fan);
  report.complete = validate_complete(fan);
  report.passed = report.smooth.passed && report.complete.passed;
  for (std::size_t i = 0; i < lattices.size(); ++i) {
    LatticeGoodness g;
    g.lattice = lattices[i];
    if (!(Sublattice(fan.rank(), bases[i]) == lattices[i]) || bases[i].rows() != lattices[i].rank())
      throw std::invalid_argument("candidate basis does not span its lattice");
    g.compat = cone_face_compat(fan, lattices[i]);
    g.sign = equal_sign_check(fan, bases[i]);
    if (g.sign.passed) g.basis = bases[i];
    if (g.sign.passed && !g.compat.passed)
      throw std::logic_error("equal-sign basis on a lattice that fails cone/face compatibility");
    report.passed = report.passed && g.compat.passed && g.sign.passed;
    report.lattices.push_back(std::move(g));
  }
  return report;
}

GoodnessReport validate_good(const Fan& fan, const std::vector<Sublattice>& lattices, int bound) {
  std::vector<IntMatrix> bases;
  for (auto& l : lattices) {
    auto b = find_equal_sign_basis(fan, l, bound);
    bases.push_back(b ? *b : l.basis());
  }
  return validate_good(fan, lattices, bases);
}

InducedFan induce_fan(const Fan& fan, const Sublattice& gamma) {
  auto compat = cone_face_compat(fan, gamma);
  if (!compat.passed) throw Error(ErrorCode::NotCompatible, compat.messages.front());
  QuotientChart chart(gamma);
  std::vector<int> where(std::size_t(fan.ray_count()), -1);
  std::vector<int> ray_map;
  std::vector<IntVector> rays;
  for (int r = 0; r < fan.ray_count(); ++r)
    if (gamma.annihilates(fan.ray(r))) {
      where[std::size_t(r)] = int(ray_map.size());
      ray_map.push_back(r);
      rays.push_back(chart.project_ray(fan.ray(r)));
    }
  std::vector<Cone> faces;
  for (auto& c : fan.max_cones()) {
    Cone f;
    for (int r : c)
      if (where[std::size_t(r)] >= 0) f.push_back(where[std::size_t(r)]);
    if (std::find(faces.begin(), faces.end(), f) == faces.end()) faces.push_back(f);
  }
  std::vector<Cone> maximal;
  for (auto& a : faces) {
    bool dominated = false;
    for (auto& b : faces)
      if (a != b && std::includes(b.begin(), b.end(), a.begin(), a.end())) dominated = true;
    if (!dominated) maximal.push_back(a);
  }
  return InducedFan{Fan(chart.quotient_rank(), rays, maximal), ray_map, chart};
}

Fan induced_fan(const Fan& fan, const Sublattice& gamma) { return induce_fan(fan, gamma).fan; }

Fan stellar_subdivide(const Fan& fan, const Cone& cone, const IntVector& new_ray) {
  if (new_ray.size() != fan.rank()) throw Error(ErrorCode::RayNotInterior, "ray has wrong length");
  if (fan.find_ray(new_ray) >= 0) throw Error(ErrorCode::RayNotInterior, format_ray(new_ray) + " is already a ray");
  Cone tau = cone;
  std::sort(tau.begin(), tau.end());
  if (tau.empty() || !fan.is_cone(tau))
    throw Error(ErrorCode::RayNotInterior, "subdivided set is not a nonzero cone of the fan");
  auto lambda = solve_rational(ray_matrix(fan, tau), new_ray);
  bool interior = lambda.has_value();
  if (interior)
    for (auto& l : *lambda) interior = interior && l > 0;
  if (!interior)
    throw Error(ErrorCode::RayNotInterior, format_ray(new_ray) + " is not in the relative interior of " +
                                               format_cone(fan, tau));
  auto rays = fan.rays();
  rays.push_back(new_ray);
  const int fresh = fan.ray_count();
  std::vector<Cone> cones;
  for (auto& c : fan.max_cones()) {
    if (!std::includes(c.begin(), c.end(), tau.begin(), tau.end())) {
      cones.push_back(c);
      continue;
    }
    for (int drop : tau) {
      Cone d;
      for (int r : c)
        if (r != drop) d.push_back(r);
      d.push_back(fresh);
      cones.push_back(d);
    }
  }
  return Fan(fan.rank(), rays, cones);
}

GoodFanSearch search_good_fan(const Fan& fan, const std::vector<Sublattice>& lattices, int budget, int bound) {
  GoodFanSearch out;
  Fan current = fan;
  while (true) {
    const Sublattice* stuck = nullptr;
    for (auto& l : lattices)
      if (!find_equal_sign_basis(current, l, bound)) {
        stuck = &l;
        break;
      }
    if (!stuck) break;
    if (out.subdivisions >= budget) break;
    auto sign = equal_sign_check(current, stuck->basis());
    if (sign.passed) break;
    const auto& v = sign.violations.front();
    Cone face{std::min(v.positive_ray, v.negative_ray), std::max(v.positive_ray, v.negative_ray)};
    IntVector ray = current.ray(v.positive_ray) + current.ray(v.negative_ray);
    Integer g = 0;
    for (Eigen::Index i = 0; i < ray.size(); ++i) g = gcd(g, ray(i));
    if (g > 1)
      for (Eigen::Index i = 0; i < ray.size(); ++i) ray(i) /= g;
    try {
      current = stellar_subdivide(current, face, ray);
    } catch (const Error&) {
      break;
    }
    out.steps.emplace_back(face, ray);
    ++out.subdivisions;
  }
  out.fan = canonicalize(current);
  out.passed = validate_good(out.fan, lattices, bound).passed;
  return out;
}

}  // namespace wonder
