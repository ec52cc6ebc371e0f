#include "wonder/graded_slice.hpp"

#include "wonder/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace wonder {

namespace {

// a*u + b*v
SparseRow combine(const Integer& a, const SparseRow& u, const Integer& b, const SparseRow& v) {
  SparseRow out;
  out.reserve(u.size() + v.size());
  std::size_t i = 0, j = 0;
  while (i < u.size() || j < v.size()) {
    Integer x;
    int col;
    if (j == v.size() || (i < u.size() && u[i].first < v[j].first)) {
      col = u[i].first;
      x = a * u[i++].second;
    } else if (i == u.size() || v[j].first < u[i].first) {
      col = v[j].first;
      x = b * v[j++].second;
    } else {
      col = u[i].first;
      x = a * u[i++].second + b * v[j++].second;
    }
    if (x != 0) out.emplace_back(col, std::move(x));
  }
  return out;
}

const Integer* entry(const SparseRow& row, int col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const std::pair<int, Integer>& e, int c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

void negate(SparseRow& row) {
  for (auto& e : row) e.second = -e.second;
}

}  // namespace

void LatticeEchelon::insert(SparseRow v) {
  while (!v.empty()) {
    const int p = v.front().first;
    auto it = rows_.find(p);
    if (it == rows_.end()) {
      if (v.front().second < 0) negate(v);
      rows_.emplace(p, std::move(v));
      return;
    }
    SparseRow& u = it->second;
    const Integer a = u.front().second, b = v.front().second;
    if (b % a == 0) {
      v = combine(1, v, -(b / a), u);
      continue;
    }
    // Unimodular 2x2 step: u <- x u + y v has pivot gcd, v <- (a/g) v - (b/g) u loses it.
    auto e = extended_gcd(a, b);
    SparseRow nu = combine(e.x, u, e.y, v);
    SparseRow nv = combine(a / e.g, v, -(b / e.g), u);
    u = std::move(nu);
    if (u.front().second < 0) negate(u);
    v = std::move(nv);
  }
}

void LatticeEchelon::canonicalize() {
  for (auto it = rows_.begin(); it != rows_.end(); ++it) {
    const int p = it->first;
    const Integer piv = it->second.front().second;
    for (auto jt = rows_.begin(); jt != it; ++jt) {
      const Integer* x = entry(jt->second, p);
      if (!x) continue;
      Integer q = floor_div<Integer>(*x, piv);
      if (q != 0) jt->second = combine(1, jt->second, -q, it->second);
    }
  }
}

std::vector<SparseRow> LatticeEchelon::rows() const {
  std::vector<SparseRow> out;
  for (auto& [p, r] : rows_) out.push_back(r);
  return out;
}

std::vector<Integer> LatticeEchelon::torsion() const {
  bool units = true;
  for (auto& [p, r] : rows_) units = units && r.front().second == 1;
  if (units) return {};
  IntMatrix m = IntMatrix::Zero(Eigen::Index(rows_.size()), columns_);
  Eigen::Index i = 0;
  for (auto& [p, r] : rows_) {
    for (auto& [c, x] : r) m(i, c) = x;
    ++i;
  }
  std::vector<Integer> out;
  for (auto& d : smith_normal_form(m).divisors())
    if (d != 1) out.push_back(d);
  return out;
}

SparseRow LatticeEchelon::reduce(SparseRow v) const {
  for (auto& [p, r] : rows_) {
    const Integer* x = entry(v, p);
    if (!x) continue;
    Integer q = floor_div<Integer>(*x, r.front().second);
    if (q != 0) v = combine(1, v, -q, r);
  }
  return v;
}

std::vector<Monomial> monomials_of_degree(const std::vector<bool>& active, int d) {
  std::vector<Monomial> out;
  const std::size_t n = active.size();
  Monomial m(n, 0);
  // Depth-first over variables in index order, largest exponent first.
  auto fill = [&](auto&& self, std::size_t v, int left) -> void {
    if (v == n) {
      if (left == 0) out.push_back(m);
      return;
    }
    if (!active[v]) {
      self(self, v + 1, left);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m[v] = e;
      self(self, v + 1, left - e);
    }
    m[v] = 0;
  };
  if (d >= 0) fill(fill, 0, d);
  return out;
}

GradedIdeal::GradedIdeal(int nvars, std::vector<bool> active, std::vector<Polynomial> generators)
    : nvars_(nvars), active_(std::move(active)), generators_(std::move(generators)),
      cache_(std::make_shared<Cache>()) {
  if (int(active_.size()) != nvars_) throw std::invalid_argument("active mask has wrong length");
  for (auto& g : generators_) {
    if (g.nvars() != nvars_) throw std::invalid_argument("generator lives in a different ring");
    if (!g.homogeneous()) throw std::invalid_argument("generator is not homogeneous");
    if (!g.supported_on(active_)) throw std::invalid_argument("generator uses an eliminated variable");
  }
}

Slice GradedIdeal::build(int d, const Slice* previous) const {
  Slice s;
  s.degree = d;
  s.monomials = monomials_of_degree(active_, d);
  for (std::size_t i = 0; i < s.monomials.size(); ++i) s.column.emplace(s.monomials[i], int(i));
  LatticeEchelon ech(int(s.monomials.size()));
  if (previous) {
    for (auto& row : previous->basis)
      for (int v = 0; v < nvars_; ++v) {
        if (!active_[std::size_t(v)]) continue;
        SparseRow shifted;
        for (auto& [c, x] : row) {
          Monomial m = previous->monomials[std::size_t(c)];
          ++m[std::size_t(v)];
          shifted.emplace_back(s.column.at(m), x);
        }
        std::sort(shifted.begin(), shifted.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        ech.insert(std::move(shifted));
      }
  }
  for (auto& g : generators_) {
    if (g.is_zero() || g.degree() != d) continue;
    SparseRow row;
    for (auto& [m, c] : g.terms()) row.emplace_back(s.column.at(m), c);
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    ech.insert(std::move(row));
  }
  ech.canonicalize();
  s.basis = ech.rows();
  s.torsion = ech.torsion();
  return s;
}

const Slice& GradedIdeal::slice(int d) const {
  if (d < 0) throw std::invalid_argument("negative degree");
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto& slices = cache_->slices;
  while (int(slices.size()) <= d) {
    const Slice* prev = slices.empty() ? nullptr : slices.back().get();
    slices.push_back(std::make_unique<Slice>(build(int(slices.size()), prev)));
  }
  return *slices[std::size_t(d)];
}

std::vector<long> GradedIdeal::hilbert(int max_degree) const {
  std::vector<long> out;
  for (int d = 0; d <= max_degree; ++d) out.push_back(slice(d).quotient_rank());
  return out;
}

Polynomial GradedIdeal::reduce(const Polynomial& p) const {
  if (p.nvars() != nvars_) throw std::invalid_argument("polynomial lives in a different ring");
  if (!p.supported_on(active_)) throw std::invalid_argument("polynomial uses an eliminated variable");
  Polynomial out(nvars_);
  for (int d = 0; d <= p.degree(); ++d) {
    Polynomial part = p.homogeneous_part(d);
    if (part.is_zero()) continue;
    const Slice& s = slice(d);
    LatticeEchelon ech(int(s.monomials.size()));
    for (auto& row : s.basis) ech.insert(row);
    ech.canonicalize();
    SparseRow row;
    for (auto& [m, c] : part.terms()) row.emplace_back(s.column.at(m), c);
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [c, x] : ech.reduce(std::move(row))) out.add_term(s.monomials[std::size_t(c)], x);
  }
  return out;
}

bool same_slices_up_to(const GradedIdeal& a, const GradedIdeal& b, int max_degree) {
  if (a.nvars() != b.nvars() || a.active() != b.active()) throw Error(ErrorCode::DegreeMismatch, "ideals live in different rings");
  for (int d = 0; d <= max_degree; ++d)
    if (a.slice(d).basis != b.slice(d).basis) return false;
  return true;
}

}  // namespace wonder
