#include "wonder/toric_cohomology.hpp"

#include <algorithm>
#include <set>

namespace wonder {

struct DanilovRing::Parts {
  Fan fan;
  Cone reference;
  std::vector<Cone> nonfaces;
  std::vector<Polynomial> stanley_reisner;
  std::vector<Polynomial> linear;
  std::vector<Polynomial> elimination;
};

namespace {

std::vector<Cone> minimal_nonfaces_of(const Fan& fan) {
  auto cones = fan.all_cones();
  std::set<Cone> faces(cones.begin(), cones.end());
  std::vector<Cone> out;
  const int rays = fan.ray_count();
  const int n = int(fan.rank());
  std::vector<int> pick;
  auto walk = [&](auto&& self, int start, int size) -> void {
    if (int(pick.size()) == size) {
      if (faces.count(pick)) return;
      for (std::size_t drop = 0; drop < pick.size(); ++drop) {
        Cone sub;
        for (std::size_t i = 0; i < pick.size(); ++i)
          if (i != drop) sub.push_back(pick[i]);
        if (!faces.count(sub)) return;
      }
      out.push_back(pick);
      return;
    }
    for (int r = start; r < rays; ++r) {
      pick.push_back(r);
      self(self, r + 1, size);
      pick.pop_back();
    }
  };
  for (int size = 2; size <= n + 1; ++size) walk(walk, 0, size);
  return out;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

DanilovRing::DanilovRing(Fan fan)
    : DanilovRing([&] {
        if (!validate_smooth(fan).passed || !validate_complete(fan).passed)
          throw Error(ErrorCode::NotValidated, "Danilov presentation needs a smooth complete fan");
        Parts p;
        const int nv = fan.ray_count();
        const Eigen::Index n = fan.rank();
        p.reference = *std::min_element(fan.max_cones().begin(), fan.max_cones().end());
        p.nonfaces = minimal_nonfaces_of(fan);
        for (auto& c : p.nonfaces) {
          Monomial m(std::size_t(nv), 0);
          for (int r : c) m[std::size_t(r)] = 1;
          p.stanley_reisner.push_back(Polynomial::monomial(m));
        }
        for (Eigen::Index i = 0; i < n; ++i) {
          Polynomial l(nv);
          for (int r = 0; r < nv; ++r) l += Polynomial::variable(nv, r) * fan.ray(r)(i);
          p.linear.push_back(l);
        }
        // A c_ref + R c_out = 0 with A unimodular, so c_ref = -A^{-1} R c_out.
        IntMatrix a(n, n);
        for (Eigen::Index j = 0; j < n; ++j) a.col(j) = fan.ray(p.reference[std::size_t(j)]);
        IntMatrix ainv = n > 0 ? unimodular_inverse(a) : IntMatrix(0, 0);
        for (int r = 0; r < nv; ++r) p.elimination.push_back(Polynomial::variable(nv, r));
        for (Eigen::Index j = 0; j < n; ++j) {
          Polynomial image(nv);
          for (int r = 0; r < nv; ++r) {
            if (std::find(p.reference.begin(), p.reference.end(), r) != p.reference.end()) continue;
            Integer coef = 0;
            for (Eigen::Index i = 0; i < n; ++i) coef -= ainv(j, i) * fan.ray(r)(i);
            image += Polynomial::variable(nv, r) * coef;
          }
          p.elimination[std::size_t(p.reference[std::size_t(j)])] = image;
        }
        p.fan = std::move(fan);
        return p;
      }()) {}

DanilovRing::DanilovRing(Parts parts)
    : fan_(std::move(parts.fan)),
      reference_(std::move(parts.reference)),
      nonfaces_(std::move(parts.nonfaces)),
      stanley_reisner_(std::move(parts.stanley_reisner)),
      linear_(std::move(parts.linear)),
      elimination_(std::move(parts.elimination)),
      ideal_(fan_.ray_count(), free_mask(fan_.ray_count()), eliminated_relations(fan_.ray_count())) {}

std::vector<bool> DanilovRing::free_mask(int total) const {
  std::vector<bool> mask(std::size_t(total), true);
  for (int r : reference_) mask[std::size_t(r)] = false;
  return mask;
}

Polynomial DanilovRing::eliminate(const Polynomial& p) const {
  const int total = p.nvars();
  std::vector<Polynomial> images;
  for (int v = 0; v < total; ++v)
    images.push_back(v < nvars() ? elimination_[std::size_t(v)].extended(total) : Polynomial::variable(total, v));
  return p.substitute(images);
}

std::vector<Polynomial> DanilovRing::eliminated_relations(int total) const {
  std::vector<Polynomial> out;
  for (auto& m : stanley_reisner_) {
    Polynomial e = eliminate(m.extended(total));
    if (!e.is_zero()) out.push_back(e);
  }
  return out;
}

Polynomial DanilovRing::normal_form(const Polynomial& p) const { return ideal_.reduce(eliminate(p)); }

std::vector<long> h_vector_oracle(const Fan& fan) {
  const long n = long(fan.rank());
  std::vector<Integer> f(std::size_t(n + 1), 0);  // f[i] = number of i-dimensional cones
  for (auto& c : fan.all_cones()) f[c.size()] += 1;
  std::vector<long> h;
  for (long k = 0; k <= n; ++k) {
    Integer acc = 0;
    for (long i = 0; i <= k; ++i) {
      Integer term = binomial(n - i, k - i) * f[std::size_t(i)];
      acc += ((k - i) % 2 == 0) ? term : Integer(-term);
    }
    h.push_back(to_long(acc));
  }
  return h;
}

Polynomial Restriction::apply(const Polynomial& p) const {
  const int target_vars = target.nvars();
  std::vector<Polynomial> images(std::size_t(p.nvars()), Polynomial(target_vars));
  for (std::size_t i = 0; i < induced.ray_map.size(); ++i)
    images[std::size_t(induced.ray_map[i])] = Polynomial::variable(target_vars, int(i));
  return p.substitute(images);
}

Restriction restriction_map(const DanilovRing& ring, const Sublattice& gamma) {
  InducedFan induced = induce_fan(ring.fan(), gamma);
  std::vector<int> kernel;
  for (int r = 0; r < ring.nvars(); ++r)
    if (std::find(induced.ray_map.begin(), induced.ray_map.end(), r) == induced.ray_map.end()) kernel.push_back(r);
  DanilovRing target(induced.fan);
  return Restriction{std::move(induced), std::move(target), std::move(kernel)};
}

namespace {

IntMatrix canonical_rows(const IntMatrix& rows) {
  if (rows.rows() == 0) return rows;
  return hermite_normal_form(rows).basis();
}

IntMatrix dense(const std::vector<SparseRow>& rows, Eigen::Index cols) {
  IntMatrix m = IntMatrix::Zero(Eigen::Index(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (auto& [c, x] : rows[i]) m(Eigen::Index(i), c) = x;
  return m;
}

}  // namespace

IntMatrix restriction_kernel_slice(const DanilovRing& ring, const Restriction& r, int d) {
  const Slice& src = ring.ideal().slice(d);
  const Slice& dst = r.target.ideal().slice(d);
  const Eigen::Index n = Eigen::Index(src.monomials.size()), k = Eigen::Index(dst.basis.size());
  const Eigen::Index rows = Eigen::Index(dst.monomials.size());
  if (n == 0) return IntMatrix(0, 0);
  // [Phi | -B^T] (x, y) = 0: Phi x lies in the span of the target slice rows.
  IntMatrix system = IntMatrix::Zero(rows, n + k);
  for (Eigen::Index j = 0; j < n; ++j) {
    Polynomial image = r.target.eliminate(r.apply(Polynomial::monomial(src.monomials[std::size_t(j)])));
    for (auto& [m, c] : image.terms()) system(dst.column.at(m), j) = c;
  }
  IntMatrix b = dense(dst.basis, rows);
  for (Eigen::Index i = 0; i < k; ++i) system.col(n + i) = -b.row(i).transpose();
  IntMatrix ker = rows == 0 ? IntMatrix::Identity(n + k, n + k) : integer_kernel(system);
  return canonical_rows(ker.leftCols(n));
}

IntMatrix killed_ideal_slice(const DanilovRing& ring, const Restriction& r, int d) {
  std::vector<Polynomial> gens = ring.ideal().generators();
  const int nv = ring.nvars();
  for (int ray : r.kernel_rays) {
    Polynomial e = ring.eliminate(Polynomial::variable(nv, ray));
    if (!e.is_zero()) gens.push_back(e);
  }
  GradedIdeal ideal(nv, ring.free_mask(nv), gens);
  const Slice& s = ideal.slice(d);
  return canonical_rows(dense(s.basis, Eigen::Index(s.monomials.size())));
}

}  // namespace wonder
