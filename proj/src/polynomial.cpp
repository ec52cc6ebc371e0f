#include "wonder/polynomial.hpp"

#include <numeric>
#include <stdexcept>

namespace wonder {

int total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

Polynomial Polynomial::constant(int nvars, const Integer& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(std::size_t(nvars), 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::out_of_range("variable index");
  Monomial m(std::size_t(nvars), 0);
  m[std::size_t(index)] = 1;
  return monomial(m);
}

Polynomial Polynomial::monomial(const Monomial& m, const Integer& c) {
  Polynomial p(int(m.size()));
  p.add_term(m, c);
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (auto& [m, c] : terms_) d = std::max(d, total_degree(m));
  return d;
}

bool Polynomial::homogeneous() const {
  int d = -1;
  for (auto& [m, c] : terms_) {
    int e = total_degree(m);
    if (d >= 0 && e != d) return false;
    d = e;
  }
  return true;
}

Polynomial Polynomial::homogeneous_part(int d) const {
  Polynomial p(nvars_);
  for (auto& [m, c] : terms_)
    if (total_degree(m) == d) p.terms_.emplace(m, c);
  return p;
}

Integer Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

bool Polynomial::supported_on(const std::vector<bool>& active) const {
  for (auto& [m, c] : terms_)
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0 && !active[i]) return false;
  return true;
}

void Polynomial::add_term(const Monomial& m, const Integer& c) {
  if (int(m.size()) != nvars_) throw std::invalid_argument("monomial has wrong number of variables");
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("adding polynomials from different rings");
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("subtracting polynomials from different rings");
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  return p *= Integer(-1);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("multiplying polynomials from different rings");
  Polynomial p(a.nvars_);
  Monomial m(std::size_t(a.nvars_));
  for (auto& [ma, ca] : a.terms_)
    for (auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      p.add_term(m, ca * cb);
    }
  return p;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (int(images.size()) != nvars_) throw std::invalid_argument("one image per variable required");
  const int target = images.empty() ? 0 : images.front().nvars();
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t v, int e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (int(cache.size()) <= e) cache.push_back(cache.back() * images[v]);
    return cache[std::size_t(e)];
  };
  Polynomial out(target);
  for (auto& [m, c] : terms_) {
    Polynomial term = Polynomial::constant(target, c);
    for (std::size_t v = 0; v < m.size(); ++v)
      if (m[v] > 0) term = term * power(v, m[v]);
    out += term;
  }
  return out;
}

Polynomial Polynomial::extended(int nvars) const {
  if (nvars < nvars_) throw std::invalid_argument("cannot shrink a polynomial ring");
  Polynomial p(nvars);
  for (auto& [m, c] : terms_) {
    Monomial e = m;
    e.resize(std::size_t(nvars), 0);
    p.terms_.emplace(std::move(e), c);
  }
  return p;
}

Polynomial pow(const Polynomial& p, int e) {
  Polynomial out = Polynomial::constant(p.nvars(), 1);
  for (int i = 0; i < e; ++i) out = out * p;
  return out;
}

Polynomial evaluate(const PolyInT& coeffs, const Polynomial& value) {
  Polynomial out(value.nvars());
  for (std::size_t k = coeffs.size(); k-- > 0;) out = out * value + coeffs[k];
  return out;
}

}  // namespace wonder
