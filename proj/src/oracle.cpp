#include "wonder/oracle.hpp"

#include "wonder/toric_cohomology.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace wonder {

namespace {

std::string memo_key(const Fan& fan, const std::vector<Layer>& members) {
  std::ostringstream os;
  os << fan.rank() << "|";
  for (auto& r : fan.rays()) os << format_ray(r);
  os << "|";
  for (auto& c : fan.max_cones()) {
    for (int i : c) os << i << ",";
    os << ";";
  }
  for (auto& l : members) {
    os << "|";
    const auto& b = l.gamma().basis();
    for (Eigen::Index i = 0; i < b.rows(); ++i) os << format_ray(b.row(i).transpose());
    for (auto& v : l.phi()) os << format_rational(v) << ",";
  }
  return os.str();
}

long euler(const BettiVector& b) { return std::accumulate(b.begin(), b.end(), 0L); }

std::mutex memo_mutex;
std::map<std::string, BlowupPlan> memo;

}  // namespace

BettiVector keel_step(const BettiVector& y, const BettiVector& z, int d) {
  if (d < 1) throw std::invalid_argument("blowup center needs positive codimension");
  BettiVector out = y;
  if (d == 1) return out;
  for (std::size_t k = 0; k < z.size(); ++k)
    for (int j = 1; j <= d - 1; ++j) {
      std::size_t at = k + std::size_t(j);
      if (out.size() <= at) out.resize(at + 1, 0);
      out[at] += z[k];
    }
  if (euler(out) != euler(y) + (d - 1) * euler(z)) throw std::logic_error("Euler characteristic bookkeeping failed");
  return out;
}

BlowupPlan model_betti_plan(const Fan& fan, const std::vector<Layer>& ordered_members) {
  const std::string key = memo_key(fan, ordered_members);
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  BlowupPlan plan;
  plan.start = h_vector_oracle(fan);
  BettiVector current = plan.start;
  for (std::size_t h = 0; h < ordered_members.size(); ++h) {
    const Layer& z = ordered_members[h];
    BlowupStep step;
    step.member = int(h);
    step.codim = int(z.codim());
    if (step.codim > 1) {
      InducedFan induced = induce_fan(fan, z.gamma());
      std::vector<Layer> prefix(ordered_members.begin(), ordered_members.begin() + long(h) + 1);
      std::vector<Layer> on_z;
      for (auto& m : induced_family(prefix)) on_z.push_back(restrict_layer(z, induced.chart, m.layer));
      step.center = model_betti_plan(induced.fan, on_z).result;
      current = keel_step(current, step.center, step.codim);
    }
    step.after = current;
    plan.steps.push_back(std::move(step));
  }
  plan.result = current;
  std::lock_guard<std::mutex> lock(memo_mutex);
  memo.emplace(key, plan);
  return plan;
}

BettiVector model_betti(const Fan& fan, const std::vector<Layer>& ordered_members) {
  return model_betti_plan(fan, ordered_members).result;
}

BettiVector model_betti(const Fan& fan, const BuildingSet& building) {
  std::vector<Layer> layers;
  for (int i = 0; i < building.size(); ++i) layers.push_back(building.layer(i));
  return model_betti(fan, layers);
}

std::vector<long> trim(std::vector<long> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

VerifyReport verify(const std::vector<long>& presentation, const BettiVector& oracle, bool torsion_free) {
  VerifyReport report;
  auto fail = [&](std::string m) {
    report.passed = false;
    report.messages.push_back(std::move(m));
  };
  auto p = trim(presentation), o = trim(oracle);
  for (std::size_t k = 0; k < std::max(p.size(), o.size()); ++k) {
    long a = k < p.size() ? p[k] : 0, b = k < o.size() ? o[k] : 0;
    if (a != b) {
      report.mismatched_degrees.push_back(int(2 * k));
      fail("H^" + std::to_string(2 * k) + ": presentation " + std::to_string(a) + " vs oracle " + std::to_string(b));
    }
  }
  if (p.empty() || p.front() != 1) fail("b_0 is not 1");
  if (!p.empty() && p.back() != 1) fail("top rank is not 1");
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p[k] != p[p.size() - 1 - k]) {
      fail("not palindromic");
      break;
    }
  if (!torsion_free) fail("torsion in the presentation");
  return report;
}

}  // namespace wonder
