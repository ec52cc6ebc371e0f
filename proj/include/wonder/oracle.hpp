#pragma once

#include "wonder/building.hpp"

#include <string>
#include <vector>

namespace wonder {

/// Ranks of H^{2k}, k = 0, 1, ...
using BettiVector = std::vector<long>;

/// Betti numbers of the blowup of Y along Z of codimension d.
BettiVector keel_step(const BettiVector& y, const BettiVector& z, int d);

struct BlowupStep {
  int member = 0;      // index into the ordered members
  int codim = 0;
  BettiVector center;  // empty when skipped (d = 1)
  BettiVector after;
};

struct BlowupPlan {
  BettiVector start;  // h-vector of the fan
  std::vector<BlowupStep> steps;
  BettiVector result;
};

/// Iterated blowup of the toric variety along the ordered members; each
/// center's Betti numbers come from the model of the induced arrangement.
BlowupPlan model_betti_plan(const Fan& fan, const std::vector<Layer>& ordered_members);
BettiVector model_betti(const Fan& fan, const std::vector<Layer>& ordered_members);
BettiVector model_betti(const Fan& fan, const BuildingSet& building);

struct VerifyReport {
  bool passed = true;
  std::vector<std::string> messages;
  std::vector<int> mismatched_degrees;  // cohomological degrees 2k
};

/// Equal, palindromic, b_0 = 1, top rank 1, torsion free.
VerifyReport verify(const std::vector<long>& presentation, const BettiVector& oracle, bool torsion_free = true);

/// Drops trailing zeros.
std::vector<long> trim(std::vector<long> v);

}  // namespace wonder
