#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace twistrep {

struct CriterionOutcome {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string details;
};

/*
 * The full seeded invariant suite. Every check is exact; the seed only
 * selects the random instances, never a tolerance. Deterministic per seed.
 */
std::vector<CriterionOutcome> run_acceptance(std::uint64_t seed);

}  // namespace twistrep
