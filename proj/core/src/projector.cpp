#include "dioid/projector.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace dioid {

namespace {

bool associative(MaxPlus b, MaxPlus a, MaxPlus x) { return dualres(b, otimes(a, x)) == otimes(dualres(b, a), x); }

}  // namespace

bool check_hypothesis(const Matrix<MaxPlus>& b, const Matrix<MaxPlus>& a, std::size_t samples, std::uint64_t seed) {
  std::vector<MaxPlus> reps = {MaxPlus::eps(), MaxPlus(-7), MaxPlus(-1), MaxPlus(0),
                               MaxPlus(2),     MaxPlus(9),  MaxPlus::top()};
  reps.insert(reps.end(), a.data().begin(), a.data().end());
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  std::vector<MaxPlus> bs = b.data();
  std::sort(bs.begin(), bs.end());
  bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(-1000, 1000);
  for (const MaxPlus& bij : bs) {
    for (const MaxPlus& av : reps)
      for (const MaxPlus& xv : reps)
        if (!associative(bij, av, xv)) return false;
    for (std::size_t s = 0; s < samples; ++s)
      if (!associative(bij, MaxPlus(dist(rng)), MaxPlus(dist(rng)))) return false;
  }
  return true;
}

bool check_hypothesis(const Matrix<Series>& b, const Matrix<Series>&, std::size_t, std::uint64_t) {
  for (const Series& bij : b.data())
    if (!bij.is_monomial_like()) return false;
  return true;
}

}  // namespace dioid
