#include "qlat/sampling.hpp"

#include <random>
#include <vector>

namespace qlat {

bool for_each_tuple(std::span<const std::size_t> dims, const SamplingPolicy& policy,
                    const std::function<void(std::span<const std::size_t>)>& visit) {
  std::size_t total = 1;
  bool overflow = false;
  for (auto d : dims) {
    if (d == 0) return false;
    if (total > policy.exhaustive_limit / d) overflow = true;
    total *= d;
  }
  std::vector<std::size_t> idx(dims.size(), 0);
  if (!overflow && total <= policy.exhaustive_limit) {
    for (std::size_t n = 0; n < total; ++n) {
      visit(idx);
      for (std::size_t k = dims.size(); k-- > 0;) {
        if (++idx[k] < dims[k]) break;
        idx[k] = 0;
      }
    }
    return false;
  }
  std::mt19937_64 rng(policy.seed);
  for (std::size_t n = 0; n < policy.samples; ++n) {
    // Plain modulo keeps the draw sequence identical across standard libraries.
    for (std::size_t k = 0; k < dims.size(); ++k) idx[k] = static_cast<std::size_t>(rng() % dims[k]);
    visit(idx);
  }
  return true;
}

}  // namespace qlat
