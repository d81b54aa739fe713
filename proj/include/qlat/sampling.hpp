#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>

namespace qlat {

/// Tuple spaces larger than `exhaustive_limit` are replaced by `samples`
/// uniformly drawn tuples from a generator seeded with `seed`.
struct SamplingPolicy {
  std::size_t exhaustive_limit = std::numeric_limits<std::size_t>::max();
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
};

/// Visits index tuples of the box dims[0] x ... x dims[k-1] in row-major
/// order, or a sample of them. Returns true when the visit was sampled.
bool for_each_tuple(std::span<const std::size_t> dims, const SamplingPolicy& policy,
                    const std::function<void(std::span<const std::size_t>)>& visit);

}  // namespace qlat
