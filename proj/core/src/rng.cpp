#include "srli/rng.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace srli {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("Rng::below: n must be positive");
  }
  // Reject draws falling in the final incomplete block of size 2^64 mod n.
  std::uint64_t x, r;
  do {
    x = gen_();
    r = x % n;
  } while (x - r > std::numeric_limits<std::uint64_t>::max() - (n - 1));
  return r;
}

DiscreteSampler::DiscreteSampler(const std::vector<double>& weights) {
  if (weights.empty()) {
    throw std::invalid_argument("DiscreteSampler: empty weight vector");
  }
  cumulative_.reserve(weights.size());
  double running = 0.0;
  for (double w : weights) {
    if (w < 0.0) {
      throw std::invalid_argument("DiscreteSampler: negative weight");
    }
    running += w;
    cumulative_.push_back(running);
  }
  if (running <= 0.0) {
    throw std::invalid_argument("DiscreteSampler: total weight must be positive");
  }
}

int DiscreteSampler::sample(Rng& rng) const {
  const double t = rng.uniform() * cumulative_.back();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), t);
  if (it == cumulative_.end()) {
    --it;
  }
  return static_cast<int>(it - cumulative_.begin());
}

}  // namespace srli
