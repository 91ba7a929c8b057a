#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string_view>

namespace heis::rng {

// 64-bit FNV-1a hash, used to derive stream ids from stream names.
std::uint64_t fnv1a(std::string_view s);

// Deterministic named random stream on top of splitmix64. A stream is
// identified by (root seed, name), so adding a new named stream to a
// program never perturbs the draws of existing ones. All outputs are
// fully specified by the implementation (no standard-library
// distributions), so sequences are identical across platforms.
class Stream {
 public:
  Stream(std::uint64_t seed, std::string_view name);

  // Deterministic shard for worker k: disjoint for distinct k, stable
  // under changes of worker count.
  Stream substream(std::uint64_t k) const;

  std::uint64_t next_u64();
  double uniform01();                  // [0, 1), 53-bit resolution
  double uniform(double a, double b);  // [a, b)
  double normal();                     // standard normal, Box-Muller
  Eigen::VectorXd gaussian(int dim);

 private:
  explicit Stream(std::uint64_t state);

  std::uint64_t state_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace heis::rng
