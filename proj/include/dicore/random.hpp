#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace dicore {

// Identifies one independent random stream: a master seed chosen by the user
// plus a stream index (usually a trial number). Any stream is reachable
// directly, without generating the streams before it.
struct Seed {
  std::uint64_t master = 0;
  std::uint64_t stream = 0;

  friend bool operator==(const Seed&, const Seed&) = default;
};

// Philox4x32-10 block function (Salmon et al., Random123). The key is the
// master seed; the 128-bit counter is (block index, stream index).
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter, std::array<std::uint32_t, 2> key);

// Counter-based generator over one Seed. Satisfies
// std::uniform_random_bit_generator, but callers that need bit-exact replay
// across standard libraries should use the member helpers rather than
// <random> distributions, whose algorithms are implementation-defined.
class Stream {
 public:
  using result_type = std::uint64_t;

  explicit Stream(Seed seed);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  std::uint32_t next_u32();
  std::uint64_t next_u64();
  result_type operator()() { return next_u64(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform01();

  // Uniform integer in [0, bound); bound > 0. Lemire's multiply-and-reject.
  std::uint64_t below(std::uint64_t bound);

 private:
  void refill();

  std::array<std::uint32_t, 2> key_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  unsigned used_ = 4;
};

// Bernoulli trial resolved on 32-bit draws: succeeds with probability
// round(p * 2^32) / 2^32, which is exactly 0 at p = 0 and exactly 1 at p = 1.
class BernoulliThreshold {
 public:
  explicit BernoulliThreshold(double p);
  bool operator()(Stream& s) const { return s.next_u32() < threshold_; }

 private:
  std::uint64_t threshold_;
};

}  // namespace dicore
