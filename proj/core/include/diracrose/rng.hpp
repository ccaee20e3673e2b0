#pragma once

#include <cstdint>
#include <limits>

namespace diracrose {

enum class StreamPurpose : std::uint64_t {
  bond_lengths = 1,
  spins = 2,
  monte_carlo = 3,
  surrogate = 4,
};

// Counter-based generator: output i is a bijective mix of (key, i), so a
// stream can be replayed from any position and never shares state.
// Satisfies UniformRandomBitGenerator.
class CounterEngine {
 public:
  using result_type = std::uint64_t;

  explicit CounterEngine(std::uint64_t key, std::uint64_t counter = 0) noexcept
      : key_(key), counter_(counter) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept;

  // Uniform on the open interval (0, 1).
  double uniform_open() noexcept;

  std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_;
};

// Immutable address of a random stream. Identical (seed, index, purpose)
// triples always produce identical draw sequences.
class RngStream {
 public:
  constexpr RngStream(std::uint64_t master_seed, std::uint64_t stream_index,
                      StreamPurpose purpose) noexcept
      : master_seed_(master_seed), stream_index_(stream_index), purpose_(purpose) {}

  std::uint64_t master_seed() const noexcept { return master_seed_; }
  std::uint64_t stream_index() const noexcept { return stream_index_; }
  StreamPurpose purpose() const noexcept { return purpose_; }

  // Child stream, used to split one logical stream into independent chunks.
  RngStream substream(std::uint64_t index) const noexcept;

  std::uint64_t key() const noexcept;
  CounterEngine engine() const noexcept { return CounterEngine(key()); }

 private:
  std::uint64_t master_seed_;
  std::uint64_t stream_index_;
  StreamPurpose purpose_;
};

std::uint64_t mix64(std::uint64_t x) noexcept;

}  // namespace diracrose
