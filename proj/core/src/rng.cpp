#include "diracrose/rng.hpp"

namespace diracrose {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

// SplitMix64 finaliser.
std::uint64_t mix64(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

CounterEngine::result_type CounterEngine::operator()() noexcept {
  const std::uint64_t c = counter_++;
  return mix64(mix64(key_ + c * kGolden) ^ key_);
}

double CounterEngine::uniform_open() noexcept {
  // 53 random mantissa bits, shifted off zero by half an ulp.
  const std::uint64_t bits = (*this)() >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

std::uint64_t RngStream::key() const noexcept {
  std::uint64_t h = mix64(master_seed_ + kGolden);
  h = mix64(h ^ (stream_index_ * 0xD6E8FEB86659FD93ULL + 1));
  h = mix64(h ^ (static_cast<std::uint64_t>(purpose_) * 0xCA5A826395121157ULL));
  return h;
}

RngStream RngStream::substream(std::uint64_t index) const noexcept {
  // Fold the chunk index into the stream index; purpose is preserved.
  return RngStream(master_seed_, mix64(stream_index_ ^ mix64(index + kGolden)), purpose_);
}

}  // namespace diracrose
