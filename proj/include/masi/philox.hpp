#pragma once

#include <array>
#include <cstdint>

#include "masi/matrix.hpp"

namespace masi {

/// Philox4x64-10 counter-based generator (Salmon et al., Random123). One call
/// maps (counter, key) to four 64-bit outputs; no hidden state.
using PhiloxCounter = std::array<std::uint64_t, 4>;
using PhiloxKey = std::array<std::uint64_t, 2>;

PhiloxCounter philox4x64_10(PhiloxCounter counter, PhiloxKey key) noexcept;

/// Key-space separation for independent consumers sharing one user seed.
enum class StreamDomain : std::uint64_t {
  HaarUnitary = 0x48414152,  // "HAAR"
  PureState = 0x50555245,    // "PURE"
  Ginibre = 0x47494e49,      // "GINI"
  TestData = 0x54455354,     // "TEST"
};

/// Sequential reader over stream (seed, domain, index): block j is
/// philox((index, j, 0, 0), (seed, domain)). Draws therefore depend only on
/// (seed, domain, index) and the draw position, never on thread scheduling.
class CounterStream {
 public:
  CounterStream(std::uint64_t seed, StreamDomain domain, std::uint64_t index) noexcept
      : key_{seed, static_cast<std::uint64_t>(domain)}, index_(index) {}

  std::uint64_t next_u64() noexcept;
  /// Uniform on (0, 1]: ((x >> 11) + 1) · 2^-53.
  Real uniform_open_closed() noexcept;
  /// Standard normal via Box–Muller; both outputs of a pair are used.
  Real normal() noexcept;
  /// (g₁ + i g₂)/√2 with independent standard normals, so E|z|² = 1.
  Complex complex_normal() noexcept;

 private:
  PhiloxKey key_;
  std::uint64_t index_;
  std::uint64_t block_ = 0;
  PhiloxCounter buffer_{};
  int buffered_ = 0;
  bool has_spare_ = false;
  Real spare_ = 0.0;
};

}  // namespace masi
