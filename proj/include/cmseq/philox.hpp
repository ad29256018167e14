#pragma once

#include <array>
#include <complex>
#include <cstdint>

namespace cmseq {

/// Philox4x32-10 counter-based generator (Salmon, Moraes, Dror, Shaw;
/// "Parallel random numbers: as easy as 1, 2, 3"). Constants fixed here:
/// round multipliers 0xD2511F53 and 0xCD9E8D57, Weyl key increments
/// 0x9E3779B9 and 0xBB67AE85, 10 rounds. A (counter, key) pair maps to four
/// 32-bit words; streams are independent counters under one key.
struct Philox4x32 {
  static constexpr uint32_t kMul0 = 0xD2511F53u;
  static constexpr uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr uint32_t kWeyl1 = 0xBB67AE85u;

  static std::array<uint32_t, 4> block(std::array<uint32_t, 4> ctr,
                                       std::array<uint32_t, 2> key) {
    for (int round = 0; round < 10; ++round) {
      uint64_t p0 = static_cast<uint64_t>(kMul0) * ctr[0];
      uint64_t p1 = static_cast<uint64_t>(kMul1) * ctr[2];
      uint32_t hi0 = static_cast<uint32_t>(p0 >> 32), lo0 = static_cast<uint32_t>(p0);
      uint32_t hi1 = static_cast<uint32_t>(p1 >> 32), lo1 = static_cast<uint32_t>(p1);
      ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    return ctr;
  }
};

/// Standard complex Gaussians (E X = 0, E|X|^2 = 1) from a Philox stream:
/// block b of stream s under seed yields two entries via the polar
/// Box-Muller map X = sqrt(-ln u1) e^{2 pi i u2}, with u1 = (w+1) 2^{-32}
/// in (0,1] and u2 = (w+1/2) 2^{-32}. Entry e of a stream uses block
/// e >> 1, lane e & 1, so draws are independent of evaluation order.
class ComplexGaussianStream {
public:
  ComplexGaussianStream(uint64_t seed, uint32_t stream_hi, uint32_t stream_lo)
      : key_{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32)},
        hi_(stream_hi),
        lo_(stream_lo) {}

  std::complex<double> entry(uint64_t e) const {
    uint64_t block_index = e >> 1;
    auto words = Philox4x32::block({static_cast<uint32_t>(block_index),
                                    static_cast<uint32_t>(block_index >> 32), lo_, hi_},
                                   key_);
    int lane = static_cast<int>(e & 1);
    double u1 = (static_cast<double>(words[2 * lane]) + 1.0) * 0x1p-32;
    double u2 = (static_cast<double>(words[2 * lane + 1]) + 0.5) * 0x1p-32;
    double rad = std::sqrt(-std::log(u1));
    return {rad * std::cos(2.0 * M_PI * u2), rad * std::sin(2.0 * M_PI * u2)};
  }

private:
  std::array<uint32_t, 2> key_;
  uint32_t hi_, lo_;
};

}  // namespace cmseq
