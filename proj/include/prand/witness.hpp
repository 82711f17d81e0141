#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "prand/complexity.hpp"
#include "prand/strings.hpp"

namespace prand {

/// How generate_witness compresses prefixes of a sequence.
struct WitnessGenerator {
  enum class Strategy { runlength, blockcode };
  Strategy strategy = Strategy::runlength;
  std::size_t block = 8;  // blockcode only

  /// "runlength" or "blockcode:<b>"; throws FormatError otherwise.
  static WitnessGenerator parse(std::string_view text);
  std::string describe() const;
};

/// Complexity pairs for power-of-two prefixes of x, each charged
/// 2*ceil(log2 n) + 3 on top of its code length so the Kraft sum stays below 1.
///
///   runlength: (x↾n, 2*ceil(log2 n) + 3) when x↾n is one repeated bit
///   blockcode: (x↾n, ceil(n*H) + 2*ceil(log2 n) + 3) for n >= b, H the empirical
///              b-block entropy per bit rounded up to a multiple of 1/64
FiniteComplexity generate_witness(const BinaryString& x, const WitnessGenerator& g);

/// Empirical entropy per bit of the non-overlapping b-blocks of x, in 64ths, rounded up.
std::int64_t block_entropy_64ths(const BinaryString& x, std::size_t b);

}  // namespace prand
