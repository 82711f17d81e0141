#include "prand/witness.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <vector>

#include "prand/errors.hpp"

namespace prand {

namespace {

std::int64_t ceil_log2(std::size_t n) {
  std::int64_t k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

}  // namespace

WitnessGenerator WitnessGenerator::parse(std::string_view text) {
  if (text == "runlength") return {};
  constexpr std::string_view kBlock = "blockcode:";
  if (text.substr(0, kBlock.size()) == kBlock) {
    const std::string_view digits = text.substr(kBlock.size());
    std::size_t b = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), b);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && b >= 1 && b <= 16) {
      return {Strategy::blockcode, b};
    }
    throw FormatError("blockcode block length must be an integer in [1,16]");
  }
  throw FormatError("unknown witness strategy '" + std::string(text) + "' (runlength, blockcode:<b>)");
}

std::string WitnessGenerator::describe() const {
  return strategy == Strategy::runlength ? "runlength" : "blockcode:" + std::to_string(block);
}

std::int64_t block_entropy_64ths(const BinaryString& x, std::size_t b) {
  const std::size_t blocks = x.size() / b;
  if (blocks == 0) return 0;
  std::map<std::string, std::size_t> counts;
  for (std::size_t i = 0; i < blocks; ++i) ++counts[x.bits().substr(i * b, b)];
  long double h = 0;
  for (const auto& [_, c] : counts) {
    const long double p = static_cast<long double>(c) / blocks;
    h -= p * std::log2(p);
  }
  // The slack absorbs rounding in log2; rounding up keeps the charge conservative.
  return static_cast<std::int64_t>(std::ceil(h * 64 / b - 1e-9L));
}

FiniteComplexity generate_witness(const BinaryString& x, const WitnessGenerator& g) {
  if (x.empty()) throw FormatError("generate_witness needs a nonempty sequence");
  std::vector<Entry> out;
  for (std::size_t n = 1; n <= x.size(); n *= 2) {
    const BinaryString p = x.prefix(n);
    const std::int64_t overhead = 2 * ceil_log2(n) + 3;
    if (g.strategy == WitnessGenerator::Strategy::runlength) {
      if (p.bits().find_first_not_of(p[0]) == std::string::npos) out.push_back({p, overhead});
    } else if (n >= g.block) {
      const std::int64_t h64 = block_entropy_64ths(p, g.block);
      const auto nn = static_cast<std::int64_t>(n);
      out.push_back({p, (nn * h64 + 63) / 64 + overhead});
    }
  }
  return FiniteComplexity(std::move(out));
}

}  // namespace prand
