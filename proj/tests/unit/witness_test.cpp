#include <doctest.h>

#include <random>

#include "prand/errors.hpp"
#include "prand/rules.hpp"
#include "prand/witness.hpp"

using namespace prand;

namespace {

const Rule kKp = kp(HSpec::length());

BinaryString repeat(char bit, std::size_t n) { return BinaryString(std::string(n, bit)); }

}  // namespace

TEST_SUITE("witness") {
  TEST_CASE("strategy parsing") {
    CHECK(WitnessGenerator::parse("runlength").strategy == WitnessGenerator::Strategy::runlength);
    const auto b = WitnessGenerator::parse("blockcode:4");
    CHECK(b.strategy == WitnessGenerator::Strategy::blockcode);
    CHECK(b.block == 4);
    CHECK(b.describe() == "blockcode:4");
    CHECK_THROWS_AS(WitnessGenerator::parse("blockcode:0"), FormatError);
    CHECK_THROWS_AS(WitnessGenerator::parse("huffman"), FormatError);
  }

  TEST_CASE("runlength") {
    const auto r = generate_witness(repeat('0', 16), {});
    CHECK(k_of(r, repeat('0', 16)) == ExtInt(11));
    CHECK(k_of(r, repeat('0', 1)) == ExtInt(3));
    CHECK(r.size() == 5);
    CHECK(kKp(r));
    const auto mixed = generate_witness(BinaryString("01"), {});
    CHECK(mixed == FiniteComplexity::of({{"0", 3}}));
    CHECK(k_of(generate_witness(repeat('1', 1024), {}), repeat('1', 1024)) == ExtInt(23));
  }

  TEST_CASE("block entropy") {
    CHECK(block_entropy_64ths(repeat('0', 64), 8) == 0);
    CHECK(block_entropy_64ths(BinaryString("0110"), 2) == 32);
    CHECK(block_entropy_64ths(BinaryString("01"), 1) == 64);
  }

  TEST_CASE("generated witnesses are kp members") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 50; ++round) {
      std::string bits(1 + rng() % 300, '0');
      const unsigned bias = rng() % 8;
      for (auto& c : bits) c = rng() % 8 < bias ? '1' : '0';
      const BinaryString x(bits);
      for (const auto& g : {std::string("runlength"), std::string("blockcode:1"), std::string("blockcode:8")}) {
        CHECK_MESSAGE(kKp(generate_witness(x, WitnessGenerator::parse(g))), g << " on " << bits);
      }
    }
  }
}
