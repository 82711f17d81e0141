#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace prand {

/// A finite word over {0,1}. The empty word is a valid value.
class BinaryString {
 public:
  BinaryString() = default;

  /// Throws FormatError on any character outside {0,1}. Does not accept "@".
  explicit BinaryString(std::string_view bits);

  /// Parses a file/CLI token: "@" is the empty string, otherwise 0/1 characters.
  static BinaryString parse(std::string_view token);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  char operator[](std::size_t i) const noexcept { return bits_[i]; }
  const std::string& bits() const noexcept { return bits_; }

  /// First n characters; n is clamped to size().
  BinaryString prefix(std::size_t n) const;
  BinaryString appended(char bit) const;
  BinaryString prepended(char bit) const;

  /// Serialization token: "@" for the empty string.
  std::string token() const { return bits_.empty() ? std::string("@") : bits_; }

  /// Shortlex order: by length, then lexicographically.
  friend std::strong_ordering operator<=>(const BinaryString& a, const BinaryString& b) noexcept {
    if (a.bits_.size() != b.bits_.size()) return a.bits_.size() <=> b.bits_.size();
    return a.bits_.compare(b.bits_) <=> 0;
  }
  friend bool operator==(const BinaryString& a, const BinaryString& b) noexcept = default;

 private:
  std::string bits_;
};

struct BinaryStringHash {
  std::size_t operator()(const BinaryString& s) const noexcept {
    return std::hash<std::string>{}(s.bits()) ^ (s.size() * 0x9e3779b97f4a7c15ULL);
  }
};

/// True iff t is an initial segment of s (t == s allowed).
bool is_prefix(const BinaryString& t, const BinaryString& s) noexcept;

/// Finite set of binary strings, stored sorted in shortlex order without duplicates.
class StringSet {
 public:
  using const_iterator = std::vector<BinaryString>::const_iterator;

  StringSet() = default;
  explicit StringSet(std::vector<BinaryString> members);

  /// Convenience for literals: tokens as in the file format ("@" = empty).
  static StringSet of(std::initializer_list<std::string_view> tokens);

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const_iterator begin() const noexcept { return members_.begin(); }
  const_iterator end() const noexcept { return members_.end(); }
  const BinaryString& operator[](std::size_t i) const noexcept { return members_[i]; }
  const std::vector<BinaryString>& members() const noexcept { return members_; }

  bool contains(const BinaryString& s) const;
  bool is_subset_of(const StringSet& other) const;

  /// Index of s in iteration order, or size() when absent.
  std::size_t index_of(const BinaryString& s) const;

  StringSet united(const StringSet& other) const;
  StringSet intersected(const StringSet& other) const;

  /// Members selected by the bits of mask (bit i = i-th member). Requires size() <= 64.
  StringSet select(std::uint64_t mask) const;
  /// Inverse of select for a subset of *this.
  std::uint64_t mask_of(const StringSet& subset) const;

  friend bool operator==(const StringSet&, const StringSet&) = default;
  friend auto operator<=>(const StringSet& a, const StringSet& b) {
    return a.members_ <=> b.members_;
  }

 private:
  std::vector<BinaryString> members_;
};

struct StringSetHash {
  std::size_t operator()(const StringSet& s) const noexcept {
    std::size_t h = s.size();
    for (const auto& m : s) h = h * 1000003u ^ BinaryStringHash{}(m);
    return h;
  }
};

/// "{0,10,@}" rendering used in reports.
std::string to_string(const StringSet& s);

/// True iff no two distinct members are prefix-related.
bool is_prefix_free(const StringSet& f);

/// A ≺ B: every member of A has a prefix in B.
bool covers(const StringSet& a, const StringSet& b);

/// True iff some member of A is a prefix of x (x is a finite prefix of a sequence).
bool in_open(const BinaryString& x, const StringSet& a);

inline constexpr std::size_t kDefaultUniverseCap = 12;

/// Every string of length <= max_len. Throws BoundedUniverseError above cap.
StringSet universe(std::size_t max_len, std::size_t cap = kDefaultUniverseCap);

}  // namespace prand
