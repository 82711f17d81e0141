#include "prand/strings.hpp"

#include <algorithm>

#include "prand/errors.hpp"

namespace prand {

BinaryString::BinaryString(std::string_view bits) : bits_(bits) {
  for (char c : bits_) {
    if (c != '0' && c != '1') {
      throw FormatError("invalid character in binary string: '" + std::string(bits) + "'");
    }
  }
}

BinaryString BinaryString::parse(std::string_view token) {
  if (token == "@") return BinaryString{};
  if (token.empty()) throw FormatError("empty token; use '@' for the empty string");
  return BinaryString(token);
}

BinaryString BinaryString::prefix(std::size_t n) const {
  BinaryString out;
  out.bits_ = bits_.substr(0, std::min(n, bits_.size()));
  return out;
}

BinaryString BinaryString::appended(char bit) const {
  BinaryString out = *this;
  out.bits_.push_back(bit == '0' ? '0' : '1');
  return out;
}

BinaryString BinaryString::prepended(char bit) const {
  BinaryString out;
  out.bits_.reserve(bits_.size() + 1);
  out.bits_.push_back(bit == '0' ? '0' : '1');
  out.bits_ += bits_;
  return out;
}

bool is_prefix(const BinaryString& t, const BinaryString& s) noexcept {
  return t.size() <= s.size() && s.bits().compare(0, t.size(), t.bits()) == 0;
}

StringSet::StringSet(std::vector<BinaryString> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

StringSet StringSet::of(std::initializer_list<std::string_view> tokens) {
  std::vector<BinaryString> v;
  v.reserve(tokens.size());
  for (auto t : tokens) v.push_back(BinaryString::parse(t));
  return StringSet(std::move(v));
}

bool StringSet::contains(const BinaryString& s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

bool StringSet::is_subset_of(const StringSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

std::size_t StringSet::index_of(const BinaryString& s) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), s);
  if (it == members_.end() || *it != s) return members_.size();
  return static_cast<std::size_t>(it - members_.begin());
}

StringSet StringSet::united(const StringSet& other) const {
  StringSet out;
  out.members_.reserve(members_.size() + other.members_.size());
  std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                 std::back_inserter(out.members_));
  return out;
}

StringSet StringSet::intersected(const StringSet& other) const {
  StringSet out;
  std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(out.members_));
  return out;
}

StringSet StringSet::select(std::uint64_t mask) const {
  StringSet out;
  for (std::size_t i = 0; i < members_.size() && i < 64; ++i) {
    if (mask >> i & 1u) out.members_.push_back(members_[i]);
  }
  return out;
}

std::uint64_t StringSet::mask_of(const StringSet& subset) const {
  std::uint64_t mask = 0;
  for (const auto& s : subset) {
    std::size_t i = index_of(s);
    if (i == members_.size() || i >= 64) throw Error("mask_of: string outside the indexed set");
    mask |= std::uint64_t{1} << i;
  }
  return mask;
}

std::string to_string(const StringSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += s[i].token();
  }
  return out + "}";
}

bool is_prefix_free(const StringSet& f) {
  // Shortlex order puts any proper prefix before its extensions.
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (is_prefix(f[i], f[j])) return false;
    }
  }
  return true;
}

bool covers(const StringSet& a, const StringSet& b) {
  return std::all_of(a.begin(), a.end(), [&](const BinaryString& s) { return in_open(s, b); });
}

bool in_open(const BinaryString& x, const StringSet& a) {
  for (std::size_t n = 0; n <= x.size(); ++n) {
    if (a.contains(x.prefix(n))) return true;
  }
  return false;
}

StringSet universe(std::size_t max_len, std::size_t cap) {
  if (max_len > cap) {
    throw BoundedUniverseError("universe length " + std::to_string(max_len) + " exceeds cap " +
                               std::to_string(cap));
  }
  std::vector<BinaryString> all{BinaryString{}};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t level_end = all.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      all.push_back(all[i].appended('0'));
      all.push_back(all[i].appended('1'));
    }
    level_begin = level_end;
  }
  return StringSet(std::move(all));
}

}  // namespace prand
