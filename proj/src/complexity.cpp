#include "prand/complexity.hpp"

#include <algorithm>

namespace prand {

FiniteComplexity::FiniteComplexity(std::vector<Entry> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

FiniteComplexity FiniteComplexity::of(
    std::initializer_list<std::pair<std::string_view, std::int64_t>> pairs) {
  std::vector<Entry> v;
  v.reserve(pairs.size());
  for (const auto& [s, d] : pairs) v.push_back({BinaryString::parse(s), d});
  return FiniteComplexity(std::move(v));
}

ExtInt k_of(const FiniteComplexity& r, const BinaryString& s) {
  auto it = std::lower_bound(r.begin(), r.end(), s,
                             [](const Entry& e, const BinaryString& key) { return e.sigma < key; });
  if (it == r.end() || it->sigma != s) return ExtInt::infinity();
  return it->d;  // pairs are sorted by d within one sigma
}

StringSet ring(const FiniteComplexity& r) {
  std::vector<BinaryString> v;
  v.reserve(r.size());
  for (const auto& e : r) {
    if (v.empty() || v.back() != e.sigma) v.push_back(e.sigma);
  }
  return StringSet(std::move(v));
}

FiniteComplexity shift(const FiniteComplexity& r, std::int64_t i) {
  std::vector<Entry> v(r.begin(), r.end());
  for (auto& e : v) e.d += i;
  return FiniteComplexity(std::move(v));
}

ExtInt norm(const FiniteComplexity& r) {
  ExtInt best = ExtInt::infinity();
  for (const auto& e : r) best = std::min(best, ExtInt(static_cast<std::int64_t>(e.sigma.size()) - e.d));
  return best;
}

bool stronger(const FiniteComplexity& s, const FiniteComplexity& r) {
  return std::all_of(s.begin(), s.end(), [&](const Entry& e) { return k_of(r, e.sigma) <= ExtInt(e.d); });
}

FiniteComplexity uniform(const StringSet& f, std::int64_t e) {
  std::vector<Entry> v;
  v.reserve(f.size());
  for (const auto& s : f) v.push_back({s, static_cast<std::int64_t>(s.size()) - e});
  return FiniteComplexity(std::move(v));
}

FiniteComplexity united(const FiniteComplexity& a, const FiniteComplexity& b) {
  std::vector<Entry> v(a.begin(), a.end());
  v.insert(v.end(), b.begin(), b.end());
  return FiniteComplexity(std::move(v));
}

FiniteComplexity union_shift(const std::vector<FiniteComplexity>& rs) {
  std::vector<Entry> v;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    for (auto e : rs[i]) {
      e.d += static_cast<std::int64_t>(i + 1);
      v.push_back(std::move(e));
    }
  }
  return FiniteComplexity(std::move(v));
}

FiniteComplexity optimal_merge(const std::vector<FiniteComplexity>& as) { return union_shift(as); }

FiniteComplexity graph_of(const FiniteComplexity& r) {
  std::vector<Entry> v;
  for (const auto& e : r) {
    if (v.empty() || v.back().sigma != e.sigma) v.push_back(e);
  }
  return FiniteComplexity(std::move(v));
}

std::string to_string(const FiniteComplexity& r) {
  std::string out = "{";
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) out += ',';
    out += "(" + r[i].sigma.token() + "," + std::to_string(r[i].d) + ")";
  }
  return out + "}";
}

}  // namespace prand
