#include "prand/rules.hpp"

#include <algorithm>
#include <random>

#include "prand/antichain.hpp"
#include "prand/combinatorics.hpp"
#include "prand/errors.hpp"

namespace prand {

namespace {

// Exponent of the weight 2^(-d + |s| - h(s)) carried by one pair.
std::int64_t weight_exponent(const HSpec& h, const Entry& e) {
  return -e.d + static_cast<std::int64_t>(e.sigma.size()) - h(e.sigma);
}

// The four example rules are evaluated on graph_of(r), one pair per string at
// its least value. Summing literally over pairs would let s ≺ r carry extra
// weak pairs for the same string and leave the rule, breaking ≺-closure.

// Per-string totals for the prefix-free variants; aligned with ring(r).
template <class W, class Fn>
std::vector<W> per_string(const FiniteComplexity& r, const StringSet& rg, Fn&& weight) {
  std::vector<W> w(rg.size(), W{});
  std::size_t k = 0;
  for (const auto& e : r) {
    while (rg[k] != e.sigma) ++k;
    w[k] += weight(e);
  }
  return w;
}

bool below_pow2(std::uint64_t count, std::int64_t n) {
  if (n < 0) return false;
  if (n >= 63) return true;
  return count < (std::uint64_t{1} << n);
}

// Candidate thresholds n for the counting rules: the count only changes at v + 1.
std::vector<std::int64_t> count_thresholds(const std::vector<std::int64_t>& v) {
  std::vector<std::int64_t> ns{0};
  for (auto x : v) {
    if (x + 1 > 0) ns.push_back(x + 1);
  }
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  return ns;
}

class WeightRule final : public Rule::Node {
 public:
  WeightRule(HSpec h, bool prefix_free) : h_(std::move(h)), prefix_free_(prefix_free) {}

  bool contains(const FiniteComplexity& pairs) const override {
    const FiniteComplexity r = graph_of(pairs);
    auto weight = [&](const Entry& e) { return Dyadic::pow2(weight_exponent(h_, e)); };
    if (prefix_free_) {
      const StringSet rg = ring(r);
      return max_weight_antichain(rg, per_string<Dyadic>(r, rg, weight)) < Dyadic::one();
    }
    Dyadic total;
    for (const auto& e : r) {
      total += weight(e);
      if (!(total < Dyadic::one())) return false;
    }
    return true;
  }
  std::string describe() const override {
    return std::string(prefix_free_ ? "ka(" : "kp(") + h_.describe() + ")";
  }

 private:
  HSpec h_;
  bool prefix_free_;
};

class CountRule final : public Rule::Node {
 public:
  CountRule(HSpec h, bool prefix_free) : h_(std::move(h)), prefix_free_(prefix_free) {}

  bool contains(const FiniteComplexity& pairs) const override {
    const FiniteComplexity r = graph_of(pairs);
    std::vector<std::int64_t> v;
    v.reserve(r.size());
    for (const auto& e : r) v.push_back(-weight_exponent(h_, e));
    const StringSet rg = prefix_free_ ? ring(r) : StringSet{};
    for (std::int64_t n : count_thresholds(v)) {
      std::uint64_t count = 0;
      if (prefix_free_) {
        std::size_t i = 0;
        auto below = per_string<std::uint64_t>(r, rg, [&](const Entry&) { return v[i++] < n ? 1u : 0u; });
        count = max_weight_antichain(rg, below);
      } else {
        for (auto x : v) count += x < n ? 1 : 0;
      }
      if (!below_pow2(count, n)) return false;
    }
    return true;
  }
  std::string describe() const override {
    return std::string(prefix_free_ ? "kd(" : "ks(") + h_.describe() + ")";
  }

 private:
  HSpec h_;
  bool prefix_free_;
};

class IntersectRule final : public Rule::Node {
 public:
  IntersectRule(Rule a, Rule b) : a_(std::move(a)), b_(std::move(b)) {}
  bool contains(const FiniteComplexity& r) const override { return a_(r) && b_(r); }
  std::string describe() const override { return "and(" + a_.describe() + "," + b_.describe() + ")"; }

 private:
  Rule a_, b_;
};

class JoinRule final : public Rule::Node {
 public:
  JoinRule(Rule a, Rule b) : a_(std::move(a)), b_(std::move(b)) {}

  bool contains(const FiniteComplexity& r) const override {
    if (a_(r) || b_(r)) return true;
    if (r.size() > kJoinPairLimit) throw ResourceLimitError("join: too many pairs to decompose");
    // Any decomposition (t1 ∪ t2)^{+1} can be refined to a disjoint one by
    // ≺-closure of each side, so 2-colorings of r^{-1} are exhaustive.
    const FiniteComplexity base = shift(r, -1);
    const std::uint64_t colorings = std::uint64_t{1} << base.size();
    for (std::uint64_t c = 0; c < colorings; ++c) {
      std::vector<Entry> left, right;
      for (std::size_t i = 0; i < base.size(); ++i) (c >> i & 1u ? right : left).push_back(base[i]);
      if (a_(FiniteComplexity(std::move(left))) && b_(FiniteComplexity(std::move(right)))) return true;
    }
    return false;
  }
  std::string describe() const override { return "or(" + a_.describe() + "," + b_.describe() + ")"; }

 private:
  Rule a_, b_;
};

class CustomRule final : public Rule::Node {
 public:
  CustomRule(std::string name, std::function<bool(const FiniteComplexity&)> fn)
      : name_(std::move(name)), fn_(std::move(fn)) {}
  bool contains(const FiniteComplexity& r) const override { return fn_(r); }
  std::string describe() const override { return name_; }

 private:
  std::string name_;
  std::function<bool(const FiniteComplexity&)> fn_;
};

}  // namespace

Rule kp(HSpec h) { return Rule(std::make_shared<WeightRule>(std::move(h), false)); }
Rule ka(HSpec h) { return Rule(std::make_shared<WeightRule>(std::move(h), true)); }
Rule ks(HSpec h) { return Rule(std::make_shared<CountRule>(std::move(h), false)); }
Rule kd(HSpec h) { return Rule(std::make_shared<CountRule>(std::move(h), true)); }
Rule intersect(Rule a, Rule b) { return Rule(std::make_shared<IntersectRule>(std::move(a), std::move(b))); }
Rule join(Rule a, Rule b) { return Rule(std::make_shared<JoinRule>(std::move(a), std::move(b))); }

Rule custom_rule(std::string name, std::function<bool(const FiniteComplexity&)> fn) {
  return Rule(std::make_shared<CustomRule>(std::move(name), std::move(fn)));
}

// ------------------------------------------------------------ samples

ComplexitySamples::ComplexitySamples(std::vector<FiniteComplexity> items) : items_(std::move(items)) {
  for (const auto& r : items_) alphabet_.insert(alphabet_.end(), r.begin(), r.end());
  std::sort(alphabet_.begin(), alphabet_.end());
  alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()), alphabet_.end());
  index();
}

ComplexitySamples ComplexitySamples::enumerate(const ComplexitySpace& space) {
  std::vector<Entry> alphabet;
  for (const auto& s : space.strings) {
    for (std::int64_t d = space.d_lo; d <= space.d_hi; ++d) alphabet.push_back({s, d});
  }
  if (alphabet.size() > 63) {
    throw BoundedUniverseError("complexity space has " + std::to_string(alphabet.size()) +
                               " pairs; at most 63 supported");
  }
  std::vector<FiniteComplexity> items;
  for (std::uint64_t mask : subsets_up_to(alphabet.size(), space.max_size)) {
    std::vector<Entry> pairs;
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      if (mask >> i & 1u) pairs.push_back(alphabet[i]);
    }
    items.emplace_back(std::move(pairs));
  }
  ComplexitySamples out(std::move(items));
  return out;
}

void ComplexitySamples::index() {
  masked_ = alphabet_.size() <= 64;
  if (!masked_) return;
  masks_.assign(items_.size(), 0);
  dominated_.assign(items_.size(), 0);
  for (std::size_t i = 0; i < items_.size(); ++i) {
    for (const auto& e : items_[i]) {
      auto pos = std::lower_bound(alphabet_.begin(), alphabet_.end(), e) - alphabet_.begin();
      masks_[i] |= std::uint64_t{1} << pos;
    }
    for (std::size_t a = 0; a < alphabet_.size(); ++a) {
      if (k_of(items_[i], alphabet_[a].sigma) <= ExtInt(alphabet_[a].d)) dominated_[i] |= std::uint64_t{1} << a;
    }
  }
}

bool ComplexitySamples::stronger(std::size_t s, std::size_t r) const {
  if (masked_) return (masks_[s] & ~dominated_[r]) == 0;
  return prand::stronger(items_[s], items_[r]);
}

std::vector<char> classify(const Rule& rule, const ComplexitySamples& samples, Exec exec) {
  return map_indices<char>(samples.size(), exec, [&](std::size_t i) { return rule(samples[i]) ? 1 : 0; });
}

// ------------------------------------------------------------ axioms

CheckReport check_rule_axioms(const Rule& rule, const ComplexitySamples& samples,
                              const RuleCheckOptions& options) {
  CheckReport report("rule-axioms");
  report.set("rule", rule.describe()).set("samples", samples.size());
  const Exec exec = options.exec;
  const std::size_t keep = CheckReport::kMaxWitnesses;

  if (!rule(FiniteComplexity{})) report.fail("empty complexity is not a member");

  const auto is_member = classify(rule, samples, exec);
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (is_member[i]) members.push_back(i);
  }
  report.set("members", members.size());

  // ≺-closure over every sampled pair (s, r) with r a member.
  report.absorb("closure", collect_violations(members.size(), exec, keep,
                                              [&](std::size_t k) -> std::optional<std::string> {
                                                const std::size_t r = members[k];
                                                for (std::size_t s = 0; s < samples.size(); ++s) {
                                                  if (!is_member[s] && samples.stronger(s, r)) {
                                                    return "s=" + to_string(samples[s]) + " ≺ r=" +
                                                           to_string(samples[r]) + " but s not in R";
                                                  }
                                                }
                                                return std::nullopt;
                                              }));

  // (r ∪ s)^{+1} over unordered member pairs.
  report.absorb("union", collect_violations(members.size(), exec, keep,
                                            [&](std::size_t a) -> std::optional<std::string> {
                                              const auto& r = samples[members[a]];
                                              for (std::size_t b = a; b < members.size(); ++b) {
                                                const auto& s = samples[members[b]];
                                                auto u = shift(united(r, s), 1);
                                                if (!rule(u)) {
                                                  return "r=" + to_string(r) + " s=" + to_string(s) +
                                                         " (r∪s)^+1=" + to_string(u) + " not in R";
                                                }
                                              }
                                              return std::nullopt;
                                            }));
  report.set("union_pairs", members.size() * (members.size() + 1) / 2);

  // Shifted unions r1^{+1} ∪ ... ∪ rn^{+n} of member lists of length 1..3.
  std::vector<std::vector<std::size_t>> lists;
  bool sampled = false;
  const std::size_t m = members.size();
  for (std::size_t len = 1; len <= 3 && m > 0; ++len) {
    double total = 1;
    for (std::size_t i = 0; i < len; ++i) total *= static_cast<double>(m);
    if (len == 1 || total <= static_cast<double>(options.lemma_budget)) {
      std::vector<std::size_t> idx(len, 0);
      for (;;) {
        lists.push_back(idx);
        std::size_t p = 0;
        while (p < len && ++idx[p] == m) idx[p++] = 0;
        if (p == len) break;
      }
    } else {
      sampled = true;
      std::mt19937_64 rng(options.seed + len);
      std::uniform_int_distribution<std::size_t> pick(0, m - 1);
      for (std::size_t n = 0; n < options.lemma_budget; ++n) {
        std::vector<std::size_t> idx(len);
        for (auto& x : idx) x = pick(rng);
        lists.push_back(std::move(idx));
      }
    }
  }
  report.absorb("shifted-union", collect_violations(lists.size(), exec, keep,
                                             [&](std::size_t k) -> std::optional<std::string> {
                                               std::vector<FiniteComplexity> rs;
                                               for (auto i : lists[k]) rs.push_back(samples[members[i]]);
                                               auto u = union_shift(rs);
                                               if (rule(u)) return std::nullopt;
                                               std::string w = "lists";
                                               for (const auto& r : rs) w += " " + to_string(r);
                                               return w + " -> " + to_string(u) + " not in R";
                                             }));
  report.set("union_lists", lists.size()).set("union_mode", sampled ? "sampled" : "exhaustive");
  return report;
}

}  // namespace prand
