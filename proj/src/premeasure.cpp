#include "prand/premeasure.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "prand/antichain.hpp"
#include "prand/combinatorics.hpp"
#include "prand/errors.hpp"

namespace prand {

// ---------------------------------------------------------------- HSpec

HSpec HSpec::length() { return HSpec{}; }

HSpec HSpec::scaled(std::uint64_t p, std::uint64_t q) {
  if (q == 0) throw FormatError("scaled h needs a positive denominator");
  HSpec h;
  h.kind_ = Kind::scaled;
  h.p_ = p;
  h.q_ = q;
  return h;
}

HSpec HSpec::table(Table entries, std::string label) {
  HSpec h;
  h.kind_ = Kind::table;
  h.table_ = std::make_shared<const Table>(std::move(entries));
  h.label_ = std::move(label);
  return h;
}

std::int64_t HSpec::operator()(const BinaryString& s) const {
  switch (kind_) {
    case Kind::length:
      return static_cast<std::int64_t>(s.size());
    case Kind::scaled: {
      const std::uint64_t num = p_ * s.size();
      return static_cast<std::int64_t>((num + q_ - 1) / q_);
    }
    case Kind::table: {
      auto it = table_->find(s);
      if (it == table_->end()) throw MissingHError("h table has no entry for '" + s.token() + "'");
      return static_cast<std::int64_t>(it->second);
    }
  }
  return 0;
}

bool HSpec::is_total_on(const StringSet& u) const {
  if (kind_ != Kind::table) return true;
  return std::all_of(u.begin(), u.end(), [&](const BinaryString& s) { return table_->count(s) > 0; });
}

std::string HSpec::describe() const {
  switch (kind_) {
    case Kind::length: return "len";
    case Kind::scaled: return "scaled:" + std::to_string(p_) + "/" + std::to_string(q_);
    case Kind::table: return "table:" + label_;
  }
  return "?";
}

bool is_prefix_closed(const StringSet& t) {
  return std::all_of(t.begin(), t.end(), [&](const BinaryString& s) {
    return s.empty() || t.contains(s.prefix(s.size() - 1));
  });
}

namespace {

std::vector<std::int64_t> h_values(const HSpec& h, const StringSet& f) {
  std::vector<std::int64_t> v;
  v.reserve(f.size());
  for (const auto& s : f) v.push_back(h(s));
  return v;
}

// The ratio count(n)/2^n only drops between jumps of count(n), and count jumps
// exactly at n = h(s) + 1, so those points (plus n = 0) cover the supremum.
std::vector<std::int64_t> dct_candidates(const std::vector<std::int64_t>& hv) {
  std::vector<std::int64_t> ns{0};
  for (auto x : hv) ns.push_back(x + 1);
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  return ns;
}

class WeightNode final : public PreMeasure::Node {
 public:
  WeightNode(HSpec h, bool prefix_free) : h_(std::move(h)), prefix_free_(prefix_free) {}

  Dyadic eval(const StringSet& f) const override {
    std::vector<Dyadic> w;
    w.reserve(f.size());
    for (const auto& s : f) w.push_back(Dyadic::pow2(-h_(s)));
    if (prefix_free_) return max_weight_antichain(f, w);
    Dyadic total;
    for (const auto& x : w) total += x;
    return total;
  }
  std::string describe() const override {
    return std::string(prefix_free_ ? "pwt(" : "dwt(") + h_.describe() + ")";
  }

 private:
  HSpec h_;
  bool prefix_free_;
};

class CountNode final : public PreMeasure::Node {
 public:
  CountNode(HSpec h, bool prefix_free) : h_(std::move(h)), prefix_free_(prefix_free) {}

  Dyadic eval(const StringSet& f) const override {
    if (f.empty()) return {};
    const auto hv = h_values(h_, f);
    Dyadic best;
    for (std::int64_t n : dct_candidates(hv)) {
      std::uint64_t count = 0;
      if (prefix_free_) {
        std::vector<std::uint64_t> indicator(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) indicator[i] = hv[i] < n ? 1 : 0;
        count = max_weight_antichain(f, indicator);
      } else {
        for (auto x : hv) count += x < n ? 1 : 0;
      }
      best = max(best, Dyadic(BigInt(count), -n));
    }
    return best;
  }
  std::string describe() const override {
    return std::string(prefix_free_ ? "pct(" : "dct(") + h_.describe() + ")";
  }

 private:
  HSpec h_;
  bool prefix_free_;
};

class SumNode final : public PreMeasure::Node {
 public:
  SumNode(PreMeasure a, PreMeasure b, bool is_min) : a_(std::move(a)), b_(std::move(b)), min_(is_min) {}
  Dyadic eval(const StringSet& f) const override {
    Dyadic x = a_(f), y = b_(f);
    return min_ ? min(x, y) : x + y;
  }
  std::string describe() const override {
    return std::string(min_ ? "min(" : "sum(") + a_.describe() + "," + b_.describe() + ")";
  }

 private:
  PreMeasure a_, b_;
  bool min_;
};

class TreeMixtureNode final : public PreMeasure::Node {
 public:
  explicit TreeMixtureNode(TreeFamily trees) : trees_(std::move(trees)) {}
  Dyadic eval(const StringSet& f) const override {
    Dyadic total;
    for (std::size_t i = 0; i < trees_.size(); ++i) {
      if (!f.intersected(trees_[i]).empty()) total += Dyadic::pow2(-static_cast<std::int64_t>(i));
    }
    return total;
  }
  std::string describe() const override {
    return "trees(" + std::to_string(trees_.size()) + ")";
  }

 private:
  TreeFamily trees_;
};

class StarNode final : public PreMeasure::Node {
 public:
  explicit StarNode(PreMeasure m) : m_(std::move(m)) {}

  Dyadic eval(const StringSet& f) const override {
    if (f.empty()) return m_(f);
    std::uint64_t candidates = 1;
    for (const auto& s : f) {
      candidates *= s.size() + 1;
      if (candidates > kStarCandidateLimit) {
        throw ResourceLimitError("star: too many prefix choices for " + to_string(f));
      }
    }
    // Odometer over one chosen prefix length per member.
    std::vector<std::size_t> choice(f.size(), 0);
    Dyadic best;
    bool first = true;
    std::vector<BinaryString> image(f.size());
    for (;;) {
      for (std::size_t i = 0; i < f.size(); ++i) image[i] = f[i].prefix(choice[i]);
      Dyadic v = m_(StringSet(image));
      if (first || v < best) {
        best = std::move(v);
        first = false;
      }
      std::size_t i = 0;
      while (i < f.size() && choice[i] == f[i].size()) choice[i++] = 0;
      if (i == f.size()) break;
      ++choice[i];
    }
    return best;
  }
  std::string describe() const override { return "star(" + m_.describe() + ")"; }

 private:
  PreMeasure m_;
};

class CustomNode final : public PreMeasure::Node {
 public:
  CustomNode(std::string name, std::function<Dyadic(const StringSet&)> fn)
      : name_(std::move(name)), fn_(std::move(fn)) {}
  Dyadic eval(const StringSet& f) const override { return fn_(f); }
  std::string describe() const override { return name_; }

 private:
  std::string name_;
  std::function<Dyadic(const StringSet&)> fn_;
};

class CachedNode final : public PreMeasure::Node {
 public:
  explicit CachedNode(PreMeasure m) : m_(std::move(m)) {}

  Dyadic eval(const StringSet& f) const override {
    {
      std::shared_lock lock(mu_);
      auto it = memo_.find(f);
      if (it != memo_.end()) return it->second;
    }
    Dyadic v = m_(f);
    std::unique_lock lock(mu_);
    memo_.emplace(f, v);
    return v;
  }
  std::string describe() const override { return m_.describe(); }

 private:
  PreMeasure m_;
  mutable std::shared_mutex mu_;
  mutable std::unordered_map<StringSet, Dyadic, StringSetHash> memo_;
};

}  // namespace

PreMeasure dwt(HSpec h) { return PreMeasure(std::make_shared<WeightNode>(std::move(h), false)); }
PreMeasure pwt(HSpec h) { return PreMeasure(std::make_shared<WeightNode>(std::move(h), true)); }
PreMeasure dct(HSpec h) { return PreMeasure(std::make_shared<CountNode>(std::move(h), false)); }
PreMeasure pct(HSpec h) { return PreMeasure(std::make_shared<CountNode>(std::move(h), true)); }

PreMeasure sum(PreMeasure a, PreMeasure b) {
  return PreMeasure(std::make_shared<SumNode>(std::move(a), std::move(b), false));
}

PreMeasure minimum(PreMeasure a, PreMeasure b) {
  return PreMeasure(std::make_shared<SumNode>(std::move(a), std::move(b), true));
}

PreMeasure tree_mixture(TreeFamily trees) {
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (!is_prefix_closed(trees[i])) {
      throw FormatError("tree " + std::to_string(i) + " is not prefix-closed");
    }
  }
  return PreMeasure(std::make_shared<TreeMixtureNode>(std::move(trees)));
}

PreMeasure star(PreMeasure m) { return PreMeasure(std::make_shared<StarNode>(std::move(m))); }

PreMeasure custom(std::string name, std::function<Dyadic(const StringSet&)> fn) {
  return PreMeasure(std::make_shared<CustomNode>(std::move(name), std::move(fn)));
}

PreMeasure cached(PreMeasure m) { return PreMeasure(std::make_shared<CachedNode>(std::move(m))); }

std::vector<Dyadic> evaluate_subsets(const PreMeasure& m, const StringSet& u,
                                     const std::vector<std::uint64_t>& masks, Exec exec) {
  return map_indices<Dyadic>(masks.size(), exec, [&](std::size_t i) { return m(u.select(masks[i])); });
}

CheckReport check_premeasure_axioms(const PreMeasure& m, const StringSet& u, std::size_t k_max,
                                    Exec exec) {
  if (u.size() > 63) throw BoundedUniverseError("axiom check supports at most 63 strings");
  CheckReport report("premeasure-axioms");
  report.set("m", m.describe()).set("universe", u.size()).set("kmax", k_max);

  const auto small = subsets_up_to(u.size(), k_max);
  const auto all = subsets_up_to(u.size(), std::min(u.size(), 2 * k_max));
  const auto values = evaluate_subsets(m, u, all, exec);
  std::unordered_map<std::uint64_t, std::size_t> index;
  index.reserve(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i], i);
  auto value = [&](std::uint64_t mask) -> const Dyadic& { return values[index.at(mask)]; };

  if (!value(0).is_zero()) report.fail("m(@-set) = " + value(0).str() + " != 0");

  auto show = [&](std::uint64_t mask) { return to_string(u.select(mask)); };
  const auto violations = collect_violations(
      small.size(), exec, CheckReport::kMaxWitnesses, [&](std::size_t i) -> std::optional<std::string> {
        const std::uint64_t a = small[i];
        const Dyadic& ma = value(a);
        for (std::uint64_t b : small) {
          const Dyadic& mb = value(b);
          if ((a & ~b) == 0 && mb < ma) {
            return "monotonicity F1=" + show(a) + " F2=" + show(b) + " m(F1)=" + ma.str() +
                   " m(F2)=" + mb.str();
          }
          if (b >= a) {
            const Dyadic& mu = value(a | b);
            if (ma + mb < mu) {
              return "subadditivity F1=" + show(a) + " F2=" + show(b) + " m(F1uF2)=" + mu.str() +
                     " m(F1)+m(F2)=" + (ma + mb).str();
            }
          }
        }
        return std::nullopt;
      });
  report.absorb("axiom", violations);
  report.set("pairs", small.size() * small.size());
  return report;
}

CheckReport check_star_monotone(const PreMeasure& m, const StringSet& u, std::size_t k_max, Exec exec) {
  if (u.size() > 63) throw BoundedUniverseError("star check supports at most 63 strings");
  CheckReport report("star-monotone");
  const PreMeasure ms = star(m);
  report.set("m", ms.describe()).set("universe", u.size()).set("kmax", k_max);
  const auto masks = subsets_up_to(u.size(), k_max);
  const auto values = evaluate_subsets(ms, u, masks, exec);
  std::vector<StringSet> sets;
  sets.reserve(masks.size());
  for (auto mask : masks) sets.push_back(u.select(mask));
  std::vector<std::size_t> related(masks.size(), 0);
  report.absorb("covers", collect_violations(masks.size(), exec, CheckReport::kMaxWitnesses,
                                             [&](std::size_t i) -> std::optional<std::string> {
                                               for (std::size_t j = 0; j < masks.size(); ++j) {
                                                 if (!covers(sets[i], sets[j])) continue;
                                                 ++related[i];
                                                 if (values[j] < values[i]) {
                                                   return "A=" + to_string(sets[i]) + " B=" + to_string(sets[j]) +
                                                          " m*(A)=" + values[i].str() + " m*(B)=" + values[j].str();
                                                 }
                                               }
                                               return std::nullopt;
                                             }));
  std::size_t total = 0;
  for (auto c : related) total += c;
  report.set("related_pairs", total);
  return report;
}

}  // namespace prand
