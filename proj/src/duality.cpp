#include "prand/duality.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <unordered_map>

#include "prand/combinatorics.hpp"
#include "prand/errors.hpp"

namespace prand {

// ------------------------------------------------------------ m^√

bool sqrt_rule_member(const PreMeasure& m, const FiniteComplexity& r) {
  std::vector<std::int64_t> levels;
  levels.reserve(r.size());
  for (const auto& e : r) levels.push_back(static_cast<std::int64_t>(e.sigma.size()) - e.d);
  std::vector<std::int64_t> distinct = levels;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (std::int64_t v : distinct) {
    std::vector<BinaryString> level_ring;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (levels[i] >= v) level_ring.push_back(r[i].sigma);
    }
    if (Dyadic::pow2(-v) < m(StringSet(std::move(level_ring)))) return false;
  }
  return true;
}

namespace {

class SqrtRuleNode final : public Rule::Node {
 public:
  explicit SqrtRuleNode(PreMeasure m) : m_(std::move(m)) {}
  bool contains(const FiniteComplexity& r) const override { return sqrt_rule_member(m_, r); }
  std::string describe() const override { return "msqrt(" + m_.describe() + ")"; }

 private:
  PreMeasure m_;
};

}  // namespace

Rule msqrt(PreMeasure m) { return Rule(std::make_shared<SqrtRuleNode>(std::move(m))); }

// ------------------------------------------------------------ R^√

std::string EMax::str() const {
  switch (status) {
    case Status::found: return std::to_string(value);
    case Status::none: return "-inf";
    case Status::at_cap: return "inf(cap=" + std::to_string(value) + ")";
  }
  return "?";
}

EMax e_max(const Rule& rule, const StringSet& g, std::int64_t cap) {
  // Scanned downward so the first hit is the largest member exponent; no
  // monotonicity in e is assumed of the rule.
  for (std::int64_t e = cap; e >= -cap; --e) {
    if (rule(uniform(g, e))) return {e == cap ? EMax::Status::at_cap : EMax::Status::found, e};
  }
  return {};
}

struct SqrtPremeasure::Memo {
  std::shared_mutex mu;
  std::unordered_map<StringSet, EMax, StringSetHash> exponents;
};

SqrtPremeasure::SqrtPremeasure(Rule rule, std::int64_t cap)
    : rule_(std::move(rule)), cap_(cap), memo_(std::make_shared<Memo>()) {}

EMax SqrtPremeasure::block_exponent(const StringSet& g) const {
  {
    std::shared_lock lock(memo_->mu);
    auto it = memo_->exponents.find(g);
    if (it != memo_->exponents.end()) return it->second;
  }
  EMax e = e_max(rule_, g, cap_);
  std::unique_lock lock(memo_->mu);
  memo_->exponents.emplace(g, e);
  return e;
}

SqrtValue SqrtPremeasure::evaluate(const StringSet& f) const {
  SqrtValue out;
  if (f.empty()) return out;
  if (f.size() > kPartitionLimit) {
    throw ResourceLimitError("partition-size limit exceeded: |F| = " + std::to_string(f.size()) +
                             " > " + std::to_string(kPartitionLimit));
  }
  const std::size_t n = f.size();
  std::vector<EMax> block(std::size_t{1} << n);
  for (std::uint64_t mask = 1; mask < block.size(); ++mask) block[mask] = block_exponent(f.select(mask));

  bool found = false;
  std::vector<std::uint64_t> best_blocks;
  for_each_set_partition(n, [&](const std::vector<std::uint64_t>& blocks) {
    Dyadic cost;
    for (auto b : blocks) {
      if (block[b].status == EMax::Status::none) return true;
      cost += Dyadic::pow2(-block[b].value);
    }
    if (!found || cost < out.value) {
      found = true;
      out.value = std::move(cost);
      best_blocks = blocks;
    }
    return true;
  });
  if (!found) {
    throw ResourceLimitError("cap exceeded: no rule element with |e| <= " + std::to_string(cap_) +
                             " covers " + to_string(f));
  }
  for (auto b : best_blocks) {
    out.blocks.push_back(f.select(b));
    out.exponents.push_back(block[b].value);
    if (block[b].status == EMax::Status::at_cap) out.cap_hit = true;
  }
  return out;
}

SqrtValue sqrt_premeasure_eval(const Rule& rule, const StringSet& f, std::int64_t cap) {
  return SqrtPremeasure(rule, cap).evaluate(f);
}

namespace {

class SqrtMeasureNode final : public PreMeasure::Node {
 public:
  explicit SqrtMeasureNode(SqrtPremeasure sq) : sq_(std::move(sq)) {}
  Dyadic eval(const StringSet& f) const override { return sq_.evaluate(f).value; }
  std::string describe() const override { return "rsqrt(" + sq_.rule().describe() + ")"; }

 private:
  SqrtPremeasure sq_;
};

PreMeasure as_premeasure(const SqrtPremeasure& sq) {
  return PreMeasure(std::make_shared<SqrtMeasureNode>(sq));
}

}  // namespace

PreMeasure rsqrt(Rule rule, std::int64_t cap) { return as_premeasure(SqrtPremeasure(std::move(rule), cap)); }

// ------------------------------------------------------------ checks

CheckReport check_prop7(const PreMeasure& m, const Rule& rule, const StringSet& u, std::size_t k_max,
                        const ComplexitySamples& samples, std::int64_t cap,
                        const RuleCheckOptions& options) {
  CheckReport report("sqrt-transforms");
  CheckReport measure = check_premeasure_axioms(rsqrt(rule, cap), u, k_max, options.exec);
  measure.id = "rsqrt";
  CheckReport rules = check_rule_axioms(msqrt(cached(m)), samples, options);
  rules.id = "msqrt";
  report.absorb(measure);
  report.absorb(rules);
  return report;
}

CheckReport check_prop8(const PreMeasure& m, const PreMeasure& k, std::int64_t j, const StringSet& u,
                        std::size_t k_max, const ComplexitySamples& samples, Exec exec) {
  CheckReport report("domination-transfer");
  report.set("m", m.describe()).set("k", k.describe()).set("j", std::to_string(j));

  const auto masks = subsets_up_to(u.size(), k_max);
  const auto premise = collect_violations(masks.size(), exec, 1, [&](std::size_t i) -> std::optional<std::string> {
    const StringSet f = u.select(masks[i]);
    const Dyadic mv = m(f), kv = k(f).scaled(j);
    if (kv < mv) return to_string(f) + " m=" + mv.str() + " 2^j*k=" + kv.str();
    return std::nullopt;
  });
  report.set("premise", premise.count == 0 ? "holds" : "violated");
  if (premise.count) report.set("premise_witness", premise.first.front().second);

  const Rule k_sqrt = msqrt(cached(k));
  const Rule m_sqrt = msqrt(cached(m));
  const auto in_k = classify(k_sqrt, samples, exec);
  report.set("sampled_members", static_cast<std::size_t>(std::count(in_k.begin(), in_k.end(), 1)));
  report.absorb("conclusion", collect_violations(samples.size(), exec, CheckReport::kMaxWitnesses,
                                                 [&](std::size_t i) -> std::optional<std::string> {
                                                   if (!in_k[i]) return std::nullopt;
                                                   auto shifted = shift(samples[i], j);
                                                   if (m_sqrt(shifted)) return std::nullopt;
                                                   return "r=" + to_string(samples[i]) + " in k^sqrt but r^+j=" +
                                                          to_string(shifted) + " not in m^sqrt";
                                                 }));
  return report;
}

CheckReport check_msqrtsqrt(const PreMeasure& m, const StringSet& u, std::size_t k_max, std::int64_t cap,
                            Exec exec) {
  CheckReport report("msqrtsqrt");
  report.set("m", m.describe()).set("universe", u.size()).set("kmax", k_max);
  const SqrtPremeasure twice(msqrt(cached(m)), cap);
  const auto masks = subsets_up_to(u.size(), k_max);
  std::vector<char> cap_hits(masks.size(), 0);
  report.absorb("sandwich", collect_violations(masks.size(), exec, CheckReport::kMaxWitnesses,
                                               [&](std::size_t i) -> std::optional<std::string> {
                                                 const StringSet f = u.select(masks[i]);
                                                 const Dyadic lo = m(f);
                                                 const SqrtValue mid = twice.evaluate(f);
                                                 cap_hits[i] = mid.cap_hit;
                                                 const Dyadic hi = lo.scaled(1);
                                                 if (lo <= mid.value && mid.value <= hi) return std::nullopt;
                                                 return "F=" + to_string(f) + " m=" + lo.str() +
                                                        " m^sqrtsqrt=" + mid.value.str();
                                               }));
  report.set("sets", masks.size());
  report.set("cap_hits", static_cast<std::size_t>(std::count(cap_hits.begin(), cap_hits.end(), 1)));
  return report;
}

std::int64_t least_shift_constant(const Rule& rule, const SqrtPremeasure& sqrt_of_rule,
                                  const FiniteComplexity& r) {
  if (rule(r)) return 0;
  const StringSet rg = ring(r);
  if (rg.size() > kPartitionLimit) throw ResourceLimitError("least_shift_constant: ring too large");
  std::int64_t best = -1;
  auto consider = [&](const FiniteComplexity& t) {
    if (!rule(t)) return;
    std::int64_t c = 0;
    for (const auto& e : r) c = std::max(c, k_of(t, e.sigma).value() - e.d);
    if (best < 0 || c < best) best = c;
  };
  for_each_set_partition(rg.size(), [&](const std::vector<std::uint64_t>& blocks) {
    std::vector<FiniteComplexity> pieces;
    for (auto b : blocks) {
      const StringSet g = rg.select(b);
      const EMax e = sqrt_of_rule.block_exponent(g);
      if (e.status == EMax::Status::none) return true;
      pieces.push_back(uniform(g, e.value));
    }
    // The shift each block receives depends on its position in the union.
    std::vector<std::size_t> order(pieces.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<FiniteComplexity> arranged(pieces.size());
    do {
      for (std::size_t i = 0; i < order.size(); ++i) arranged[i] = pieces[order[i]];
      consider(union_shift(arranged));
    } while (pieces.size() <= 5 && std::next_permutation(order.begin(), order.end()));
    return true;
  });
  return best;
}

CheckReport check_rsqrtsqrt(const Rule& rule, const ComplexitySamples& samples, std::int64_t c_search,
                            std::int64_t cap, Exec exec) {
  CheckReport report("rsqrtsqrt");
  report.set("rule", rule.describe()).set("samples", samples.size());
  const SqrtPremeasure once(rule, cap);
  const Rule twice = msqrt(cached(as_premeasure(once)));

  const auto in_rule = classify(rule, samples, exec);
  report.absorb("R-subset-Rsqrtsqrt", collect_violations(samples.size(), exec, CheckReport::kMaxWitnesses,
                                                        [&](std::size_t i) -> std::optional<std::string> {
                                                          if (!in_rule[i] || twice(samples[i])) return std::nullopt;
                                                          return "r=" + to_string(samples[i]) +
                                                                 " in R but not in R^sqrtsqrt";
                                                        }));

  const auto in_twice = classify(twice, samples, exec);
  const auto constants = map_indices<std::int64_t>(samples.size(), exec, [&](std::size_t i) -> std::int64_t {
    return in_twice[i] ? least_shift_constant(rule, once, samples[i]) : 0;
  });
  std::int64_t max_c = 0;
  std::size_t checked = 0;
  ViolationSet unbounded;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!in_twice[i]) continue;
    ++checked;
    const std::int64_t c = constants[i];
    if (c < 0 || c > c_search) {
      ++unbounded.count;
      if (unbounded.first.size() < CheckReport::kMaxWitnesses) {
        unbounded.first.emplace_back(i, "r=" + to_string(samples[i]) + " needs c=" +
                                            (c < 0 ? std::string("none") : std::to_string(c)) + " > " +
                                            std::to_string(c_search));
      }
    } else {
      max_c = std::max(max_c, c);
    }
  }
  report.absorb("Rsqrtsqrt-within-shift", unbounded);
  report.set("rsqrtsqrt_members", checked).set("max_c", std::to_string(max_c));
  return report;
}

// ------------------------------------------------------------ dual ratio

bool Ratio::is_dyadic() const {
  const BigInt& d = den.mantissa();
  return d == 1 || num.mantissa() % d == 0;
}

std::int64_t Ratio::ceil_log2() const {
  if (num.is_zero()) throw Error("ceil_log2 of a zero ratio");
  std::int64_t k = num.floor_log2() - den.floor_log2() - 1;
  while (den.scaled(k) < num) ++k;
  return k;
}

std::string Ratio::str() const {
  if (is_dyadic()) {
    return Dyadic(num.mantissa() / den.mantissa(), num.exponent() - den.exponent()).str();
  }
  return num.str() + "/" + den.str() + "(<=2^" + std::to_string(ceil_log2()) + ")";
}

DualRatio dual_ratio(const PreMeasure& m, const Rule& rule, const StringSet& u, std::size_t k_max,
                     std::int64_t cap, Exec exec) {
  const SqrtPremeasure sq(rule, cap);
  auto masks = subsets_up_to(u.size(), k_max);
  masks.erase(masks.begin());  // F = ∅
  struct Pair {
    Dyadic a, b;
    bool cap_hit = false;
  };
  const auto values = map_indices<Pair>(masks.size(), exec, [&](std::size_t i) {
    const StringSet f = u.select(masks[i]);
    SqrtValue v = sq.evaluate(f);
    return Pair{m(f), std::move(v.value), v.cap_hit};
  });
  DualRatio out;
  bool first = true;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto& [a, b, hit] = values[i];
    out.cap_hit = out.cap_hit || hit;
    if (a.is_zero() && b.is_zero()) {
      ++out.both_zero;
      continue;
    }
    if (a.is_zero() || b.is_zero()) {
      out.one_sided_zero.push_back("F=" + to_string(u.select(masks[i])) + " m=" + a.str() + " Rsqrt=" + b.str());
      continue;
    }
    ++out.tested;
    Ratio up{a, b}, down{b, a};
    if (first || out.measure_over_rule < up) out.measure_over_rule = up;
    if (first || out.rule_over_measure < down) out.rule_over_measure = down;
    first = false;
  }
  return out;
}

CheckReport check_dual_pair(const PreMeasure& m, const Rule& rule, const StringSet& u, std::size_t k_max,
                            std::int64_t bound_log2, std::int64_t cap, Exec exec) {
  CheckReport report("dual-pair");
  report.set("m", m.describe()).set("rule", rule.describe()).set("universe", u.size()).set("kmax", k_max);
  const DualRatio d = dual_ratio(m, rule, u, k_max, cap, exec);
  report.set("tested", d.tested).set("both_zero", d.both_zero);
  for (const auto& w : d.one_sided_zero) report.fail("one-sided zero " + w);
  if (d.cap_hit) report.fail("exponent cap reached; ratios are not exact");
  if (d.tested > 0) {
    report.set("m_over_rsqrt", d.measure_over_rule.str()).set("rsqrt_over_m", d.rule_over_measure.str());
    const std::int64_t up = d.measure_over_rule.ceil_log2(), down = d.rule_over_measure.ceil_log2();
    report.set("bound_log2", std::to_string(std::max(up, down)));
    if (up > bound_log2) report.fail("m/Rsqrt reaches " + d.measure_over_rule.str());
    if (down > bound_log2) report.fail("Rsqrt/m reaches " + d.rule_over_measure.str());
  }
  return report;
}

}  // namespace prand
