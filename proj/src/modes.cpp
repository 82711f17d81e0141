#include "prand/modes.hpp"

#include <algorithm>

#include "prand/combinatorics.hpp"
#include "prand/dyadic.hpp"
#include "prand/errors.hpp"

namespace prand {

Mode::Mode(std::vector<ModePair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

Mode Mode::of(std::initializer_list<std::pair<std::string_view, std::string_view>> pairs) {
  std::vector<ModePair> v;
  for (const auto& [d, o] : pairs) v.push_back({BinaryString::parse(d), BinaryString::parse(o)});
  return Mode(std::move(v));
}

StringSet Mode::descriptions() const {
  std::vector<BinaryString> v;
  for (const auto& p : pairs_) v.push_back(p.desc);
  return StringSet(std::move(v));
}

StringSet Mode::outputs() const {
  std::vector<BinaryString> v;
  for (const auto& p : pairs_) v.push_back(p.output);
  return StringSet(std::move(v));
}

std::size_t Mode::max_desc_len() const {
  std::size_t n = 0;
  for (const auto& p : pairs_) n = std::max(n, p.desc.size());
  return n;
}

ExtInt mode_k(const Mode& m, const BinaryString& s) {
  ExtInt best = ExtInt::infinity();
  for (const auto& p : m) {
    if (p.output == s) best = std::min(best, ExtInt(static_cast<std::int64_t>(p.desc.size())));
  }
  return best;
}

bool mode_member(ModeRule rule, const Mode& r) {
  // Pairs are sorted by description, so equal descriptions are adjacent.
  for (std::size_t i = 1; i < r.size(); ++i) {
    if (r[i].desc == r[i - 1].desc) return false;
  }
  return rule == ModeRule::plain || is_prefix_free(r.descriptions());
}

Mode mode_combine(const Mode& r, const Mode& s) {
  std::vector<ModePair> v;
  for (const auto& p : r) v.push_back({p.desc.prepended('0'), p.output});
  for (const auto& p : s) v.push_back({p.desc.prepended('1'), p.output});
  return Mode(std::move(v));
}

FiniteComplexity hat(const Mode& r) {
  std::vector<Entry> v;
  for (const auto& p : r) v.push_back({p.output, static_cast<std::int64_t>(p.desc.size())});
  return FiniteComplexity(std::move(v));
}

FiniteComplexity mode_graph(const Mode& m) { return graph_of(hat(m)); }

namespace {

constexpr std::size_t kSearchNodeLimit = 50'000'000;
constexpr std::size_t kMaxDescriptionLength = 16;

struct Assignment {
  ModeRule rule;
  std::vector<BinaryString> outputs;
  std::vector<std::vector<BinaryString>> candidates;  // per output, in trial order
  std::vector<BinaryString> chosen;
  std::size_t nodes = 0;

  bool compatible(const BinaryString& tau) const {
    for (const auto& c : chosen) {
      if (rule == ModeRule::plain ? c == tau : (is_prefix(c, tau) || is_prefix(tau, c))) return false;
    }
    return true;
  }

  bool search(std::size_t k) {
    if (k == outputs.size()) return true;
    for (const auto& tau : candidates[k]) {
      if (++nodes > kSearchNodeLimit) throw ResourceLimitError("hat_rule_member: search too large");
      if (!compatible(tau)) continue;
      chosen.push_back(tau);
      if (search(k + 1)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

// Strings of length <= max_len; prefix-free modes try long descriptions first
// (they use less code space), plain modes short ones first.
std::vector<BinaryString> description_candidates(std::size_t max_len, ModeRule rule) {
  if (max_len > kMaxDescriptionLength) {
    throw ResourceLimitError("hat_rule_member: description bound above " +
                             std::to_string(kMaxDescriptionLength));
  }
  std::vector<BinaryString> v = universe(max_len, kMaxDescriptionLength).members();
  if (rule == ModeRule::prefix_free) {
    std::stable_sort(v.begin(), v.end(),
                     [](const BinaryString& a, const BinaryString& b) { return a.size() > b.size(); });
  }
  return v;
}

}  // namespace

HatResult hat_rule_member(ModeRule rule, const FiniteComplexity& s, std::size_t max_desc_len) {
  HatResult result;
  // s ≺ hat(r) only constrains each string through its least value in s.
  const FiniteComplexity need = graph_of(s);
  bool clipped = false;
  std::vector<std::pair<std::size_t, BinaryString>> order;
  for (const auto& e : need) {
    if (e.d < 0) return result;  // no description is shorter than 0
    std::size_t len = static_cast<std::size_t>(e.d);
    if (len > max_desc_len) {
      clipped = true;
      len = max_desc_len;
    }
    order.emplace_back(len, e.sigma);
  }
  std::sort(order.begin(), order.end());

  Assignment a{rule, {}, {}, {}, 0};
  for (const auto& [len, sigma] : order) {
    a.outputs.push_back(sigma);
    a.candidates.push_back(description_candidates(len, rule));
  }
  if (a.search(0)) {
    std::vector<ModePair> pairs;
    for (std::size_t i = 0; i < a.outputs.size(); ++i) pairs.push_back({a.chosen[i], a.outputs[i]});
    result.verdict = HatVerdict::member;
    result.witness = Mode(std::move(pairs));
    return result;
  }
  result.verdict = clipped ? HatVerdict::bound_too_small : HatVerdict::not_member;
  return result;
}

std::vector<Mode> enumerate_modes(const StringSet& strings, std::size_t max_pairs) {
  std::vector<ModePair> alphabet;
  for (const auto& d : strings) {
    for (const auto& o : strings) alphabet.push_back({d, o});
  }
  std::vector<Mode> out;
  for (auto mask : subsets_up_to(alphabet.size(), max_pairs)) {
    std::vector<ModePair> pairs;
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      if (mask >> i & 1U) pairs.push_back(alphabet[i]);
    }
    out.emplace_back(std::move(pairs));
  }
  return out;
}

namespace {

Mode select_pairs(const Mode& m, std::uint64_t mask) {
  std::vector<ModePair> v;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (mask >> i & 1U) v.push_back(m[i]);
  }
  return Mode(std::move(v));
}

std::vector<std::size_t> members_of(ModeRule rule, const std::vector<Mode>& modes, Exec exec) {
  const auto flags = map_indices<char>(modes.size(), exec, [&](std::size_t i) { return mode_member(rule, modes[i]); });
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (flags[i]) idx.push_back(i);
  }
  return idx;
}

}  // namespace

CheckReport check_mode_axioms(ModeRule rule, const std::vector<Mode>& modes, Exec exec) {
  CheckReport report("mode-axioms");
  const auto members = members_of(rule, modes, exec);
  report.set("rule", to_string(rule)).set("modes", modes.size()).set("members", members.size());
  if (!mode_member(rule, Mode{})) report.fail("empty mode is not a member");
  report.absorb("subset", collect_violations(members.size(), exec, CheckReport::kMaxWitnesses,
                                             [&](std::size_t i) -> std::optional<std::string> {
                                               const Mode& m = modes[members[i]];
                                               for (std::uint64_t mask = 0; mask < (1ULL << m.size()); ++mask) {
                                                 Mode sub = select_pairs(m, mask);
                                                 if (!mode_member(rule, sub)) {
                                                   return "sub=" + to_string(sub) + " of " + to_string(m);
                                                 }
                                               }
                                               return std::nullopt;
                                             }));
  report.absorb("combine", collect_violations(members.size(), exec, CheckReport::kMaxWitnesses,
                                              [&](std::size_t i) -> std::optional<std::string> {
                                                const Mode& r = modes[members[i]];
                                                for (std::size_t j : members) {
                                                  if (!mode_member(rule, mode_combine(r, modes[j]))) {
                                                    return "r=" + to_string(r) + " s=" + to_string(modes[j]);
                                                  }
                                                }
                                                return std::nullopt;
                                              }));
  return report;
}

CheckReport check_mode_hat(ModeRule rule, const std::vector<Mode>& modes, Exec exec) {
  CheckReport report("mode-hat");
  const auto members = members_of(rule, modes, exec);
  report.set("rule", to_string(rule)).set("members", members.size());
  std::vector<std::size_t> subsets(members.size(), 0);
  report.absorb("hat", collect_violations(members.size(), exec, CheckReport::kMaxWitnesses,
                                          [&](std::size_t i) -> std::optional<std::string> {
                                            const Mode& m = modes[members[i]];
                                            const FiniteComplexity g = mode_graph(m);
                                            if (rule == ModeRule::prefix_free) {
                                              Dyadic kraft;
                                              for (const auto& e : g) kraft += Dyadic::pow2(-e.d);
                                              if (Dyadic::one() < kraft) {
                                                return "M=" + to_string(m) + " Kraft sum " + kraft.str() + " > 1";
                                              }
                                            }
                                            for (std::uint64_t mask = 0; mask < (1ULL << g.size()); ++mask) {
                                              std::vector<Entry> v;
                                              for (std::size_t k = 0; k < g.size(); ++k) {
                                                if (mask >> k & 1U) v.push_back(g[k]);
                                              }
                                              const FiniteComplexity s(std::move(v));
                                              ++subsets[i];
                                              const HatResult h = hat_rule_member(rule, s, m.max_desc_len());
                                              if (h.verdict != HatVerdict::member) {
                                                return "M=" + to_string(m) + " s=" + to_string(s) + " " +
                                                       to_string(h.verdict);
                                              }
                                            }
                                            return std::nullopt;
                                          }));
  std::size_t total = 0;
  for (auto c : subsets) total += c;
  report.set("graph_subsets", total);
  return report;
}

std::string to_string(const Mode& m) {
  std::string out = "{";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ',';
    out += "(" + m[i].desc.token() + "," + m[i].output.token() + ")";
  }
  return out + "}";
}

std::string to_string(ModeRule rule) { return rule == ModeRule::plain ? "plain" : "prefix_free"; }

std::string to_string(HatVerdict v) {
  switch (v) {
    case HatVerdict::member: return "member";
    case HatVerdict::not_member: return "not_member";
    case HatVerdict::bound_too_small: return "bound_too_small";
  }
  return "?";
}

}  // namespace prand
