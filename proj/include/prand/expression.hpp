#pragma once

// Text syntax for pre-measures and rules:
//
//   measure := dwt(h) | pwt(h) | dct(h) | pct(h) | sum(m,m) | min(m,m)
//            | star(m) | rsqrt(rule) | trees(path)
//   rule    := kp(h) | ka(h) | ks(h) | kd(h) | and(R,R) | or(R,R) | msqrt(measure)
//   h       := len | scaled:p/q | table:path | h
//
// The bare h refers to the context's default weight (the CLI's --h flag).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "prand/duality.hpp"
#include "prand/premeasure.hpp"
#include "prand/rules.hpp"

namespace prand {

struct ExpressionContext {
  std::optional<HSpec> default_h;
  std::int64_t cap = kDefaultExponentCap;
};

/// Throws ParseError with the byte offset of the first unexpected character.
PreMeasure parse_measure(std::string_view text, const ExpressionContext& ctx = {});
Rule parse_rule(std::string_view text, const ExpressionContext& ctx = {});
/// Either kind, decided by the outermost identifier.
std::variant<PreMeasure, Rule> parse_expression(std::string_view text, const ExpressionContext& ctx = {});
/// A weight on its own, as accepted by --h.
HSpec parse_h(std::string_view text, const ExpressionContext& ctx = {});

}  // namespace prand
