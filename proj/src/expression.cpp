#include "prand/expression.hpp"

#include <cctype>
#include <charconv>

#include "prand/errors.hpp"
#include "prand/io.hpp"

namespace prand {

namespace {

enum class Kind { measure, rule };

bool is_measure_name(std::string_view s) {
  return s == "dwt" || s == "pwt" || s == "dct" || s == "pct" || s == "sum" || s == "min" || s == "star" ||
         s == "rsqrt" || s == "trees";
}

bool is_rule_name(std::string_view s) {
  return s == "kp" || s == "ka" || s == "ks" || s == "kd" || s == "and" || s == "or" || s == "msqrt";
}

class Parser {
 public:
  Parser(std::string_view text, const ExpressionContext& ctx) : text_(text), ctx_(ctx) {}

  Kind peek_kind() {
    const std::size_t start = pos_;
    skip_space();
    const std::size_t at = pos_;
    const std::string name = identifier();
    pos_ = start;
    if (is_measure_name(name)) return Kind::measure;
    if (is_rule_name(name)) return Kind::rule;
    if (name.empty()) error(at, "expected an identifier");
    error(at, "unknown identifier '" + name + "'");
  }

  PreMeasure measure() {
    skip_space();
    const std::size_t at = pos_;
    const std::string name = identifier();
    if (name.empty()) error(at, "expected a measure");
    if (is_rule_name(name)) error(at, "expected a measure, found rule '" + name + "'");
    if (!is_measure_name(name)) error(at, "unknown identifier '" + name + "'");
    expect('(');
    PreMeasure m = [&] {
      if (name == "dwt") return dwt(h());
      if (name == "pwt") return pwt(h());
      if (name == "dct") return dct(h());
      if (name == "pct") return pct(h());
      if (name == "star") return star(measure());
      if (name == "rsqrt") return rsqrt(rule(), ctx_.cap);
      if (name == "trees") {
        const std::size_t path_at = pos_;
        const std::string path = raw_argument();
        if (path.empty()) error(path_at, "expected a tree-family path");
        return tree_mixture(io::read_tree_family(path));
      }
      PreMeasure a = measure();
      expect(',');
      PreMeasure b = measure();
      return name == "sum" ? sum(std::move(a), std::move(b)) : minimum(std::move(a), std::move(b));
    }();
    expect(')');
    return m;
  }

  Rule rule() {
    skip_space();
    const std::size_t at = pos_;
    const std::string name = identifier();
    if (name.empty()) error(at, "expected a rule");
    if (is_measure_name(name)) error(at, "expected a rule, found measure '" + name + "'");
    if (!is_rule_name(name)) error(at, "unknown identifier '" + name + "'");
    expect('(');
    Rule r = [&] {
      if (name == "kp") return kp(h());
      if (name == "ka") return ka(h());
      if (name == "ks") return ks(h());
      if (name == "kd") return kd(h());
      if (name == "msqrt") return msqrt(measure());
      Rule a = rule();
      expect(',');
      Rule b = rule();
      return name == "and" ? intersect(std::move(a), std::move(b)) : join(std::move(a), std::move(b));
    }();
    expect(')');
    return r;
  }

  HSpec h() {
    skip_space();
    const std::size_t at = pos_;
    const std::string name = identifier();
    if (name == "len") return HSpec::length();
    if (name == "h") {
      if (!ctx_.default_h) error(at, "'h' used but no default weight was given");
      return *ctx_.default_h;
    }
    if (name == "scaled") {
      expect(':');
      const std::uint64_t p = natural();
      expect('/');
      const std::size_t q_at = pos_;
      const std::uint64_t q = natural();
      if (q == 0) error(q_at, "scaled:p/q needs q > 0");
      return HSpec::scaled(p, q);
    }
    if (name == "table") {
      expect(':');
      const std::size_t path_at = pos_;
      const std::string path = raw_argument();
      if (path.empty()) error(path_at, "expected a table path");
      return io::read_h_table(path);
    }
    if (name.empty()) error(at, "expected a weight (len, scaled:p/q, table:path)");
    error(at, "unknown weight '" + name + "'");
  }

  void finish() {
    skip_space();
    if (pos_ != text_.size()) error(pos_, "unexpected trailing input");
  }

 private:
  [[noreturn]] void error(std::size_t at, const std::string& what) const { throw ParseError(at, what); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint64_t natural() {
    skip_space();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (ec != std::errc()) error(start, "expected a natural number");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return v;
  }

  // Everything up to the next ',' or ')' (a file path).
  std::string raw_argument() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')') ++pos_;
    std::string_view s = text_.substr(start, pos_ - start);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    return std::string(s);
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size()) error(pos_, std::string("expected '") + c + "', found end of input");
    if (text_[pos_] != c) error(pos_, std::string("expected '") + c + "', found '" + text_[pos_] + "'");
    ++pos_;
  }

  std::string_view text_;
  const ExpressionContext& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

PreMeasure parse_measure(std::string_view text, const ExpressionContext& ctx) {
  Parser p(text, ctx);
  PreMeasure m = p.measure();
  p.finish();
  return m;
}

Rule parse_rule(std::string_view text, const ExpressionContext& ctx) {
  Parser p(text, ctx);
  Rule r = p.rule();
  p.finish();
  return r;
}

std::variant<PreMeasure, Rule> parse_expression(std::string_view text, const ExpressionContext& ctx) {
  Parser p(text, ctx);
  if (p.peek_kind() == Kind::measure) {
    PreMeasure m = p.measure();
    p.finish();
    return m;
  }
  Rule r = p.rule();
  p.finish();
  return r;
}

HSpec parse_h(std::string_view text, const ExpressionContext& ctx) {
  Parser p(text, ctx);
  HSpec h = p.h();
  p.finish();
  return h;
}

}  // namespace prand
