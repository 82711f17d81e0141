#include "prand/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "prand/errors.hpp"

namespace prand::io {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> fields;
};

// Splits text into non-empty, comment-stripped lines of whitespace-separated fields.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string f; in >> f;) line.fields.push_back(std::move(f));
    if (!line.fields.empty()) out.push_back(std::move(line));
    pos = end + 1;
  }
  return out;
}

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& what) {
  throw FormatError(source + ":" + std::to_string(line) + ": " + what);
}

BinaryString string_field(const std::string& source, const Line& l, std::size_t i) {
  try {
    return BinaryString::parse(l.fields[i]);
  } catch (const FormatError&) {
    fail(source, l.number, "not a binary string: '" + l.fields[i] + "'");
  }
}

template <class Int>
Int int_field(const std::string& source, const Line& l, std::size_t i) {
  const std::string& f = l.fields[i];
  Int v{};
  auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
  if (ec != std::errc() || ptr != f.data() + f.size()) fail(source, l.number, "not an integer: '" + f + "'");
  return v;
}

void expect_fields(const std::string& source, const Line& l, std::size_t n) {
  if (l.fields.size() != n) {
    fail(source, l.number, "expected " + std::to_string(n) + " field(s), got " + std::to_string(l.fields.size()));
  }
}

// "[<word> <i>]" header, split over fields "[word" "i]".
std::optional<std::size_t> block_header(const std::string& source, const Line& l, const std::string& word) {
  if (l.fields[0].empty() || l.fields[0][0] != '[') return std::nullopt;
  if (l.fields.size() != 2 || l.fields[0] != "[" + word || l.fields[1].empty() || l.fields[1].back() != ']') {
    fail(source, l.number, "malformed header, expected '[" + word + " <i>]'");
  }
  Line index{l.number, {l.fields[1].substr(0, l.fields[1].size() - 1)}};
  return int_field<std::size_t>(source, index, 0);
}

std::map<std::size_t, std::vector<BinaryString>> parse_blocks(std::string_view text, const std::string& source,
                                                              const std::string& word) {
  std::map<std::size_t, std::vector<BinaryString>> blocks;
  std::optional<std::size_t> current;
  for (const auto& l : tokenize(text)) {
    if (auto h = block_header(source, l, word)) {
      if (blocks.count(*h)) fail(source, l.number, "duplicate " + word + " " + std::to_string(*h));
      current = *h;
      blocks[*h];
      continue;
    }
    if (!current) fail(source, l.number, "string before the first '[" + word + " <i>]' header");
    expect_fields(source, l, 1);
    blocks[*current].push_back(string_field(source, l, 0));
  }
  return blocks;
}

}  // namespace

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

StringSet parse_string_set(std::string_view text, const std::string& source) {
  std::vector<BinaryString> v;
  for (const auto& l : tokenize(text)) {
    expect_fields(source, l, 1);
    v.push_back(string_field(source, l, 0));
  }
  return StringSet(std::move(v));
}

HSpec parse_h_table(std::string_view text, const std::string& source) {
  HSpec::Table table;
  for (const auto& l : tokenize(text)) {
    expect_fields(source, l, 2);
    auto s = string_field(source, l, 0);
    if (!table.emplace(s, int_field<std::uint64_t>(source, l, 1)).second) {
      fail(source, l.number, "duplicate entry for '" + s.token() + "'");
    }
  }
  return HSpec::table(std::move(table), source);
}

TreeFamily parse_tree_family(std::string_view text, const std::string& source) {
  TreeFamily trees;
  for (auto& [i, members] : parse_blocks(text, source, "tree")) {
    if (i != trees.size()) throw FormatError(source + ": tree indices must be 0,1,2,... without gaps");
    trees.emplace_back(std::move(members));
  }
  return trees;
}

FiniteComplexity parse_complexity(std::string_view text, const std::string& source) {
  std::vector<Entry> v;
  for (const auto& l : tokenize(text)) {
    expect_fields(source, l, 2);
    v.push_back({string_field(source, l, 0), int_field<std::int64_t>(source, l, 1)});
  }
  return FiniteComplexity(std::move(v));
}

Mode parse_mode(std::string_view text, const std::string& source) {
  std::vector<ModePair> v;
  for (const auto& l : tokenize(text)) {
    expect_fields(source, l, 2);
    v.push_back({string_field(source, l, 0), string_field(source, l, 1)});
  }
  return Mode(std::move(v));
}

TestFamily parse_test_family(std::string_view text, const std::string& source) {
  auto blocks = parse_blocks(text, source, "level");
  TestFamily t;
  if (blocks.empty()) return t;
  t.levels.resize(blocks.rbegin()->first + 1);
  for (auto& [i, members] : blocks) t.levels[i] = StringSet(std::move(members));
  return t;
}

BinaryString parse_bitstream(std::string_view text, std::optional<std::size_t> limit, const std::string& source) {
  std::string bits;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '0' || c == '1') {
      if (limit && bits.size() >= *limit) break;
      bits.push_back(c);
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw FormatError(source + ": offset " + std::to_string(i) + ": unexpected character in bitstream");
    }
  }
  return BinaryString(bits);
}

StringSet read_string_set(const std::string& path) { return parse_string_set(slurp(path), path); }
HSpec read_h_table(const std::string& path) { return parse_h_table(slurp(path), path); }
TreeFamily read_tree_family(const std::string& path) { return parse_tree_family(slurp(path), path); }
FiniteComplexity read_complexity(const std::string& path) { return parse_complexity(slurp(path), path); }
Mode read_mode(const std::string& path) { return parse_mode(slurp(path), path); }
TestFamily read_test_family(const std::string& path) { return parse_test_family(slurp(path), path); }
BinaryString read_bitstream(const std::string& path, std::optional<std::size_t> limit) {
  return parse_bitstream(slurp(path), limit, path);
}

std::string format_complexity(const FiniteComplexity& r) {
  std::string out;
  for (const auto& e : r) out += e.sigma.token() + " " + std::to_string(e.d) + "\n";
  return out;
}

std::string format_test_family(const TestFamily& t) {
  std::string out;
  for (std::size_t i = 0; i < t.levels.size(); ++i) {
    out += "[level " + std::to_string(i) + "]\n";
    for (const auto& s : t.levels[i]) out += s.token() + "\n";
  }
  return out;
}

std::string format_string_set(const StringSet& s) {
  std::string out;
  for (const auto& x : s) out += x.token() + "\n";
  return out;
}

}  // namespace prand::io
