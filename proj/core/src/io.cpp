#include "primnorm/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace primnorm {

ParseError::ParseError(const std::string& source, std::size_t line, std::size_t column, const std::string& message)
    : InvalidArgument(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

// Offsets are 0-based positions within the permutation text.
struct PermError {
  std::size_t offset;
  std::string message;
};

class PermParser {
 public:
  PermParser(std::string_view text, std::size_t degree) : s_(text), n_(degree) {}

  Permutation parse() {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == '[') return image_list();
    return cycles();
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw PermError{pos_, msg}; }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= s_.size()) fail(std::string("expected '") + c + "' before end of line");
    if (s_[pos_] != c) fail(std::string("expected '") + c + "', found '" + s_[pos_] + "'");
    ++pos_;
  }

  Point point() {
    skip_space();
    const std::size_t start = pos_;
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), value);
    if (ec != std::errc() || ptr == s_.data() + pos_) fail("expected a point number");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    if (value < 1 || value > n_) {
      pos_ = start;
      fail("point " + std::to_string(value) + " is outside 1.." + std::to_string(n_));
    }
    return static_cast<Point>(value - 1);
  }

  Permutation image_list() {
    expect('[');
    std::vector<Point> table;
    std::vector<bool> seen(n_, false);
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == ']') {
      ++pos_;
    } else {
      for (;;) {
        const std::size_t at = pos_;
        const Point p = point();
        if (seen[p]) {
          pos_ = at;
          fail("image " + std::to_string(p + 1) + " appears twice");
        }
        seen[p] = true;
        table.push_back(p);
        skip_space();
        if (pos_ < s_.size() && s_[pos_] == ',') {
          ++pos_;
          continue;
        }
        expect(']');
        break;
      }
    }
    if (table.size() != n_) fail("image list has " + std::to_string(table.size()) + " entries, expected " + std::to_string(n_));
    finish();
    return Permutation(std::move(table));
  }

  Permutation cycles() {
    std::vector<std::vector<Point>> cs;
    std::vector<bool> seen(n_, false);
    skip_space();
    if (pos_ >= s_.size()) fail("empty permutation");
    while (pos_ < s_.size()) {
      expect('(');
      std::vector<Point> cycle;
      skip_space();
      if (pos_ < s_.size() && s_[pos_] == ')') {
        ++pos_;
      } else {
        for (;;) {
          const std::size_t at = pos_;
          const Point p = point();
          if (seen[p]) {
            pos_ = at;
            fail("point " + std::to_string(p + 1) + " appears twice");
          }
          seen[p] = true;
          cycle.push_back(p);
          skip_space();
          if (pos_ < s_.size() && s_[pos_] == ',') {
            ++pos_;
            continue;
          }
          expect(')');
          break;
        }
      }
      if (cycle.size() > 1) cs.push_back(std::move(cycle));
      skip_space();
    }
    return Permutation::from_cycles(n_, cs);
  }

  void finish() {
    skip_space();
    if (pos_ != s_.size()) fail("unexpected trailing text");
  }

  std::string_view s_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  try {
    return PermParser(text, degree).parse();
  } catch (const PermError& e) {
    throw ParseError("<permutation>", 1, e.offset + 1, e.message);
  }
}

GroupFile parse_group_file(std::string_view text, const std::string& source, bool allow_unknown_keys) {
  GroupFile out;
  bool have_degree = false;
  struct PendingGen {
    std::string text;
    std::size_t line, column;
  };
  std::vector<PendingGen> pending;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) {
      if (end == text.size()) break;
      continue;
    }
    const auto colon = line.find(':');
    const std::size_t key_col = line.find_first_not_of(" \t") + 1;
    if (colon == std::string_view::npos) throw ParseError(source, line_no, key_col, "expected 'key: value'");
    const std::string key(trim(line.substr(0, colon)));
    const std::string_view raw_value = line.substr(colon + 1);
    const std::size_t lead = std::min(raw_value.find_first_not_of(" \t"), raw_value.size());
    const std::size_t value_col = colon + 2 + lead;
    const std::string value(trim(raw_value));

    if (key == "name") {
      out.name = value;
    } else if (key == "degree") {
      std::size_t n = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
      if (ec != std::errc() || ptr != value.data() + value.size())
        throw ParseError(source, line_no, value_col, "degree must be a non-negative integer");
      if (have_degree) throw ParseError(source, line_no, key_col, "degree given twice");
      out.degree = n;
      have_degree = true;
    } else if (key == "order") {
      if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(source, line_no, value_col, "order must be a decimal integer");
      out.order = BigInt(value);
    } else if (key == "gen") {
      pending.push_back({value, line_no, value_col});
    } else if (!allow_unknown_keys) {
      throw ParseError(source, line_no, key_col, "unknown key '" + key + "'");
    }
    if (end == text.size()) break;
  }
  if (!have_degree) throw ParseError(source, line_no, 1, "missing 'degree:' line");
  for (const auto& g : pending) {
    try {
      out.generators.push_back(PermParser(g.text, out.degree).parse());
    } catch (const PermError& e) {
      throw ParseError(source, g.line, g.column + e.offset, e.message);
    }
  }
  return out;
}

GroupFile read_group_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group_file(buf.str(), path.string());
}

std::string format_cycles(const Permutation& p) {
  const auto cs = p.cycles();
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& c : cs) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(c[i] + 1);
    }
    out += ')';
  }
  return out;
}

std::string format_group_file(const GroupFile& file) {
  std::string out;
  if (!file.name.empty()) out += "name: " + file.name + "\n";
  out += "degree: " + std::to_string(file.degree) + "\n";
  if (file.order) out += "order: " + file.order->str() + "\n";
  for (const auto& g : file.generators) out += "gen: " + format_cycles(g) + "\n";
  return out;
}

}  // namespace primnorm
