#include "ordspace/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace ordspace {

namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

struct Line {
  std::vector<Token> tokens;
  int number;  // 1-based
};

// Splits on whitespace (and on commas when `commas` is set), skipping
// blank and comment lines.
std::vector<Line> tokenize(std::string_view text, bool commas) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    Line line{{}, number};
    std::size_t i = 0;
    auto separator = [&](char c) { return c == ' ' || c == '\t' || (commas && c == ','); };
    while (i < raw.size()) {
      while (i < raw.size() && separator(raw[i])) ++i;
      if (i >= raw.size()) break;
      if (raw[i] == '#' && line.tokens.empty()) break;
      const std::size_t start = i;
      while (i < raw.size() && !separator(raw[i])) ++i;
      line.tokens.push_back({raw.substr(start, i - start), static_cast<int>(start) + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return lines;
}

int to_int(const Token& t, int line) {
  int value = 0;
  const auto* first = t.text.data();
  const auto* last = first + t.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("expected an integer, found '" + std::string(t.text) + "'", line, t.column);
  }
  return value;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

OrdinalSpace parse_rank_matrix(std::string_view text) {
  const auto lines = tokenize(text, false);
  if (lines.empty()) throw ParseError("empty rank matrix", 1, 1);
  const Line& header = lines[0];
  if (header.tokens.size() != 2) {
    throw ParseError("header must be `n k`", header.number, header.tokens.front().column);
  }
  const int n = to_int(header.tokens[0], header.number);
  const int k = to_int(header.tokens[1], header.number);
  if (n < 1) throw ParseError("n must be positive", header.number, header.tokens[0].column);
  if (static_cast<int>(lines.size()) - 1 != n) {
    const Line& at = lines.size() > static_cast<std::size_t>(n) ? lines[n + 1] : lines.back();
    throw ParseError("expected " + std::to_string(n) + " matrix rows, found " + std::to_string(lines.size() - 1),
                     at.number, 1);
  }
  RankMatrix r(n, n);
  for (int i = 0; i < n; ++i) {
    const Line& row = lines[i + 1];
    if (static_cast<int>(row.tokens.size()) != n) {
      throw ParseError("row " + std::to_string(i + 1) + " has " + std::to_string(row.tokens.size()) +
                           " entries, expected " + std::to_string(n),
                       row.number, row.tokens.back().column);
    }
    for (int j = 0; j < n; ++j) r(i, j) = to_int(row.tokens[j], row.number);
  }
  OrdinalSpace s(r);
  if (s.levels() != k) {
    throw ParseError("header says k=" + std::to_string(k) + " but the matrix has " + std::to_string(s.levels()) +
                         " levels",
                     header.number, header.tokens[1].column);
  }
  return s;
}

std::string format_rank_matrix(const OrdinalSpace& s) {
  std::ostringstream os;
  os << s.size() << ' ' << s.levels() << '\n';
  for (int i = 0; i < s.size(); ++i) {
    for (int j = 0; j < s.size(); ++j) os << (j ? " " : "") << s.rank(i, j);
    os << '\n';
  }
  return os.str();
}

DistanceMatrix parse_distance_csv(std::string_view text) {
  const auto lines = tokenize(text, true);
  if (lines.empty()) throw ParseError("empty distance matrix", 1, 1);
  const auto n = static_cast<int>(lines.size());
  RationalMatrix d(n, n);
  for (int i = 0; i < n; ++i) {
    const Line& row = lines[i];
    if (static_cast<int>(row.tokens.size()) != n) {
      throw ParseError("row " + std::to_string(i + 1) + " has " + std::to_string(row.tokens.size()) +
                           " entries, expected " + std::to_string(n),
                       row.number, row.tokens.back().column);
    }
    for (int j = 0; j < n; ++j) {
      try {
        d(i, j) = parse_rational(row.tokens[j].text);
      } catch (const ValidationError& e) {
        throw ParseError(e.what(), row.number, row.tokens[j].column);
      }
    }
  }
  return DistanceMatrix(std::move(d));
}

std::string format_distance_csv(const DistanceMatrix& d) {
  std::ostringstream os;
  for (int i = 0; i < d.size(); ++i) {
    for (int j = 0; j < d.size(); ++j) os << (j ? "," : "") << to_string(d(i, j));
    os << '\n';
  }
  return os.str();
}

ComparisonList parse_comparisons(std::string_view text) {
  const auto lines = tokenize(text, false);
  ComparisonList c;
  int declared = 0;
  int largest = 0;
  for (std::size_t l = 0; l < lines.size(); ++l) {
    const Line& line = lines[l];
    if (l == 0 && line.tokens.size() == 2 && line.tokens[0].text == "n") {
      declared = to_int(line.tokens[1], line.number);
      if (declared < 1) throw ParseError("n must be positive", line.number, line.tokens[1].column);
      continue;
    }
    if (line.tokens.size() != 5) {
      throw ParseError("expected `x y z w REL`", line.number, line.tokens.front().column);
    }
    int idx[4];
    for (int t = 0; t < 4; ++t) {
      idx[t] = to_int(line.tokens[t], line.number);
      if (idx[t] < 1 || (declared && idx[t] > declared)) {
        throw ParseError("point index " + std::to_string(idx[t]) + " out of range", line.number,
                         line.tokens[t].column);
      }
      largest = std::max(largest, idx[t]);
    }
    const auto rel_text = line.tokens[4].text;
    Relation rel;
    if (rel_text == "LT") {
      rel = Relation::Less;
    } else if (rel_text == "EQ") {
      rel = Relation::Equal;
    } else if (rel_text == "GT") {
      rel = Relation::Greater;
    } else {
      throw ParseError("relation must be LT, EQ or GT", line.number, line.tokens[4].column);
    }
    c.entries.push_back({idx[0] - 1, idx[1] - 1, idx[2] - 1, idx[3] - 1, rel});
  }
  c.n = declared ? declared : largest;
  if (c.n < 1) throw ParseError("no comparisons given", 1, 1);
  return c;
}

std::string format_comparisons(const ComparisonList& c) {
  std::ostringstream os;
  os << "n " << c.n << '\n';
  for (const auto& e : c.entries) {
    os << e.x + 1 << ' ' << e.y + 1 << ' ' << e.z + 1 << ' ' << e.w + 1 << ' ' << name(e.rel) << '\n';
  }
  return os.str();
}

std::vector<PointSet> parse_set_family(std::string_view text) {
  std::vector<PointSet> sets;
  for (const auto& line : tokenize(text, false)) {
    PointSet s;
    for (const auto& t : line.tokens) {
      const int p = to_int(t, line.number);
      if (p < 1 || p > 64) throw ParseError("point index out of range", line.number, t.column);
      s.insert(p - 1);
    }
    sets.push_back(s);
  }
  return sets;
}

}  // namespace ordspace
