#include "anonykit/io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace anonykit {

namespace {

[[noreturn]] void parse_fail(const std::string& path, int line,
                             const std::string& what) {
  fail(errc::parse_error, path + ":" + std::to_string(line) + ": " + what);
}

std::ifstream open_or_fail(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::io_error, "cannot open " + path);
  return in;
}

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

// Parses a non-negative decimal literal like "1.006" into its digit string
// value (mantissa) and the number of digits after the point.
bool parse_decimal(const std::string& tok, Size& mantissa, int& decimals) {
  mantissa = 0;
  decimals = 0;
  bool seen_digit = false, seen_point = false;
  int digits = 0;
  for (char c : tok) {
    if (c == '.') {
      if (seen_point) return false;
      seen_point = true;
      continue;
    }
    if (c < '0' || c > '9') return false;
    seen_digit = true;
    if (++digits > 15) return false;
    mantissa = mantissa * 10 + (c - '0');
    if (seen_point) ++decimals;
  }
  return seen_digit;
}

bool parse_int(const std::string& tok, Size& out) {
  Size mantissa;
  int decimals;
  if (!parse_decimal(tok, mantissa, decimals) || decimals > 0) return false;
  out = mantissa;
  return true;
}

}  // namespace

Size FrequencyTable::total() const {
  Size t = 0;
  for (Size c : counts) t += c;
  return t;
}

Size FrequencyTable::max_count() const {
  return *std::max_element(counts.begin(), counts.end());
}

FrequencyTable load_frequency_table(const std::string& path, Size scale) {
  if (scale < 1) fail(errc::precondition_violated, "scale must be >= 1");
  auto in = open_or_fail(path);

  FrequencyTable table;
  table.scale = scale;
  table.source = path;
  std::set<std::string> seen;

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    std::istringstream row(line);
    std::string name, freq, cumfreq, rank, extra;
    if (!(row >> name >> freq >> cumfreq >> rank)) {
      parse_fail(path, lineno, "expected NAME FREQ CUMFREQ RANK");
    }
    if (row >> extra) parse_fail(path, lineno, "trailing field '" + extra + "'");

    Size mantissa, scratch;
    int decimals, cum_decimals;
    if (!parse_decimal(freq, mantissa, decimals)) {
      parse_fail(path, lineno, "bad frequency '" + freq + "'");
    }
    // Cumulative frequency and rank are shape-checked only.
    if (!parse_decimal(cumfreq, scratch, cum_decimals)) {
      parse_fail(path, lineno, "bad cumulative frequency '" + cumfreq + "'");
    }
    if (!parse_int(rank, scratch)) {
      parse_fail(path, lineno, "bad rank '" + rank + "'");
    }
    Size pow10 = 1;
    for (int i = 0; i < decimals; ++i) pow10 *= 10;
    const Size product = mantissa * scale;
    if (product % pow10 != 0) {
      fail(errc::non_integral_frequency,
           path + ":" + std::to_string(lineno) + ": " + freq + " * " +
               std::to_string(scale) + " is not an integer");
    }
    const Size count = product / pow10;
    if (count < 1) {
      parse_fail(path, lineno, "frequency " + freq + " scales to zero records");
    }
    if (!seen.insert(name).second) {
      parse_fail(path, lineno, "duplicate label '" + name + "'");
    }
    table.labels.push_back(name);
    table.counts.push_back(count);
  }
  if (table.labels.empty()) fail(errc::empty_file, path + " has no data rows");
  return table;
}

GraphInstance load_graph_instance(const std::string& path) {
  auto in = open_or_fail(path);
  std::vector<std::string> tokens;
  std::string line;
  int lineno = 0;
  std::vector<int> token_line;
  bool saw_tree = false;
  int tree_at = -1;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream row(line);
    std::string tok;
    while (row >> tok) {
      if (tok == "tree") {
        if (saw_tree) parse_fail(path, lineno, "repeated 'tree' section");
        saw_tree = true;
        tree_at = static_cast<int>(tokens.size());
        continue;
      }
      tokens.push_back(tok);
      token_line.push_back(lineno);
    }
  }
  if (tokens.empty()) fail(errc::empty_file, path + " has no data");

  std::size_t pos = 0;
  auto next_int = [&](const char* what) -> Size {
    if (pos >= tokens.size()) {
      fail(errc::parse_error, path + ": unexpected end of file reading " +
                                  std::string(what));
    }
    Size v;
    if (!parse_int(tokens[pos], v)) {
      parse_fail(path, token_line[pos],
                 std::string("bad ") + what + " '" + tokens[pos] + "'");
    }
    ++pos;
    return v;
  };

  GraphInstance g;
  g.n = static_cast<int>(next_int("vertex count"));
  const int m = static_cast<int>(next_int("edge count"));
  g.k = next_int("k");
  if (g.n < 1 || m < 0) fail(errc::parse_error, path + ": bad header");
  for (int i = 0; i < m; ++i) {
    const int u = static_cast<int>(next_int("edge endpoint"));
    const int v = static_cast<int>(next_int("edge endpoint"));
    g.edges.emplace_back(u, v);
  }
  for (int i = 0; i < g.n; ++i) g.weights.push_back(next_int("vertex weight"));

  if (saw_tree) {
    if (static_cast<int>(pos) != tree_at) {
      fail(errc::parse_error,
           path + ": 'tree' section must follow the vertex weights");
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < g.n - 1; ++i) {
      const int u = static_cast<int>(next_int("tree edge endpoint"));
      const int v = static_cast<int>(next_int("tree edge endpoint"));
      edges.emplace_back(u, v);
    }
    g.tree_edges = std::move(edges);
  }
  if (pos != tokens.size()) {
    parse_fail(path, token_line[pos], "trailing data '" + tokens[pos] + "'");
  }
  return g;
}

WeightedPointSet load_point_csv(const std::string& path) {
  auto in = open_or_fail(path);
  std::string line;
  int lineno = 0;
  if (!std::getline(in, line)) fail(errc::empty_file, path + " is empty");
  ++lineno;
  {
    std::string header = line;
    header.erase(std::remove_if(header.begin(), header.end(),
                                [](unsigned char c) { return std::isspace(c); }),
                 header.end());
    if (header != "x,y,weight") {
      parse_fail(path, lineno, "expected header 'x,y,weight'");
    }
  }
  std::vector<WeightedPoint> points;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    std::array<std::string, 3> fields;
    std::size_t start = 0;
    for (int f = 0; f < 3; ++f) {
      const std::size_t comma = line.find(',', start);
      if ((comma == std::string::npos) != (f == 2)) {
        parse_fail(path, lineno, "expected 3 comma-separated fields");
      }
      fields[f] = line.substr(start, comma == std::string::npos
                                         ? std::string::npos
                                         : comma - start);
      start = comma + 1;
    }
    auto field_int = [&](const std::string& raw, const char* what) -> Size {
      std::string tok = raw;
      tok.erase(std::remove_if(tok.begin(), tok.end(),
                               [](unsigned char c) { return std::isspace(c); }),
                tok.end());
      bool neg = false;
      if (!tok.empty() && (tok[0] == '-' || tok[0] == '+')) {
        neg = tok[0] == '-';
        tok.erase(tok.begin());
      }
      Size v;
      if (!parse_int(tok, v)) {
        parse_fail(path, lineno, std::string("bad ") + what + " '" + raw + "'");
      }
      return neg ? -v : v;
    };
    WeightedPoint p;
    p.x = field_int(fields[0], "x");
    p.y = field_int(fields[1], "y");
    p.weight = field_int(fields[2], "weight");
    points.push_back(p);
  }
  if (points.empty()) fail(errc::empty_file, path + " has no data rows");
  return WeightedPointSet(std::move(points));
}

std::vector<Size> load_sizes(const std::string& path) {
  auto in = open_or_fail(path);
  std::vector<Size> sizes;
  std::string tok;
  while (in >> tok) {
    Size v;
    if (!parse_int(tok, v)) {
      fail(errc::parse_error, path + ": bad group size '" + tok + "'");
    }
    sizes.push_back(v);
  }
  if (sizes.empty()) fail(errc::empty_file, path + " has no data");
  return sizes;
}

}  // namespace anonykit
