#include "eg/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include "eg/errors.hpp"

namespace eg {

namespace {

// Lines with content, in order: blank lines and '#' comments dropped,
// trailing '\r' stripped so CRLF input reads the same as LF.
std::vector<std::string> content_lines(std::istream& in) {
  std::vector<std::string> kept;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const size_t at = line.find_first_not_of(" \t");
    if (at == std::string::npos || line[at] == '#') continue;
    kept.push_back(line);
  }
  return kept;
}

std::vector<long long> fields(const std::string& line, size_t count, const char* what) {
  std::istringstream ss(line);
  std::vector<long long> vals;
  long long x = 0;
  while (ss >> x) vals.push_back(x);
  std::string rest;
  if (ss >> rest)
    throw ParseError(std::string(what) + ": non-integer token in line '" + line + "'");
  if (vals.size() != count)
    throw ParseError(std::string(what) + ": expected " + std::to_string(count) +
                     " integers, got " + std::to_string(vals.size()) + " in line '" + line + "'");
  return vals;
}

int to_int(long long v, const char* what) {
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw ParseError(std::string(what) + ": value " + std::to_string(v) + " out of range");
  return static_cast<int>(v);
}

// Reads q `edge_index value` lines (1-based index, each exactly once) into a
// vector indexed by edge. `lines[at..at+q)` must exist.
std::vector<int> indexed_column(const std::vector<std::string>& lines, size_t at, int q,
                                const char* what) {
  std::vector<int> out(q, 0);
  std::vector<bool> seen(q, false);
  for (int n = 0; n < q; ++n) {
    const auto vals = fields(lines[at + n], 2, what);
    const int idx = to_int(vals[0], what);
    if (idx < 1 || idx > q)
      throw ParseError(std::string(what) + ": edge index " + std::to_string(idx) +
                       " outside 1.." + std::to_string(q));
    if (seen[idx - 1])
      throw ParseError(std::string(what) + ": duplicate edge index " + std::to_string(idx));
    seen[idx - 1] = true;
    out[idx - 1] = to_int(vals[1], what);
  }
  return out;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return in;
}

}  // namespace

MultiGraph read_graph(std::istream& in) {
  const auto lines = content_lines(in);
  if (lines.empty()) throw ParseError("graph: missing `p q` header line");
  const auto header = fields(lines[0], 2, "graph header");
  MultiGraph g;
  g.p = to_int(header[0], "graph header");
  const int q = to_int(header[1], "graph header");
  if (g.p < 1 || q < 0)
    throw ParseError("graph header: need p >= 1 and q >= 0, got p=" + std::to_string(header[0]) +
                     " q=" + std::to_string(header[1]));
  if (lines.size() != static_cast<size_t>(q) + 1)
    throw ParseError("graph: header promises " + std::to_string(q) + " edge lines, file has " +
                     std::to_string(lines.size() - 1));
  g.edges.reserve(q);
  for (int i = 0; i < q; ++i) {
    const auto e = fields(lines[i + 1], 2, "graph edge");
    g.edges.emplace_back(to_int(e[0], "graph edge"), to_int(e[1], "graph edge"));
  }
  try {
    validate(g);
  } catch (const Error& err) {
    throw ParseError(std::string("graph: ") + err.what());
  }
  return g;
}

MultiGraph read_graph_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const MultiGraph& g) {
  out << g.p << ' ' << g.q() << '\n';
  for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
}

std::string graph_to_string(const MultiGraph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

EdgeLabeling read_labeling(std::istream& in, const MultiGraph& g) {
  const auto lines = content_lines(in);
  const int q = g.q();
  if (lines.size() != static_cast<size_t>(q))
    throw ParseError("labeling: expected " + std::to_string(q) + " lines for this graph, got " +
                     std::to_string(lines.size()));
  EdgeLabeling l;
  l.modulus = g.p;
  l.labels = indexed_column(lines, 0, q, "labeling");
  return l;
}

EdgeLabeling read_labeling_file(const std::string& path, const MultiGraph& g) {
  auto in = open_or_throw(path);
  return read_labeling(in, g);
}

void write_labeling(std::ostream& out, const EdgeLabeling& l) {
  for (int i = 0; i < l.q(); ++i) out << i + 1 << ' ' << l.labels[i] << '\n';
}

std::string labeling_to_string(const EdgeLabeling& l) {
  std::ostringstream out;
  write_labeling(out, l);
  return out.str();
}

Striation read_striation(std::istream& in, const MultiGraph& g) {
  const auto lines = content_lines(in);
  const size_t q = static_cast<size_t>(g.q());
  if (lines.size() != 2 * q + 1)
    throw ParseError("striation: expected " + std::to_string(2 * q + 1) +
                     " lines (labeling, `---`, stria assignments), got " +
                     std::to_string(lines.size()));
  auto trimmed = [](const std::string& s) {
    const size_t a = s.find_first_not_of(" \t");
    const size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
  };
  if (trimmed(lines[q]) != "---")
    throw ParseError("striation: line " + std::to_string(q + 1) + " must be the separator `---`");

  Striation s;
  s.labeling.modulus = g.p;
  s.labeling.labels = indexed_column(lines, 0, static_cast<int>(q), "striation labeling");

  const std::vector<int> stria_of = indexed_column(lines, q + 1, static_cast<int>(q),
                                                   "striation assignment");
  int r = 0;
  for (size_t i = 0; i < q; ++i) {
    if (stria_of[i] < 1 || stria_of[i] > static_cast<int>(q))
      throw ParseError("striation assignment: stria index " + std::to_string(stria_of[i]) +
                       " for edge " + std::to_string(i + 1) + " outside 1.." + std::to_string(q));
    r = std::max(r, stria_of[i]);
  }
  s.factorization.factors.assign(r, {});
  for (size_t i = 0; i < q; ++i)
    s.factorization.factors[stria_of[i] - 1].push_back(static_cast<int>(i));
  return s;
}

Striation read_striation_file(const std::string& path, const MultiGraph& g) {
  auto in = open_or_throw(path);
  return read_striation(in, g);
}

void write_striation(std::ostream& out, const Striation& s) {
  write_labeling(out, s.labeling);
  out << "---\n";
  const int q = s.labeling.q();
  std::vector<int> stria_of(q, 0);
  for (size_t j = 0; j < s.factorization.factors.size(); ++j)
    for (int ei : s.factorization.factors[j])
      if (ei >= 0 && ei < q) stria_of[ei] = static_cast<int>(j) + 1;
  for (int i = 0; i < q; ++i) out << i + 1 << ' ' << stria_of[i] << '\n';
}

std::string striation_to_string(const Striation& s) {
  std::ostringstream out;
  write_striation(out, s);
  return out.str();
}

}  // namespace eg
