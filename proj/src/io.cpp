#include "loclu/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "loclu/errors.hpp"

namespace loclu {
namespace {

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot open " + path + " for writing");
  return out;
}

bool blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::uint64_t parse_uint(const std::string& tok, std::size_t line_no) {
  std::uint64_t v = 0;
  const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw ParseError("expected a non-negative integer, got '" + tok + "'", line_no);
  return v;
}

double parse_double(const std::string& tok, std::size_t line_no) {
  if (tok.empty()) throw ParseError("empty numeric field", line_no);
  char* end = nullptr;
  const double v = std::strtod(tok.c_str(), &end);
  if (end != tok.c_str() + tok.size())
    throw ParseError("expected a number, got '" + tok + "'", line_no);
  if (!std::isfinite(v)) throw ParseError("non-finite value '" + tok + "'", line_no);
  return v;
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(trim(cur));
  return out;
}

}  // namespace

Graph load_graph(const std::string& path, LoadStats* stats) {
  std::ifstream in = open_in(path);
  std::string line;
  std::size_t line_no = 0;

  std::size_t declared_n = 0;
  bool have_n = false;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> raw;
  std::uint32_t max_id = 0;
  LoadStats local;

  while (std::getline(in, line)) {
    ++line_no;
    if (blank_or_comment(line)) continue;
    std::istringstream ss(line);
    std::string a, b;
    if (!(ss >> a)) continue;
    if (!have_n && raw.empty() && a == "n") {
      if (!(ss >> b)) throw ParseError("'n' header without a count", line_no);
      declared_n = static_cast<std::size_t>(parse_uint(b, line_no));
      have_n = true;
      std::string extra;
      if (ss >> extra) throw ParseError("trailing token '" + extra + "'", line_no);
      continue;
    }
    if (!(ss >> b)) throw ParseError("expected two vertex ids", line_no);
    std::string extra;
    if (ss >> extra) throw ParseError("trailing token '" + extra + "'", line_no);
    const std::uint64_t u = parse_uint(a, line_no), v = parse_uint(b, line_no);
    if (u > 0xffffffffull || v > 0xffffffffull)
      throw ParseError("vertex id too large", line_no);
    if (have_n && (u >= declared_n || v >= declared_n))
      throw ParseError("vertex id exceeds declared n", line_no);
    if (u == v) {
      ++local.self_loops_dropped;
      continue;
    }
    const auto uu = static_cast<std::uint32_t>(u), vv = static_cast<std::uint32_t>(v);
    raw.emplace_back(std::min(uu, vv), std::max(uu, vv));
    max_id = std::max({max_id, uu, vv});
  }
  const std::size_t n = have_n ? declared_n : (raw.empty() ? 0 : std::size_t{max_id} + 1);

  std::sort(raw.begin(), raw.end());
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  edges.reserve(raw.size());
  for (const auto& e : raw) {
    if (!edges.empty() && edges.back() == e)
      ++local.duplicate_edges_merged;
    else
      edges.push_back(e);
  }
  if (stats) *stats = local;
  return Graph::from_edges(n, edges);
}

void save_graph(const std::string& path, const Graph& graph) {
  std::ofstream out = open_out(path);
  out << "n " << graph.vertex_count() << "\n";
  for (const auto& [u, v] : graph.edges()) out << u << " " << v << "\n";
  if (!out) throw InvalidInput("write failed: " + path);
}

AttributeMatrix load_attributes(const std::string& path, std::size_t n) {
  std::ifstream in = open_in(path);
  std::string line;
  std::size_t line_no = 0;

  std::vector<bool> categorical;
  bool have_types = false;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> row_line;

  while (std::getline(in, line)) {
    ++line_no;
    if (line.rfind("#types", 0) == 0) {
      if (have_types || !rows.empty())
        throw ParseError("misplaced #types header", line_no);
      const auto toks = split_csv(trim(line.substr(6)));
      for (const auto& t : toks) {
        if (t == "num")
          categorical.push_back(false);
        else if (t == "cat")
          categorical.push_back(true);
        else
          throw ParseError("unknown column type '" + t + "'", line_no);
      }
      have_types = true;
      continue;
    }
    if (blank_or_comment(line)) continue;
    auto fields = split_csv(line);
    if (!rows.empty() && fields.size() != rows.front().size())
      throw ParseError("expected " + std::to_string(rows.front().size()) + " fields, got " +
                           std::to_string(fields.size()),
                       line_no);
    rows.push_back(std::move(fields));
    row_line.push_back(line_no);
  }
  if (rows.empty()) throw InvalidInput(path + ": no attribute rows");
  const std::size_t in_cols = rows.front().size();
  if (have_types && categorical.size() != in_cols)
    throw InvalidInput(path + ": #types column count mismatch");
  if (!have_types) categorical.assign(in_cols, false);
  if (n != SIZE_MAX && rows.size() != n)
    throw InvalidInput(path + ": expected " + std::to_string(n) + " rows, got " +
                       std::to_string(rows.size()));

  // Categorical columns expand one-hot over their sorted distinct values.
  std::vector<std::vector<std::string>> levels(in_cols);
  for (std::size_t j = 0; j < in_cols; ++j) {
    if (!categorical[j]) continue;
    std::set<std::string> distinct;
    for (const auto& row : rows) distinct.insert(row[j]);
    levels[j].assign(distinct.begin(), distinct.end());
  }
  std::size_t out_cols = 0;
  for (std::size_t j = 0; j < in_cols; ++j) out_cols += categorical[j] ? levels[j].size() : 1;

  AttributeMatrix attrs(rows.size(), out_cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::size_t c = 0;
    for (std::size_t j = 0; j < in_cols; ++j) {
      if (categorical[j]) {
        const auto& lv = levels[j];
        const auto it = std::lower_bound(lv.begin(), lv.end(), rows[i][j]);
        for (std::size_t l = 0; l < lv.size(); ++l)
          attrs.at(i, c + l) = (static_cast<std::size_t>(it - lv.begin()) == l) ? 1.0 : 0.0;
        c += lv.size();
      } else {
        attrs.at(i, c++) = parse_double(rows[i][j], row_line[i]);
      }
    }
  }
  return attrs;
}

void save_attributes(const std::string& path, const AttributeMatrix& attrs) {
  std::ofstream out = open_out(path);
  char buf[40];
  for (std::size_t i = 0; i < attrs.rows; ++i) {
    for (std::size_t j = 0; j < attrs.cols; ++j) {
      // %.17g round-trips doubles exactly
      std::snprintf(buf, sizeof buf, "%.17g", attrs.at(i, j));
      out << (j ? "," : "") << buf;
    }
    out << "\n";
  }
  if (!out) throw InvalidInput("write failed: " + path);
}

std::vector<std::uint32_t> load_labels(const std::string& path, std::size_t n) {
  std::ifstream in = open_in(path);
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::uint32_t> labels;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank_or_comment(line)) continue;
    labels.push_back(static_cast<std::uint32_t>(parse_uint(trim(line), line_no)));
  }
  if (n != SIZE_MAX && labels.size() != n)
    throw InvalidInput(path + ": expected " + std::to_string(n) + " labels, got " +
                       std::to_string(labels.size()));
  return labels;
}

void save_labels(const std::string& path, const std::vector<std::uint32_t>& labels) {
  std::ofstream out = open_out(path);
  for (std::uint32_t l : labels) out << l << "\n";
  if (!out) throw InvalidInput("write failed: " + path);
}

std::vector<std::uint32_t> load_member_list(const std::string& path, std::size_t n) {
  std::ifstream in = open_in(path);
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::uint32_t> members;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank_or_comment(line)) continue;
    const std::uint64_t v = parse_uint(trim(line), line_no);
    if (v >= n) throw ParseError("vertex id " + std::to_string(v) + " out of range", line_no);
    members.push_back(static_cast<std::uint32_t>(v));
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

void save_member_list(const std::string& path, const std::vector<std::uint32_t>& members) {
  std::ofstream out = open_out(path);
  for (std::uint32_t m : members) out << m << "\n";
  if (!out) throw InvalidInput("write failed: " + path);
}

}  // namespace loclu
