#include "hlag/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <istream>
#include <iterator>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hlag/error.hpp"

namespace hlag {

namespace {

// Splits on single spaces; rejects tabs, leading/trailing or doubled spaces.
std::vector<long> parse_int_line(const std::string& line, int line_no) {
  std::vector<long> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = line.find(' ', pos);
    std::string tok = line.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    if (tok.empty()) throw ParseError(line_no, "expected integers separated by single spaces");
    long v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) throw ParseError(line_no, "not an integer: '" + tok + "'");
    out.push_back(v);
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return out;
}

bool skippable(const std::string& line) {
  std::size_t k = line.find_first_not_of(" \t");
  return k == std::string::npos || line[k] == '#';
}

}  // namespace

Hypergraph read_hg(std::istream& in) {
  std::string line;
  int line_no = 0;
  int r = 0;
  int n = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (skippable(line)) continue;
    auto nums = parse_int_line(line, line_no);
    if (!have_header) {
      if (nums.size() != 2) throw ParseError(line_no, "header must be 'r n'");
      if (nums[0] < 2) throw ParseError(line_no, "uniformity must be at least 2");
      if (nums[1] < 0 || nums[1] > 1000000) throw ParseError(line_no, "vertex count out of range");
      r = static_cast<int>(nums[0]);
      n = static_cast<int>(nums[1]);
      have_header = true;
      continue;
    }
    if (static_cast<int>(nums.size()) != r)
      throw ParseError(line_no, "edge has " + std::to_string(nums.size()) + " vertices, expected " + std::to_string(r));
    Edge e;
    for (std::size_t k = 0; k < nums.size(); ++k) {
      if (nums[k] < 1 || nums[k] > n) throw ParseError(line_no, "vertex " + std::to_string(nums[k]) + " outside 1.." + std::to_string(n));
      if (k && nums[k] <= nums[k - 1]) throw ParseError(line_no, "edge vertices must be strictly increasing");
      e.push_back(static_cast<Vertex>(nums[k]));
    }
    if (!seen.insert(e).second) throw ParseError(line_no, "duplicate edge");
    edges.push_back(std::move(e));
  }
  if (!have_header) throw ParseError(0, "missing 'r n' header");
  return Hypergraph(r, n, std::move(edges));
}

Hypergraph parse_hg(const std::string& text) {
  std::istringstream in(text);
  return read_hg(in);
}

Hypergraph parse_hg_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("r") || !j.contains("n") || !j.contains("edges") || !j["r"].is_number_integer() ||
      !j["n"].is_number_integer() || !j["edges"].is_array())
    throw ParseError(0, "JSON graph needs integer fields \"r\", \"n\" and an \"edges\" array");
  const long r = j["r"].get<long>();
  const long n = j["n"].get<long>();
  if (r < 2) throw ParseError(0, "uniformity must be at least 2");
  if (n < 0 || n > 1000000) throw ParseError(0, "vertex count out of range");
  std::vector<Edge> edges;
  std::set<Edge> seen;
  int idx = 0;
  for (const auto& je : j["edges"]) {
    ++idx;
    const std::string where = "edge #" + std::to_string(idx) + ": ";
    if (!je.is_array() || static_cast<long>(je.size()) != r) throw ParseError(0, where + "expected " + std::to_string(r) + " vertices");
    Edge e;
    for (const auto& jv : je) {
      if (!jv.is_number_integer()) throw ParseError(0, where + "vertices must be integers");
      long v = jv.get<long>();
      if (v < 1 || v > n) throw ParseError(0, where + "vertex " + std::to_string(v) + " out of range");
      if (!e.empty() && v <= e.back()) throw ParseError(0, where + "vertices must be strictly increasing");
      e.push_back(static_cast<Vertex>(v));
    }
    if (!seen.insert(e).second) throw ParseError(0, where + "duplicate edge");
    edges.push_back(std::move(e));
  }
  return Hypergraph(static_cast<int>(r), static_cast<int>(n), std::move(edges));
}

Hypergraph parse_graph(const std::string& text) {
  std::size_t k = text.find_first_not_of(" \t\r\n");
  if (k != std::string::npos && text[k] == '{') return parse_hg_json(text);
  return parse_hg(text);
}

void write_hg(std::ostream& out, const Hypergraph& g) {
  out << g.uniformity() << ' ' << g.vertex_count() << '\n';
  for (const auto& e : g.edges()) {
    for (std::size_t k = 0; k < e.size(); ++k) out << (k ? " " : "") << e[k];
    out << '\n';
  }
}

std::string to_hg(const Hypergraph& g) {
  std::ostringstream s;
  write_hg(s, g);
  return s.str();
}

std::string to_hg_json(const Hypergraph& g) {
  nlohmann::json j;
  j["r"] = g.uniformity();
  j["n"] = g.vertex_count();
  j["edges"] = g.edges();
  return j.dump();
}

std::vector<double> parse_weights(const std::string& text) {
  std::vector<double> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw ParseError(0, "weight '" + tok + "' is not a decimal number");
    out.push_back(v);
  }
  return out;
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace hlag
