#include "p5sparse/formats.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "p5sparse/errors.hpp"

namespace p5sparse {
namespace {

constexpr int kBias = 63;

std::string_view strip_line_end(std::string_view s) {
  if (!s.empty() && s.back() == '\n') s.remove_suffix(1);
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

bool parse_int(std::string_view tok, long long& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder)
    throw InvalidInput("graph6 encoding supports at most " + std::to_string(kGraph6MaxOrder) + " vertices");
  std::string out(1, static_cast<char>(kBias + n));
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kBias + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(kBias + (acc << (6 - filled))));
  return out;
}

Graph decode_graph6(std::string_view text) {
  text = strip_line_end(text);
  if (text.empty()) throw InvalidInput("graph6: empty input");
  const int head = static_cast<unsigned char>(text[0]);
  if (head == 126) throw InvalidInput("graph6: long-form size header is not supported (n > 62)");
  if (head < kBias || head > 126) throw InvalidInput("graph6: malformed size header");
  const int n = head - kBias;
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() < 1 + body) throw InvalidInput("graph6: truncated adjacency data");
  if (text.size() > 1 + body) throw InvalidInput("graph6: trailing characters after adjacency data");
  std::vector<int> sextets(body);
  for (std::size_t k = 0; k < body; ++k) {
    const int c = static_cast<unsigned char>(text[1 + k]);
    if (c < kBias || c > 126) throw InvalidInput("graph6: byte out of range at offset " + std::to_string(1 + k));
    sextets[k] = c - kBias;
  }
  if (bits % 6 != 0) {
    const int pad = static_cast<int>(6 - bits % 6);
    if ((sextets.back() & ((1 << pad) - 1)) != 0) throw InvalidInput("graph6: nonzero padding bits");
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      if ((sextets[k / 6] >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

std::string encode_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

Graph decode_edge_list(std::string_view text) {
  std::vector<long long> nums;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    long long value = 0;
    if (!parse_int(text.substr(pos, end - pos), value))
      throw InvalidInput("edge list: not an integer: '" + std::string(text.substr(pos, end - pos)) + "'");
    nums.push_back(value);
    pos = end;
  }
  if (nums.size() < 2) throw InvalidInput("edge list: missing 'n m' header");
  const long long n = nums[0];
  const long long m = nums[1];
  if (n < 0 || m < 0) throw InvalidInput("edge list: negative header value");
  if (n > 1'000'000) throw InvalidInput("edge list: vertex count too large");
  if (static_cast<long long>(nums.size()) != 2 + 2 * m)
    throw InvalidInput("edge list: expected " + std::to_string(m) + " edges");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    const long long u = nums[static_cast<std::size_t>(2 + 2 * i)];
    const long long v = nums[static_cast<std::size_t>(3 + 2 * i)];
    if (u < 0 || v < 0 || u >= n || v >= n) throw InvalidInput("edge list: endpoint out of range");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string encode_dot(const Graph& g, std::string_view name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

std::vector<Graph> parse_graphs(std::string_view text, InputFormat format) {
  if (format == InputFormat::Auto) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) throw InvalidInput("empty input");
    format = std::isdigit(static_cast<unsigned char>(text[i])) ? InputFormat::EdgeList : InputFormat::Graph6;
  }
  if (format == InputFormat::EdgeList) return {decode_edge_list(text)};
  std::vector<Graph> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = strip_line_end(text.substr(start, end - start));
    if (!line.empty()) out.push_back(decode_graph6(line));
    start = end + 1;
  }
  if (out.empty()) throw InvalidInput("no graph6 lines in input");
  return out;
}

}  // namespace p5sparse
