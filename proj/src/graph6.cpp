#include "listobs/graph6.hpp"

#include <fstream>
#include <sstream>

#include "listobs/errors.hpp"

namespace listobs {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int decode_byte(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError("graph6: unexpected end of input", pos);
  int b = static_cast<unsigned char>(text[pos]);
  if (b < 63 || b > 126) throw ParseError("graph6: byte outside printable range 63..126", pos);
  return b - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kHeader)) pos = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  long n = 0;
  if (pos < text.size() && text[pos] == '~') {
    if (pos + 1 < text.size() && text[pos + 1] == '~') {
      throw ParseError("graph6: order exceeds 128", pos);
    }
    for (int k = 1; k <= 3; ++k) n = (n << 6) | decode_byte(text, pos + static_cast<std::size_t>(k));
    if (n < 63) throw ParseError("graph6: long-form order below 63", pos);
    pos += 4;
  } else {
    n = decode_byte(text, pos);
    pos += 1;
  }
  if (n > kMaxVertices) throw ParseError("graph6: order exceeds 128", 0);

  const int order = static_cast<int>(n);
  const std::size_t bits = static_cast<std::size_t>(order) * static_cast<std::size_t>(order - (order > 0)) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() - pos != body) {
    throw ParseError("graph6: expected " + std::to_string(body) + " body bytes, found " +
                         std::to_string(text.size() - pos),
                     std::min(text.size(), pos + body));
  }

  Graph g(order);
  std::size_t k = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = decode_byte(text, pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (k % 6 != 0) {
    int byte = decode_byte(text, pos + k / 6);
    if (byte & ((1 << (6 - k % 6)) - 1)) throw ParseError("graph6: nonzero padding bits", pos + k / 6);
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

std::vector<Graph> parse_graph6_stream(std::string_view text) {
  std::vector<Graph> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) {
      try {
        out.push_back(parse_graph6(line));
      } catch (const ParseError& e) {
        throw ParseError(std::string("line ") + std::to_string(out.size() + 1) + ": " + e.what(),
                         start + e.offset());
      }
    }
    start = end + 1;
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open graph file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph6_stream(buf.str());
}

}  // namespace listobs
