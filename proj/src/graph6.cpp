#include "apx/graph6.hpp"

#include <istream>

#include "apx/errors.hpp"

namespace apx {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int sextet(std::string_view text, std::size_t pos) {
  const auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw ParseError("invalid graph6 byte", pos);
  return c - 63;
}

}  // namespace

Graph from_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kHeader)) pos = kHeader.size();
  std::size_t end = text.size();
  while (end > pos && (text[end - 1] == '\n' || text[end - 1] == '\r')) --end;
  if (pos >= end) throw ParseError("empty graph6 record", pos);

  long n = 0;
  if (text[pos] != '~') {
    n = sextet(text, pos);
    pos += 1;
  } else if (end - pos >= 2 && text[pos + 1] == '~') {
    if (end - pos < 8) throw ParseError("truncated 8-byte order field", end);
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | sextet(text, pos + i);
    pos += 8;
  } else {
    if (end - pos < 4) throw ParseError("truncated 4-byte order field", end);
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | sextet(text, pos + i);
    if (n < 63) throw ParseError("non-canonical order field", pos);
    pos += 4;
  }
  if (n > kMaxVertices) {
    throw CapacityError("graph6 record has " + std::to_string(n) + " vertices; at most 64 supported");
  }

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (end - pos != need) {
    throw ParseError("expected " + std::to_string(need) + " adjacency bytes, found " +
                         std::to_string(end - pos),
                     end - pos < need ? end : pos + need);
  }

  Graph g(static_cast<int>(n));
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = sextet(text, pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (need > 0) {
    const int last = sextet(text, pos + need - 1);
    const int pad = static_cast<int>(need * 6 - bits);
    if (last & ((1 << pad) - 1)) throw ParseError("non-zero padding bits", pos + need - 1);
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0;
  int used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>(63 + (acc << (6 - used))));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    const std::size_t start = offset;
    offset += line.size() + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(from_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(out.size() + 1) + ": malformed graph6",
                       start + e.offset());
    }
  }
  return out;
}

}  // namespace apx
