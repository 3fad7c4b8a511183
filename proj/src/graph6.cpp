#include "locdim/graph6.hpp"

namespace locdim {

namespace {

// Value of the printable byte at position i, range-checked.
int byte_value(std::string_view text, std::size_t i) {
  if (i >= text.size()) throw parse_error("truncated graph6 string", text.size());
  unsigned char c = static_cast<unsigned char>(text[i]);
  if (c < 63 || c > 126) throw parse_error("graph6 byte out of printable range", i);
  return c - 63;
}

}  // namespace

Graph from_graph6(std::string_view text) {
  if (text.empty()) throw parse_error("empty graph6 string", 0);

  long n;
  std::size_t pos;
  if (text[0] == '~') {
    if (text.size() > 1 && text[1] == '~')
      throw cap_error("graph6 long-order form exceeds cap " + std::to_string(kMaxOrder));
    n = (long{1} * byte_value(text, 1) << 12) | (byte_value(text, 2) << 6) | byte_value(text, 3);
    pos = 4;
  } else {
    n = byte_value(text, 0);
    pos = 1;
  }
  if (n > kMaxOrder)
    throw cap_error("graph6 order " + std::to_string(n) + " exceeds cap " +
                    std::to_string(kMaxOrder));

  std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() < pos + nbytes) throw parse_error("truncated graph6 bit field", text.size());
  if (text.size() > pos + nbytes) throw parse_error("trailing bytes after graph6 bit field", pos + nbytes);

  Graph g(static_cast<int>(n));
  std::size_t k = 0;
  int group = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++k) {
      if (k % 6 == 0) group = byte_value(text, pos + k / 6);
      if ((group >> (5 - k % 6)) & 1) g.add_edge(u, v);
    }
  return g;
}

std::string to_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int group = 0, nbits = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      group = (group << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>((group << (6 - nbits)) + 63));
  return out;
}

}  // namespace locdim
