// codec.hpp — graph interchange: graph6 records (bit-exact), DOT text and
// a plain edge-list format ("n m" header, one "u v" line per edge).
//
// graph6: first byte n+63 for n <= 62, or 126 followed by three 6-bit
// groups for 63 <= n <= 258047. Body packs the upper triangle in column
// order (0,1),(0,2),(1,2),(0,3),... six bits per byte, each byte +63,
// zero-padded. The decoder is strict: bad byte ranges, truncation, trailing
// data and nonzero padding are all errors.
#pragma once

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "centers/graph.hpp"

namespace centers {

inline constexpr int kGraph6MaxOrder = 258047;

inline std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder)
    fail(Errc::order_too_large, "graph6 supports order <= 258047");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0;
  int nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits != 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

inline Graph graph6_decode(std::string_view record) {
  auto bad = [&](std::size_t offset, const std::string& what) {
    fail(Errc::codec_error,
         what + " at byte " + std::to_string(offset) + " of graph6 record");
  };
  if (record.empty()) fail(Errc::codec_error, "empty graph6 record");
  auto value_at = [&](std::size_t i) {
    const unsigned char c = static_cast<unsigned char>(record[i]);
    if (c < 63 || c > 126) bad(i, "byte out of printable range 63..126");
    return static_cast<int>(c - 63);
  };
  std::size_t pos = 0;
  int n = 0;
  if (static_cast<unsigned char>(record[0]) == 126) {
    if (record.size() < 4) bad(record.size(), "truncated extended header");
    if (static_cast<unsigned char>(record[1]) == 126)
      bad(1, "orders above 258047 unsupported");
    n = (value_at(1) << 12) | (value_at(2) << 6) | value_at(3);
    pos = 4;
  } else {
    n = value_at(0);
    pos = 1;
  }
  if (n == 0) fail(Errc::codec_error, "graph6 record with order 0");
  if (n > Graph::kMaxOrder)
    fail(Errc::order_too_large,
         "decoded order " + std::to_string(n) + " exceeds cap " +
             std::to_string(Graph::kMaxOrder));
  const long long bits = static_cast<long long>(n) * (n - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (record.size() < pos + body)
    bad(record.size(), "truncated body (expected " + std::to_string(body) +
                           " body bytes)");
  if (record.size() > pos + body) bad(pos + body, "trailing data");
  GraphBuilder b(n);
  long long bit_index = 0;
  int i = 0, j = 1;
  for (std::size_t byte = 0; byte < body; ++byte) {
    const int v = value_at(pos + byte);
    for (int k = 5; k >= 0; --k, ++bit_index) {
      const int bit = (v >> k) & 1;
      if (bit_index >= bits) {
        if (bit != 0) bad(pos + byte, "nonzero padding");
        continue;
      }
      if (bit != 0) b.add_edge(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return std::move(b).build();
}

// Undirected DOT with vertices 0..n-1; the highlighted set (typically the
// center) gets a filled style. Output ordering is deterministic.
inline std::string dot_export(const Graph& g,
                              std::span<const int> highlight = {}) {
  const std::set<int> marked(highlight.begin(), highlight.end());
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (marked.count(v) != 0) out << " [style=filled, fillcolor=gold]";
    out << ";\n";
  }
  g.for_each_edge(
      [&](int u, int v) { out << "  " << u << " -- " << v << ";\n"; });
  out << "}\n";
  return out.str();
}

inline std::string edge_list_export(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  g.for_each_edge([&](int u, int v) { out << u << ' ' << v << '\n'; });
  return out.str();
}

inline Graph edge_list_parse(std::istream& in) {
  int n = 0;
  long long m = 0;
  if (!(in >> n >> m))
    fail(Errc::codec_error, "edge list needs an \"n m\" header line");
  if (m < 0) fail(Errc::codec_error, "negative edge count in header");
  GraphBuilder b(n);
  for (long long e = 0; e < m; ++e) {
    int u = 0, v = 0;
    if (!(in >> u >> v))
      fail(Errc::codec_error,
           "edge list truncated after " + std::to_string(e) + " of " +
               std::to_string(m) + " edges");
    b.add_edge(u, v);
  }
  return std::move(b).build();
}

inline Graph edge_list_parse(const std::string& text) {
  std::istringstream in(text);
  return edge_list_parse(in);
}

}  // namespace centers
