#pragma once

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lafr/error.hpp"
#include "lafr/graph/graph.hpp"

namespace lafr {

inline constexpr std::uint64_t kGraph6MaxOrder = 68719476735ULL;

namespace detail {

inline std::string_view strip_line(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline unsigned g6_value(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) throw ParseError("graph6: truncated input", pos);
  const auto c = static_cast<unsigned char>(s[pos]);
  if (c < 63 || c > 126) throw ParseError("graph6: byte outside the printable range 63..126", pos);
  return c - 63U;
}

}  // namespace detail

/// Decodes one graph6 line (optional ">>graph6<<" header, trailing newline
/// allowed).
inline Graph parse_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  std::size_t pos = 0;
  std::string_view s = detail::strip_line(text);
  if (s.substr(0, header.size()) == header) pos = header.size();
  if (pos >= s.size()) throw ParseError("graph6: missing size header", pos);

  std::uint64_t n = 0;
  if (detail::g6_value(s, pos) < 63) {
    n = detail::g6_value(s, pos);
    pos += 1;
  } else if (pos + 1 < s.size() && detail::g6_value(s, pos + 1) < 63) {
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | detail::g6_value(s, pos + k);
    if (n < 63) throw ParseError("graph6: non-minimal size header", pos);
    pos += 4;
  } else {
    if (pos + 1 >= s.size()) throw ParseError("graph6: truncated size header", pos + 1);
    for (std::size_t k = 2; k <= 7; ++k) n = (n << 6) | detail::g6_value(s, pos + k);
    if (n < 258048) throw ParseError("graph6: non-minimal size header", pos);
    pos += 8;
  }
  if (n > kGraph6MaxOrder) throw ParseError("graph6: order too large", pos);

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (s.size() - pos < bytes) throw ParseError("graph6: truncated adjacency bit vector", s.size());
  if (s.size() - pos > bytes) throw ParseError("graph6: trailing bytes after the bit vector", pos + bytes);

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      const unsigned byte = detail::g6_value(s, pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1U) edges.emplace_back(i, j);
    }
  if (bits % 6 != 0) {
    const std::size_t last = pos + bytes - 1;
    const unsigned pad_mask = (1U << (6 - bits % 6)) - 1U;
    if (detail::g6_value(s, last) & pad_mask) throw ParseError("graph6: nonzero padding bits", last);
  }
  return Graph(static_cast<std::size_t>(n), std::move(edges));
}

inline std::string to_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int k = 2; k >= 0; --k) out.push_back(static_cast<char>(((n >> (6 * k)) & 63U) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int k = 5; k >= 0; --k) out.push_back(static_cast<char>(((n >> (6 * k)) & 63U) + 63));
  }
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::vector<unsigned char> vec((bits + 5) / 6, 0);
  for (const auto& [u, v] : g.edges()) {
    const std::uint64_t k = pair_index(u, v);
    vec[k / 6] |= static_cast<unsigned char>(1U << (5 - k % 6));
  }
  for (auto c : vec) out.push_back(static_cast<char>(c + 63));
  return out;
}

/// "n" on the first line, then "u v" per edge; '#' starts a comment.
inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool have_n = false;
  std::size_t n = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<long long> nums;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        const long long v = std::stoll(tok, &used);
        if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
        nums.push_back(v);
      } catch (const std::exception&) {
        throw ParseError("edge list: bad token '" + tok + "' on line " + std::to_string(lineno), lineno);
      }
    }
    if (nums.empty()) continue;
    if (!have_n) {
      if (nums.size() != 1) throw ParseError("edge list: first line must hold only the vertex count", lineno);
      n = static_cast<std::size_t>(nums[0]);
      have_n = true;
      continue;
    }
    if (nums.size() != 2) throw ParseError("edge list: expected 'u v' on line " + std::to_string(lineno), lineno);
    edges.emplace_back(static_cast<Vertex>(nums[0]), static_cast<Vertex>(nums[1]));
  }
  if (!have_n) throw ParseError("edge list: missing vertex count", lineno);
  try {
    return Graph(n, std::move(edges));
  } catch (const DomainError& e) {
    throw ParseError(std::string("edge list: ") + e.what(), lineno);
  }
}

inline std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace lafr
