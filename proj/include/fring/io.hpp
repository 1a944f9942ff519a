#pragma once

// Text forms:
//
//   ring <n>            subset <k>: i1 ... ik      hom <n>: f0 ... f(n-1)
//   add
//   <n rows of n ints>
//   mul
//   <n rows of n ints>
//
// '#' starts a comment that runs to the end of the line.

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fring/error.hpp"
#include "fring/morphism.hpp"
#include "fring/ring.hpp"
#include "fring/subset.hpp"

namespace fring {

struct RingTables {
  Table add;
  Table mul;
};

namespace detail {

inline std::vector<std::string> meaningful_lines(std::string_view text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") != std::string::npos) out.push_back(line);
    pos = end + 1;
  }
  return out;
}

inline std::vector<int> parse_ints(const std::string& s, const std::string& what) {
  std::istringstream in(s);
  std::vector<int> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParse, what + ": bad integer '" + tok + "'");
    }
    if (used != tok.size()) throw Error(ErrorCode::kParse, what + ": bad integer '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

inline std::string join(const std::vector<Elem>& v) {
  std::string s;
  for (Elem e : v) {
    s += ' ';
    s += std::to_string(e);
  }
  return s;
}

/// Splits "<keyword> <k>: a b c" into k and the integer list.
inline std::pair<std::size_t, std::vector<int>> parse_counted(std::string_view text,
                                                              std::string_view keyword) {
  std::string s(text);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw Error(ErrorCode::kParse, "missing ':' in " + s);
  std::istringstream head(s.substr(0, colon));
  std::string word;
  long long count = -1;
  if (!(head >> word >> count) || word != keyword || count < 0)
    throw Error(ErrorCode::kParse, "expected '" + std::string(keyword) + " <k>:' in " + s);
  std::string rest_word;
  if (head >> rest_word) throw Error(ErrorCode::kParse, "unexpected token in " + s);
  auto values = parse_ints(s.substr(colon + 1), std::string(keyword));
  if (values.size() != static_cast<std::size_t>(count))
    throw Error(ErrorCode::kParse, std::string(keyword) + " count does not match its entries");
  return {static_cast<std::size_t>(count), std::move(values)};
}

}  // namespace detail

/// Parses the ring text format into raw tables. Throws kParse on syntax
/// errors; axioms are not checked here.
inline RingTables parse_ring_tables(std::string_view text) {
  const auto lines = detail::meaningful_lines(text);
  if (lines.empty()) throw Error(ErrorCode::kParse, "empty ring file");
  std::istringstream head(lines[0]);
  std::string word;
  long long n = 0;
  std::string extra;
  if (!(head >> word >> n) || word != "ring" || (head >> extra))
    throw Error(ErrorCode::kParse, "first line must be 'ring <n>'");
  if (n <= 0 || static_cast<std::size_t>(n) > kMaxOrder)
    throw Error(ErrorCode::kShape, "ring order " + std::to_string(n) + " out of range");
  const auto order = static_cast<std::size_t>(n);
  if (lines.size() != 3 + 2 * order)
    throw Error(ErrorCode::kShape, "expected " + std::to_string(3 + 2 * order) +
                                       " non-comment lines, found " +
                                       std::to_string(lines.size()));
  auto section = [&](std::size_t at, std::string_view name) {
    std::istringstream kw(lines[at]);
    std::string w, more;
    if (!(kw >> w) || w != name || (kw >> more))
      throw Error(ErrorCode::kParse, "expected '" + std::string(name) + "'");
    Table t;
    for (std::size_t i = 0; i < order; ++i) {
      auto row = detail::parse_ints(lines[at + 1 + i], std::string(name));
      if (row.size() != order) throw Error(ErrorCode::kShape, std::string(name) + " row length");
      t.push_back(std::move(row));
    }
    return t;
  };
  RingTables out;
  out.add = section(1, "add");
  out.mul = section(2 + order, "mul");
  return out;
}

inline ValidationResult parse_ring(std::string_view text) {
  const auto t = parse_ring_tables(text);
  return validate_ring(t.add, t.mul);
}

/// Parses and validates; throws kInvalidRing naming the first violation.
inline FiniteRing parse_valid_ring(std::string_view text) {
  const auto t = parse_ring_tables(text);
  return make_ring(t.add, t.mul);
}

inline std::string format_ring(const FiniteRing& r) {
  const std::size_t n = r.order();
  std::string s = "ring " + std::to_string(n) + "\n";
  auto table = [&](std::string_view name, std::span<const Elem> t) {
    s += name;
    s += '\n';
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (b) s += ' ';
        s += std::to_string(t[a * n + b]);
      }
      s += '\n';
    }
  };
  table("add", r.add_table());
  table("mul", r.mul_table());
  return s;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kParse, "cannot write " + path);
  out << content;
}

inline std::string format_subset(const Subset& s) {
  return "subset " + std::to_string(s.size()) + ":" + detail::join(s.elements());
}

inline Subset parse_subset(std::string_view text, const FiniteRing& parent) {
  auto [k, values] = detail::parse_counted(text, "subset");
  std::vector<Elem> elems;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0 || static_cast<std::size_t>(values[i]) >= parent.order())
      throw Error(ErrorCode::kShape, "subset member out of range");
    if (i > 0 && values[i] <= values[i - 1])
      throw Error(ErrorCode::kParse, "subset members must be strictly ascending");
    elems.push_back(static_cast<Elem>(values[i]));
  }
  (void)k;
  return Subset::of(parent, elems);
}

inline std::string format_hom(const RingHom& h) {
  return "hom " + std::to_string(h.map.size()) + ":" + detail::join(h.map);
}

/// Raw image list; use check_hom to turn it into a RingHom.
inline std::vector<Elem> parse_hom(std::string_view text) {
  auto [k, values] = detail::parse_counted(text, "hom");
  std::vector<Elem> m;
  for (int v : values) {
    if (v < 0 || static_cast<std::size_t>(v) >= kMaxOrder)
      throw Error(ErrorCode::kShape, "hom image out of range");
    m.push_back(static_cast<Elem>(v));
  }
  (void)k;
  return m;
}

}  // namespace fring
