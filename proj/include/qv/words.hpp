#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace qv {

// A vertex of Z = {0,1}* u {zeta}: either a finite binary word (empty = epsilon)
// or the isolated vertex zeta.
struct Vertex {
  bool is_zeta = false;
  std::string bits;  // characters '0'/'1'; meaningless when is_zeta

  static Vertex zeta() { return {true, {}}; }
  static Vertex epsilon() { return {false, {}}; }
  static Vertex word(std::string b) { return {false, std::move(b)}; }

  bool is_word() const { return !is_zeta; }
  bool operator==(const Vertex& o) const {
    return is_zeta == o.is_zeta && (is_zeta || bits == o.bits);
  }
};

enum class Ordering { LT, EQ, GT };

// Total lex order on Z.  Words are compared as if padded by an infinite tail of
// the symbol 1/2, with 0 < 1/2 < 1; hence w0 < w < w1.  zeta is above every word.
Ordering lex_compare(const Vertex& x, const Vertex& y);
Ordering lex_compare_words(std::string_view x, std::string_view y);

inline bool lex_less(const Vertex& x, const Vertex& y) {
  return lex_compare(x, y) == Ordering::LT;
}
inline bool operator<(const Vertex& x, const Vertex& y) { return lex_less(x, y); }

// True iff some rotation of (x, y, z) is lex-nondecreasing.
bool cyclic_order(const Vertex& x, const Vertex& y, const Vertex& z);

// Swap 0s and 1s; zeta is fixed (so the nu symmetry extends to all of Z).
std::string bar_word(std::string_view w);
Vertex bar(const Vertex& x);

// The suffix s with x = p.s, if p is a prefix of x.
std::optional<std::string> prefix_split(std::string_view x, std::string_view p);
bool is_prefix(std::string_view p, std::string_view x);

// Textual tokens: "e" for epsilon, "z" for zeta, raw digits otherwise.
std::string vertex_token(const Vertex& x);
Vertex parse_vertex(std::string_view token);  // throws std::invalid_argument

}  // namespace qv
