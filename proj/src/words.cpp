#include "qv/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace qv {

namespace {
// 0 -> 0, padding -> 1, 1 -> 2; comparing these ranks realizes the 1/2-padding rule.
int rank_at(std::string_view w, size_t i) {
  if (i >= w.size()) return 1;
  return w[i] == '0' ? 0 : 2;
}
}  // namespace

Ordering lex_compare_words(std::string_view x, std::string_view y) {
  size_t n = std::max(x.size(), y.size());
  for (size_t i = 0; i < n; ++i) {
    int a = rank_at(x, i), b = rank_at(y, i);
    if (a != b) return a < b ? Ordering::LT : Ordering::GT;
  }
  return Ordering::EQ;
}

Ordering lex_compare(const Vertex& x, const Vertex& y) {
  if (x.is_zeta && y.is_zeta) return Ordering::EQ;
  if (x.is_zeta) return Ordering::GT;
  if (y.is_zeta) return Ordering::LT;
  return lex_compare_words(x.bits, y.bits);
}

bool cyclic_order(const Vertex& x, const Vertex& y, const Vertex& z) {
  auto nondecreasing = [](const Vertex& a, const Vertex& b, const Vertex& c) {
    return lex_compare(a, b) != Ordering::GT && lex_compare(b, c) != Ordering::GT;
  };
  return nondecreasing(x, y, z) || nondecreasing(y, z, x) || nondecreasing(z, x, y);
}

std::string bar_word(std::string_view w) {
  std::string out(w);
  for (char& c : out) c = (c == '0') ? '1' : '0';
  return out;
}

Vertex bar(const Vertex& x) {
  if (x.is_zeta) return x;
  return Vertex::word(bar_word(x.bits));
}

bool is_prefix(std::string_view p, std::string_view x) {
  return x.size() >= p.size() && x.substr(0, p.size()) == p;
}

std::optional<std::string> prefix_split(std::string_view x, std::string_view p) {
  if (!is_prefix(p, x)) return std::nullopt;
  return std::string(x.substr(p.size()));
}

std::string vertex_token(const Vertex& x) {
  if (x.is_zeta) return "z";
  if (x.bits.empty()) return "e";
  return x.bits;
}

Vertex parse_vertex(std::string_view token) {
  if (token == "z") return Vertex::zeta();
  if (token == "e") return Vertex::epsilon();
  if (token.empty()) throw std::invalid_argument("bad vertex token: empty");
  for (char c : token)
    if (c != '0' && c != '1')
      throw std::invalid_argument("bad vertex token: " + std::string(token));
  return Vertex::word(std::string(token));
}

}  // namespace qv
