#include "qv/thompson.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qv {

TreePairDiagram::TreePairDiagram(Tree l, Tree r, std::vector<int> p)
    : left(std::move(l)), right(std::move(r)), perm(std::move(p)) {
  if (left.leaf_count() != right.leaf_count() || perm.size() != left.leaf_count())
    throw std::invalid_argument("leaf counts disagree");
  std::vector<bool> hit(perm.size(), false);
  for (int j : perm) {
    if (j < 0 || size_t(j) >= perm.size() || hit[j])
      throw std::invalid_argument("perm is not a bijection");
    hit[j] = true;
  }
}

namespace {

bool siblings(const std::string& a, const std::string& b) {
  return !a.empty() && a.size() == b.size() && a.back() == '0' && b.back() == '1' &&
         a.compare(0, a.size() - 1, b, 0, b.size() - 1) == 0;
}

}  // namespace

std::vector<int> collapsible_pairs(const TreePairDiagram& d) {
  std::vector<int> out;
  const auto& L = d.left.leaves();
  const auto& R = d.right.leaves();
  for (size_t i = 0; i + 1 < L.size(); ++i) {
    if (!siblings(L[i], L[i + 1])) continue;
    if (d.perm[i + 1] != d.perm[i] + 1) continue;
    if (!siblings(R[d.perm[i]], R[d.perm[i] + 1])) continue;
    out.push_back(int(i));
  }
  return out;
}

TreePairDiagram collapse_at(const TreePairDiagram& d, int i) {
  const auto& L = d.left.leaves();
  const auto& R = d.right.leaves();
  int j = d.perm[i];
  if (!(i >= 0 && size_t(i) + 1 < L.size() && siblings(L[i], L[i + 1]) &&
        d.perm[i + 1] == j + 1 && siblings(R[j], R[j + 1])))
    throw std::invalid_argument("not a collapsible pair");
  std::vector<std::string> newL(L), newR(R);
  newL[i] = L[i].substr(0, L[i].size() - 1);
  newL.erase(newL.begin() + i + 1);
  newR[j] = R[j].substr(0, R[j].size() - 1);
  newR.erase(newR.begin() + j + 1);
  std::vector<int> newPerm;
  newPerm.reserve(newL.size());
  for (size_t k = 0; k < d.perm.size(); ++k) {
    if (k == size_t(i) + 1) continue;
    int v = d.perm[k];
    newPerm.push_back(v > j ? v - 1 : v);
  }
  return TreePairDiagram(Tree(std::move(newL)), Tree(std::move(newR)), std::move(newPerm));
}

VElement::VElement(TreePairDiagram d) {
  for (;;) {
    auto pairs = collapsible_pairs(d);
    if (pairs.empty()) break;
    d = collapse_at(d, pairs.front());
  }
  d_ = std::move(d);
}

VElement reduce(TreePairDiagram d) { return VElement(std::move(d)); }

TreePairDiagram expand_to_left(const TreePairDiagram& d, const Tree& E) {
  std::vector<std::pair<std::string, std::string>> pairs;  // (new left, new right)
  for (const auto& e : E.leaves()) {
    auto l = d.left.leaf_at_or_above(e);
    if (!l) throw std::invalid_argument("expansion does not refine the left tree");
    std::string suffix = e.substr(l->size());
    pairs.emplace_back(e, d.right.leaves()[d.perm[d.left.leaf_index(*l)]] + suffix);
  }
  std::vector<std::string> rights;
  rights.reserve(pairs.size());
  for (const auto& p : pairs) rights.push_back(p.second);
  std::sort(rights.begin(), rights.end(), [](const std::string& a, const std::string& b) {
    return lex_compare_words(a, b) == Ordering::LT;
  });
  Tree R(rights);
  std::vector<int> perm;
  perm.reserve(pairs.size());
  for (const auto& p : pairs) perm.push_back(R.leaf_index(p.second));
  return TreePairDiagram(E, std::move(R), std::move(perm));
}

TreePairDiagram expand_to_right(const TreePairDiagram& d, const Tree& E) {
  TreePairDiagram inv(d.right, d.left, [&] {
    std::vector<int> ip(d.perm.size());
    for (size_t i = 0; i < d.perm.size(); ++i) ip[d.perm[i]] = int(i);
    return ip;
  }());
  TreePairDiagram x = expand_to_left(inv, E);
  std::vector<int> ip(x.perm.size());
  for (size_t i = 0; i < x.perm.size(); ++i) ip[x.perm[i]] = int(i);
  return TreePairDiagram(x.right, x.left, std::move(ip));
}

VElement multiply(const VElement& v, const VElement& w) {
  Tree E = common_expansion(w.right(), v.left());
  TreePairDiagram we = expand_to_right(w.diagram(), E);
  TreePairDiagram ve = expand_to_left(v.diagram(), E);
  std::vector<int> composed(we.perm.size());
  for (size_t i = 0; i < we.perm.size(); ++i) composed[i] = ve.perm[we.perm[i]];
  return VElement(TreePairDiagram(we.left, ve.right, std::move(composed)));
}

VElement invert(const VElement& v) {
  std::vector<int> ip(v.perm().size());
  for (size_t i = 0; i < v.perm().size(); ++i) ip[v.perm()[i]] = int(i);
  return VElement(TreePairDiagram(v.right(), v.left(), std::move(ip)));
}

VElement power(const VElement& v, int n) {
  VElement base = n < 0 ? invert(v) : v;
  int k = n < 0 ? -n : n;
  VElement acc;
  for (int i = 0; i < k; ++i) acc = multiply(acc, base);
  return acc;
}

bool is_velement_identity(const VElement& v) {
  return v.left().is_trivial() && v.right().is_trivial();
}

bool is_in_F(const VElement& v) {
  for (size_t i = 0; i < v.perm().size(); ++i)
    if (v.perm()[i] != int(i)) return false;
  return true;
}

bool is_in_T(const VElement& v) {
  size_t m = v.perm().size();
  int k = v.perm()[0];
  for (size_t i = 0; i < m; ++i)
    if (v.perm()[i] != int((i + k) % m)) return false;
  return true;
}

VElement generator(char name) {
  auto id3 = std::vector<int>{0, 1, 2};
  switch (name) {
    case 'A':
      return VElement(TreePairDiagram(Tree({"0", "10", "11"}), Tree({"00", "01", "1"}), id3));
    case 'B':
      return VElement(TreePairDiagram(Tree({"0", "10", "110", "111"}),
                                      Tree({"0", "100", "101", "11"}), {0, 1, 2, 3}));
    case 'C':
      return VElement(
          TreePairDiagram(Tree({"0", "10", "11"}), Tree({"0", "10", "11"}), {2, 0, 1}));
    case 'D':
      return VElement(
          TreePairDiagram(Tree({"0", "10", "11"}), Tree({"0", "10", "11"}), {1, 0, 2}));
    default:
      throw std::invalid_argument("unknown generator");
  }
}

VElement derived_generator(DerivedFamily fam, int n) {
  const VElement A = generator('A'), B = generator('B');
  auto conj_by_a_power = [&](const VElement& x, int k) {
    // a^-k x a^k as a function under the right-to-left convention
    return multiply(multiply(power(A, -k), x), power(A, k));
  };
  switch (fam) {
    case DerivedFamily::beta:
      if (n < 1) throw std::invalid_argument("beta_n needs n >= 1");
      return conj_by_a_power(B, n - 1);
    case DerivedFamily::gamma: {
      if (n < 1) throw std::invalid_argument("gamma_n needs n >= 1");
      return multiply(multiply(power(A, -(n - 1)), generator('C')), power(B, n - 1));
    }
    case DerivedFamily::delta: {
      if (n < 0) throw std::invalid_argument("delta_n needs n >= 0");
      VElement g2 = derived_generator(DerivedFamily::gamma, 2);
      VElement d1 = multiply(multiply(invert(g2), generator('D')), g2);
      if (n == 1) return d1;
      return conj_by_a_power(d1, n - 1);
    }
  }
  throw std::invalid_argument("unknown family");
}

Vertex apply_vertex(const VElement& v, const Vertex& x) {
  const Tree& L = v.left();
  const Tree& R = v.right();
  if (x.is_word()) {
    if (auto l = L.leaf_at_or_above(x.bits)) {
      const std::string& image = R.leaves()[v.perm()[L.leaf_index(*l)]];
      return Vertex::word(image + x.bits.substr(l->size()));
    }
  }
  std::string leaf = b_map(L, x);
  return b_map_inverse(R, R.leaves()[v.perm()[L.leaf_index(leaf)]]);
}

VElement bar_conjugate(const VElement& v) {
  size_t m = v.left().leaf_count();
  std::vector<std::string> l(m), r(m);
  std::vector<int> perm(m);
  for (size_t i = 0; i < m; ++i) {
    l[m - 1 - i] = bar_word(v.left().leaves()[i]);
    r[m - 1 - i] = bar_word(v.right().leaves()[i]);
  }
  for (size_t i = 0; i < m; ++i) perm[m - 1 - i] = int(m) - 1 - v.perm()[i];
  return VElement(TreePairDiagram(Tree(std::move(l)), Tree(std::move(r)), std::move(perm)));
}

std::string velement_token(const VElement& v) {
  std::string out = "L=" + tree_token(v.left()) + ";R=" + tree_token(v.right()) + ";f=";
  for (size_t i = 0; i < v.perm().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(i) + ":" + std::to_string(v.perm()[i]);
  }
  return out;
}

VElement parse_velement(std::string_view text) {
  auto expect = [&](std::string_view prefix) {
    if (!is_prefix(prefix, text)) throw std::invalid_argument("bad element syntax");
    text.remove_prefix(prefix.size());
  };
  expect("L=");
  size_t semi = text.find(';');
  if (semi == std::string_view::npos) throw std::invalid_argument("bad element syntax");
  Tree L = parse_tree(text.substr(0, semi));
  text.remove_prefix(semi + 1);
  expect("R=");
  semi = text.find(';');
  if (semi == std::string_view::npos) throw std::invalid_argument("bad element syntax");
  Tree R = parse_tree(text.substr(0, semi));
  text.remove_prefix(semi + 1);
  expect("f=");
  std::vector<int> perm(L.leaf_count(), -1);
  size_t pos = 0;
  std::string body(text);
  while (pos < body.size()) {
    size_t comma = body.find(',', pos);
    if (comma == std::string::npos) comma = body.size();
    std::string item = body.substr(pos, comma - pos);
    size_t colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad element syntax");
    int i = std::stoi(item.substr(0, colon));
    int j = std::stoi(item.substr(colon + 1));
    if (i < 0 || size_t(i) >= perm.size() || perm[i] != -1)
      throw std::invalid_argument("bad leaf bijection");
    perm[i] = j;
    pos = comma + 1;
  }
  for (int j : perm)
    if (j == -1) throw std::invalid_argument("bad leaf bijection");
  return VElement(TreePairDiagram(std::move(L), std::move(R), std::move(perm)));
}

}  // namespace qv
