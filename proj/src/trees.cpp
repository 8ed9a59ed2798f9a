#include "qv/trees.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qv {

namespace {

bool word_lex_less(const std::string& a, const std::string& b) {
  return lex_compare_words(a, b) == Ordering::LT;
}

// leaves[lo, hi) must be exactly the leaf set of a full binary tree rooted at
// prefix, given in lex order.
bool check_subtree(const std::vector<std::string>& leaves, size_t lo, size_t hi,
                   std::string& prefix) {
  if (hi - lo == 1) return leaves[lo] == prefix;
  size_t split = lo;
  while (split < hi) {
    const std::string& w = leaves[split];
    if (w.size() <= prefix.size()) return false;
    if (w.compare(0, prefix.size(), prefix) != 0) return false;
    if (w[prefix.size()] == '1') break;
    ++split;
  }
  if (split == lo || split == hi) return false;  // a child subtree is empty
  bool ok;
  prefix.push_back('0');
  ok = check_subtree(leaves, lo, split, prefix);
  prefix.back() = '1';
  ok = ok && check_subtree(leaves, split, hi, prefix);
  prefix.pop_back();
  return ok;
}

}  // namespace

Tree::Tree(std::vector<std::string> leaves) : leaves_(std::move(leaves)) {
  if (leaves_.empty()) throw std::invalid_argument("empty leaf set");
  if (!std::is_sorted(leaves_.begin(), leaves_.end(), word_lex_less))
    std::sort(leaves_.begin(), leaves_.end(), word_lex_less);
  std::string prefix;
  if (!check_subtree(leaves_, 0, leaves_.size(), prefix))
    throw std::invalid_argument("not a complete antichain");
}

int Tree::leaf_index(std::string_view w) const {
  std::string key(w);
  auto it = std::lower_bound(leaves_.begin(), leaves_.end(), key, word_lex_less);
  if (it != leaves_.end() && *it == key) return int(it - leaves_.begin());
  return -1;
}

bool Tree::is_leaf(std::string_view w) const { return leaf_index(w) >= 0; }

std::optional<std::string> Tree::leaf_at_or_above(std::string_view w) const {
  for (size_t i = 0; i <= w.size(); ++i) {
    std::string_view p = w.substr(0, i);
    if (is_leaf(p)) return std::string(p);
  }
  return std::nullopt;
}

int Tree::max_leaf_depth() const {
  size_t d = 0;
  for (const auto& l : leaves_) d = std::max(d, l.size());
  return int(d);
}

std::vector<std::string> nodes(const Tree& t) {
  std::set<std::string> seen;
  for (const auto& leaf : t.leaves())
    for (size_t i = 0; i < leaf.size(); ++i) seen.insert(leaf.substr(0, i));
  std::vector<std::string> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), word_lex_less);
  return out;
}

std::string b_map(const Tree& t, const Vertex& x) {
  std::string w;
  if (x.is_word()) {
    if (!t.is_node(x.bits)) throw std::invalid_argument("not a node");
    w = x.bits + "0";
  }
  // b(x) = x01^k, b(zeta) = 1^k: pad with 1s until a leaf is reached.
  while (!t.is_leaf(w)) w.push_back('1');
  return w;
}

Vertex b_map_inverse(const Tree& t, std::string_view leaf) {
  if (!t.is_leaf(leaf)) throw std::invalid_argument("not a leaf");
  size_t i = leaf.size();
  while (i > 0 && leaf[i - 1] == '1') --i;
  if (i == 0) return Vertex::zeta();        // the all-ones leaf
  return Vertex::word(std::string(leaf.substr(0, i - 1)));  // strip 0 1^k
}

Tree add_caret(const Tree& t, std::string_view leaf) {
  int idx = t.leaf_index(leaf);
  if (idx < 0) throw std::invalid_argument("not a leaf");
  std::vector<std::string> out = t.leaves();
  std::string w(leaf);
  out[idx] = w + "0";
  out.insert(out.begin() + idx + 1, w + "1");
  return Tree(std::move(out));
}

namespace {
void expand_common(const Tree& a, const Tree& b, std::string& w,
                   std::vector<std::string>& out) {
  if (!a.is_node(w) && !b.is_node(w)) {
    out.push_back(w);
    return;
  }
  w.push_back('0');
  expand_common(a, b, w, out);
  w.back() = '1';
  expand_common(a, b, w, out);
  w.pop_back();
}
}  // namespace

Tree common_expansion(const Tree& t1, const Tree& t2) {
  std::vector<std::string> out;
  std::string w;
  expand_common(t1, t2, w, out);
  return Tree(std::move(out));
}

int leaf_depth(const Tree& t, const Vertex& x) { return int(b_map(t, x).size()); }

int gap_count(const Tree& t, const std::optional<std::string>& lo,
              const std::optional<std::string>& hi) {
  std::vector<std::string> ns = nodes(t);
  auto require_node = [&](const std::string& w) {
    if (!t.is_node(w)) throw std::invalid_argument("not a node");
  };
  if (lo) require_node(*lo);
  if (hi) require_node(*hi);
  int count = 0;
  for (const auto& n : ns) {
    if (lo && lex_compare_words(n, *lo) != Ordering::GT) continue;
    if (hi && lex_compare_words(n, *hi) != Ordering::LT) continue;
    ++count;
  }
  return count;
}

Tree build_Tn(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  Tree t(std::vector<std::string>{"0", "1"});
  for (int k = 2; k <= n; ++k) {
    std::string first = t.leaves()[0], second = t.leaves()[1];
    t = add_caret(add_caret(t, first), second);
  }
  return t;
}

Tree minimal_tree_with_nodes(const std::vector<std::string>& words) {
  Tree t;
  for (const auto& w : words)
    while (auto leaf = t.leaf_at_or_above(w)) t = add_caret(t, *leaf);
  return t;
}

std::string tree_token(const Tree& t) {
  std::string out;
  for (size_t i = 0; i < t.leaves().size(); ++i) {
    if (i) out += ' ';
    out += t.leaves()[i].empty() ? "e" : t.leaves()[i];
  }
  return out;
}

Tree parse_tree(std::string_view text) {
  std::vector<std::string> leaves;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t next = text.find(' ', pos);
    if (next == std::string_view::npos) next = text.size();
    std::string_view tok = text.substr(pos, next - pos);
    if (tok.empty()) throw std::invalid_argument("bad tree token");
    Vertex v = parse_vertex(tok);
    if (v.is_zeta) throw std::invalid_argument("zeta is not a leaf");
    leaves.push_back(v.bits);
    pos = next + 1;
  }
  if (leaves.empty()) throw std::invalid_argument("bad tree token");
  if (!std::is_sorted(leaves.begin(), leaves.end(), word_lex_less))
    throw std::invalid_argument("leaves not in lex order");
  return Tree(std::move(leaves));
}

}  // namespace qv
