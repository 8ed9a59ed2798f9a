#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qv/words.hpp"

namespace qv {

// A finite rooted full binary subtree, stored as its lex-sorted complete leaf
// antichain.  The trivial tree is {e}.
class Tree {
 public:
  Tree() : leaves_{""} {}
  explicit Tree(std::vector<std::string> leaves);  // validates the antichain

  const std::vector<std::string>& leaves() const { return leaves_; }
  size_t leaf_count() const { return leaves_.size(); }
  bool is_trivial() const { return leaves_.size() == 1; }

  bool is_leaf(std::string_view w) const;
  int leaf_index(std::string_view w) const;  // -1 if not a leaf
  // The unique leaf that is a prefix of w (or equals w), if w is not internal.
  std::optional<std::string> leaf_at_or_above(std::string_view w) const;
  // True iff w is a strict prefix of some leaf.
  bool is_node(std::string_view w) const { return !leaf_at_or_above(w).has_value(); }
  int max_leaf_depth() const;

  bool operator==(const Tree& o) const { return leaves_ == o.leaves_; }

 private:
  std::vector<std::string> leaves_;
};

// All internal nodes (strict prefixes of leaves), lex-sorted.
std::vector<std::string> nodes(const Tree& t);

// The unique lex-order-preserving bijection nodes(t) u {zeta} -> leaves(t).
// b(x) is the lex-greatest leaf below x0 (i.e. x01^k), and b(zeta) = 1^k; both
// follow from the interleaving of nodes and leaves in lex order.
std::string b_map(const Tree& t, const Vertex& x);         // throws "not a node"
Vertex b_map_inverse(const Tree& t, std::string_view leaf);  // throws "not a leaf"

Tree add_caret(const Tree& t, std::string_view leaf);  // throws "not a leaf"
Tree common_expansion(const Tree& t1, const Tree& t2);

// Word length of b_map(t, x); written l_x(t) below.
int leaf_depth(const Tree& t, const Vertex& x);  // throws "not a node"

// Number of nodes strictly between lo and hi in lex order; absent endpoints
// mean -inf / +inf.
int gap_count(const Tree& t, const std::optional<std::string>& lo,
              const std::optional<std::string>& hi);

// T_1 = {0,1}; T_n adjoins carets to the first and second leaves of T_{n-1}.
Tree build_Tn(int n);

// Smallest tree in which every given word is an internal node.
Tree minimal_tree_with_nodes(const std::vector<std::string>& words);

// Space-separated lex-sorted leaf list; rejected if not canonical.
std::string tree_token(const Tree& t);
Tree parse_tree(std::string_view text);

}  // namespace qv
