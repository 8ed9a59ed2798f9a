#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qv/trees.hpp"

namespace qv {

// A tree-pair diagram (L, R, f); perm[i] is the index into R's sorted leaf list
// of the image of L's i-th sorted leaf.
struct TreePairDiagram {
  Tree left, right;
  std::vector<int> perm;

  TreePairDiagram() : perm{0} {}
  TreePairDiagram(Tree l, Tree r, std::vector<int> p);  // validates the bijection

  bool operator==(const TreePairDiagram& o) const {
    return left == o.left && right == o.right && perm == o.perm;
  }
};

// An element of V: a tree-pair diagram kept in reduced form.  F and T are the
// order-preserving and cyclic-order-preserving subgroups.
class VElement {
 public:
  VElement() = default;
  explicit VElement(TreePairDiagram d);  // reduces

  const TreePairDiagram& diagram() const { return d_; }
  const Tree& left() const { return d_.left; }
  const Tree& right() const { return d_.right; }
  const std::vector<int>& perm() const { return d_.perm; }

  bool operator==(const VElement& o) const { return d_ == o.d_; }

 private:
  TreePairDiagram d_;
};

VElement reduce(TreePairDiagram d);

// multiply(v, w) = v.w, the function v o w under the left action convention
// (w applied first); group words evaluate right to left.
VElement multiply(const VElement& v, const VElement& w);
VElement invert(const VElement& v);
VElement power(const VElement& v, int n);
bool is_velement_identity(const VElement& v);

bool is_in_F(const VElement& v);  // leaf bijection preserves lex order
bool is_in_T(const VElement& v);  // preserves cyclic order (perm is a rotation)

VElement generator(char name);  // 'A', 'B', 'C', 'D'

// Derived generator families: beta_n = a^-(n-1) b a^(n-1),
// gamma_n = a^-(n-1) c b^(n-1), delta_1 = gamma_2^-1 d gamma_2 and
// delta_n = a^-(n-1) delta_1 a^(n-1) (n >= 0; n = 0 gives a delta_1 a^-1).
enum class DerivedFamily { beta, gamma, delta };
VElement derived_generator(DerivedFamily fam, int n);

// Representative surgery: expand a diagram so its left (resp. right) tree
// becomes E, which must refine it.  Same group element, bigger diagram.
TreePairDiagram expand_to_left(const TreePairDiagram& d, const Tree& E);
TreePairDiagram expand_to_right(const TreePairDiagram& d, const Tree& E);

// One reduction step: the left-leaf indices i where (i, i+1) is a collapsible
// matched sibling pair, and the collapse itself.  Exposed for the confluence
// oracle.
std::vector<int> collapsible_pairs(const TreePairDiagram& d);
TreePairDiagram collapse_at(const TreePairDiagram& d, int left_index);

// The total action of the canonical lift of v on Z: nodes of the left tree and
// zeta go through the two b bijections, everything else by leaf-prefix
// substitution.  Stable under choice of representative diagram.
Vertex apply_vertex(const VElement& v, const Vertex& x);

// The automorphism of V that mirrors both trees and the leaf bijection (the
// 0<->1 relabelling).  Its canonical lift matches bar-conjugation on leaf
// cones; at nodes and zeta the two can differ by a finite permutation.
VElement bar_conjugate(const VElement& v);

std::string velement_token(const VElement& v);
VElement parse_velement(std::string_view text);

}  // namespace qv
