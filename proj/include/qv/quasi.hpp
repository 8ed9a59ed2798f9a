#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qv/thompson.hpp"

namespace qv {

struct VertexLess {
  bool operator()(const Vertex& a, const Vertex& b) const { return lex_less(a, b); }
};
using VertexMap = std::map<Vertex, Vertex, VertexLess>;

// A finite-support permutation of Z; only non-fixed points are stored.
class FinitePermutation {
 public:
  FinitePermutation() = default;
  static FinitePermutation transposition(const Vertex& x, const Vertex& y);
  static FinitePermutation from_moves(VertexMap moved);  // throws "not bijective"
  static FinitePermutation from_cycles(const std::vector<std::vector<Vertex>>& cycles);

  Vertex apply(const Vertex& x) const;
  const VertexMap& moved() const { return moved_; }
  bool is_identity() const { return moved_.empty(); }
  // Disjoint cycles, each rotated to start at its lex-least element, sorted by
  // those elements.
  std::vector<std::vector<Vertex>> cycles() const;

  bool operator==(const FinitePermutation& o) const { return moved_ == o.moved_; }

 private:
  VertexMap moved_;
};

FinitePermutation compose(const FinitePermutation& p, const FinitePermutation& q);  // p o q
FinitePermutation invert(const FinitePermutation& p);

enum class Parity { even, odd };
Parity parity(const FinitePermutation& p);

// sigma . iota(v): the canonical form of an element of tQV.  The decomposition
// is unique, so structural equality is group equality.
struct QElement {
  FinitePermutation sigma;
  VElement v;

  bool operator==(const QElement& o) const { return sigma == o.sigma && v == o.v; }
};

QElement iota(const VElement& v);
Vertex apply(const QElement& q, const Vertex& x);
QElement multiply(const QElement& q1, const QElement& q2);
QElement invert(const QElement& q);
VElement pi(const QElement& q);

// A finite exception table over an eventual prefix substitution.  Vertices
// outside the table follow the tree pair: leaf-prefix substitution below the
// left tree's leaves, the canonical lift on its nodes and zeta.
struct RawQuasiMap {
  VertexMap exceptions;
  TreePairDiagram prefix_rule;
};
QElement canonicalize(const RawQuasiMap& raw);  // throws "not bijective"

bool equals(const QElement& q1, const QElement& q2);
// Agreement on zeta and every word of length <= depth.
bool pointwise_agree(const QElement& q1, const QElement& q2, int depth);

// The automorphism induced by swapping the colours 0 and 1:
// apply(nu(q), x) = bar(apply(q, bar(x))).
QElement nu(const QElement& q);

enum class Group { QF, QT, QV, tQT, tQV, SymStar, AltStar, SymZ, AltZ };
bool membership(const QElement& q, Group g);
// Membership in the commutator subgroup of g; throws "not a member of G".
bool in_commutator(const QElement& q, Group g);

struct AbelianizationImage {
  std::vector<int> integers;  // (chi0, chi1) for QF; empty otherwise
  Parity parity;

  bool operator==(const AbelianizationImage& o) const = default;
};
AbelianizationImage abelianization_image(const QElement& q, Group g);

// tau -> a^-1 tau a on the subgroup of QF fixing every vertex outside the
// subtree under 1; throws "not in QF(1)".
QElement theta_shift(const QElement& q);

std::string qelement_token(const QElement& q);
QElement parse_qelement(std::string_view text);

}  // namespace qv
