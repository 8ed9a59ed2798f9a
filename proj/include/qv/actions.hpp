#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qv/quasi.hpp"
#include "qv/thompson.hpp"
#include "qv/words.hpp"

namespace qv {

// Ordered vertex tuples, the inputs of the transitivity witnesses:
//   Sigma  - words only, strictly lex-increasing
//   Lambda - pairwise distinct, listed in cyclic lex order
//   Delta  - pairwise distinct, any order
enum class TupleFlavor { Sigma, Lambda, Delta };

class VertexTuple {
 public:
  // Validates the flavor invariant; tuples are nonempty.
  VertexTuple(TupleFlavor flavor, std::vector<Vertex> entries);  // throws "malformed tuple"

  TupleFlavor flavor() const { return flavor_; }
  const std::vector<Vertex>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }

 private:
  TupleFlavor flavor_;
  std::vector<Vertex> entries_;
};

// Flavor prefix plus comma-separated vertex tokens: "S:0,e"  "L:e,z"  "D:z,e".
std::string tuple_token(const VertexTuple& t);
VertexTuple parse_tuple(std::string_view text);  // throws "malformed tuple"

// The reference tuple (0^{n-1}, ..., 0, e) that every witness moves onto its
// targets.
std::vector<Vertex> base_tuple(size_t n);

// Witness elements: f in F (resp. t in T, v in V) with
// apply(iota(f), base_i) = target_i for all i.
VElement sigma_witness(const VertexTuple& targets);
VElement lambda_witness(const VertexTuple& targets);
VElement delta_witness(const VertexTuple& targets);

// Generator words for the sigma-commuting stabilizer subgroups used by the
// finite presentations: QF fixes (0, e); tQT and tQV fix (e, z).
std::vector<std::string> stabilizer_generators(Group g);

// lambda_{n,i}: T_n with a caret on its 2i-th leaf, paired against T_n with a
// caret on its (2i-1)-th leaf (1-indexed).  lambda_{2,1} and lambda_{2,2} are
// the conjugating elements lambda and mu.
VElement lambda_ni(int n, int i);  // throws "out of range"

// Membership in L_n: the copy of V fixing the full subtrees rooted at the
// 2i-th leaves of T_n, 1 <= i <= n.
bool in_Ln(const VElement& v, int n);  // pre n >= 2; throws "out of range"

// The leaf-depth character chi~_x(v) = l_x(L) - l_x(R), an additive integer
// character of the stabilizer of x in V.
int tilde_chi(const Vertex& x, const VElement& v);  // throws "x not stabilized"

// (chi0, chi1) on F: chi1 = chi~_zeta, chi0 = chi1 of the 0<->1 mirror.
std::pair<int, int> chi(const VElement& f);  // throws "not in F"

// Depth normalization into L_2: w = lambda^c mu^d . v . lambda^-a mu^-b lies
// in L_2, with the exponents read off a padded representative.
struct ConjIntoL2 {
  int a = 0, b = 0, c = 0, d = 0;
  VElement w;
};
ConjIntoL2 conj_into_L2(const VElement& v);  // throws "does not stabilize (ε, ζ)"

// The same normalization for arbitrary n >= 2, conjugating by the commuting
// family lambda_{n,i}; v must fix (0^{n-2}, ..., 0, e, z) component-wise.
struct ConjIntoLn {
  std::vector<int> a, b;
  VElement w;
};
ConjIntoLn conj_into_Ln(int n, const VElement& v);  // throws "does not stabilize the base tuple"

// f in F fixing e, 0 and 1 with chi(f) = (0, a); carets attached iteratively
// to the largest (left tree) and second-largest (right tree) leaves.
VElement bnsr_witness_fixing(int a);

// f in F with chi(f) = (0, 0) and iota(f): 0 -> x1, e -> x2; a sigma witness
// with its chi values cancelled by bnsr corrections on both colours.
VElement kernel_transitivity_witness(const Vertex& x1, const Vertex& x2);
// throws "tuple not strictly increasing"

}  // namespace qv
