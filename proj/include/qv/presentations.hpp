#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qv/actions.hpp"
#include "qv/quasi.hpp"
#include "qv/words.hpp"

namespace qv {

// A word over the generator alphabet.  Lowercase letters are the generators
// (s, a, b, c, d for sigma, alpha, beta, gamma, delta), uppercase letters
// their inverses.  Words act on the left and evaluate right-to-left, matching
// the global convention.
struct GroupWord {
  std::string letters;

  bool operator==(const GroupWord& o) const { return letters == o.letters; }
};

// Strips whitespace; accepts exactly [sabcdSABCD]*.
GroupWord parse_group_word(std::string_view text);  // throws "invalid symbol"

// Symbol alphabets per group name (F, T, V, QF, QT, QV, tQT, tQV); lowercase
// generator letters only.
std::string group_alphabet(const std::string& group_name);  // throws "invalid symbol"

// Free-word evaluation into the ambient group of quasi-automorphisms:
// s -> the transposition of 0 and the root, a..d -> iota(A)..iota(D).
QElement evaluate(const GroupWord& w, const std::string& group_name);
// throws "invalid symbol" when a letter is outside the group's alphabet

// Word problem: does w represent the identity?
bool is_identity(const GroupWord& w, const std::string& group_name);

struct Presentation {
  std::string name;
  std::string generators;                 // e.g. "sab"
  std::vector<GroupWord> relators;        // full list, commutators with X included
  std::vector<GroupWord> stabilizer_set;  // the X words themselves
};

// name in {F, T, V, QF, tQT, tQV}.
Presentation builtin_presentation(const std::string& name);  // throws "invalid symbol"

struct RelatorCheck {
  std::string label;      // relator word, or a family-instance description
  bool pass = false;
  std::string canonical;  // canonical form of the value when it fails
  bool binding = true;    // companion diagnostics are reported non-binding
};

struct CheckReport {
  std::string name;
  std::vector<RelatorCheck> entries;
  bool all_pass = true;  // over binding entries only
};

// Evaluates every relator; conjugation-exponent relators are additionally
// reported in literal and transposition-substituted form as non-binding
// diagnostics recording which realization validates.
CheckReport check_relators(const Presentation& p);

// Truncated verification of the infinite symmetric-group presentations:
// Star instantiates the four relator families (involution, disjoint
// commutation, braid, triple product) over increasing tuples of words; Z
// instantiates them over ordered distinct tuples from words plus the root,
// with the duplicated-generator symmetry family added.  All instances are
// evaluated in finite-permutation arithmetic.
enum class SymFlavor { Star, Z };
CheckReport check_sym_presentation(const std::vector<Vertex>& vertices, SymFlavor flavor);
// throws "duplicate vertices"; Star flavor rejects the point at infinity
// ("out of range")

// BFS closure of start under the generator actions and their inverses,
// restricted to tuples whose word entries all have length <= depth_bound.
// Results are lex-sorted.
std::vector<VertexTuple> orbit_enumerate(const std::vector<GroupWord>& generators,
                                         const VertexTuple& start, int depth_bound);
// throws "out of range" for negative bounds

}  // namespace qv
