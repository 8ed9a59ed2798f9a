#include "qv/actions.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "qv/trees.hpp"

namespace qv {

namespace {

bool strictly_increasing(const std::vector<Vertex>& xs) {
  for (size_t i = 0; i + 1 < xs.size(); ++i)
    if (!lex_less(xs[i], xs[i + 1])) return false;
  return true;
}

bool pairwise_distinct(const std::vector<Vertex>& xs) {
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = i + 1; j < xs.size(); ++j)
      if (xs[i] == xs[j]) return false;
  return true;
}

[[noreturn]] void malformed() { throw std::invalid_argument("malformed tuple"); }

std::vector<std::string> word_list(const std::vector<Vertex>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs)
    if (x.is_word()) out.push_back(x.bits);
  return out;
}

}  // namespace

VertexTuple::VertexTuple(TupleFlavor flavor, std::vector<Vertex> entries)
    : flavor_(flavor), entries_(std::move(entries)) {
  if (entries_.empty()) malformed();
  switch (flavor_) {
    case TupleFlavor::Sigma:
      for (const auto& x : entries_)
        if (!x.is_word()) malformed();
      if (!strictly_increasing(entries_)) malformed();
      break;
    case TupleFlavor::Lambda: {
      if (!pairwise_distinct(entries_)) malformed();
      // Cyclic lex order: rotating the lex-least entry to the front must give
      // a strictly increasing list.
      size_t lo = 0;
      for (size_t i = 1; i < entries_.size(); ++i)
        if (lex_less(entries_[i], entries_[lo])) lo = i;
      std::vector<Vertex> rot(entries_.begin() + lo, entries_.end());
      rot.insert(rot.end(), entries_.begin(), entries_.begin() + lo);
      if (!strictly_increasing(rot)) malformed();
      break;
    }
    case TupleFlavor::Delta:
      if (!pairwise_distinct(entries_)) malformed();
      break;
  }
}

std::string tuple_token(const VertexTuple& t) {
  std::string out;
  switch (t.flavor()) {
    case TupleFlavor::Sigma: out = "S:"; break;
    case TupleFlavor::Lambda: out = "L:"; break;
    case TupleFlavor::Delta: out = "D:"; break;
  }
  for (size_t i = 0; i < t.entries().size(); ++i) {
    if (i) out += ',';
    out += vertex_token(t.entries()[i]);
  }
  return out;
}

VertexTuple parse_tuple(std::string_view text) {
  if (text.size() < 2 || text[1] != ':') malformed();
  TupleFlavor flavor;
  switch (text[0]) {
    case 'S': flavor = TupleFlavor::Sigma; break;
    case 'L': flavor = TupleFlavor::Lambda; break;
    case 'D': flavor = TupleFlavor::Delta; break;
    default: malformed();
  }
  std::vector<Vertex> entries;
  std::string_view rest = text.substr(2);
  while (true) {
    size_t comma = rest.find(',');
    std::string_view tok = comma == std::string_view::npos ? rest : rest.substr(0, comma);
    try {
      entries.push_back(parse_vertex(tok));
    } catch (const std::invalid_argument&) {
      malformed();
    }
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return VertexTuple(flavor, std::move(entries));
}

std::vector<Vertex> base_tuple(size_t n) {
  std::vector<Vertex> out;
  for (size_t k = n; k-- > 0;) out.push_back(Vertex::word(std::string(k, '0')));
  return out;
}

namespace {

// First leaf of t strictly inside the open word interval (lo, hi).
std::optional<std::string> leaf_in_gap(const Tree& t, const std::optional<std::string>& lo,
                                       const std::optional<std::string>& hi) {
  for (const auto& leaf : t.leaves()) {
    if (lo && lex_compare_words(leaf, *lo) != Ordering::GT) continue;
    if (hi && lex_compare_words(leaf, *hi) != Ordering::LT) continue;
    return leaf;
  }
  return std::nullopt;
}

std::vector<int> identity_perm(size_t n) {
  std::vector<int> p(n);
  for (size_t i = 0; i < n; ++i) p[i] = int(i);
  return p;
}

}  // namespace

VElement sigma_witness(const VertexTuple& targets) {
  if (targets.flavor() != TupleFlavor::Sigma) malformed();
  const size_t n = targets.size();
  std::vector<std::string> tws = word_list(targets.entries());
  std::vector<std::string> bws = word_list(base_tuple(n));
  Tree right = minimal_tree_with_nodes(tws);
  Tree left = minimal_tree_with_nodes(bws);
  // Match every gap count of the base vine against the target tree; each caret
  // lands strictly inside the deficient gap, so the other gaps are untouched.
  for (size_t g = 0; g <= n; ++g) {
    std::optional<std::string> lo_t = g == 0 ? std::nullopt : std::optional(tws[g - 1]);
    std::optional<std::string> hi_t = g == n ? std::nullopt : std::optional(tws[g]);
    std::optional<std::string> lo_b = g == 0 ? std::nullopt : std::optional(bws[g - 1]);
    std::optional<std::string> hi_b = g == n ? std::nullopt : std::optional(bws[g]);
    const int want = gap_count(right, lo_t, hi_t);
    while (gap_count(left, lo_b, hi_b) < want)
      left = add_caret(left, *leaf_in_gap(left, lo_b, hi_b));
  }
  return VElement(TreePairDiagram(left, right, identity_perm(right.leaf_count())));
}

VElement lambda_witness(const VertexTuple& targets) {
  if (targets.flavor() != TupleFlavor::Lambda) malformed();
  const auto& xs = targets.entries();
  Tree tree = minimal_tree_with_nodes(word_list(xs));
  // The combined list of internal nodes and zeta, in lex order; the rotation
  // below acts on its indices.
  std::vector<Vertex> combined;
  for (const auto& w : nodes(tree)) combined.push_back(Vertex::word(w));
  combined.push_back(Vertex::zeta());
  const size_t m = tree.leaf_count();
  size_t p1 = 0;
  while (!(combined[p1] == xs[0])) ++p1;
  const size_t r = (m - p1) % m;
  std::vector<int> rot(m);
  for (size_t i = 0; i < m; ++i) rot[i] = int((i + r) % m);
  VElement t(TreePairDiagram(tree, tree, std::move(rot)));
  // If the last target now lands on zeta, shift the whole node order down by
  // one after a caret on the leftmost leaf: the new node slides in below every
  // old one, leaving all images words.
  if (apply_vertex(t, xs.back()).is_zeta) {
    Tree bigger = add_caret(tree, tree.leaves().front());
    const size_t mm = bigger.leaf_count();
    std::vector<int> down(mm);
    for (size_t i = 0; i < mm; ++i) down[i] = int((i + mm - 1) % mm);
    t = multiply(VElement(TreePairDiagram(bigger, bigger, std::move(down))), t);
  }
  std::vector<Vertex> images;
  for (const auto& x : xs) images.push_back(apply_vertex(t, x));
  VElement g = sigma_witness(VertexTuple(TupleFlavor::Sigma, std::move(images)));
  return multiply(invert(t), g);
}

VElement delta_witness(const VertexTuple& targets) {
  if (targets.flavor() != TupleFlavor::Delta) malformed();
  const auto& xs = targets.entries();
  const size_t n = xs.size();
  std::vector<Vertex> sorted = xs;
  std::sort(sorted.begin(), sorted.end(), lex_less);
  VElement t = lambda_witness(VertexTuple(TupleFlavor::Lambda, sorted));
  // Permute the base vine so that sorting commutes with the witness: base node
  // i goes to the slot holding the rank of target i.
  Tree vine = minimal_tree_with_nodes(word_list(base_tuple(n)));
  std::vector<int> perm(vine.leaf_count());
  for (size_t i = 0; i < n; ++i) {
    size_t rank = 0;
    while (!(sorted[rank] == xs[i])) ++rank;
    perm[i] = int(rank);
  }
  perm[n] = int(n);  // zeta slot
  return multiply(t, VElement(TreePairDiagram(vine, vine, std::move(perm))));
}

std::vector<std::string> stabilizer_generators(Group g) {
  switch (g) {
    case Group::QF:
      return {"b", "Aba", "aaaBAA", "aabbABaBAA", "abbABaBA", "abAbbABaBaBA"};
    case Group::tQT:
      return {"b", "Aba", "aaBA", "abbABaBA"};
    case Group::tQV:
      return {"aaBCadAcbAB", "aAbaAbaAABaaABaA", "aAbadABCadAcbaBCadAcbdABaA",
              "aAbaBCadAcbdBCadAcbABaA", "aaBA", "b"};
    default:
      throw std::invalid_argument("no stabilizer generator set for this group");
  }
}

VElement lambda_ni(int n, int i) {
  if (n < 1 || i < 1 || i > n) throw std::invalid_argument("out of range");
  Tree tn = build_Tn(n);
  Tree left = add_caret(tn, tn.leaves()[size_t(2 * i - 1)]);
  Tree right = add_caret(tn, tn.leaves()[size_t(2 * i - 2)]);
  return VElement(TreePairDiagram(left, right, identity_perm(tn.leaf_count() + 1)));
}

bool in_Ln(const VElement& v, int n) {
  if (n < 2) throw std::invalid_argument("out of range");
  Tree tn = build_Tn(n);
  TreePairDiagram d = expand_to_left(v.diagram(), common_expansion(v.left(), tn));
  for (int i = 1; i <= n; ++i) {
    const std::string& root = tn.leaves()[size_t(2 * i - 1)];
    for (size_t k = 0; k < d.left.leaf_count(); ++k) {
      const std::string& leaf = d.left.leaves()[k];
      if (!is_prefix(root, leaf)) continue;
      if (d.right.leaves()[size_t(d.perm[k])] != leaf) return false;
    }
  }
  return true;
}

int tilde_chi(const Vertex& x, const VElement& v) {
  if (!(apply_vertex(v, x) == x)) throw std::invalid_argument("x not stabilized");
  TreePairDiagram d = v.diagram();
  if (x.is_word())
    d = expand_to_left(d, common_expansion(d.left, minimal_tree_with_nodes({x.bits})));
  return leaf_depth(d.left, x) - leaf_depth(d.right, x);
}

std::pair<int, int> chi(const VElement& f) {
  if (!is_in_F(f)) throw std::invalid_argument("not in F");
  return {tilde_chi(Vertex::zeta(), bar_conjugate(f)), tilde_chi(Vertex::zeta(), f)};
}

namespace {

ConjIntoLn conj_normalize(int n, const VElement& v, const char* not_stabilized) {
  if (n < 2) throw std::invalid_argument("out of range");
  std::vector<Vertex> xs;
  for (int k = n - 2; k >= 0; --k) xs.push_back(Vertex::word(std::string(size_t(k), '0')));
  xs.push_back(Vertex::zeta());
  for (const auto& x : xs)
    if (!(apply_vertex(v, x) == x)) throw std::invalid_argument(not_stabilized);

  Tree tn = build_Tn(n);
  TreePairDiagram d =
      expand_to_left(v.diagram(), common_expansion(v.left(), minimal_tree_with_nodes(word_list(xs))));
  // Pad with matched caret pairs at (b_L(x), b_R(x)) only: each pass deepens
  // exactly the one component on both sides, so the exponents stay minimal and
  // conjugation cannot push the result back out of L_n.
  ConjIntoLn out;
  out.a.resize(size_t(n));
  out.b.resize(size_t(n));
  for (size_t j = 0; j < xs.size(); ++j) {
    const int want = leaf_depth(tn, xs[j]);
    while (leaf_depth(d.left, xs[j]) < want || leaf_depth(d.right, xs[j]) < want)
      d = expand_to_left(d, add_caret(d.left, b_map(d.left, xs[j])));
    out.a[j] = leaf_depth(d.left, xs[j]) - want;
    out.b[j] = leaf_depth(d.right, xs[j]) - want;
  }
  // Composite (right factor acts first): lambda_{n,j}^{-a_j} lifts cone(u_j)
  // rigidly onto cone(b_L(x_j)), v carries it rigidly onto cone(b_R(x_j)), and
  // lambda_{n,j}^{b_j} lowers it back onto cone(u_j), so every cone at a
  // 2j-th leaf u_j of T_n is fixed pointwise.
  VElement w;
  for (int j = 1; j <= n; ++j) w = multiply(w, power(lambda_ni(n, j), out.b[size_t(j - 1)]));
  w = multiply(w, VElement(d));
  for (int j = n; j >= 1; --j) w = multiply(w, power(lambda_ni(n, j), -out.a[size_t(j - 1)]));
  out.w = w;
  return out;
}

}  // namespace

ConjIntoL2 conj_into_L2(const VElement& v) {
  ConjIntoLn r = conj_normalize(2, v, "does not stabilize (ε, ζ)");
  return {r.a[0], r.a[1], r.b[0], r.b[1], r.w};
}

ConjIntoLn conj_into_Ln(int n, const VElement& v) {
  return conj_normalize(n, v, "does not stabilize the base tuple");
}

VElement bnsr_witness_fixing(int a) {
  if (a == 0) return VElement();
  const int k = a < 0 ? -a : a;
  Tree base = minimal_tree_with_nodes({"", "1", "11"});
  Tree left = base;
  Tree right = base;
  for (int i = 0; i < k; ++i) {
    left = add_caret(left, left.leaves().back());
    right = add_caret(right, right.leaves()[right.leaf_count() - 2]);
  }
  VElement f(TreePairDiagram(left, right, identity_perm(left.leaf_count())));
  return a < 0 ? invert(f) : f;
}

VElement kernel_transitivity_witness(const Vertex& x1, const Vertex& x2) {
  if (!x1.is_word() || !x2.is_word() || !lex_less(x1, x2))
    throw std::invalid_argument("tuple not strictly increasing");
  VElement g = sigma_witness(VertexTuple(TupleFlavor::Sigma, {x1, x2}));
  auto [c0, c1] = chi(g);
  // The corrections fix 0, e and 1, so composing them first leaves the images
  // of the base pair to g while cancelling both characters.
  return multiply(multiply(g, bnsr_witness_fixing(-c1)),
                  bar_conjugate(bnsr_witness_fixing(-c0)));
}

}  // namespace qv
