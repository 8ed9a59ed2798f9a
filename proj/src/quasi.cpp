#include "qv/quasi.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace qv {

FinitePermutation FinitePermutation::transposition(const Vertex& x, const Vertex& y) {
  if (x == y) throw std::invalid_argument("not bijective");
  VertexMap m;
  m[x] = y;
  m[y] = x;
  FinitePermutation p;
  p.moved_ = std::move(m);
  return p;
}

FinitePermutation FinitePermutation::from_moves(VertexMap moved) {
  for (auto it = moved.begin(); it != moved.end();)
    it = it->first == it->second ? moved.erase(it) : std::next(it);
  std::vector<Vertex> keys, values;
  keys.reserve(moved.size());
  values.reserve(moved.size());
  for (const auto& [k, v] : moved) {
    keys.push_back(k);
    values.push_back(v);
  }
  std::sort(values.begin(), values.end(), VertexLess{});
  for (size_t i = 0; i + 1 < values.size(); ++i)
    if (values[i] == values[i + 1]) throw std::invalid_argument("not bijective");
  if (keys != values) throw std::invalid_argument("not bijective");
  FinitePermutation p;
  p.moved_ = std::move(moved);
  return p;
}

FinitePermutation FinitePermutation::from_cycles(
    const std::vector<std::vector<Vertex>>& cycles) {
  VertexMap m;
  for (const auto& cyc : cycles) {
    if (cyc.size() < 2) continue;
    for (size_t i = 0; i < cyc.size(); ++i)
      if (!m.emplace(cyc[i], cyc[(i + 1) % cyc.size()]).second)
        throw std::invalid_argument("not bijective");
  }
  return from_moves(std::move(m));
}

Vertex FinitePermutation::apply(const Vertex& x) const {
  auto it = moved_.find(x);
  return it == moved_.end() ? x : it->second;
}

std::vector<std::vector<Vertex>> FinitePermutation::cycles() const {
  std::vector<std::vector<Vertex>> out;
  std::set<Vertex, VertexLess> visited;
  for (const auto& [start, unused] : moved_) {
    if (visited.count(start)) continue;
    std::vector<Vertex> cyc;
    Vertex cur = start;
    do {
      cyc.push_back(cur);
      visited.insert(cur);
      cur = apply(cur);
    } while (!(cur == start));
    out.push_back(std::move(cyc));
  }
  return out;
}

FinitePermutation compose(const FinitePermutation& p, const FinitePermutation& q) {
  VertexMap m;
  for (const auto& [x, unused] : q.moved()) m[x] = p.apply(q.apply(x));
  for (const auto& [x, unused] : p.moved())
    if (!m.count(x)) m[x] = p.apply(x);
  return FinitePermutation::from_moves(std::move(m));
}

FinitePermutation invert(const FinitePermutation& p) {
  VertexMap m;
  for (const auto& [x, y] : p.moved()) m[y] = x;
  return FinitePermutation::from_moves(std::move(m));
}

Parity parity(const FinitePermutation& p) {
  size_t transpositions = 0;
  for (const auto& cyc : p.cycles()) transpositions += cyc.size() - 1;
  return transpositions % 2 ? Parity::odd : Parity::even;
}

QElement iota(const VElement& v) { return {FinitePermutation{}, v}; }

Vertex apply(const QElement& q, const Vertex& x) {
  return q.sigma.apply(apply_vertex(q.v, x));
}

QElement multiply(const QElement& q1, const QElement& q2) {
  VertexMap conj;
  for (const auto& [x, y] : q2.sigma.moved())
    conj[apply_vertex(q1.v, x)] = apply_vertex(q1.v, y);
  FinitePermutation transported = FinitePermutation::from_moves(std::move(conj));
  return {compose(q1.sigma, transported), multiply(q1.v, q2.v)};
}

QElement invert(const QElement& q) {
  VElement vi = invert(q.v);
  VertexMap m;
  for (const auto& [x, y] : q.sigma.moved())
    m[apply_vertex(vi, y)] = apply_vertex(vi, x);
  return {FinitePermutation::from_moves(std::move(m)), vi};
}

VElement pi(const QElement& q) { return q.v; }

QElement canonicalize(const RawQuasiMap& raw) {
  QElement out;
  out.v = reduce(raw.prefix_rule);
  VertexMap moves;
  for (const auto& [x, target] : raw.exceptions) {
    Vertex key = apply_vertex(out.v, x);
    if (!(key == target)) moves[key] = target;
  }
  out.sigma = FinitePermutation::from_moves(std::move(moves));
  return out;
}

bool equals(const QElement& q1, const QElement& q2) { return q1 == q2; }

bool pointwise_agree(const QElement& q1, const QElement& q2, int depth) {
  if (!(apply(q1, Vertex::zeta()) == apply(q2, Vertex::zeta()))) return false;
  std::vector<std::string> frontier{""};
  for (int len = 0; len <= depth; ++len) {
    std::vector<std::string> next;
    for (const auto& w : frontier) {
      Vertex x = Vertex::word(w);
      if (!(apply(q1, x) == apply(q2, x))) return false;
      if (len < depth) {
        next.push_back(w + "0");
        next.push_back(w + "1");
      }
    }
    frontier = std::move(next);
  }
  return true;
}

QElement nu(const QElement& q) {
  RawQuasiMap raw;
  raw.prefix_rule = bar_conjugate(q.v).diagram();
  auto add = [&](const Vertex& x) { raw.exceptions[bar(x)] = bar(apply(q, x)); };
  for (const auto& n : nodes(q.v.left())) add(Vertex::word(n));
  add(Vertex::zeta());
  VElement vi = invert(q.v);
  for (const auto& [s, unused] : q.sigma.moved()) add(apply_vertex(vi, s));
  return canonicalize(raw);
}

namespace {

bool sigma_fixes_zeta(const QElement& q) {
  return !q.sigma.moved().count(Vertex::zeta());
}

int chi1_of(const VElement& f) {
  return leaf_depth(f.left(), Vertex::zeta()) - leaf_depth(f.right(), Vertex::zeta());
}

int chi0_of(const VElement& f) { return chi1_of(bar_conjugate(f)); }

}  // namespace

bool membership(const QElement& q, Group g) {
  switch (g) {
    case Group::tQV:
      return true;
    case Group::tQT:
      return is_in_T(q.v);
    case Group::QV:
      return apply(q, Vertex::zeta()) == Vertex::zeta();
    case Group::QF:
      return membership(q, Group::QV) && is_in_F(q.v);
    case Group::QT:
      return membership(q, Group::QV) && is_in_T(q.v);
    case Group::SymZ:
      return is_velement_identity(q.v);
    case Group::AltZ:
      return is_velement_identity(q.v) && parity(q.sigma) == Parity::even;
    case Group::SymStar:
      return is_velement_identity(q.v) && sigma_fixes_zeta(q);
    case Group::AltStar:
      return is_velement_identity(q.v) && sigma_fixes_zeta(q) &&
             parity(q.sigma) == Parity::even;
  }
  throw std::invalid_argument("unsupported group");
}

bool in_commutator(const QElement& q, Group g) {
  switch (g) {
    case Group::QF:
    case Group::QT:
    case Group::QV:
    case Group::tQT:
    case Group::tQV:
      break;
    default:
      throw std::invalid_argument("unsupported group");
  }
  if (!membership(q, g)) throw std::invalid_argument("not a member of G");
  if (parity(q.sigma) != Parity::even) return false;
  if (g == Group::QF) return chi0_of(q.v) == 0 && chi1_of(q.v) == 0;
  return true;
}

AbelianizationImage abelianization_image(const QElement& q, Group g) {
  switch (g) {
    case Group::QF:
    case Group::QT:
    case Group::QV:
    case Group::tQT:
    case Group::tQV:
      break;
    default:
      throw std::invalid_argument("unsupported group");
  }
  if (!membership(q, g)) throw std::invalid_argument("not a member of G");
  AbelianizationImage out;
  out.parity = parity(q.sigma);
  if (g == Group::QF) out.integers = {chi0_of(q.v), chi1_of(q.v)};
  return out;
}

QElement theta_shift(const QElement& q) {
  if (!membership(q, Group::QF)) throw std::invalid_argument("not in QF(1)");
  Tree E = common_expansion(q.v.left(), Tree({"0", "1"}));
  TreePairDiagram d = expand_to_left(q.v.diagram(), E);
  for (size_t i = 0; i < E.leaves().size(); ++i) {
    const std::string& l = E.leaves()[i];
    if (l[0] == '0' && d.right.leaves()[d.perm[i]] != l)
      throw std::invalid_argument("not in QF(1)");
  }
  for (const auto& [x, unused] : q.sigma.moved())
    if (x.is_zeta || x.bits.empty() || x.bits[0] == '0')
      throw std::invalid_argument("not in QF(1)");
  QElement a = iota(generator('A'));
  return multiply(multiply(invert(a), q), a);
}

std::string qelement_token(const QElement& q) {
  std::string out = "sigma=";
  for (const auto& cyc : q.sigma.cycles()) {
    out += '(';
    for (size_t i = 0; i < cyc.size(); ++i) {
      if (i) out += ' ';
      out += vertex_token(cyc[i]);
    }
    out += ')';
  }
  out += ";v=" + velement_token(q.v);
  return out;
}

QElement parse_qelement(std::string_view text) {
  if (!is_prefix("sigma=", text)) throw std::invalid_argument("bad element syntax");
  text.remove_prefix(6);
  size_t vpos = text.find(";v=");
  if (vpos == std::string_view::npos) throw std::invalid_argument("bad element syntax");
  std::string_view cyclespart = text.substr(0, vpos);
  std::vector<std::vector<Vertex>> cycles;
  size_t i = 0;
  while (i < cyclespart.size()) {
    if (cyclespart[i] == ' ') {
      ++i;
      continue;
    }
    if (cyclespart[i] != '(') throw std::invalid_argument("bad element syntax");
    size_t close = cyclespart.find(')', i);
    if (close == std::string_view::npos) throw std::invalid_argument("bad element syntax");
    std::vector<Vertex> cyc;
    size_t pos = i + 1;
    while (pos < close) {
      size_t end = pos;
      while (end < close && cyclespart[end] != ' ') ++end;
      if (end > pos) cyc.push_back(parse_vertex(cyclespart.substr(pos, end - pos)));
      pos = end + 1;
    }
    if (cyc.empty()) throw std::invalid_argument("bad element syntax");
    cycles.push_back(std::move(cyc));
    i = close + 1;
  }
  QElement out;
  out.sigma = FinitePermutation::from_cycles(cycles);
  out.v = parse_velement(text.substr(vpos + 3));
  return out;
}

}  // namespace qv
