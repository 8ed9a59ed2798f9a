#include "qv/presentations.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <set>
#include <stdexcept>
#include <utility>

#include "qv/thompson.hpp"

namespace qv {

namespace {

bool is_generator_letter(char c) {
  switch (std::tolower(static_cast<unsigned char>(c))) {
    case 's':
    case 'a':
    case 'b':
    case 'c':
    case 'd':
      return true;
    default:
      return false;
  }
}

// Word calculus on letter strings.
std::string inv_word(const std::string& w) {
  std::string out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out += std::isupper(static_cast<unsigned char>(*it))
               ? char(std::tolower(static_cast<unsigned char>(*it)))
               : char(std::toupper(static_cast<unsigned char>(*it)));
  return out;
}

std::string pow_word(const std::string& w, int k) {
  std::string base = k < 0 ? inv_word(w) : w;
  std::string out;
  for (int i = 0; i < std::abs(k); ++i) out += base;
  return out;
}

std::string comm(const std::string& x, const std::string& y) {
  return inv_word(x) + inv_word(y) + x + y;
}

std::string conj(const std::string& x, const std::string& g) { return inv_word(g) + x + g; }

// Derived generator families.
std::string beta_n(int n) {
  return std::string(size_t(n - 1), 'A') + "b" + std::string(size_t(n - 1), 'a');
}
std::string gamma_n(int n) {
  return std::string(size_t(n - 1), 'A') + "c" + std::string(size_t(n - 1), 'b');
}
std::string delta_n(int n) {
  const std::string delta1 = conj("d", "Acb");
  return std::string(size_t(n - 1), 'A') + delta1 + std::string(size_t(n - 1), 'a');
}

std::vector<std::string> f_relators() {
  return {comm("aB", beta_n(2)), comm("aB", beta_n(3))};
}

std::vector<std::string> t_relators() {
  auto rel = f_relators();
  rel.push_back("CbAcb");
  rel.push_back("ABaBCabAAcbb");
  rel.push_back("ACAcbAcb");
  rel.push_back(pow_word("c", 3));
  return rel;
}

std::vector<std::string> v_relators() {
  std::vector<std::string> rel;
  rel.push_back(comm("aB", beta_n(2)));
  rel.push_back(comm("aB", beta_n(3)));
  rel.push_back("b" + gamma_n(2) + inv_word(gamma_n(1)));
  rel.push_back("b" + gamma_n(3) + inv_word(gamma_n(2) + beta_n(2)));
  rel.push_back(gamma_n(2) + gamma_n(2) + inv_word(gamma_n(1) + "a"));
  rel.push_back(pow_word(gamma_n(1), 3));
  rel.push_back(pow_word(delta_n(1), 2));
  rel.push_back(delta_n(3) + delta_n(1) + inv_word(delta_n(1) + delta_n(3)));
  rel.push_back(pow_word(delta_n(2) + delta_n(1), 3));
  rel.push_back(delta_n(1) + beta_n(3) + inv_word(beta_n(3) + delta_n(1)));
  // beta gamma_2 beta_2 = gamma_1 beta_2.  A gamma_1 in the third slot would
  // contradict the third relator: beta gamma_2 = gamma_1 plus gamma_1^3 = 1
  // would force gamma_1 = beta_2, which is false (beta_2 has infinite order).
  // check_relators reports that variant as a non-binding diagnostic.
  rel.push_back("b" + gamma_n(2) + beta_n(2) + inv_word(gamma_n(1) + beta_n(2)));
  rel.push_back("b" + delta_n(3) + inv_word(delta_n(2) + "b"));
  rel.push_back(gamma_n(3) + delta_n(2) + inv_word(delta_n(1) + gamma_n(3)));
  rel.push_back(pow_word(delta_n(1) + gamma_n(2), 3));
  return rel;
}

// The four shared sigma-relators.  The last one stands for the product
// sigma_{0,e} sigma_{e,1} sigma_{0,e} sigma_{0,1}; the conjugating word that
// realizes sigma_{0,1} under the global convention is a b a^-1 (the literal
// a b^-1 a^-1 realizes sigma_{0,01} instead and is reported as a non-binding
// diagnostic by check_relators).
std::vector<std::string> sigma_relators() {
  return {
      pow_word("s", 2),
      comm("s", conj("s", "aa")),
      pow_word("s" + conj("s", "a"), 3),
      "s" + conj("s", "a") + "s" + conj("s", "abA"),
  };
}

// Conjugating word g with sigma^g = sigma_{e,z}; commutation with the X words
// (which fix e and z but move 0) holds in this realization.
const char* kToZConj = "ccAA";

std::vector<GroupWord> to_group_words(const std::vector<std::string>& ws) {
  std::vector<GroupWord> out;
  out.reserve(ws.size());
  for (const auto& w : ws) out.push_back(GroupWord{w});
  return out;
}

QElement transposition_q(const Vertex& x, const Vertex& y) {
  return QElement{FinitePermutation::transposition(x, y), VElement()};
}

std::string perm_product_label(const std::vector<std::pair<Vertex, Vertex>>& factors,
                               int power) {
  std::string out;
  if (power != 1) out += '(';
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) out += ' ';
    out += "s(" + vertex_token(factors[i].first) + "," + vertex_token(factors[i].second) + ")";
  }
  if (power != 1) out += ")^" + std::to_string(power);
  return out;
}

void check_word_entry(CheckReport& report, const std::string& group, const std::string& label,
                      const std::string& word, bool binding) {
  QElement q = evaluate(GroupWord{word}, group);
  RelatorCheck entry;
  entry.label = label;
  entry.pass = q.sigma.is_identity() && is_velement_identity(q.v);
  if (!entry.pass) entry.canonical = qelement_token(q);
  entry.binding = binding;
  if (binding && !entry.pass) report.all_pass = false;
  report.entries.push_back(std::move(entry));
}

void check_transposition_product(CheckReport& report,
                                 const std::vector<std::pair<Vertex, Vertex>>& factors,
                                 int power, const std::string& label_suffix) {
  QElement prod;
  for (const auto& [x, y] : factors) prod = multiply(prod, transposition_q(x, y));
  QElement value;
  for (int i = 0; i < power; ++i) value = multiply(value, prod);
  RelatorCheck entry;
  entry.label = perm_product_label(factors, power) + label_suffix;
  entry.pass = value.sigma.is_identity() && is_velement_identity(value.v);
  if (!entry.pass) entry.canonical = qelement_token(value);
  entry.binding = false;
  report.entries.push_back(std::move(entry));
}

void append_sigma_diagnostics(CheckReport& report, const std::string& group) {
  const Vertex e = Vertex::epsilon();
  const Vertex v0 = Vertex::word("0");
  const Vertex v1 = Vertex::word("1");
  const Vertex v01 = Vertex::word("01");
  const Vertex v11 = Vertex::word("11");
  // Literal conjugating word from the commutator-of-transpositions relator.
  const std::string literal4 = "s" + conj("s", "a") + "s" + conj("s", "aBA");
  check_word_entry(report, group, literal4 + " (literal)", literal4, false);
  check_transposition_product(report, {{v0, e}, {v1, v11}, {v0, e}, {v1, v11}}, 1,
                              " (transpositions)");
  check_transposition_product(report, {{v0, e}, {e, v1}}, 3, " (transpositions)");
  check_transposition_product(report, {{v0, e}, {e, v1}, {v0, e}, {v0, v1}}, 1,
                              " (transpositions)");
  // The literal conjugate lands on sigma_{0,01}; the substituted product
  // documents that reading too.
  check_transposition_product(report, {{v0, e}, {e, v1}, {v0, e}, {v0, v01}}, 1,
                              " (literal transpositions)");
}

}  // namespace

GroupWord parse_group_word(std::string_view text) {
  GroupWord w;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (!is_generator_letter(c)) throw std::invalid_argument("invalid symbol");
    w.letters += c;
  }
  return w;
}

std::string group_alphabet(const std::string& group_name) {
  if (group_name == "F") return "ab";
  if (group_name == "T") return "abc";
  if (group_name == "V") return "abcd";
  if (group_name == "QF") return "sab";
  if (group_name == "QT" || group_name == "tQT") return "sabc";
  if (group_name == "QV" || group_name == "tQV") return "sabcd";
  throw std::invalid_argument("invalid symbol");
}

QElement evaluate(const GroupWord& w, const std::string& group_name) {
  const std::string alphabet = group_alphabet(group_name);
  QElement acc;
  for (char c : w.letters) {
    const char lower = char(std::tolower(static_cast<unsigned char>(c)));
    if (!is_generator_letter(lower) || alphabet.find(lower) == std::string::npos)
      throw std::invalid_argument("invalid symbol");
    QElement g = lower == 's'
                     ? transposition_q(Vertex::word("0"), Vertex::epsilon())
                     : iota(generator(char(std::toupper(static_cast<unsigned char>(lower)))));
    if (std::isupper(static_cast<unsigned char>(c))) g = invert(g);
    acc = multiply(acc, g);
  }
  return acc;
}

bool is_identity(const GroupWord& w, const std::string& group_name) {
  QElement q = evaluate(w, group_name);
  return q.sigma.is_identity() && is_velement_identity(q.v);
}

Presentation builtin_presentation(const std::string& name) {
  Presentation p;
  p.name = name;
  if (name == "F") {
    p.generators = "ab";
    p.relators = to_group_words(f_relators());
    return p;
  }
  if (name == "T") {
    p.generators = "abc";
    p.relators = to_group_words(t_relators());
    return p;
  }
  if (name == "V") {
    p.generators = "abcd";
    p.relators = to_group_words(v_relators());
    return p;
  }
  auto with_x = [&p](std::vector<std::string> rel, const std::vector<std::string>& xs,
                     const std::string& sigma_word) {
    for (const auto& x : xs) {
      rel.push_back(comm(x, sigma_word));
      p.stabilizer_set.push_back(GroupWord{x});
    }
    p.relators = to_group_words(rel);
  };
  if (name == "QF") {
    p.generators = "sab";
    std::vector<std::string> rel = sigma_relators();
    for (auto& r : f_relators()) rel.push_back(r);
    with_x(std::move(rel), stabilizer_generators(Group::QF), "s");
    return p;
  }
  if (name == "tQT") {
    p.generators = "sabc";
    std::vector<std::string> rel = sigma_relators();
    for (auto& r : t_relators()) rel.push_back(r);
    with_x(std::move(rel), stabilizer_generators(Group::tQT), conj("s", kToZConj));
    return p;
  }
  if (name == "tQV") {
    p.generators = "sabcd";
    std::vector<std::string> rel = {"s" + conj("s", "adA")};
    for (auto& r : sigma_relators()) rel.push_back(r);
    for (auto& r : v_relators()) rel.push_back(r);
    with_x(std::move(rel), stabilizer_generators(Group::tQV), conj("s", kToZConj));
    return p;
  }
  throw std::invalid_argument("invalid symbol");
}

CheckReport check_relators(const Presentation& p) {
  CheckReport report;
  report.name = p.name;
  for (const auto& r : p.relators) check_word_entry(report, p.name, r.letters, r.letters, true);
  if (p.name == "V" || p.name == "tQV") {
    // Variant with gamma_1 in the third slot; inconsistent with the third
    // relator (see v_relators), reported for reference only.
    const std::string variant =
        "b" + gamma_n(2) + gamma_n(1) + inv_word(gamma_n(1) + beta_n(2));
    check_word_entry(report, p.name, variant + " (literal)", variant, false);
  }
  const bool quasi_group = p.generators.find('s') != std::string::npos;
  if (quasi_group) {
    append_sigma_diagnostics(report, p.name);
    if (p.name == "tQV")
      check_transposition_product(report,
                                  {{Vertex::word("0"), Vertex::epsilon()},
                                   {Vertex::epsilon(), Vertex::word("0")}},
                                  1, " (transpositions)");
    // Literal and transposition-level commutators for the X words.
    for (const auto& x : p.stabilizer_set) {
      if (p.name != "QF")
        check_word_entry(report, p.name, comm(x.letters, "s") + " (literal)",
                         comm(x.letters, "s"), false);
      QElement nu_elt = evaluate(x, p.name);
      QElement sig = p.name == "QF"
                         ? transposition_q(Vertex::word("0"), Vertex::epsilon())
                         : transposition_q(Vertex::epsilon(), Vertex::zeta());
      QElement value = multiply(multiply(invert(nu_elt), invert(sig)), multiply(nu_elt, sig));
      RelatorCheck entry;
      entry.label = "[" + x.letters + ", " +
                    (p.name == "QF" ? std::string("s(0,e)") : std::string("s(e,z)")) +
                    "] (transpositions)";
      entry.pass = value.sigma.is_identity() && is_velement_identity(value.v);
      if (!entry.pass) entry.canonical = qelement_token(value);
      entry.binding = false;
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

CheckReport check_sym_presentation(const std::vector<Vertex>& vertices, SymFlavor flavor) {
  for (size_t i = 0; i < vertices.size(); ++i)
    for (size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] == vertices[j]) throw std::invalid_argument("duplicate vertices");
  if (flavor == SymFlavor::Star)
    for (const auto& v : vertices)
      if (v.is_zeta) throw std::invalid_argument("out of range");

  CheckReport report;
  report.name = flavor == SymFlavor::Star ? "symStar" : "symZ";

  std::vector<Vertex> vs = vertices;
  std::sort(vs.begin(), vs.end());
  const size_t n = vs.size();

  auto add_instance = [&report](const std::vector<std::pair<Vertex, Vertex>>& factors,
                                int power) {
    FinitePermutation prod;
    for (const auto& [x, y] : factors)
      prod = compose(prod, FinitePermutation::transposition(x, y));
    FinitePermutation value;
    for (int i = 0; i < power; ++i) value = compose(value, prod);
    RelatorCheck entry;
    entry.label = perm_product_label(factors, power);
    entry.pass = value.is_identity();
    if (!entry.pass) {
      for (const auto& cyc : value.cycles()) {
        entry.canonical += '(';
        for (size_t i = 0; i < cyc.size(); ++i) {
          if (i) entry.canonical += ' ';
          entry.canonical += vertex_token(cyc[i]);
        }
        entry.canonical += ')';
      }
    }
    if (!entry.pass) report.all_pass = false;
    report.entries.push_back(std::move(entry));
  };

  // Enumerate index tuples: increasing for Star, ordered distinct for Z.
  auto for_tuples = [&](size_t k, auto&& body) {
    std::vector<size_t> idx;
    auto rec = [&](auto&& self) -> void {
      if (idx.size() == k) {
        body(idx);
        return;
      }
      for (size_t i = 0; i < n; ++i) {
        if (flavor == SymFlavor::Star) {
          if (!idx.empty() && i <= idx.back()) continue;
        } else if (std::find(idx.begin(), idx.end(), i) != idx.end()) {
          continue;
        }
        idx.push_back(i);
        self(self);
        idx.pop_back();
      }
    };
    rec(rec);
  };

  for_tuples(2, [&](const std::vector<size_t>& t) {
    add_instance({{vs[t[0]], vs[t[1]]}, {vs[t[0]], vs[t[1]]}}, 1);  // involution
  });
  for_tuples(4, [&](const std::vector<size_t>& t) {
    const auto &x = vs[t[0]], &y = vs[t[1]], &z = vs[t[2]], &w = vs[t[3]];
    add_instance({{x, y}, {z, w}, {x, y}, {z, w}}, 1);  // disjoint commutation
  });
  for_tuples(3, [&](const std::vector<size_t>& t) {
    const auto &x = vs[t[0]], &y = vs[t[1]], &z = vs[t[2]];
    add_instance({{x, y}, {y, z}}, 3);                  // braid
    add_instance({{x, y}, {y, z}, {x, y}, {x, z}}, 1);  // triple product
  });
  if (flavor == SymFlavor::Z)
    for_tuples(2, [&](const std::vector<size_t>& t) {
      add_instance({{vs[t[0]], vs[t[1]]}, {vs[t[1]], vs[t[0]]}}, 1);  // symmetry
    });
  return report;
}

std::vector<VertexTuple> orbit_enumerate(const std::vector<GroupWord>& generators,
                                         const VertexTuple& start, int depth_bound) {
  if (depth_bound < 0) throw std::invalid_argument("out of range");
  std::vector<QElement> moves;
  for (const auto& g : generators) {
    QElement q = evaluate(g, "tQV");
    moves.push_back(q);
    moves.push_back(invert(q));
  }
  auto in_ball = [depth_bound](const std::vector<Vertex>& entries) {
    for (const auto& x : entries)
      if (x.is_word() && int(x.bits.size()) > depth_bound) return false;
    return true;
  };
  // Cyclic tuples are deduplicated in their canonical rotation.
  auto normalize = [&start](std::vector<Vertex>& entries) {
    if (start.flavor() != TupleFlavor::Lambda) return;
    size_t lo = 0;
    for (size_t i = 1; i < entries.size(); ++i)
      if (lex_less(entries[i], entries[lo])) lo = i;
    std::rotate(entries.begin(), entries.begin() + long(lo), entries.end());
  };
  std::set<std::vector<Vertex>> seen;
  std::deque<std::vector<Vertex>> queue;
  auto admit = [&](std::vector<Vertex> entries) {
    if (!in_ball(entries)) return;
    normalize(entries);
    try {
      VertexTuple(start.flavor(), entries);
    } catch (const std::invalid_argument&) {
      return;  // image leaves the flavor's tuple space
    }
    if (seen.insert(entries).second) queue.push_back(std::move(entries));
  };
  admit(start.entries());
  while (!queue.empty()) {
    std::vector<Vertex> entries = std::move(queue.front());
    queue.pop_front();
    for (const auto& q : moves) {
      std::vector<Vertex> image;
      image.reserve(entries.size());
      for (const auto& x : entries) image.push_back(apply(q, x));
      admit(std::move(image));
    }
  }
  std::vector<VertexTuple> out;
  out.reserve(seen.size());
  for (const auto& entries : seen) out.emplace_back(start.flavor(), entries);
  return out;
}

}  // namespace qv
