#include "qv/cli.hpp"

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qv/actions.hpp"
#include "qv/presentations.hpp"
#include "qv/quasi.hpp"
#include "qv/thompson.hpp"
#include "qv/trees.hpp"
#include "qv/words.hpp"

namespace qv {
namespace {

using ordered_json = nlohmann::ordered_json;

const std::pair<Group, const char*> kGroupFlags[] = {
    {Group::QF, "QF"},           {Group::QT, "QT"},   {Group::QV, "QV"},
    {Group::tQT, "tQT"},         {Group::tQV, "tQV"}, {Group::SymStar, "SymStar"},
    {Group::AltStar, "AltStar"}, {Group::SymZ, "SymZ"}, {Group::AltZ, "AltZ"},
};

// The quasi-group whose commutator subgroup the invariants verb reports on.
Group commutator_group(const std::string& name) {
  if (name == "F" || name == "QF") return Group::QF;
  if (name == "T" || name == "QT") return Group::QT;
  if (name == "V" || name == "QV") return Group::QV;
  if (name == "tQT") return Group::tQT;
  if (name == "tQV") return Group::tQV;
  throw std::invalid_argument("invalid symbol");
}

std::string parity_name(Parity p) { return p == Parity::even ? "even" : "odd"; }
std::string yes_no(bool b) { return b ? "yes" : "no"; }

// e and every word of length <= depth, in generation order.
std::vector<Vertex> word_pool(int depth) {
  std::vector<Vertex> out = {Vertex::epsilon()};
  std::vector<std::string> layer = {""};
  for (int d = 0; d < depth; ++d) {
    std::vector<std::string> next;
    for (const auto& w : layer) {
      next.push_back(w + "0");
      next.push_back(w + "1");
    }
    for (const auto& w : next) out.push_back(Vertex::word(w));
    layer = std::move(next);
  }
  return out;
}

std::vector<int> identity_perm(size_t n) {
  std::vector<int> p(n);
  for (size_t i = 0; i < n; ++i) p[i] = int(i);
  return p;
}

VElement order_element(std::vector<std::string> l, std::vector<std::string> r) {
  size_t n = l.size();
  return VElement(TreePairDiagram(Tree(std::move(l)), Tree(std::move(r)), identity_perm(n)));
}

void relator_lines(std::vector<CheckLine>& out, const std::string& name) {
  CheckReport report = check_relators(builtin_presentation(name));
  for (const auto& e : report.entries)
    out.push_back({name + " " + e.label, e.pass, e.binding, e.canonical});
}

void sym_lines(std::vector<CheckLine>& out, SymFlavor flavor) {
  std::vector<Vertex> pool = word_pool(2);
  std::string prefix = flavor == SymFlavor::Star ? "symStar " : "symZ ";
  if (flavor == SymFlavor::Z) pool.push_back(Vertex::zeta());
  CheckReport report = check_sym_presentation(pool, flavor);
  for (const auto& e : report.entries)
    out.push_back({prefix + e.label, e.pass, e.binding, e.canonical});
}

void vertex_map_lines(std::vector<CheckLine>& out, char gen,
                      const std::vector<std::pair<const char*, const char*>>& table) {
  VElement v = generator(char(gen - 'a' + 'A'));
  for (const auto& [from, to] : table) {
    Vertex image = apply_vertex(v, parse_vertex(from));
    CheckLine line;
    line.label = std::string("figures iota(") + gen + ") " + from + "->" + to;
    line.pass = image == parse_vertex(to);
    if (!line.pass) line.canonical = vertex_token(image);
    out.push_back(std::move(line));
  }
}

void element_fixture_line(std::vector<CheckLine>& out, const std::string& label,
                          const VElement& got, const VElement& expected) {
  CheckLine line;
  line.label = "figures " + label;
  line.pass = got == expected;
  if (!line.pass) line.canonical = velement_token(got);
  out.push_back(std::move(line));
}

void figure_lines(std::vector<CheckLine>& out) {
  // Vertex maps of the four canonical lifts on their labelled vertices.
  vertex_map_lines(out, 'a',
                   {{"e", "0"}, {"1", "e"}, {"z", "z"}, {"0", "00"}, {"10", "01"}, {"11", "1"}});
  vertex_map_lines(out, 'b',
                   {{"e", "e"},
                    {"z", "z"},
                    {"0", "0"},
                    {"1", "10"},
                    {"10", "100"},
                    {"110", "101"},
                    {"111", "11"},
                    {"11", "1"}});
  vertex_map_lines(out, 'c',
                   {{"e", "z"}, {"z", "1"}, {"1", "e"}, {"0", "11"}, {"10", "0"}, {"11", "10"}});
  vertex_map_lines(out, 'd',
                   {{"e", "1"}, {"1", "e"}, {"0", "10"}, {"10", "0"}, {"11", "11"}, {"z", "z"}});

  // Tree pairs of the six (e, z)-stabilizer words.
  auto words = stabilizer_generators(Group::tQV);
  auto eval_letters = [](const std::string& w) {
    QElement q = evaluate(GroupWord{w}, "tQV");
    return q.v;
  };
  Tree t5({"00", "01", "100", "101", "11"});
  std::vector<VElement> expected = {
      VElement(TreePairDiagram(Tree({"00", "01", "100", "101", "11"}),
                               Tree({"000", "001", "01", "10", "11"}), {0, 2, 1, 3, 4})),
      order_element({"00", "01", "100", "1010", "1011", "11"},
                    {"00", "01", "1000", "1001", "101", "11"}),
      VElement(TreePairDiagram(t5, t5, {3, 1, 0, 2, 4})),
      VElement(TreePairDiagram(t5, t5, {2, 1, 0, 3, 4})),
      order_element({"00", "010", "011", "1"}, {"000", "001", "01", "1"}),
      generator('B'),
  };
  for (size_t i = 0; i < words.size(); ++i)
    element_fixture_line(out, "stabilizer " + words[i] + " tree pair",
                         eval_letters(words[i]), expected[i]);

  element_fixture_line(out, "lambda(3,2) tree pair", lambda_ni(3, 2),
                       order_element({"000", "001", "010", "0110", "0111", "10", "11"},
                                     {"000", "001", "0100", "0101", "011", "10", "11"}));
  element_fixture_line(out, "bnsr(2) tree pair", bnsr_witness_fixing(2),
                       order_element({"0", "10", "110", "1110", "11110", "11111"},
                                     {"0", "10", "1100", "11010", "11011", "111"}));
}

struct Invocation {
  std::ostream& out;
  std::ostream& err;
  bool json = false;
};

void emit_json(const Invocation& io, const ordered_json& doc) {
  io.out << doc.dump(2) << "\n";
}

// Splits the group off the positional payload: an explicit --group wins,
// otherwise the first positional names the group.
std::string take_group(const std::string& group_flag, std::vector<std::string>& payload) {
  if (!group_flag.empty()) return group_flag;
  if (payload.empty()) throw std::invalid_argument("missing group");
  std::string g = payload.front();
  payload.erase(payload.begin());
  return g;
}

void require_payload(const std::vector<std::string>& payload, size_t n, const char* usage) {
  if (payload.size() != n) throw std::invalid_argument(std::string("expected ") + usage);
}

int parse_int(const std::string& text) {
  size_t used = 0;
  int value = std::stoi(text, &used);
  if (used != text.size()) throw std::invalid_argument("malformed integer");
  return value;
}

int cmd_eval(const Invocation& io, const std::string& group,
             const std::vector<std::string>& payload) {
  require_payload(payload, 1, "eval [--group G] [G] WORD");
  group_alphabet(group);
  QElement q = evaluate(parse_group_word(payload[0]), group);
  std::string token = qelement_token(q);
  if (io.json) {
    ordered_json doc;
    doc["verb"] = "eval";
    doc["group"] = group;
    doc["word"] = payload[0];
    doc["canonical"] = token;
    doc["identity"] = q.sigma.is_identity() && is_velement_identity(q.v);
    emit_json(io, doc);
  } else {
    io.out << token << "\n";
  }
  return 0;
}

int cmd_apply(const Invocation& io, const std::string& group,
              const std::vector<std::string>& payload) {
  require_payload(payload, 2, "apply [--group G] [G] WORD VERTEX");
  group_alphabet(group);
  QElement q = evaluate(parse_group_word(payload[0]), group);
  Vertex image = apply(q, parse_vertex(payload[1]));
  if (io.json) {
    ordered_json doc;
    doc["verb"] = "apply";
    doc["group"] = group;
    doc["word"] = payload[0];
    doc["vertex"] = payload[1];
    doc["image"] = vertex_token(image);
    emit_json(io, doc);
  } else {
    io.out << vertex_token(image) << "\n";
  }
  return 0;
}

int cmd_invariants(const Invocation& io, const std::string& group,
                   const std::vector<std::string>& payload) {
  require_payload(payload, 1, "invariants [--group G] [G] WORD");
  Group cgroup = commutator_group(group);
  QElement q = evaluate(parse_group_word(payload[0]), group);

  bool has_chi = membership(q, Group::QF);
  std::pair<int, int> chi_value{0, 0};
  if (has_chi) {
    auto image = abelianization_image(q, Group::QF);
    chi_value = {image.integers[0], image.integers[1]};
  }
  bool in_comm = false, comm_defined = true;
  try {
    in_comm = in_commutator(q, cgroup);
  } catch (const std::invalid_argument&) {
    comm_defined = false;
  }
  std::string cgroup_name;
  for (const auto& [g, name] : kGroupFlags)
    if (g == cgroup) cgroup_name = name;

  if (io.json) {
    ordered_json doc;
    doc["verb"] = "invariants";
    doc["group"] = group;
    doc["word"] = payload[0];
    doc["canonical"] = qelement_token(q);
    if (has_chi)
      doc["chi"] = {chi_value.first, chi_value.second};
    else
      doc["chi"] = nullptr;
    doc["parity"] = parity_name(parity(q.sigma));
    ordered_json member;
    for (const auto& [g, name] : kGroupFlags) member[name] = membership(q, g);
    doc["membership"] = member;
    doc["commutator"]["group"] = cgroup_name;
    doc["commutator"]["member"] = comm_defined ? ordered_json(in_comm) : ordered_json(nullptr);
    emit_json(io, doc);
  } else {
    io.out << "canonical " << qelement_token(q) << "\n";
    if (has_chi)
      io.out << "chi (" << chi_value.first << "," << chi_value.second << ")\n";
    io.out << "parity " << parity_name(parity(q.sigma)) << "\n";
    for (const auto& [g, name] : kGroupFlags)
      io.out << "member " << name << " " << yes_no(membership(q, g)) << "\n";
    io.out << "commutator " << cgroup_name << " "
           << (comm_defined ? yes_no(in_comm) : std::string("n/a")) << "\n";
  }
  return 0;
}

int cmd_verify(const Invocation& io, const std::vector<std::string>& payload) {
  require_payload(payload, 1, "verify SUITE");
  std::vector<CheckLine> lines = verify_suite(payload[0]);
  bool all_pass = true;
  for (const auto& l : lines)
    if (l.binding && !l.pass) all_pass = false;
  if (io.json) {
    ordered_json doc;
    doc["verb"] = "verify";
    doc["suite"] = payload[0];
    doc["pass"] = all_pass;
    ordered_json entries = ordered_json::array();
    for (const auto& l : lines) {
      ordered_json e;
      e["label"] = l.label;
      e["pass"] = l.pass;
      e["binding"] = l.binding;
      if (!l.pass) e["canonical"] = l.canonical;
      entries.push_back(std::move(e));
    }
    doc["entries"] = std::move(entries);
    emit_json(io, doc);
  } else {
    for (const auto& l : lines) {
      if (!l.binding) continue;
      if (l.pass)
        io.out << "PASS " << l.label << "\n";
      else
        io.out << "FAIL " << l.label << " " << l.canonical << "\n";
    }
  }
  return all_pass ? 0 : 1;
}

int cmd_orbit(const Invocation& io, const std::string& group,
              const std::vector<std::string>& payload) {
  require_payload(payload, 2, "orbit [--group G] [G] TUPLE BOUND");
  std::vector<GroupWord> gens;
  for (char letter : group_alphabet(group)) gens.push_back(GroupWord{std::string(1, letter)});
  VertexTuple start = parse_tuple(payload[0]);
  int bound = parse_int(payload[1]);
  std::vector<VertexTuple> reached = orbit_enumerate(gens, start, bound);
  if (io.json) {
    ordered_json doc;
    doc["verb"] = "orbit";
    doc["group"] = group;
    doc["start"] = tuple_token(start);
    doc["bound"] = bound;
    ordered_json tuples = ordered_json::array();
    for (const auto& t : reached) tuples.push_back(tuple_token(t));
    doc["tuples"] = std::move(tuples);
    emit_json(io, doc);
  } else {
    for (const auto& t : reached) io.out << tuple_token(t) << "\n";
  }
  return 0;
}

int cmd_witness(const Invocation& io, const std::vector<std::string>& payload) {
  require_payload(payload, 2, "witness FLAVOR ARG");
  const std::string& flavor = payload[0];
  ordered_json doc;
  doc["verb"] = "witness";
  doc["flavor"] = flavor;

  if (flavor == "sigma" || flavor == "lambda" || flavor == "delta") {
    char prefix = flavor == "sigma" ? 'S' : flavor == "lambda" ? 'L' : 'D';
    VertexTuple target = parse_tuple(std::string(1, prefix) + ":" + payload[1]);
    VElement w = flavor == "sigma"    ? sigma_witness(target)
                 : flavor == "lambda" ? lambda_witness(target)
                                      : delta_witness(target);
    auto base = base_tuple(target.entries().size());
    if (io.json) {
      doc["target"] = tuple_token(target);
      doc["element"] = velement_token(w);
      ordered_json images = ordered_json::array();
      for (const auto& b : base) {
        ordered_json img;
        img["from"] = vertex_token(b);
        img["to"] = vertex_token(apply_vertex(w, b));
        images.push_back(std::move(img));
      }
      doc["images"] = std::move(images);
      emit_json(io, doc);
    } else {
      io.out << velement_token(w) << "\n";
      io.out << "images";
      for (const auto& b : base)
        io.out << " " << vertex_token(b) << "->" << vertex_token(apply_vertex(w, b));
      io.out << "\n";
    }
    return 0;
  }
  if (flavor == "bnsr") {
    VElement w = bnsr_witness_fixing(parse_int(payload[1]));
    auto chi_value = chi(w);
    if (io.json) {
      doc["element"] = velement_token(w);
      doc["chi"] = {chi_value.first, chi_value.second};
      doc["fixes"] = {"e", "0", "1"};
      emit_json(io, doc);
    } else {
      io.out << velement_token(w) << "\n";
      io.out << "chi (" << chi_value.first << "," << chi_value.second << ") fixes e 0 1\n";
    }
    return 0;
  }
  if (flavor == "kernel") {
    size_t comma = payload[1].find(',');
    if (comma == std::string::npos) throw std::invalid_argument("expected X1,X2");
    Vertex x1 = parse_vertex(payload[1].substr(0, comma));
    Vertex x2 = parse_vertex(payload[1].substr(comma + 1));
    VElement w = kernel_transitivity_witness(x1, x2);
    auto chi_value = chi(w);
    Vertex i1 = apply_vertex(w, Vertex::word("0"));
    Vertex i2 = apply_vertex(w, Vertex::epsilon());
    if (io.json) {
      doc["element"] = velement_token(w);
      doc["chi"] = {chi_value.first, chi_value.second};
      ordered_json images = ordered_json::array();
      images.push_back({{"from", "0"}, {"to", vertex_token(i1)}});
      images.push_back({{"from", "e"}, {"to", vertex_token(i2)}});
      doc["images"] = std::move(images);
      emit_json(io, doc);
    } else {
      io.out << velement_token(w) << "\n";
      io.out << "chi (" << chi_value.first << "," << chi_value.second << ") images 0->"
             << vertex_token(i1) << " e->" << vertex_token(i2) << "\n";
    }
    return 0;
  }
  throw std::invalid_argument("unknown witness flavor");
}

}  // namespace

std::vector<CheckLine> verify_suite(const std::string& name) {
  std::vector<CheckLine> out;
  if (name == "F" || name == "T" || name == "V" || name == "QF" || name == "tQT" ||
      name == "tQV") {
    relator_lines(out, name);
    return out;
  }
  if (name == "symStar") {
    sym_lines(out, SymFlavor::Star);
    return out;
  }
  if (name == "symZ") {
    sym_lines(out, SymFlavor::Z);
    return out;
  }
  if (name == "figures") {
    figure_lines(out);
    return out;
  }
  if (name == "all") {
    for (const char* suite : {"F", "T", "V", "QF", "tQT", "tQV"}) relator_lines(out, suite);
    sym_lines(out, SymFlavor::Star);
    sym_lines(out, SymFlavor::Z);
    figure_lines(out);
    return out;
  }
  throw std::invalid_argument("unknown suite");
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "Exact arithmetic for the quasi-automorphism groups of the coloured binary "
      "tree and Thompson's groups.\n"
      "Verbs: eval, apply, invariants, verify, orbit, witness.\n"
      "  eval [--group G] [G] WORD          canonical form of a generator word\n"
      "  apply [--group G] [G] WORD VERTEX  image of a vertex (e = root, z = infinity)\n"
      "  invariants [--group G] [G] WORD    characters, parity, memberships\n"
      "  verify SUITE                       F T V QF tQT tQV symStar symZ figures all\n"
      "  orbit [--group G] [G] TUPLE BOUND  bounded orbit of S:/L:/D: vertex tuples\n"
      "  witness FLAVOR ARG                 sigma|lambda|delta TUPLE, bnsr N, kernel X1,X2",
      "qv"};
  std::string group_flag;
  bool json = false;
  std::vector<std::string> positionals;
  app.add_option("--group", group_flag, "Group name: F T V QF QT QV tQT tQV");
  app.add_flag("--json", json, "Emit one structured JSON document");
  app.add_option("args", positionals, "VERB and its payload");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Invocation io{out, err, json};
  try {
    if (positionals.empty()) throw std::invalid_argument("missing verb");
    std::string verb = positionals.front();
    std::vector<std::string> payload(positionals.begin() + 1, positionals.end());
    if (verb == "eval") return cmd_eval(io, take_group(group_flag, payload), payload);
    if (verb == "apply") return cmd_apply(io, take_group(group_flag, payload), payload);
    if (verb == "invariants")
      return cmd_invariants(io, take_group(group_flag, payload), payload);
    if (verb == "verify") return cmd_verify(io, payload);
    if (verb == "orbit") return cmd_orbit(io, take_group(group_flag, payload), payload);
    if (verb == "witness") return cmd_witness(io, payload);
    throw std::invalid_argument("unknown verb");
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace qv
