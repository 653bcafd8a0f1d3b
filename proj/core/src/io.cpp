#include "whitefact/io.hpp"

#include <fstream>
#include <sstream>

namespace whitefact {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t index_from_json(const json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    bad(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

std::size_t factor_index(const FactorSystem& system, const json& j) {
  const std::size_t f = index_from_json(j, "factor index");
  if (f == 0 || f > system.rank()) bad("factor index " + std::to_string(f) + " out of range");
  return f;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

json load_json(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  std::string text;
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) bad("cannot read " + arg);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long long>());
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    const std::size_t digits = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == digits || s.find_first_not_of("0123456789", digits) != std::string::npos)
      bad("invalid integer \"" + s + "\"");
    return Integer(s);
  }
  bad("expected an integer payload");
}

SystemRef system_from_json(const json& j) {
  const json& list = field(j, "factors");
  if (!list.is_array()) bad("\"factors\" must be an array");
  std::vector<FactorGroup> factors;
  try {
    for (const json& f : list) {
      const std::string kind = field(f, "kind").get<std::string>();
      if (kind == "cyclic") {
        factors.push_back(FactorGroup::cyclic(integer_from_json(field(f, "order"))));
      } else if (kind == "int") {
        factors.push_back(FactorGroup::infinite_cyclic());
      } else if (kind == "table") {
        auto names = field(f, "elements").get<std::vector<std::string>>();
        auto table = field(f, "table").get<std::vector<std::vector<std::size_t>>>();
        const std::size_t id = index_from_json(field(f, "identity"), "identity");
        std::optional<std::vector<std::size_t>> inverse;
        if (f.contains("inverse")) inverse = f.at("inverse").get<std::vector<std::size_t>>();
        factors.push_back(FactorGroup::table(std::move(names), std::move(table), id,
                                             std::move(inverse)));
      } else {
        bad("unknown factor kind \"" + kind + "\"");
      }
    }
  } catch (const json::exception& e) {
    bad(std::string("malformed factor: ") + e.what());
  }
  return make_system(std::move(factors));
}

json system_to_json(const FactorSystem& system) {
  json list = json::array();
  for (const auto& g : system.factors()) {
    switch (g.kind()) {
      case FactorKind::cyclic:
        list.push_back({{"kind", "cyclic"}, {"order", integer_to_json(g.order())}});
        break;
      case FactorKind::infinite_cyclic:
        list.push_back({{"kind", "int"}});
        break;
      case FactorKind::table:
        list.push_back({{"kind", "table"},
                        {"elements", g.names()},
                        {"table", g.cayley()},
                        {"identity", g.identity_index()},
                        {"inverse", g.inverse_table()}});
        break;
    }
  }
  return {{"factors", list}};
}

FactorElement element_from_json(const FactorSystem& system, const json& j) {
  if (!j.is_array() || j.size() != 2) bad("element must be [factor, payload]");
  const std::size_t f = factor_index(system, j[0]);
  FactorElement x{f, integer_from_json(j[1])};
  if (!system.factor(f).contains(x))
    bad("payload " + x.value.str() + " is not an element of factor " + std::to_string(f));
  return x;
}

json element_to_json(const FactorElement& x) {
  return json::array({x.factor, integer_to_json(x.value)});
}

Word word_from_json(const SystemRef& system, const json& j) {
  if (!j.is_array()) bad("word must be an array of [factor, payload] pairs");
  std::vector<FactorElement> letters;
  for (const json& s : j) letters.push_back(element_from_json(*system, s));
  return Word::reduce(system, letters);
}

json word_to_json(const Word& w) {
  json out = json::array();
  for (const auto& s : w.syllables()) out.push_back(element_to_json(s));
  return out;
}

TreeVertex vertex_from_string(const SystemRef& system, const std::string& name) {
  const auto colon = name.find(':');
  if (colon == std::string::npos) bad("vertex must be \"U:<word>\" or \"C<i>:<word>\"");
  const std::string tag = name.substr(0, colon);
  json word;
  try {
    word = json::parse(name.substr(colon + 1));
  } catch (const json::parse_error& e) {
    bad(std::string("invalid vertex word: ") + e.what());
  }
  const Word rep = word_from_json(system, word);
  if (tag == "U") return TreeVertex::u(rep);
  if (tag.size() > 1 && tag[0] == 'C' &&
      tag.find_first_not_of("0123456789", 1) == std::string::npos) {
    const std::size_t f = std::stoul(tag.substr(1));
    if (f == 0 || f > system->rank()) bad("factor index " + tag.substr(1) + " out of range");
    return TreeVertex::c(f, rep);
  }
  bad("unknown vertex tag \"" + tag + "\"");
}

namespace {

std::vector<Word> tuple_from_json(const SystemRef& system, const json& j) {
  if (!j.is_array()) bad("tuple must be an array of words");
  if (j.size() != system->rank())
    bad("tuple has " + std::to_string(j.size()) + " slots, system has " +
        std::to_string(system->rank()) + " factors");
  std::vector<Word> out;
  for (const json& w : j) out.push_back(word_from_json(system, w));
  return out;
}

json tuple_to_json(const std::vector<Word>& slots) {
  json out = json::array();
  for (const Word& w : slots) out.push_back(word_to_json(w));
  return out;
}

}  // namespace

AlphaLabel alpha_from_json(const SystemRef& system, const json& j) {
  return AlphaLabel(tuple_from_json(system, field(j, "alpha")));
}

json alpha_to_json(const AlphaLabel& l) { return {{"alpha", tuple_to_json(l.slots())}}; }

ALabel a_from_json(const SystemRef& system, const json& j) {
  const json& body = field(j, "A");
  const std::size_t apex = factor_index(*system, field(body, "apex"));
  return ALabel(apex, tuple_from_json(system, field(body, "tuple")));
}

json a_to_json(const ALabel& l) {
  return {{"A", {{"apex", l.apex()}, {"tuple", tuple_to_json(l.slots())}}}};
}

FactorAutoPart phi_from_json(const FactorGroup& g, const json& j) {
  FactorAutoPart p = identity_part(g);
  if (j.is_null()) return p;
  const std::string kind = field(j, "kind").get<std::string>();
  switch (g.kind()) {
    case FactorKind::cyclic:
      if (kind != "mult") bad("cyclic factor " + std::to_string(g.id()) + " expects \"mult\"");
      p.multiplier = integer_from_json(field(j, "value"));
      break;
    case FactorKind::infinite_cyclic:
      if (kind != "sign") bad("infinite cyclic factor " + std::to_string(g.id()) + " expects \"sign\"");
      p.multiplier = integer_from_json(field(j, "value"));
      break;
    case FactorKind::table:
      if (kind != "perm") bad("table factor " + std::to_string(g.id()) + " expects \"perm\"");
      try {
        p.perm = field(j, "map").get<std::vector<std::size_t>>();
      } catch (const json::exception& e) {
        bad(std::string("malformed permutation: ") + e.what());
      }
      break;
  }
  if (auto err = validate_part(g, p))
    throw DomainError("factor " + std::to_string(g.id()) + ": " + *err);
  return p;
}

json phi_to_json(const FactorGroup& g, const FactorAutoPart& phi) {
  switch (g.kind()) {
    case FactorKind::cyclic:
      return {{"kind", "mult"}, {"value", integer_to_json(phi.multiplier)}};
    case FactorKind::infinite_cyclic:
      return {{"kind", "sign"}, {"value", integer_to_json(phi.multiplier)}};
    case FactorKind::table:
      return {{"kind", "perm"}, {"map", phi.perm}};
  }
  return nullptr;
}

PureSymmetricAuto auto_from_json(const SystemRef& system, const json& j) {
  const json& list = field(j, "parts");
  if (!list.is_array() || list.size() != system->rank())
    bad("\"parts\" must list one entry per factor");
  std::vector<AutoPart> parts;
  for (std::size_t k = 1; k <= system->rank(); ++k) {
    const json& p = list[k - 1];
    if (!p.is_object()) bad("auto part must be an object");
    const FactorGroup& g = system->factor(k);
    parts.push_back({phi_from_json(g, p.value("phi", json())),
                     word_from_json(system, p.value("g", json::array()))});
  }
  return PureSymmetricAuto(system, std::move(parts));
}

json auto_to_json(const PureSymmetricAuto& psi) {
  json parts = json::array();
  for (std::size_t k = 1; k <= psi.system()->rank(); ++k) {
    const AutoPart& p = psi.part(k);
    parts.push_back({{"phi", phi_to_json(psi.system()->factor(k), p.phi)},
                     {"g", word_to_json(p.conjugator)}});
  }
  return {{"parts", parts}};
}

WhiteheadAuto whitehead_from_json(const FactorSystem& system, const json& j) {
  const json& y = field(j, "Y");
  if (!y.is_array()) bad("\"Y\" must be an array of factor indices");
  std::vector<std::size_t> targets;
  for (const json& f : y) targets.push_back(factor_index(system, f));
  return make_whitehead(system, std::move(targets), element_from_json(system, field(j, "x")));
}

json whitehead_to_json(const WhiteheadAuto& w) {
  return {{"Y", w.targets}, {"x", element_to_json(w.x)}};
}

Factorization factorization_from_json(const SystemRef& system, const json& j) {
  Factorization f{{}, {}, Word(system)};
  const json& list = field(j, "whitehead");
  if (!list.is_array()) bad("\"whitehead\" must be an array");
  for (const json& w : list) f.whitehead.push_back(whitehead_from_json(*system, w));
  const json& factor = field(j, "factor");
  if (!factor.is_array() || factor.size() != system->rank())
    bad("\"factor\" must list one automorphism per factor");
  for (std::size_t k = 1; k <= system->rank(); ++k)
    f.factor.push_back(phi_from_json(system->factor(k), factor[k - 1]));
  f.inner = word_from_json(system, field(j, "inner"));
  return f;
}

json factorization_to_json(const FactorSystem& system, const Factorization& f) {
  json whitehead = json::array();
  for (const auto& w : f.whitehead) whitehead.push_back(whitehead_to_json(w));
  json factor = json::array();
  for (std::size_t k = 1; k <= system.rank(); ++k)
    factor.push_back(phi_to_json(system.factor(k), f.factor[k - 1]));
  return {{"whitehead", whitehead}, {"factor", factor}, {"inner", word_to_json(f.inner)}};
}

json moves_to_json(const std::vector<MoveRecord>& moves) {
  json out = json::array();
  for (const auto& m : moves)
    out.push_back({{"i", m.i},
                   {"j", m.j},
                   {"a", element_to_json(m.a)},
                   {"vol_before", m.vol_before},
                   {"vol_after", m.vol_after}});
  return out;
}

json ball_to_json(const Ball& ball) {
  json vertices = json::array();
  for (std::size_t k = 0; k < ball.vertices.size(); ++k) {
    json nbrs = json::array();
    for (std::size_t m : ball.adjacency[k]) nbrs.push_back(vertex_name(ball.vertices[m]));
    vertices.push_back({{"name", vertex_name(ball.vertices[k])},
                        {"depth", ball.depth[k]},
                        {"neighbours", nbrs}});
  }
  return {{"center", vertex_name(ball.center)}, {"radius", ball.radius}, {"vertices", vertices}};
}

std::string ball_to_dot(const Ball& ball) {
  std::ostringstream out;
  out << "graph ball {\n";
  for (const auto& v : ball.vertices)
    out << "  " << dot_quote(vertex_name(v)) << " [shape=" << (v.is_u() ? "point" : "circle")
        << "];\n";
  for (std::size_t k = 0; k < ball.vertices.size(); ++k)
    for (std::size_t m : ball.adjacency[k])
      if (k < m)
        out << "  " << dot_quote(vertex_name(ball.vertices[k])) << " -- "
            << dot_quote(vertex_name(ball.vertices[m])) << ";\n";
  out << "}\n";
  return out.str();
}

json sn_ball_to_json(const SnBall& ball) {
  json alpha = json::array();
  for (const auto& l : ball.alpha_classes) alpha.push_back(alpha_to_json(l));
  json a = json::array();
  for (const auto& m : ball.a_classes) a.push_back(a_to_json(m));
  json edges = json::array();
  for (const auto& [x, y] : ball.edges) edges.push_back(json::array({x, y}));
  return {{"bound", ball.bound},
          {"candidates", ball.candidates},
          {"non_splitting", ball.non_splitting},
          {"alpha_classes", alpha},
          {"a_classes", a},
          {"edges", edges}};
}

std::string sn_ball_to_dot(const SnBall& ball) {
  std::ostringstream out;
  out << "graph sn {\n";
  for (std::size_t k = 0; k < ball.alpha_classes.size(); ++k)
    out << "  a" << k << " [shape=circle, label="
        << dot_quote(alpha_to_json(ball.alpha_classes[k])["alpha"].dump()) << "];\n";
  for (std::size_t k = 0; k < ball.a_classes.size(); ++k)
    out << "  A" << k << " [shape=box, label="
        << dot_quote(std::to_string(ball.a_classes[k].apex()) + " " +
                     a_to_json(ball.a_classes[k])["A"]["tuple"].dump())
        << "];\n";
  for (const auto& [x, y] : ball.edges) out << "  a" << x << " -- A" << y << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace whitefact
