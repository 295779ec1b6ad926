#include "ehrlat/json_io.hpp"

#include <fstream>

namespace ehrlat {

namespace {

const Int kSafeInt = Int(1) << 53;

RatVec rat_vec_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("json: expected an array of rationals");
  RatVec v;
  for (const auto& e : j) v.push_back(rat_from_json(e));
  return v;
}

Json rat_vec_to_json(const RatVec& v) {
  Json j = Json::array();
  for (const auto& q : v) j.push_back(rat_to_json(q));
  return j;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw DomainError(std::string("json: missing field '") + key + "'");
  return j.at(key);
}

LinRow row_from_json(const Json& j) {
  LinRow row;
  row.b = rat_from_json(field(j, "b"));
  row.a = rat_vec_from_json(field(j, "a"));
  if (j.contains("strict")) {
    if (!j.at("strict").is_boolean()) throw DomainError("json: 'strict' must be a bool");
    row.strict = j.at("strict").get<bool>();
  }
  return row;
}

Json row_to_json(const LinRow& row, bool with_strict) {
  Json j = {{"b", rat_to_json(row.b)}, {"a", rat_vec_to_json(row.a)}};
  if (with_strict) j["strict"] = row.strict;
  return j;
}

const char* rel_name(Rel r) {
  switch (r) {
    case Rel::LT: return "<";
    case Rel::LE: return "<=";
    case Rel::EQ: return "=";
    case Rel::NE: return "!=";
    case Rel::GE: return ">=";
    case Rel::GT: return ">";
  }
  throw InternalError("rel_name: bad relation");
}

Rel rel_from_name(const std::string& s) {
  if (s == "<") return Rel::LT;
  if (s == "<=") return Rel::LE;
  if (s == "=") return Rel::EQ;
  if (s == "!=") return Rel::NE;
  if (s == ">=") return Rel::GE;
  if (s == ">") return Rel::GT;
  throw DomainError("json: unknown relation '" + s + "'");
}

std::vector<IntVec> int_vecs_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("json: expected an array of integer vectors");
  std::vector<IntVec> out;
  for (const auto& row : j) {
    if (!row.is_array()) throw DomainError("json: expected an integer vector");
    IntVec v;
    for (const auto& e : row) v.push_back(int_from_json(e));
    out.push_back(std::move(v));
  }
  return out;
}

Json int_vecs_to_json(const std::vector<IntVec>& vs) {
  Json j = Json::array();
  for (const auto& v : vs) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(int_to_json(x));
    j.push_back(std::move(row));
  }
  return j;
}

}  // namespace

Json int_to_json(const Int& v) {
  if (v < kSafeInt && -v < kSafeInt) return Json(v.get_si());
  return Json(v.get_str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw DomainError("json: malformed integer '" + j.get<std::string>() + "'");
    }
  }
  throw DomainError("json: expected an integer");
}

Json rat_to_json(const Rat& q) { return Json(format_rat(q)); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(Int(j.get<long>()));
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw DomainError("json: expected a rational");
}

Json to_json(const Polyhedron& p) {
  Json ineqs = Json::array(), eqs = Json::array();
  for (const auto& r : p.inequalities) ineqs.push_back(row_to_json(r, true));
  for (const auto& r : p.equations) eqs.push_back(row_to_json(r, false));
  return {{"dim", p.dim}, {"inequalities", ineqs}, {"equations", eqs}};
}

Polyhedron polyhedron_from_json(const Json& j) {
  Polyhedron p;
  p.dim = field(j, "dim").get<int>();
  if (p.dim < 0) throw DomainError("json: negative dimension");
  for (const auto& r : field(j, "inequalities")) p.inequalities.push_back(row_from_json(r));
  if (j.contains("equations"))
    for (const auto& r : j.at("equations")) p.equations.push_back(row_from_json(r));
  for (const auto& rows : {p.inequalities, p.equations})
    for (const auto& r : rows)
      if (int(r.a.size()) != p.dim) throw DomainError("json: row width disagrees with dim");
  return p;
}

Json to_json(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Atom:
      return {{"op", "atom"},
              {"atom",
               {{"coeffs_x", rat_vec_to_json(f.atom.coeffs)},
                {"coeff_k", rat_to_json(f.atom.dilation_coeff)},
                {"rel", rel_name(f.atom.rel)}}}};
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Not: {
      Json args = Json::array();
      for (const auto& c : f.children) args.push_back(to_json(c));
      const char* op = f.kind == Formula::Kind::And ? "and"
                       : f.kind == Formula::Kind::Or ? "or"
                                                     : "not";
      return {{"op", op}, {"args", args}};
    }
  }
  throw InternalError("to_json: bad formula kind");
}

Formula formula_from_json(const Json& j) {
  std::string op = field(j, "op").get<std::string>();
  if (op == "atom") {
    const Json& a = field(j, "atom");
    Atom atom;
    atom.coeffs = rat_vec_from_json(field(a, "coeffs_x"));
    atom.dilation_coeff = rat_from_json(field(a, "coeff_k"));
    atom.rel = rel_from_name(field(a, "rel").get<std::string>());
    return Formula::make_atom(std::move(atom));
  }
  std::vector<Formula> args;
  for (const auto& c : field(j, "args")) args.push_back(formula_from_json(c));
  if (op == "and") return Formula::make_and(std::move(args));
  if (op == "or") return Formula::make_or(std::move(args));
  if (op == "not") {
    if (args.size() != 1) throw DomainError("json: 'not' takes exactly one argument");
    return Formula::make_not(std::move(args[0]));
  }
  throw DomainError("json: unknown op '" + op + "'");
}

Json to_json(const GenFunc& g) {
  Json terms = Json::array();
  for (const auto& t : g.terms)
    terms.push_back({{"sign", t.sign},
                     {"num", int_vecs_to_json(t.num)},
                     {"den", int_vecs_to_json(t.den)}});
  return {{"terms", terms}};
}

GenFunc genfunc_from_json(const Json& j) {
  GenFunc g;
  for (const auto& t : field(j, "terms")) {
    GenFuncTerm term;
    term.sign = field(t, "sign").get<int>();
    if (term.sign != 1 && term.sign != -1) throw DomainError("json: sign must be +-1");
    term.num = int_vecs_from_json(field(t, "num"));
    term.den = int_vecs_from_json(field(t, "den"));
    g.terms.push_back(std::move(term));
  }
  return g;
}

Json to_json(const QuasiPolynomial& qp) {
  Json cs = Json::array();
  for (const auto& c : qp.constituents) cs.push_back(rat_vec_to_json(c));
  return {{"period", int_to_json(qp.period)}, {"degree", qp.degree}, {"constituents", cs}};
}

QuasiPolynomial quasipoly_from_json(const Json& j) {
  QuasiPolynomial qp;
  qp.period = int_from_json(field(j, "period"));
  qp.degree = field(j, "degree").get<int>();
  for (const auto& c : field(j, "constituents"))
    qp.constituents.push_back(rat_vec_from_json(c));
  if (qp.period < 1 || Int(qp.constituents.size()) != qp.period)
    throw DomainError("json: constituent count must equal the period");
  for (const auto& c : qp.constituents)
    if (int(c.size()) != qp.degree + 1)
      throw DomainError("json: constituent length must be degree + 1");
  return qp;
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges) edges.push_back(Json::array({u, v}));
  return {{"vertices", g.vertices}, {"edges", edges}, {"directed", g.directed}};
}

Graph graph_from_json(const Json& j) {
  Graph g;
  g.vertices = field(j, "vertices").get<int>();
  if (g.vertices < 0) throw DomainError("json: negative vertex count");
  for (const auto& e : field(j, "edges")) {
    if (!e.is_array() || e.size() != 2) throw DomainError("json: edge must be a pair");
    int u = e[0].get<int>(), v = e[1].get<int>();
    if (u < 0 || v < 0 || u >= g.vertices || v >= g.vertices)
      throw DomainError("json: edge endpoint out of range");
    g.edges.emplace_back(u, v);
  }
  if (j.contains("directed")) g.directed = j.at("directed").get<bool>();
  return g;
}

Json to_json(const SchedulingProblem& s) {
  return {{"jobs", s.jobs}, {"formula", to_json(s.formula)}};
}

SchedulingProblem scheduling_from_json(const Json& j) {
  SchedulingProblem s;
  s.jobs = field(j, "jobs").get<int>();
  if (s.jobs < 1) throw DomainError("json: jobs must be positive");
  s.formula = formula_from_json(field(j, "formula"));
  return s;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read: " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw DomainError("malformed json in " + path + ": " + e.what());
  }
}

}  // namespace ehrlat
