#include "solfour/cli/json_io.hpp"

namespace solfour::cli {

json to_json(const Int& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

json to_json(const IntVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

json to_json(const IntMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

json to_json(const classify::PillowcaseInvariant& psi) {
  return {{"p", to_json(psi.p)}, {"q", to_json(psi.q)}, {"r", to_json(psi.r)}};
}

json to_json(const CokernelInvariants& h1) {
  json t = json::array();
  for (const auto& d : h1.torsion) t.push_back(to_json(d));
  return {{"rank", h1.free_rank}, {"torsion", t}};
}

json to_json(const ext::ExtensionGroup& g) {
  json j;
  j["kind"] = std::string(ext::to_string(g.kind()));
  j["rank"] = g.rank();
  j["generators"] = g.quotient_names();
  j["latticeNames"] = g.lattice_names();
  json action = json::object(), cocycles = json::object();
  for (std::size_t k = 0; k < g.quotient_generator_count(); ++k) {
    const auto& name = g.quotient_names()[k];
    action[name] = to_json(g.generator_action(k));
    if (g.is_order_two(k)) cocycles[name] = to_json(g.square_cocycle(k));
  }
  j["action"] = action;
  j["cocycles"] = cocycles;
  if (g.kind() == ext::QuotientKind::ZxC2) j["commutator"] = to_json(g.commutator_cocycle());
  if (g.is_tagged()) {
    json s = json::object();
    for (const auto& [k, v] : g.data().axis_signs) s[k] = v;
    j["axisSigns"] = s;
  }
  return j;
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    Int x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw ParseError("malformed integer string in JSON");
    return x;
  }
  throw ParseError("expected an integer in JSON");
}

IntVector vector_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected a JSON array for a vector");
  std::vector<Int> xs;
  for (const auto& e : j) xs.push_back(int_from_json(e));
  return IntVector(std::move(xs));
}

IntMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected a JSON array of rows for a matrix");
  if (j.empty()) return {};  // rank-0 lattice
  std::vector<IntVector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  const std::size_t n = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != n) throw ParseError("ragged matrix rows in JSON");
  return IntMatrix::from_rows(rows, n);
}

classify::PillowcaseInvariant invariant_from_json(const json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("q") || !j.contains("r"))
    throw ParseError("invariant record needs p, q and r");
  return {int_from_json(j["p"]), int_from_json(j["q"]), int_from_json(j["r"])};
}

ext::ExtensionGroup group_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("group description must be a JSON object");
  try {
    ext::ExtensionData d;
    d.kind = ext::parse_quotient_kind(j.at("kind").get<std::string>());
    d.rank = j.at("rank").get<std::size_t>();
    if (j.contains("generators")) d.quotient_names = j["generators"].get<std::vector<std::string>>();
    if (j.contains("latticeNames")) d.lattice_names = j["latticeNames"].get<std::vector<std::string>>();
    if (j.contains("action"))
      for (const auto& [k, v] : j["action"].items()) d.action[k] = matrix_from_json(v);
    if (j.contains("cocycles"))
      for (const auto& [k, v] : j["cocycles"].items()) d.cocycles[k] = vector_from_json(v);
    if (j.contains("commutator")) d.commutator = vector_from_json(j["commutator"]);
    if (j.contains("axisSigns"))
      for (const auto& [k, v] : j["axisSigns"].items()) d.axis_signs[k] = v.get<int>();
    return ext::ExtensionGroup(std::move(d));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed group description: ") + e.what());
  }
}

}  // namespace solfour::cli
