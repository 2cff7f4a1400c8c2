#include "solfour/cli/catalog_id.hpp"

#include <fstream>
#include <sstream>

#include "solfour/classify/pipeline.hpp"
#include "solfour/cli/json_io.hpp"
#include "solfour/ext/catalog.hpp"

namespace solfour::cli {

namespace {

// "name(args)" -> args, if the id has that form.
std::optional<std::string_view> call_args(std::string_view id, std::string_view name) {
  if (id.size() < name.size() + 2 || id.substr(0, name.size()) != name || id[name.size()] != '(' || id.back() != ')')
    return std::nullopt;
  return id.substr(name.size() + 1, id.size() - name.size() - 2);
}

std::pair<std::string_view, std::string_view> split_top_level(std::string_view s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(' || s[i] == '[') ++depth;
    if (s[i] == ')' || s[i] == ']') --depth;
    if (s[i] == ',' && depth == 0) return {s.substr(0, i), s.substr(i + 1)};
  }
  throw ParseError("expected two comma-separated arguments in '" + std::string(s) + "'");
}

IntMatrix parse_2x2(std::string_view s) {
  IntMatrix m = parse_matrix(s);
  if (m.rows() != 2 || m.cols() != 2) throw ParseError("expected a 2x2 matrix literal, got '" + std::string(s) + "'");
  return m;
}

}  // namespace

classify::PillowcaseInvariant parse_invariant(std::string_view text) {
  if (text.find(';') != std::string_view::npos) return classify::normalize(parse_2x2(text));
  const IntVector v = parse_vector(text);
  if (v.size() != 3) throw ParseError("expected p,q,r or a 2x2 matrix literal");
  return classify::normalize(classify::PillowcaseInvariant{v[0], v[1], v[2]});
}

ResolvedGroup resolve_group(std::string_view id) {
  namespace cat = ext::catalog;
  const std::string sid(id);
  if (id == "Dinf") return {sid, cat::dinf()};
  if (id == "G2") return {sid, cat::g2()};
  if (id == "B1") return {sid, cat::b1()};
  if (id == "B1-sd-theta") return {sid, cat::b1_sd_theta()};
  if (id == "sigma")
    return {sid, cat::sigma(), false, {"relation u y u^-1 = y^-1 used; with u y u^-1 = y the action of uv has finite order"}};
  if (id == "sigma-variant")
    return {sid, cat::sigma_printed(), false, {"u acts trivially; uv acts with finite order, so this is not a Sol^3 group"}};
  if (id == "sigma-x-Z") return {sid, cat::sigma_times_z()};
  if (auto a = call_args(id, "kb-monodromy")) return {sid, cat::kb_monodromy(parse_2x2(*a))};
  if (auto a = call_args(id, "bordered")) {
    const auto [xi, psi] = split_top_level(*a);
    return {sid, cat::bordered(parse_vector(xi), parse_2x2(psi))};
  }
  if (auto a = call_args(id, "pillowcase")) {
    const auto psi = parse_invariant(*a);
    return {sid, ext::ExtensionGroup(classify::pillowcase_data(psi)), true};
  }

  std::ifstream in(sid);
  if (!in) throw ParseError("unknown catalog id or unreadable file '" + sid + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("group description '" + sid + "' is not valid JSON: " + e.what());
  }
  return {sid, group_from_json(j)};
}

}  // namespace solfour::cli
