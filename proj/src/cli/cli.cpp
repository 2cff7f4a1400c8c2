#include "solfour/cli/cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <functional>
#include <ostream>

#include "solfour/classify/pipeline.hpp"
#include "solfour/cli/catalog_id.hpp"
#include "solfour/cli/json_io.hpp"
#include "solfour/cli/verify.hpp"
#include "solfour/ext/analysis.hpp"
#include "solfour/gl2z/gl2z.hpp"

namespace solfour::cli {

namespace {

class SuiteFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void render_pretty(const json& j, std::ostream& os, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar_array = [](const json& a) {
    return std::all_of(a.begin(), a.end(), [](const json& e) { return !e.is_structured() || (e.is_array() && std::none_of(e.begin(), e.end(), [](const json& x) { return x.is_structured(); })); });
  };
  for (const auto& [k, v] : j.items()) {
    if (v.is_object()) {
      os << pad << k << ":\n";
      render_pretty(v, os, indent + 2);
    } else if (v.is_array() && !scalar_array(v)) {
      os << pad << k << ":\n";
      std::size_t i = 0;
      for (const auto& e : v) {
        os << pad << "  [" << i++ << "]\n";
        if (e.is_object())
          render_pretty(e, os, indent + 4);
        else
          os << pad << "    " << e.dump() << '\n';
      }
    } else {
      os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
  }
}

struct Output {
  std::ostream& out;
  bool pretty = false;

  void emit(const std::string& schema, json body) const {
    json j;
    j["schema"] = schema;
    for (auto& [k, v] : body.items()) j[k] = v;
    if (pretty)
      render_pretty(j, out, 0);
    else
      out << j.dump() << '\n';
  }
};

// Option storage for one invocation.
struct State {
  std::string m1, m2, u, v, su, sv, pq, id, suite;
  std::vector<std::string> many;
  long max_entry = 20;
  int max_word = 7;
  int bound = 10;
  SuiteParameters prm;
};

IntMatrix parse_2x2(const std::string& s) {
  IntMatrix m = parse_matrix(s);
  if (m.rows() != 2 || m.cols() != 2) throw ParseError("expected a 2x2 matrix literal");
  return m;
}

json orders_json(const ext::AbelianizationMap& ab) {
  json o = json::object();
  for (std::size_t j = 0; j < ab.generators.size(); ++j) {
    const auto ord = ab.generator_order(j);
    o[ab.generators[j]] = ord ? to_json(*ord) : json("infinite");
  }
  return o;
}

void add_invariant_commands(CLI::App& app, const Output& o, State& st, std::function<void()>& action) {
  auto* inv = app.add_subcommand("invariant", "Validate, normalize, compare and enumerate invariants");
  inv->require_subcommand(1);

  auto* validate = inv->add_subcommand("validate", "Check the constraints on a matrix");
  validate->add_option("matrix", st.m1, "matrix literal a,b;c,d")->required();
  validate->callback([&] {
    action = [&o, &st] {
      const IntMatrix m = parse_2x2(st.m1);
      const auto psi = classify::validate(m);
      o.emit("solfour.invariant/1", {{"valid", true}, {"invariant", to_json(psi)}});
    };
  });

  auto* normalize = inv->add_subcommand("normalize", "Representative with q > 0");
  normalize->add_option("matrix", st.m1)->required();
  normalize->callback([&] {
    action = [&o, &st] { o.emit("solfour.invariant/1", {{"invariant", to_json(classify::normalize(parse_2x2(st.m1)))}}); };
  });

  auto* isom = inv->add_subcommand("isom", "Whether two invariants give isomorphic groups");
  isom->add_option("first", st.m1)->required();
  isom->add_option("second", st.m2)->required();
  isom->callback([&] {
    action = [&o, &st] {
      const auto a = classify::normalize(parse_2x2(st.m1));
      const auto b = classify::normalize(parse_2x2(st.m2));
      o.emit("solfour.isomorphic/1", {{"isomorphic", classify::isomorphic(a, b)}, {"first", to_json(a)}, {"second", to_json(b)}});
    };
  });

  auto* enumerate = inv->add_subcommand("enumerate", "All invariants up to an entry bound");
  enumerate->add_option("--max", st.max_entry, "bound on |p|, q, r")->capture_default_str();
  enumerate->callback([&] {
    action = [&o, &st] {
      json list = json::array();
      for (const auto& psi : classify::enumerate(st.max_entry)) list.push_back(to_json(psi));
      o.emit("solfour.enumeration/1", {{"max", st.max_entry}, {"count", list.size()}, {"invariants", list}});
    };
  });

  auto* extract = inv->add_subcommand("extract", "Invariant of a D_inf-by-Z^3 extension");
  extract->add_option("--u", st.u, "action of u, 3x3 literal")->required();
  extract->add_option("--v", st.v, "action of v, 3x3 literal")->required();
  extract->add_option("--su", st.su, "u^2 as a vector")->required();
  extract->add_option("--sv", st.sv, "v^2 as a vector")->required();
  extract->callback([&] {
    action = [&o, &st] {
      const auto psi = classify::from_extension(parse_matrix(st.u), parse_matrix(st.v), parse_vector(st.su), parse_vector(st.sv));
      o.emit("solfour.invariant/1", {{"invariant", to_json(psi)}});
    };
  });

  auto* report = inv->add_subcommand("report", "Homology report for an invariant (p,q,r or matrix)");
  report->add_option("invariant", st.pq)->required();
  report->callback([&] {
    action = [&o, &st] {
      const auto r = classify::homology_report(parse_invariant(st.pq));
      json orders = json::object(), w1 = json::object();
      for (const auto& [name, ord] : r.orders) orders[name] = ord ? to_json(*ord) : json("infinite");
      for (std::size_t j = 0; j < r.orders.size() && j < r.w1_values.size(); ++j) w1[r.orders[j].first] = r.w1_values[j];
      o.emit("solfour.homology/1", {{"invariant", to_json(r.psi)},
                                    {"h1", to_json(r.h1)},
                                    {"beta1", r.h1.free_rank},
                                    {"orders", orders},
                                    {"w1FactorsThroughZ4", r.w1_factors},
                                    {"w1Lift", w1}});
    };
  });

  auto* pres = inv->add_subcommand("presentation", "Presentation of the group of an invariant");
  pres->add_option("invariant", st.pq)->required();
  pres->callback([&] {
    action = [&o, &st] {
      const auto pg = classify::presentation_from_invariant(parse_invariant(st.pq));
      json rel = json::array();
      for (const auto& w : pg.presentation.relators()) rel.push_back(pg.presentation.format(w));
      o.emit("solfour.presentation/1", {{"generators", pg.presentation.generators()}, {"relators", rel}, {"group", to_json(pg.group)}});
    };
  });
}

void add_group_commands(CLI::App& app, const Output& o, State& st, std::function<void()>& action) {
  auto* grp = app.add_subcommand("group", "Catalog groups and group description files");
  grp->require_subcommand(1);

  auto add = [&](const char* name, const char* help, std::function<void(const ResolvedGroup&)> body) {
    auto* c = grp->add_subcommand(name, help);
    c->add_option("id", st.id, "catalog id or JSON file")->required();
    if (std::string(name) == "torsion") c->add_option("--max-word", st.max_word, "longest quotient word")->capture_default_str();
    c->callback([&action, &st, body] { action = [body, &st] { body(resolve_group(st.id)); }; });
  };

  add("describe", "Extension data and geometry", [&o](const ResolvedGroup& r) {
    o.emit("solfour.group/1", {{"id", r.id},
                               {"group", to_json(r.group)},
                               {"hirschLength", ext::hirsch_length(r.group)},
                               {"geometry", std::string(ext::to_string(ext::geometry(r.group)))},
                               {"notes", r.notes}});
  });
  add("h1", "Abelianization", [&o](const ResolvedGroup& r) {
    const auto ab = ext::abelianization_map(r.group.presentation());
    json body = to_json(ab.invariants());
    body["orders"] = orders_json(ab);
    o.emit("solfour.h1/1", body);
  });
  add("center", "Centre", [&o](const ResolvedGroup& r) {
    const auto c = ext::center(r.group);
    json gens = json::array(), lattice = json::array();
    for (const auto& g : c.generators(r.group)) gens.push_back(r.group.format(g));
    for (const auto& v : c.fixed_lattice) lattice.push_back(to_json(v));
    json body{{"rank", c.rank}};
    if (gens.size() == 1) body["generator"] = gens.front();
    body["generators"] = gens;
    body["fixedLattice"] = lattice;
    o.emit("solfour.center/1", body);
  });
  add("torsion", "Torsion search over odd quotient words", [&o, &st](const ResolvedGroup& r) {
    const auto w = ext::find_torsion(r.group, st.max_word);
    json body{{"torsion_found", w.has_value()}, {"max_word", st.max_word}};
    if (w) body["witness"] = r.group.format(*w);
    o.emit("solfour.torsion/1", body);
  });
  add("w1", "Whether w1 factors through Z/4", [&o](const ResolvedGroup& r) {
    const auto f = ext::w1_factors_through_z4(r.group);
    const auto names = r.group.generator_names();
    json ch = json::object(), lift = json::object();
    for (std::size_t j = 0; j < names.size(); ++j) {
      ch[names[j]] = ext::orientation_character(r.group, r.group.generator(j));
      if (j < f.generator_values.size()) lift[names[j]] = f.generator_values[j];
    }
    o.emit("solfour.w1/1", {{"factors", f.factors}, {"character", ch}, {"lift", lift}});
  });
  add("ilattice", "Sublattice with torsion image in H1", [&o](const ResolvedGroup& r) {
    json basis = json::array();
    for (const auto& v : ext::i_lattice(r.group)) basis.push_back(to_json(v));
    o.emit("solfour.ilattice/1", {{"rank", basis.size()}, {"basis", basis}});
  });
  add("presentation", "Presentation implied by the extension data", [&o](const ResolvedGroup& r) {
    const auto p = r.group.presentation();
    json rel = json::array();
    for (const auto& w : p.relators()) rel.push_back(p.format(w));
    o.emit("solfour.presentation/1", {{"generators", p.generators()}, {"relators", rel}});
  });
}

void add_gl2z_commands(CLI::App& app, const Output& o, State& st, std::function<void()>& action) {
  auto* g = app.add_subcommand("gl2z", "Orders, classes and conjugacy in GL(2,Z)");
  g->require_subcommand(1);

  auto* order = g->add_subcommand("order", "Element order");
  order->add_option("matrix", st.m1)->required();
  order->callback([&] {
    action = [&o, &st] {
      const auto ord = gl2z::element_order(parse_2x2(st.m1));
      o.emit("solfour.order/1", {{"order", ord ? json(*ord) : json("infinite")}});
    };
  });
  auto* cls = g->add_subcommand("class", "Conjugacy class of a finite-order element");
  cls->add_option("matrix", st.m1)->required();
  cls->callback([&] {
    action = [&o, &st] {
      const auto c = gl2z::finite_order_class(parse_2x2(st.m1));
      o.emit("solfour.class/1", {{"class", std::string(gl2z::to_string(c.tag))}, {"representative", to_json(c.representative)}});
    };
  });
  auto* conj = g->add_subcommand("conjugate", "Bounded conjugator search, C M C^-1 = N");
  conj->add_option("m", st.m1)->required();
  conj->add_option("n", st.m2)->required();
  conj->add_option("--bound", st.bound)->capture_default_str();
  conj->callback([&] {
    action = [&o, &st] {
      const auto c = gl2z::conjugate_in_gl2z(parse_2x2(st.m1), parse_2x2(st.m2), st.bound);
      json body{{"found", c.has_value()}, {"bound", st.bound}};
      if (c) body["conjugator"] = to_json(*c);
      o.emit("solfour.conjugacy/1", body);
    };
  });
  auto* cent = g->add_subcommand("centralizer", "Centralizer elements with bounded entries");
  cent->add_option("matrix", st.m1)->required();
  cent->add_option("--bound", st.bound)->capture_default_str();
  cent->callback([&] {
    action = [&o, &st] {
      json list = json::array();
      for (const auto& c : gl2z::centralizer_sample(parse_2x2(st.m1), st.bound)) list.push_back(to_json(c));
      o.emit("solfour.centralizer/1", {{"bound", st.bound}, {"count", list.size()}, {"elements", list}});
    };
  });
  auto* te = g->add_subcommand("two-ended", "Case of a two-ended subgroup");
  te->add_option("generators", st.many)->required();
  te->callback([&] {
    action = [&o, &st] {
      std::vector<IntMatrix> gens;
      for (const auto& s : st.many) gens.push_back(parse_2x2(s));
      const auto t = gl2z::two_ended_type(gens);
      json w = json::array();
      for (const auto& m : t.witnesses) w.push_back(to_json(m));
      o.emit("solfour.twoended/1", {{"case", t.case_number},
                                    {"witnesses", w},
                                    {"hasMinusI", t.has_minus_identity},
                                    {"minusICertain", t.minus_identity_certain}});
    };
  });
  auto* mono = g->add_subcommand("monodromy", "Type of the image of the four pillowcase involutions");
  mono->add_option("images", st.many)->required();
  mono->callback([&] {
    action = [&o, &st] {
      std::vector<IntMatrix> imgs;
      for (const auto& s : st.many) imgs.push_back(parse_2x2(s));
      o.emit("solfour.monodromy/1", {{"image", std::string(gl2z::to_string(gl2z::monodromy_image_type(imgs)))}});
    };
  });
}

void add_verify_command(CLI::App& app, const Output& o, State& st, std::function<void()>& action) {
  auto* v = app.add_subcommand("verify", "Run a brute-force verification suite");
  v->add_option("suite", st.suite)->required()->check(CLI::IsMember(suite_names()));
  v->add_option("--box", st.prm.box, "entry bound of the matrix box")->capture_default_str();
  v->add_option("--bound", st.prm.bound, "conjugator entry bound")->capture_default_str();
  v->add_option("--max", st.prm.max_entry, "invariant entry bound")->capture_default_str();
  v->add_option("--samples", st.prm.samples, "random conjugations per invariant")->capture_default_str();
  v->add_option("--a-max", st.prm.a_max, "largest diagonal entry in the bordered family")->capture_default_str();
  v->add_option("--max-word", st.prm.max_word, "longest quotient word")->capture_default_str();
  v->callback([&] {
    action = [&o, &st] {
      const auto r = run_suite(st.suite, st.prm);
      json j = to_json(r);
      j.erase("schema");
      o.emit("solfour.verify/1", j);
      if (!r.passed()) throw SuiteFailed("suite " + st.suite + " reported failures");
    };
  });
}

void apply_thread_cap() {
  if (const char* s = std::getenv("SOLFOUR_THREADS")) {
    const int n = std::atoi(s);
    if (n > 0) omp_set_num_threads(n);
  }
}

json error_body(const std::string& what) { return {{"schema", "solfour.error/1"}, {"error", what}}; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  apply_thread_cap();
  CLI::App app{"Sol^3 x E^1 pillowcase classification toolkit", "solfour"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "human-readable output");
  Output o{out};
  State st;
  std::function<void()> action;
  add_invariant_commands(app, o, st, action);
  add_group_commands(app, o, st, action);
  add_gl2z_commands(app, o, st, action);
  add_verify_command(app, o, st, action);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }
  o.pretty = pretty;

  try {
    if (action) action();
    return kSuccess;
  } catch (const classify::InvariantError& e) {
    out << json{{"schema", "solfour.error/1"}, {"valid", false}, {"defect", std::string(classify::to_string(e.defect()))}, {"error", e.what()}}.dump()
        << '\n';
    err << e.what() << '\n';
    return kInputError;
  } catch (const SuiteFailed& e) {
    err << e.what() << '\n';
    return kBoundOrSuiteFailure;
  } catch (const BoundError& e) {
    out << error_body(e.what()).dump() << '\n';
    err << e.what() << '\n';
    return kBoundOrSuiteFailure;
  } catch (const std::invalid_argument& e) {
    out << error_body(e.what()).dump() << '\n';
    err << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace solfour::cli
