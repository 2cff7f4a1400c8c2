#include "solfour/cli/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "solfour/classify/pipeline.hpp"
#include "solfour/ext/analysis.hpp"
#include "solfour/ext/catalog.hpp"
#include "solfour/gl2z/gl2z.hpp"

namespace solfour::cli {

json to_json(const VerificationReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back({{"input", f.input}, {"expected", f.expected}, {"actual", f.actual}});
  json params = json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  return {{"schema", "solfour.verify/1"},
          {"suite", r.suite},
          {"passed", r.passed()},
          {"instances", r.instances},
          {"failures", failures},
          {"elapsed_ms", r.elapsed_ms},
          {"parameters", params},
          {"notes", r.notes}};
}

namespace {

using Outcome = std::optional<SuiteFailure>;

struct Instance {
  std::string key;
  std::function<Outcome()> run;
};

Outcome fail(std::string input, std::string expected, std::string actual) {
  return SuiteFailure{std::move(input), std::move(expected), std::move(actual)};
}

void run_instances(VerificationReport& report, std::vector<Instance> instances) {
  std::stable_sort(instances.begin(), instances.end(), [](const Instance& a, const Instance& b) { return a.key < b.key; });
  std::vector<Outcome> results(instances.size());
  const auto count = static_cast<std::int64_t>(instances.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto& inst = instances[static_cast<std::size_t>(i)];
    try {
      results[static_cast<std::size_t>(i)] = inst.run();
    } catch (const std::exception& e) {
      results[static_cast<std::size_t>(i)] = fail(inst.key, "no exception", e.what());
    }
  }
  report.instances += instances.size();
  for (auto& r : results)
    if (r) report.failures.push_back(std::move(*r));
}

std::string str(const IntMatrix& m) { return format_matrix(m); }
std::string str(const Int& x) { return x.get_str(); }
std::string str(bool b) { return b ? "true" : "false"; }
std::string str(const classify::PillowcaseInvariant& psi) {
  return "(" + psi.p.get_str() + "," + psi.q.get_str() + "," + psi.r.get_str() + ")";
}

// All 2x2 matrices with entries in [-box, box] and |det| = 1, in a fixed order.
std::vector<IntMatrix> unimodular_box(long box) {
  std::vector<IntMatrix> out;
  for (long a = -box; a <= box; ++a)
    for (long b = -box; b <= box; ++b)
      for (long c = -box; c <= box; ++c)
        for (long d = -box; d <= box; ++d)
          if (a * d - b * c == 1 || a * d - b * c == -1) out.push_back(IntMatrix{{a, b}, {c, d}});
  return out;
}

std::optional<int> order_by_powering(const IntMatrix& m) {
  IntMatrix p = m;
  for (int k = 1; k <= 12; ++k) {
    if (p.is_identity()) return k;
    p = p * m;
  }
  return std::nullopt;
}

void order_twelve(VerificationReport& rep, const SuiteParameters& prm) {
  rep.parameters["box"] = prm.box;
  std::vector<Instance> inst;
  for (const auto& m : unimodular_box(prm.box))
    inst.push_back({str(m), [m]() -> Outcome {
                      const auto ord = gl2z::element_order(m);
                      const auto direct = order_by_powering(m);
                      const bool twelve = mat_pow(m, 12).is_identity();
                      if (ord != direct) return fail(str(m), "order by powering", "element_order disagrees");
                      if (ord.has_value() != twelve) return fail(str(m), "finite iff M^12 = I", "mismatch");
                      if (ord && *ord != 1 && *ord != 2 && *ord != 3 && *ord != 4 && *ord != 6)
                        return fail(str(m), "order in {1,2,3,4,6}", std::to_string(*ord));
                      return std::nullopt;
                    }});
  run_instances(rep, std::move(inst));
}

void finite_subgroups(VerificationReport& rep, const SuiteParameters& prm) {
  rep.parameters["box"] = prm.box;
  rep.parameters["bound"] = prm.bound;
  using gl2z::FiniteClass;
  static const FiniteClass kClasses[] = {FiniteClass::Reflection, FiniteClass::Swap, FiniteClass::Order3, FiniteClass::Order4,
                                        FiniteClass::Order6};
  const int bound = static_cast<int>(prm.bound);
  std::vector<Instance> inst;
  for (const auto& m : unimodular_box(prm.box)) {
    if (!gl2z::element_order(m) || m.is_identity() || (-m).is_identity()) continue;
    inst.push_back({str(m), [m, bound]() -> Outcome {
                      std::vector<FiniteClass> hits;
                      for (auto c : kClasses) {
                        const IntMatrix rep = gl2z::representative(c);
                        if (auto conj = gl2z::conjugate_in_gl2z(rep, m, bound)) {
                          if (!(*conj * rep * inverse_unimodular(*conj) == m))
                            return fail(str(m), "valid conjugator", "C R C^-1 != M");
                          hits.push_back(c);
                        }
                      }
                      if (hits.size() != 1)
                        return fail(str(m), "exactly one conjugate representative", std::to_string(hits.size()) + " found");
                      const auto tag = gl2z::finite_order_class(m).tag;
                      if (tag != hits.front())
                        return fail(str(m), std::string(gl2z::to_string(hits.front())), std::string(gl2z::to_string(tag)));
                      if (gl2z::element_order(m) == 2 && determinant(m) == -1) {
                        const bool mod2 = reduce_mod(m, 2).is_identity();
                        if (mod2 != (hits.front() == FiniteClass::Reflection))
                          return fail(str(m), "mod-2 discriminator agrees with search", "disagrees");
                      }
                      return std::nullopt;
                    }});
  }
  run_instances(rep, std::move(inst));
}

void two_ended(VerificationReport& rep, const SuiteParameters& prm) {
  rep.parameters["box"] = prm.box;
  const IntMatrix minus = -IntMatrix::identity(2);
  const std::vector<IntMatrix> conjugators{IntMatrix{{1, 1}, {0, 1}}, IntMatrix{{2, 1}, {1, 1}}, IntMatrix{{0, 1}, {1, 0}}};
  const auto box = unimodular_box(prm.box);
  std::vector<IntMatrix> involutions, order4;
  std::vector<Instance> inst;
  for (const auto& m : box) {
    const auto ord = gl2z::element_order(m);
    if (!ord) {
      inst.push_back({"single " + str(m), [m, minus]() -> Outcome {
                        const IntMatrix gens1[] = {m};
                        const IntMatrix gens2[] = {m, minus};
                        const auto t1 = gl2z::two_ended_type(gens1);
                        const auto t2 = gl2z::two_ended_type(gens2);
                        if (t1.case_number != 1 || t2.case_number != 2)
                          return fail(str(m), "cases 1 and 2",
                                      std::to_string(t1.case_number) + "," + std::to_string(t2.case_number));
                        return std::nullopt;
                      }});
    } else if (*ord == 2 && !(m == minus)) {
      involutions.push_back(m);
    } else if (*ord == 4) {
      order4.push_back(m);
    }
  }
  auto pair_check = [&](const IntMatrix& a, const IntMatrix& b, std::vector<int> allowed) {
    if (gl2z::element_order(a * b)) return;
    const std::string key = "pair " + str(a) + " | " + str(b);
    inst.push_back({key, [a, b, allowed, conjugators, key]() -> Outcome {
                      const IntMatrix ab[] = {a, b};
                      const IntMatrix ba[] = {b, a};
                      const auto t = gl2z::two_ended_type(ab);
                      if (std::find(allowed.begin(), allowed.end(), t.case_number) == allowed.end())
                        return fail(key, "case in allowed set", std::to_string(t.case_number));
                      const IntMatrix& A = t.witnesses.at(0);
                      const IntMatrix& B = t.witnesses.at(1);
                      const IntMatrix minus = -IntMatrix::identity(2);
                      switch (t.case_number) {
                        case 3:
                        case 4:
                          if (!(A * A).is_identity() || !(B * B).is_identity()) return fail(key, "A^2 = B^2 = I", "violated");
                          break;
                        case 5:
                          if (!(A * A == minus) || !(B * B).is_identity()) return fail(key, "A^2 = -I, B^2 = I", "violated");
                          break;
                        case 6:
                          if (!(A * A == minus) || !(B * B == minus)) return fail(key, "A^2 = B^2 = -I", "violated");
                          break;
                        default: return fail(key, "case 3-6", std::to_string(t.case_number));
                      }
                      if (gl2z::two_ended_type(ba).case_number != t.case_number)
                        return fail(key, "typing symmetric in (A, B)", "differs");
                      for (const auto& c : conjugators) {
                        const IntMatrix ci = inverse_unimodular(c);
                        const IntMatrix conj[] = {c * a * ci, c * b * ci};
                        if (gl2z::two_ended_type(conj).case_number != t.case_number)
                          return fail(key, "typing invariant under conjugation by " + str(c), "differs");
                      }
                      return std::nullopt;
                    }});
  };
  for (std::size_t i = 0; i < involutions.size(); ++i)
    for (std::size_t j = i + 1; j < involutions.size(); ++j) pair_check(involutions[i], involutions[j], {3, 4});
  for (const auto& a : order4) {
    for (const auto& b : involutions) pair_check(a, b, {5});
    for (const auto& b : order4)
      if (a < b) pair_check(a, b, {6});
  }
  run_instances(rep, std::move(inst));
}

IntMatrix random_unimodular3(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  for (;;) {
    IntMatrix c(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) c(i, j) = dist(rng);
    if (abs(determinant(c)) == 1) return c;
  }
}

void invariant_roundtrip(VerificationReport& rep, const SuiteParameters& prm) {
  rep.parameters["max"] = prm.max_entry;
  rep.parameters["samples"] = prm.samples;
  rep.parameters["box"] = prm.box;
  const long samples = prm.samples;
  const long box = prm.box;
  std::vector<Instance> inst;
  const auto all = classify::enumerate(prm.max_entry);
  for (std::size_t idx = 0; idx < all.size(); ++idx) {
    const auto psi = all[idx];
    inst.push_back({str(psi), [psi, samples, box, idx]() -> Outcome {
                      const auto pg = classify::presentation_from_invariant(psi);
                      const auto& g = pg.group;
                      const IntMatrix& U = g.generator_action(0);
                      const IntMatrix& V = g.generator_action(1);
                      const IntVector& su = g.square_cocycle(0);
                      const IntVector& sv = g.square_cocycle(1);
                      const auto back = classify::from_extension(U, V, su, sv);
                      if (!(back == psi)) return fail(str(psi), str(psi), str(back));
                      std::mt19937_64 rng(0x5eedULL + idx);
                      for (long s = 0; s < samples; ++s) {
                        const IntMatrix c = random_unimodular3(rng, box);
                        const IntMatrix ci = inverse_unimodular(c);
                        const auto conj = classify::from_extension(c * U * ci, c * V * ci, c * su, c * sv);
                        if (!(conj == psi)) return fail(str(psi) + " conjugated by " + str(c), str(psi), str(conj));
                      }
                      return std::nullopt;
                    }});
  }
  run_instances(rep, std::move(inst));
}

void corollary_h1(VerificationReport& rep, const SuiteParameters& prm) {
  rep.parameters["max"] = prm.max_entry;
  std::vector<Instance> inst;
  for (const auto& psi : classify::enumerate(prm.max_entry))
    inst.push_back({str(psi), [psi]() -> Outcome {
                      const auto r = classify::homology_report(psi);
                      if (r.h1.free_rank != 0) return fail(str(psi), "beta_1 = 0", std::to_string(r.h1.free_rank));
                      if (!r.w1_factors) return fail(str(psi), "w1 factors through Z/4", "false");
                      bool ok = true;
                      std::string got;
                      for (const auto& [name, ord] : r.orders) {
                        const long want = (name == "u" || name == "v") ? 4 : 2;
                        ok = ok && ord && *ord == want;
                        got += (got.empty() ? "" : ",") + name + "=" + (ord ? str(*ord) : "inf");
                      }
                      if (!ok) return fail(str(psi), "u=4,v=4,x=2,y=2,z=2", got);
                      return std::nullopt;
                    }});
  run_instances(rep, std::move(inst));
}

void bordered_family(VerificationReport& rep, const SuiteParameters& prm) {
  rep.parameters["a-max"] = prm.a_max;
  std::vector<Instance> inst;
  for (long a = 2; a <= prm.a_max; ++a) {
    const long n = a * a - 1;
    for (long b = -n; b <= n; ++b) {
      if (b == 0 || n % b) continue;
      const IntMatrix psi{{a, b}, {n / b, a}};
      inst.push_back({"det " + str(psi), [psi, a]() -> Outcome {
                        const Int d = abs(determinant(IntMatrix::identity(2) - psi));
                        if (d != 2 * (a - 1)) return fail(str(psi), std::to_string(2 * (a - 1)), str(d));
                        return std::nullopt;
                      }});
    }
  }
  const IntMatrix psi{{3, 2}, {4, 3}};
  inst.push_back({"bordered (1,0)", [psi]() -> Outcome {
                    const IntVector xi{1, 0};
                    const bool split = ext::is_block_diagonalizable(ext::catalog::bordered_matrix(xi, psi));
                    if (split) return fail("xi=(1,0)", "not block diagonalizable", "block diagonalizable");
                    const auto c = ext::center(ext::catalog::bordered(xi, psi));
                    if (c.rank != 1) return fail("xi=(1,0)", "center rank 1", std::to_string(c.rank));
                    return std::nullopt;
                  }});
  inst.push_back({"bordered (-2,-4)", [psi]() -> Outcome {
                    const bool split = ext::is_block_diagonalizable(ext::catalog::bordered_matrix({-2, -4}, psi));
                    if (!split) return fail("xi=(-2,-4)", "block diagonalizable", "not block diagonalizable");
                    return std::nullopt;
                  }});
  run_instances(rep, std::move(inst));
}

// Image of an element under the homomorphism given by generator images.
ext::GroupElement apply(const ext::ExtensionGroup& g, std::span<const ext::GroupElement> images, const ext::GroupElement& a) {
  ext::Word w = g.lattice_word(a.t);
  for (const auto& s : g.quotient_syllables(a.q)) w.push_back(s);
  ext::GroupElement r = g.identity();
  for (const auto& s : w) r = g.multiply(r, g.power(images[s.gen], s.exp));
  return r;
}

void worked_examples(VerificationReport& rep, const SuiteParameters&) {
  namespace cat = ext::catalog;
  rep.notes.push_back("sigma uses u y u^-1 = y^-1; with u y u^-1 = y the action of uv has finite order (checked below)");
  std::vector<Instance> inst;
  inst.push_back({"kb-monodromy center", []() -> Outcome {
                    const auto g = cat::kb_monodromy(IntMatrix{{3, 2}, {4, 3}});
                    const auto c = ext::center(g);
                    const auto gens = c.generators(g);
                    if (c.rank != 1 || gens.size() != 1) return fail("kb-monodromy(3,2;4,3)", "rank 1, one generator", std::to_string(c.rank));
                    if (g.format(gens.front()) != "x^2") return fail("kb-monodromy(3,2;4,3)", "x^2", g.format(gens.front()));
                    return std::nullopt;
                  }});
  inst.push_back({"sigma f", []() -> Outcome {
                    const auto g = cat::sigma();
                    const auto images = cat::sigma_f_images(g);
                    if (!ext::verify_homomorphism(cat::sigma_presentation(), images, g))
                      return fail("f", "relators map to 1", "some relator fails");
                    // Lattice part: images of x and y are lattice elements.
                    IntMatrix p = IntMatrix::from_columns({images[2].t, images[3].t}, 2);
                    if (!(p == cat::sigma_f_lattice_matrix())) return fail("f", "P = 3,4;-2,-3", str(p));
                    if (!(p * p).is_identity() || determinant(p) != -1) return fail("f", "P^2 = I, det P = -1", str(p));
                    // f(uv) = vu = (uv)^-1 mod lattice, so epsilon = -1.
                    const auto uv = g.evaluate("u v");
                    const auto fuv = g.multiply(images[0], images[1]);
                    const int eps = fuv.q == g.inverse(uv).q ? -1 : (fuv.q == uv.q ? 1 : 0);
                    if (eps * determinant(p) != 1) return fail("f", "epsilon det P = +1", std::to_string(eps) + " * " + str(determinant(p)));
                    for (std::size_t j = 0; j < 4; ++j)
                      if (!(apply(g, images, images[j]) == g.generator(j))) return fail("f", "f is an involution", "f^2 != id");
                    return std::nullopt;
                  }});
  inst.push_back({"sigma orientable", []() -> Outcome {
                    const auto g = cat::sigma();
                    for (std::size_t j = 0; j < 4; ++j)
                      if (ext::orientation_character(g, g.generator(j)) != 0) return fail("sigma", "orientable", "generator reverses");
                    if (ext::geometry(g) != ext::Geometry::Sol3) return fail("sigma", "Sol3", std::string(ext::to_string(ext::geometry(g))));
                    return std::nullopt;
                  }});
  inst.push_back({"sigma printed variant", []() -> Outcome {
                    const auto g = cat::sigma_printed();
                    if (ext::geometry(g) != ext::Geometry::NotSol) return fail("sigma-variant", "NotSol", "Sol");
                    return std::nullopt;
                  }});
  inst.push_back({"B1 theta", []() -> Outcome {
                    const auto g = cat::b1();
                    const auto images = cat::b1_theta_images(g);
                    if (!ext::verify_homomorphism(cat::b1_presentation(), images, g))
                      return fail("theta", "relators map to 1", "some relator fails");
                    // On B1/<y> = <t> x <x>: exponents (a, 2b + epsilon) for lattice part (a, b, 0) and x^epsilon.
                    IntMatrix m(2, 2);
                    for (std::size_t j = 0; j < 2; ++j) {
                      m(0, j) = images[j].t[0];
                      m(1, j) = 2 * images[j].t[1] + images[j].q.a;
                    }
                    if (!(m == IntMatrix{{3, 4}, {2, 3}}) || abs(determinant(m)) != 1) return fail("theta", "3,4;2,3 unimodular", str(m));
                    return std::nullopt;
                  }});
  inst.push_back({"B1-sd-theta", []() -> Outcome {
                    const auto g = cat::b1_sd_theta();
                    if (!(g.evaluate("s t s^-1") == g.evaluate("t^3 x^2")) || !(g.evaluate("s x s^-1") == g.evaluate("t^4 x^3")) ||
                        !(g.evaluate("s y s^-1") == g.evaluate("y")))
                      return fail("B1-sd-theta", "conjugation by s realizes theta", "mismatch");
                    if (ext::orientation_character(g, g.evaluate("x")) != 1) return fail("B1-sd-theta", "non-orientable", "orientable");
                    return std::nullopt;
                  }});
  run_instances(rep, std::move(inst));
}

using SuiteFn = void (*)(VerificationReport&, const SuiteParameters&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> s{
      {"finite-subgroups", finite_subgroups}, {"order-twelve", order_twelve},   {"two-ended", two_ended},
      {"invariant-roundtrip", invariant_roundtrip}, {"corollary-h1", corollary_h1}, {"bordered-family", bordered_family},
      {"worked-examples", worked_examples}};
  return s;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [k, f] : suites()) n.push_back(k);
    return n;
  }();
  return names;
}

VerificationReport run_suite(const std::string& name, const SuiteParameters& params) {
  for (const auto& [k, fn] : suites()) {
    if (k != name) continue;
    VerificationReport rep;
    rep.suite = name;
    const auto t0 = std::chrono::steady_clock::now();
    fn(rep, params);
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace solfour::cli
