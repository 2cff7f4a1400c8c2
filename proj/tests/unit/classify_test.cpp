#include <doctest.h>

#include <algorithm>
#include <random>

#include "solfour/classify/invariant.hpp"
#include "solfour/classify/pipeline.hpp"
#include "solfour/ext/analysis.hpp"
#include "support.hpp"

using namespace solfour;
using namespace solfour::classify;
using testing_support::random_unimodular;
using testing_support::to_dense;

namespace {

Defect defect_of(const IntMatrix& m) {
  try {
    validate(m);
  } catch (const InvariantError& e) {
    return e.defect();
  }
  FAIL("expected a defect");
  return Defect::NotTwoByTwo;
}

PillowcaseInvariant from_oracle(const oracle::Psi& p) { return {p.p, p.q, p.r}; }

std::optional<Int> order_of(const HomologyReport& r, const std::string& name) {
  for (const auto& [n, o] : r.orders)
    if (n == name) return o;
  FAIL("missing generator " << name);
  return std::nullopt;
}

}  // namespace

TEST_CASE("validate examples") {
  CHECK(validate(IntMatrix{{3, 2}, {4, 3}}) == PillowcaseInvariant{3, 2, 4});
  CHECK(defect_of(IntMatrix{{3, -2}, {-4, 3}}) == Defect::NonPositiveQ);
  CHECK(defect_of(IntMatrix{{2, 1}, {3, 2}}) == Defect::EvenP);
}

TEST_CASE("validate names each constraint") {
  CHECK(defect_of(IntMatrix::identity(3)) == Defect::NotTwoByTwo);
  CHECK(defect_of(IntMatrix{{3, 2}, {4, 5}}) == Defect::UnequalDiagonal);
  CHECK(defect_of(IntMatrix{{1, 0}, {0, 1}}) == Defect::SmallP);
  CHECK(defect_of(IntMatrix{{3, 1}, {8, 3}}) == Defect::OddOffDiagonal);
  CHECK(defect_of(IntMatrix{{3, 2}, {2, 3}}) == Defect::DetNotOne);
  CHECK_FALSE(find_defect(IntMatrix{{-3, 4}, {2, -3}}).has_value());
}

TEST_CASE("normalize examples") {
  CHECK(normalize(IntMatrix{{3, -2}, {-4, 3}}) == PillowcaseInvariant{3, 2, 4});
  CHECK(normalize(IntMatrix{{3, 2}, {4, 3}}) == PillowcaseInvariant{3, 2, 4});
  CHECK(normalize(IntMatrix{{5, 4}, {6, 5}}) == PillowcaseInvariant{5, 4, 6});
  CHECK_THROWS_AS(normalize(IntMatrix{{2, 1}, {3, 2}}), InvariantError);
}

TEST_CASE("normalize is idempotent and inversion invariant") {
  for (const auto& psi : enumerate(65)) {
    CHECK(normalize(psi) == psi);
    CHECK(normalize(psi.matrix()) == psi);
    CHECK(normalize(psi.inverse_matrix()) == psi);
    CHECK((psi.matrix() * psi.inverse_matrix()).is_identity());
  }
}

TEST_CASE("isomorphic examples") {
  const PillowcaseInvariant a{3, 2, 4};
  CHECK(isomorphic(a, a));
  CHECK(isomorphic(a, normalize(a.inverse_matrix())));
  CHECK_FALSE(isomorphic(a, PillowcaseInvariant{3, 4, 2}));
}

TEST_CASE("enumerate examples") {
  const auto four = enumerate(4);
  const std::vector<PillowcaseInvariant> expected{{-3, 2, 4}, {-3, 4, 2}, {3, 2, 4}, {3, 4, 2}};
  CHECK(four == expected);
  CHECK(enumerate(2).empty());
  const auto eight = enumerate(8);
  CHECK(std::find(eight.begin(), eight.end(), PillowcaseInvariant{3, 8, 1}) == eight.end());
  CHECK(eight.size() == oracle::scan_invariants(8).size());
  CHECK_THROWS_AS(enumerate(kMaxEnumerationEntry + 1), BoundError);
}

TEST_CASE("enumerate matches the box scan") {
  for (long max : {3L, 4L, 8L, 20L, 65L}) {
    CAPTURE(max);
    auto scan = oracle::scan_invariants(max);
    std::vector<PillowcaseInvariant> want;
    for (const auto& p : scan) want.push_back(from_oracle(p));
    std::sort(want.begin(), want.end(), enumeration_less);
    const auto got = enumerate(max);
    CHECK(got == want);
    CHECK(got == serial::enumerate(max));
    CHECK(std::is_sorted(got.begin(), got.end(), enumeration_less));
  }
}

TEST_CASE("enumerated invariants are pairwise non-isomorphic and isomorphic is an equivalence") {
  const auto all = enumerate(20);
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(isomorphic(all[i], all[i]));
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      CHECK_FALSE(isomorphic(all[i], all[j]));
      CHECK(isomorphic(all[i], all[j]) == isomorphic(all[j], all[i]));
    }
  }
}

TEST_CASE("presentation_from_invariant examples") {
  const auto g = presentation_from_invariant({3, 2, 4});
  CHECK(g.A == IntMatrix{{3, 2}, {-4, -3}});
  CHECK(g.ef == IntVector{1, -1});
  const auto& p = g.presentation;
  CHECK(p.generators() == std::vector<std::string>{"u", "v", "x", "y", "z"});
  const auto ux = p.parse_word("u x u^-1 y^4 x^-3");
  CHECK(g.group.evaluate(ux) == g.group.identity());
  CHECK(g.group.evaluate("u^2 y x^-1") == g.group.identity());
  CHECK(g.group.evaluate("v^2 x^-1") == g.group.identity());

  CHECK(presentation_from_invariant({5, 4, 6}).ef == IntVector{1, -1});
}

TEST_CASE("every pillowcase group up to 20 is torsion free and its presentation holds") {
  for (const auto& psi : enumerate(20)) {
    const auto g = presentation_from_invariant(psi);
    CHECK_FALSE(ext::find_torsion(g.group, 7).has_value());
    for (const auto& r : g.presentation.relators()) CHECK(g.group.evaluate(r) == g.group.identity());
    CHECK((g.A * g.ef) == g.ef);
    CHECK(primitive_normalized(g.ef) == g.ef);
  }
}

TEST_CASE("from_extension examples") {
  const IntMatrix u = IntMatrix::block_diagonal(IntMatrix{{3, 2}, {-4, -3}}, IntMatrix{{-1}});
  const IntMatrix v = IntMatrix::diagonal({1, -1, -1});
  CHECK(from_extension(u, v, {1, -1, 0}, {1, 0, 0}) == PillowcaseInvariant{3, 2, 4});

  const IntMatrix ud = IntMatrix::diagonal({1, -1, -1});
  try {
    from_extension(ud, v, {1, 0, 0}, {1, 0, 0});
    FAIL("finite-order monodromy accepted");
  } catch (const ExtractionError& e) {
    CHECK(e.failure() == ExtractionFailure::FiniteOrder);
  }
  try {
    from_extension(u, v, {0, 0, 0}, {1, 0, 0});
    FAIL("torsion accepted");
  } catch (const ExtractionError& e) {
    CHECK(e.failure() == ExtractionFailure::Torsion);
  }
  try {
    from_extension(IntMatrix::identity(2), v, {1, 0, 0}, {1, 0, 0});
    FAIL("bad shape accepted");
  } catch (const ExtractionError& e) {
    CHECK(e.failure() == ExtractionFailure::BadShape);
  }
}

TEST_CASE("round trip through extension data, in random bases") {
  std::mt19937_64 rng(0x5eed);
  std::vector<IntMatrix> bases;
  for (int i = 0; i < 100; ++i) bases.push_back(random_unimodular(rng, 3, 3));
  for (const auto& psi : enumerate(20)) {
    CAPTURE(psi.p);
    CAPTURE(psi.q);
    const auto d = pillowcase_data(psi);
    const auto& u = d.action.at("u");
    const auto& v = d.action.at("v");
    const auto& su = d.cocycles.at("u");
    const auto& sv = d.cocycles.at("v");
    CHECK(from_extension(u, v, su, sv) == psi);
    for (const auto& c : bases) {
      const auto ci = inverse_unimodular(c);
      CHECK(from_extension(c * u * ci, c * v * ci, c * su, c * sv) == psi);
    }
  }
}

TEST_CASE("homology_report examples") {
  const auto r = homology_report({3, 2, 4});
  CHECK(r.h1.free_rank == 0);
  CHECK(r.h1.torsion == std::vector<Int>{2, 4, 4});
  CHECK(order_of(r, "u") == 4);
  CHECK(order_of(r, "v") == 4);
  CHECK(order_of(r, "x") == 2);
  CHECK(order_of(r, "y") == 2);
  CHECK(order_of(r, "z") == 2);
  CHECK(r.w1_factors);

  const auto m = homology_report({-3, 2, 4});
  CHECK(order_of(m, "u") == 4);
  CHECK(order_of(m, "x") == 2);
}

TEST_CASE("H1 of pillowcase groups against the abelianized relators") {
  // 2y = 0 from v y v^-1 = y^-1 and r is even, so the u-relations reduce to
  // (p - 1) x = 0 and q x = 0; u^2 and v^2 double the order of x.
  for (const auto& psi : enumerate(20)) {
    CAPTURE(psi.p);
    CAPTURE(psi.q);
    const auto g = presentation_from_invariant(psi);
    const auto r = homology_report(psi);
    const auto o = oracle::cokernel_by_minors(to_dense(g.presentation.relator_matrix()));
    CHECK(r.h1.free_rank == 0);
    CHECK(o.free_rank == 0);
    REQUIRE(r.h1.torsion.size() == o.torsion.size());
    for (std::size_t i = 0; i < o.torsion.size(); ++i) CHECK(r.h1.torsion[i] == o.torsion[i]);
    const Int ox = oracle::gcd(to_long(psi.p) - 1, to_long(psi.q));
    CHECK(order_of(r, "x") == ox);
    CHECK(order_of(r, "y") == 2);
    CHECK(order_of(r, "z") == 2);
    CHECK(order_of(r, "u") == 2 * ox);
    CHECK(order_of(r, "v") == 2 * ox);
    CHECK(r.w1_factors);
  }
}

TEST_CASE("bordered family determinant") {
  for (long a = 2; a <= 12; ++a) {
    const long n = a * a - 1;
    for (long b = -n; b <= n; ++b) {
      if (b == 0 || n % b) continue;
      const IntMatrix psi{{a, b}, {n / b, a}};
      CHECK(abs(determinant(IntMatrix::identity(2) - psi)) == 2 * (a - 1));
    }
  }
}
