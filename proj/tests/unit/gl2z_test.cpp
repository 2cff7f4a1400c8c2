#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "solfour/gl2z/gl2z.hpp"
#include "solfour/gl2z/kernels.hpp"
#include "support.hpp"

using namespace solfour;
using namespace solfour::gl2z;
using testing_support::from_m2;
using testing_support::to_m2;

namespace {

const IntMatrix kHyp{{3, 2}, {4, 3}};
const IntMatrix kMinusI{{-1, 0}, {0, -1}};

constexpr FiniteClass kNonCentral[] = {FiniteClass::Reflection, FiniteClass::Swap, FiniteClass::Order3,
                                       FiniteClass::Order4, FiniteClass::Order6};

}  // namespace

TEST_CASE("element_order examples") {
  CHECK(element_order(IntMatrix::identity(2)) == 1);
  CHECK(element_order(IntMatrix{{0, 1}, {-1, 0}}) == 4);
  CHECK_FALSE(element_order(kHyp).has_value());
  CHECK_THROWS_AS(element_order(IntMatrix{{2, 0}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("representatives have the listed orders") {
  CHECK(element_order(representative(FiniteClass::Identity)) == 1);
  CHECK(element_order(representative(FiniteClass::MinusIdentity)) == 2);
  CHECK(element_order(representative(FiniteClass::Reflection)) == 2);
  CHECK(element_order(representative(FiniteClass::Swap)) == 2);
  CHECK(element_order(representative(FiniteClass::Order3)) == 3);
  CHECK(element_order(representative(FiniteClass::Order4)) == 4);
  CHECK(element_order(representative(FiniteClass::Order6)) == 6);
}

TEST_CASE("finite_order_class examples") {
  CHECK(finite_order_class(IntMatrix::diagonal({1, -1})).tag == FiniteClass::Reflection);
  CHECK(finite_order_class(IntMatrix{{1, 1}, {0, -1}}).tag == FiniteClass::Swap);
  CHECK(finite_order_class(kMinusI).tag == FiniteClass::MinusIdentity);
  CHECK_THROWS(finite_order_class(kHyp));
}

TEST_CASE("order law over the box agrees with the oracle") {
  for (const auto& m : oracle::unimodular_box(3)) {
    const auto ord = element_order(from_m2(m));
    const int k = oracle::order(m);
    CHECK(ord.has_value() == oracle::is_identity(oracle::power(m, 12)));
    if (ord) {
      CHECK(*ord == k);
      CHECK(std::set<int>{1, 2, 3, 4, 6}.contains(*ord));
    } else {
      CHECK(k == 0);
    }
  }
}

TEST_CASE("canonical forms against the conjugator oracle") {
  for (const auto& m : oracle::unimodular_box(3)) {
    if (oracle::order(m) == 0) continue;
    const IntMatrix mm = from_m2(m);
    if (mm.is_identity() || mm == kMinusI) continue;
    const auto cls = finite_order_class(mm).tag;
    int hits = 0;
    for (const auto c : kNonCentral) {
      const bool conj = oracle::conjugator(to_m2(representative(c)), m, 10).has_value();
      if (conj) {
        ++hits;
        CHECK(c == cls);
      }
    }
    CHECK(hits == 1);
    if (oracle::order(m) == 2 && oracle::det(m) == -1) {
      const bool mod2_identity = m[0] % 2 != 0 && m[3] % 2 != 0 && m[1] % 2 == 0 && m[2] % 2 == 0;
      CHECK((cls == FiniteClass::Reflection) == mod2_identity);
    }
  }
}

TEST_CASE("conjugate_in_gl2z examples") {
  const auto c = conjugate_in_gl2z(kHyp, kHyp, 3);
  REQUIRE(c.has_value());
  CHECK(c->is_identity());
  CHECK_FALSE(conjugate_in_gl2z(IntMatrix::diagonal({1, -1}), IntMatrix{{1, 1}, {0, -1}}, 10).has_value());
  const IntMatrix swap{{0, 1}, {1, 0}};
  const IntMatrix target{{1, 1}, {0, -1}};
  const auto found = conjugate_in_gl2z(swap, target, 10);
  REQUIRE(found.has_value());
  CHECK(is_unimodular(*found));
  CHECK(*found * swap * inverse_unimodular(*found) == target);
  CHECK(oracle::conjugator(to_m2(swap), to_m2(target), 10).has_value());
}

TEST_CASE("centralizer_sample examples") {
  const auto all = centralizer_sample(IntMatrix::identity(2), 1);
  CHECK(all.size() == oracle::unimodular_box(1).size());
  CHECK(all.size() == 40);

  for (const auto& c : centralizer_sample(IntMatrix{{0, 1}, {-1, -1}}, 5)) CHECK(element_order(c).has_value());

  const auto h = centralizer_sample(kHyp, 4);
  CHECK(std::find(h.begin(), h.end(), IntMatrix::identity(2)) != h.end());
  CHECK(std::find(h.begin(), h.end(), kMinusI) != h.end());
  CHECK(std::find(h.begin(), h.end(), kHyp) != h.end());
  for (const auto& c : h) CHECK(c * kHyp == kHyp * c);
}

TEST_CASE("centralizers of non-central finite elements are finite at the sampled scale") {
  for (const auto c : kNonCentral)
    for (const auto& m : centralizer_sample(representative(c), 6)) CHECK(element_order(m).has_value());
}

TEST_CASE("parallel kernels match the serial reference") {
  const std::vector<IntMatrix> ms{IntMatrix::identity(2), kHyp, IntMatrix{{0, 1}, {-1, -1}}, IntMatrix::diagonal({1, -1}),
                                  IntMatrix{{1, 1}, {0, -1}}};
  for (int bound : {1, 3, 6}) {
    const auto box = kernels::unimodular_box(bound);
    CHECK(box.size() == oracle::unimodular_box(bound).size());
    for (const auto& m : ms) {
      const auto small = kernels::to_small(m);
      REQUIRE(small.has_value());
      std::vector<IntMatrix> par;
      for (auto i : kernels::parallel::centralizer(box, *small)) par.push_back(kernels::to_int_matrix(box[i]));
      CHECK(par == kernels::serial::centralizer(m, bound));
      for (const auto& n : ms) {
        const auto sn = kernels::to_small(n);
        const auto pi = kernels::parallel::first_conjugator(box, *small, *sn);
        const auto si = kernels::serial::first_conjugator(m, n, bound);
        CHECK(pi.has_value() == si.has_value());
        if (pi && si) CHECK(kernels::to_int_matrix(box[*pi]) == *si);
      }
    }
  }
}

TEST_CASE("two_ended_type examples") {
  const std::vector<IntMatrix> one{kHyp};
  CHECK(two_ended_type(one).case_number == 1);
  const std::vector<IntMatrix> two{kHyp, kMinusI};
  CHECK(two_ended_type(two).case_number == 2);
  const IntMatrix a = IntMatrix::diagonal({1, -1});
  const IntMatrix b{{17, 24}, {-12, -17}};
  const std::vector<IntMatrix> pair{a, b};
  const auto t = two_ended_type(pair);
  CHECK(t.case_number == 3);
  CHECK(a * b == IntMatrix{{17, 24}, {12, 17}});
  CHECK_FALSE(element_order(a * b).has_value());
}

TEST_CASE("two_ended_type rejects finite groups") {
  const std::vector<IntMatrix> finite{IntMatrix{{0, 1}, {-1, 0}}};
  CHECK_THROWS_AS(two_ended_type(finite), NotTwoEnded);
  const std::vector<IntMatrix> pair{IntMatrix::diagonal({1, -1}), IntMatrix{{1, 0}, {0, -1}}};
  CHECK_THROWS_AS(two_ended_type(pair), NotTwoEnded);
}

TEST_CASE("two_ended_type case witnesses satisfy the case relations") {
  const IntMatrix a = IntMatrix::diagonal({1, -1});
  const IntMatrix b{{17, 24}, {-12, -17}};
  const IntMatrix r4{{0, 1}, {-1, 0}};
  struct Input {
    std::vector<IntMatrix> gens;
    int expected;
  };
  const std::vector<Input> inputs{
      {{a, b}, 3},
      {{a, b, kMinusI}, 4},
      {{r4, IntMatrix{{3, 2}, {-4, -3}}}, 5},
      {{r4, IntMatrix{{-1, 2}, {-1, 1}}}, 6},
  };
  for (const auto& in : inputs) {
    const auto t = two_ended_type(in.gens);
    CHECK(t.case_number == in.expected);
    REQUIRE(t.witnesses.size() == 2);
    const auto& wa = t.witnesses[0];
    const auto& wb = t.witnesses[1];
    CHECK_FALSE(element_order(wa * wb).has_value());
    if (t.case_number <= 4) {
      CHECK(mat_pow(wa, 2).is_identity());
      CHECK(mat_pow(wb, 2).is_identity());
    }
    if (t.case_number == 5) {
      CHECK(mat_pow(wa, 2) == kMinusI);
      CHECK(mat_pow(wb, 2).is_identity());
    }
    if (t.case_number == 6) {
      CHECK(mat_pow(wa, 2) == kMinusI);
      CHECK(mat_pow(wb, 2) == kMinusI);
    }
  }
}

TEST_CASE("two_ended_type is symmetric and conjugation invariant on case 3") {
  const IntMatrix a = IntMatrix::diagonal({1, -1});
  const IntMatrix b{{17, 24}, {-12, -17}};
  const std::vector<IntMatrix> swapped{b, a};
  const auto t = two_ended_type(swapped);
  CHECK(t.case_number == 3);
  CHECK(b * a == inverse_unimodular(a * b));
  for (const auto& c : std::vector<IntMatrix>{IntMatrix{{1, 1}, {0, 1}}, IntMatrix{{2, 1}, {1, 1}}, IntMatrix{{0, 1}, {1, 0}}}) {
    const auto ci = inverse_unimodular(c);
    const std::vector<IntMatrix> conj{c * a * ci, c * b * ci};
    CHECK(two_ended_type(conj).case_number == 3);
  }
}

TEST_CASE("monodromy_image_type examples") {
  const IntMatrix a{{3, 2}, {-4, -3}};
  const IntMatrix d = IntMatrix::diagonal({1, -1});
  const std::vector<IntMatrix> dinf{a, d, a, d};
  CHECK(monodromy_image_type(dinf) == MonodromyImage::DihedralInfinite);
  CHECK(trace(a * d) == 6);
  const std::vector<IntMatrix> trivial(4, IntMatrix::identity(2));
  CHECK(monodromy_image_type(trivial) == MonodromyImage::Other);
  const std::vector<IntMatrix> swap{IntMatrix{{0, 1}, {1, 0}}, d, a, d};
  CHECK(monodromy_image_type(swap) == MonodromyImage::Other);
}
