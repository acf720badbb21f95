#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hertz/distribution.hpp"
#include "oracles.hpp"

using namespace hertz;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

std::vector<Permutation> perms(std::initializer_list<const char*> ps) {
  std::vector<Permutation> v;
  for (const char* p : ps) v.push_back(P(p));
  return v;
}

std::vector<Integer> coefficients(const TruncatedSeries& s) { return *s.integers(); }

/// pi avoids T except for exactly one occurrence, which is alpha as a suffix.
std::uint64_t end_pattern_brute(const std::vector<Permutation>& t,
                                const Permutation& alpha, int n) {
  std::uint64_t c = 0;
  for_each_permutation(n, [&](std::span<const int> pi) {
    std::size_t total = 0;
    for (const auto& p : t) total += oracle::count_by_interval(p, pi);
    if (total != 1 || n < alpha.size()) return;
    if (oracle::is_occurrence_by_interval(alpha, pi.subspan(n - alpha.size()))) ++c;
  });
  return c;
}

MultiPoly bracket_minus_one(const RegistryPtr& reg, int k) {
  MultiPoly b(reg);
  for (int e = 1; e < k; ++e) b += MultiPoly::x(reg, e);
  return b;
}

}  // namespace

TEST_CASE("joint distribution of 12 and 21 in closed form") {
  const PatternSet t(perms({"12", "21"}));
  const auto& reg = t.registry();
  const MultiPoly u = t.marker(0);
  const MultiPoly v = t.marker(1);
  const MultiPoly x = MultiPoly::x(reg);
  const MultiPoly one(reg, 1);
  const RationalFunction closed(x - (u - one) * (v - one) * MultiPoly::x(reg, 3),
                                (one + x - u * x) * (one + x - v * x));
  CHECK(joint_distribution_series(t, 8) == fsum_rational(closed, 8));
  CHECK(joint_distribution_argument(t) == closed);
}

TEST_CASE("markers at 1 give all permutations") {
  for (const auto& ps : oracle::random_antichains(10, 4, 5)) {
    const PatternSet t(ps);
    const auto s = joint_distribution_series(t, 10);
    const auto ones = constant_markers_images(t.registry(), 1);
    Integer f = 1;
    for (int n = 0; n <= 10; ++n) {
      if (n > 0) f *= n;
      const auto c = s[n].substitute(ones).as_constant();
      REQUIRE(c);
      CHECK(*c == f);
    }
  }
}

TEST_CASE("joint distribution of 132 at length 4") {
  const PatternSet t(perms({"132"}));
  const auto s = joint_distribution_series(t, 4);
  CHECK(s[4] == MultiPoly(t.registry(), 20) + Rational(4) * t.marker(0));
  CHECK(s[4] == brute_force_distribution(t, 4));
}

TEST_CASE("avoider series") {
  CHECK(coefficients(avoider_series(PatternSet(perms({"12", "21"})), 9)) ==
        oracle::ints({"1", "1", "0", "0", "2", "14", "90", "646", "5242", "47622"}));
  CHECK(coefficients(avoider_series(
            PatternSet(perms({"123", "132", "213", "231", "312", "321"})), 11)) ==
        oracle::ints({"1", "1", "2", "0", "4", "34", "298", "2434", "21374", "205300",
                      "2161442", "24804386"}));
  CHECK(coefficients(avoider_series(PatternSet(perms({"132"})), 5)) ==
        oracle::ints({"1", "1", "2", "5", "20", "102"}));
}

TEST_CASE("avoider series agree with counting, n <= 8") {
  std::vector<std::vector<Permutation>> sets = {perms({"12", "21"}), perms({"132"}),
                                                perms({"123", "132"}),
                                                perms({"321", "2341"})};
  for (auto& r : oracle::random_antichains(10, 4, 77)) sets.push_back(r);
  for (const auto& ps : sets) {
    const auto s = coefficients(avoider_series(PatternSet(ps), 8));
    for (int n = 0; n <= 8; ++n)
      REQUIRE(s[n] == Integer(static_cast<unsigned long>(oracle::count_avoiders(ps, n))));
  }
}

TEST_CASE("end-pattern series") {
  {
    const PatternSet t(perms({"12", "21"}));
    CHECK(end_pattern_series(t, P("12"), 3)[3] == MultiPoly(Registry::x_only(), 1));
  }
  {
    const PatternSet t(perms({"132"}));
    const auto s = coefficients(end_pattern_series(t, P("132"), 6));
    CHECK(s[0] == 0);
    CHECK(s[1] == 0);
    CHECK(s[2] == 0);
    CHECK(s[3] == 1);
  }
  CHECK_THROWS_AS(end_pattern_series(PatternSet(perms({"132"})), P("123"), 5), Error);
}

TEST_CASE("end-pattern series agree with counting, n <= 7") {
  std::vector<std::vector<Permutation>> sets = {perms({"12", "21"}), perms({"123"}),
                                                perms({"123", "132"}),
                                                perms({"321", "2341"})};
  for (auto& r : oracle::random_antichains(8, 4, 31)) sets.push_back(r);
  for (const auto& ps : sets) {
    const PatternSet t(ps);
    for (const auto& alpha : ps) {
      const auto s = coefficients(end_pattern_series(t, alpha, 7));
      for (int n = 0; n <= 7; ++n) {
        INFO("alpha=" << alpha.str() << " n=" << n);
        REQUIRE(s[n] == Integer(static_cast<unsigned long>(end_pattern_brute(ps, alpha, n))));
      }
    }
  }
}

TEST_CASE("brute-force distribution") {
  const PatternSet t12(perms({"12"}));
  const MultiPoly u = t12.marker(0);
  const MultiPoly one(t12.registry(), 1);
  CHECK(brute_force_distribution(t12, 3) == Rational(3) * one + Rational(2) * u + u * u);
  CHECK(brute_force_distribution(PatternSet(perms({"123", "21"})), 0) ==
        MultiPoly(PatternSet(perms({"123", "21"})).registry(), 1));
  const PatternSet t(perms({"12", "21"}));
  const auto zero = constant_markers_images(t.registry(), 0);
  CHECK(brute_force_distribution(t, 4).substitute(zero) == MultiPoly(t.registry(), 2));
  CHECK_THROWS_AS(brute_force_distribution(t, 9), CeilingExceeded);
}

TEST_CASE("joint distribution equals brute force, n <= 7") {
  std::vector<std::vector<Permutation>> sets = {perms({"132"}), perms({"123"}),
                                                perms({"12", "21"}), perms({"123", "132"})};
  for (auto& r : oracle::random_antichains(20, 4, 4242)) sets.push_back(r);
  for (const auto& ps : sets) {
    const PatternSet t(ps);
    const auto s = joint_distribution_series(t, 7);
    for (int n = 0; n <= 7; ++n) REQUIRE(s[n] == brute_force_distribution(t, n, 7));
  }
}

TEST_CASE("Hertzsprung closed form") {
  CHECK(hertzsprung_closed_form(0) == 1);
  CHECK(hertzsprung_closed_form(4) == 2);
  CHECK(hertzsprung_closed_form(9) == 47622);
  const auto s = coefficients(avoider_series(PatternSet(perms({"12", "21"})), 12));
  for (int n = 0; n <= 12; ++n) CHECK(hertzsprung_closed_form(n) == s[n]);
}

TEST_CASE("Myers formula") {
  CHECK(myers_count(P("132"), 4, 0) == 20);
  CHECK(myers_count(P("132"), 3, 0) == 5);
  CHECK(myers_count(P("132"), 3, 1) == 1);
  CHECK_THROWS_AS(myers_count(P("123"), 4, 0), Error);
}

TEST_CASE("Myers formula matches avoider series for non-self-overlapping patterns") {
  for (int k = 3; k <= 5; ++k)
    for (const auto& tau : all_permutations(k)) {
      if (is_self_overlapping(tau)) continue;
      const auto s = coefficients(avoider_series(PatternSet({tau}), 10));
      for (int n = 0; n <= 10; ++n) REQUIRE(myers_count(tau, n, 0) == s[n]);
    }
}

TEST_CASE("Myers formula matches the joint distribution for m >= 1") {
  for (const char* p : {"132", "2413", "1342"}) {
    const PatternSet t(perms({p}));
    const auto s = joint_distribution_series(t, 9);
    const auto& reg = t.registry();
    for (int n = 0; n <= 9; ++n)
      for (int m = 0; m <= 4; ++m) {
        Monomial mono(reg->size(), 0);
        mono[0] = m;
        Rational expected = 0;
        auto it = s[n].terms().find(mono);
        if (it != s[n].terms().end()) expected = it->second;
        REQUIRE(Rational(myers_count(t[0], n, m)) == expected);
      }
  }
}

TEST_CASE("Jackson-Read generating functions") {
  CHECK(coefficients(jackson_read_gf(2, JacksonReadVariant::Pair, 9)) ==
        oracle::ints({"1", "1", "0", "0", "2", "14", "90", "646", "5242", "47622"}));
  CHECK(coefficients(jackson_read_gf(2, JacksonReadVariant::Single, 4)) ==
        oracle::ints({"1", "1", "1", "3", "11"}));
  for (int k = 2; k <= 5; ++k) {
    const auto id = Permutation::identity(k);
    CHECK(jackson_read_gf(k, JacksonReadVariant::Single, 15) ==
          avoider_series(PatternSet({id}), 15));
    CHECK(jackson_read_gf(k, JacksonReadVariant::Pair, 15) ==
          avoider_series(PatternSet({id, Permutation::reverse_identity(k)}), 15));
  }
}

TEST_CASE("id_k distribution closed form") {
  auto reg = Registry::make({"u"});
  for (int k = 2; k <= 8; ++k) {
    const auto a = jackson_id_distribution(k, 20);
    const auto b = fsum_rational(single_pattern_id_argument(k), 20);
    CHECK(a == b);
    // Equal as rational functions, not only as truncated series.
    CHECK(jackson_id_argument(k) == single_pattern_id_argument(k));
  }
  // Same answer as the cluster pipeline, after renaming u_123 to u.
  const PatternSet t({Permutation::identity(3)});
  const auto j = joint_distribution_series(t, 6);
  const auto c = jackson_id_distribution(3, 6);
  for (int n = 0; n <= 6; ++n) {
    const std::size_t map[] = {0, 1};
    CHECK(j[n].remap(c.registry(), map) == c[n]);
  }
  // u at 1 gives n!; u at 0 gives id_2-avoiders.
  const auto d = jackson_id_distribution(2, 5);
  const auto ones = constant_markers_images(d.registry(), 1);
  const auto zeros = constant_markers_images(d.registry(), 0);
  const std::vector<std::string> fact = {"1", "1", "2", "6", "24", "120"};
  const std::vector<Permutation> id2 = {Permutation::identity(2)};
  for (int n = 0; n <= 5; ++n) {
    CHECK(*d[n].substitute(ones).as_constant() == Rational(fact[n]));
    CHECK(*d[n].substitute(zeros).as_constant() ==
          Rational(static_cast<unsigned long>(oracle::count_avoiders(id2, n))));
  }
}

TEST_CASE("EQ1 Wilf-equivalence: {21,231} and {21,312} share a joint distribution") {
  const PatternSet a(perms({"21", "231"}));
  const PatternSet b(perms({"21", "312"}));
  const auto sa = joint_distribution_series(a, 10);
  const auto sb = joint_distribution_series(b, 10);
  const std::size_t map[] = {0, 1, 2};
  for (int n = 0; n <= 10; ++n) CHECK(sb[n].remap(a.registry(), map) == sa[n]);
}

TEST_CASE("{132} and {321,2341} are Wilf-equivalent") {
  CHECK(avoider_series(PatternSet(perms({"132"})), 12) ==
        avoider_series(PatternSet(perms({"321", "2341"})), 12));
}

TEST_CASE("joint distribution of id_k and reversed id_l in closed form") {
  for (auto [k, l] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{3, 3}}) {
    const PatternSet t({Permutation::identity(k), Permutation::reverse_identity(l)});
    const auto& reg = t.registry();
    const MultiPoly one(reg, 1);
    const MultiPoly u1 = t.marker(0) - one;
    const MultiPoly v1 = t.marker(1) - one;
    const RationalFunction arg =
        RationalFunction(MultiPoly::x(reg)) +
        RationalFunction(u1 * MultiPoly::x(reg, k), one - u1 * bracket_minus_one(reg, k)) +
        RationalFunction(v1 * MultiPoly::x(reg, l), one - v1 * bracket_minus_one(reg, l));
    CHECK(joint_distribution_series(t, 10) == fsum_rational(arg, 10));
  }
}
