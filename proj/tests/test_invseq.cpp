#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "eulerian/inversion.hpp"

using namespace eulerian;

namespace {

std::vector<SVec> small_corpus() {
  std::vector<SVec> out{
      SVec{{2}},       SVec{{2, 3}},    SVec{{3, 2}},       SVec{{2, 3, 4}},
      SVec{{1, 1, 2}}, SVec{{5, 1, 3}}, SVec{{2, 2, 2, 2}}, SVec{{4, 4, 4}},
      SVec{{6, 4, 2}}, SVec{{2, 3, 5, 2}},
  };
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> len(1, 5), entry(1, 6);
  for (int i = 0; i < 15; ++i) {
    std::vector<long> s(static_cast<std::size_t>(len(rng)));
    for (auto& v : s) v = entry(rng);
    out.emplace_back(std::move(s));
  }
  return out;
}

}  // namespace

TEST_CASE("SVec and InvSeq validation") {
  CHECK_THROWS_AS((SVec{{2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS((SVec{{-1}}), std::invalid_argument);
  SVec s{{2, 3}};
  CHECK(s.bound(0) == 1);
  CHECK(s.bound(1) == 2);
  CHECK(s.bound(3) == 1);
  CHECK_THROWS_AS(InvSeq({0, 3}, s), std::domain_error);
  CHECK_THROWS_AS(InvSeq({0}, s), std::domain_error);
  CHECK_NOTHROW(InvSeq({1, 2}, s));
}

TEST_CASE("enumeration is lexicographic and complete") {
  auto seqs = all_inversion_sequences(SVec{{2}});
  REQUIRE(seqs.size() == 2);
  CHECK(seqs[0].values == std::vector<long>{0});
  CHECK(seqs[1].values == std::vector<long>{1});

  auto six = all_inversion_sequences(SVec{{2, 3}});
  REQUIRE(six.size() == 6);
  CHECK(six[0].values == std::vector<long>{0, 0});
  CHECK(six[1].values == std::vector<long>{0, 1});
  CHECK(six[5].values == std::vector<long>{1, 2});
  for (std::size_t i = 1; i < six.size(); ++i) CHECK(six[i - 1].values < six[i].values);

  auto empty = all_inversion_sequences(SVec{});
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].values.empty());
}

TEST_CASE("statistics on named examples") {
  {
    SVec s{{2}};
    StatTuple t = stats(InvSeq({0}, s), s);
    CHECK(t.asc == 0);
    CHECK(t.col == 2);
    CHECK(t.des == 0);
    CHECK(t.col_prime == 1);
  }
  {
    SVec s{{2, 3}};
    StatTuple t = stats(InvSeq({1, 2}, s), s);
    CHECK(t.asc == 2);
    CHECK(t.col == 0);
    CHECK(t.des == 1);
    CHECK(t.col_prime == 0);
  }
  {
    SVec s{{3, 5, 2, 4}};
    StatTuple t = stats(InvSeq({0, 0, 0, 0}, s), s);
    CHECK(t.asc == 0);
    CHECK(t.col == 5);
    CHECK(t.des == 0);
  }
}

TEST_CASE("statistic invariants over the corpus") {
  for (const auto& s : small_corpus()) {
    if (s.product_clamped(10000) > 10000) continue;
    for_each_inversion_sequence(s, [&](const std::vector<long>& e) {
      StatTuple t = stats(e, s);
      CHECK(t.asc + t.col + t.des == s.size() + 1);
      long last = e.empty() ? 0 : e.back();
      CHECK(t.col == t.col_prime + (last == 0 ? 1 : 0));
    });
  }
}

TEST_CASE("brute-force polynomial families") {
  CHECK(brute_binomial_eulerian(SVec{{2}}) == IntPoly{1, 3, 1});
  CHECK(brute_binomial_eulerian(SVec{{2, 3}}) == IntPoly{1, 7, 7, 1});
  CHECK(brute_binomial_eulerian(SVec{}) == IntPoly{1, 1});

  CHECK(brute_s_eulerian(SVec{{2}}) == IntPoly{1, 1});
  CHECK(brute_s_eulerian(SVec{{1, 2, 3}}) == IntPoly{1, 4, 1});
  CHECK(brute_s_eulerian(SVec{}) == IntPoly{1});

  CHECK(brute_s_derangement(SVec{{2}}) == IntPoly{0, 1});
  CHECK(brute_s_derangement(SVec{{2, 3}}) == IntPoly{0, 1, 1});
  CHECK(brute_s_derangement(SVec{}) == IntPoly{});
}

TEST_CASE("refined family by enumeration") {
  auto p1 = brute_refined(SVec{{2}});
  REQUIRE(p1.size() == 2);
  CHECK(p1[0] == IntPoly{1, 1});
  CHECK(p1[1] == IntPoly{0, 1});

  auto p2 = brute_refined(SVec{{2, 3}});
  REQUIRE(p2.size() == 3);
  CHECK(p2[0] == IntPoly{1, 3, 1});
  CHECK(p2[1] == IntPoly{0, 2, 1});
  CHECK(p2[2] == IntPoly{0, 1, 2});

  CHECK_THROWS_AS(brute_refined(SVec{}), std::domain_error);

  // Recombination identity over the corpus.
  for (const auto& s : small_corpus()) {
    if (s.size() == 0 || s.product_clamped(10000) > 10000) continue;
    auto ps = brute_refined(s);
    IntPoly sum = ps[0] * one_plus_z();
    for (std::size_t k = 1; k < ps.size(); ++k) sum += ps[k];
    CHECK(sum == brute_binomial_eulerian(s));
  }
}

TEST_CASE("evaluation identities at z = 1") {
  for (const auto& s : small_corpus()) {
    long long product = s.product_clamped(10000);
    if (product > 10000) continue;
    CHECK(brute_s_eulerian(s).eval(mpq_class{1}) == mpq_class{static_cast<long>(product)});
    mpz_class direct{0};
    for_each_inversion_sequence(s, [&](const std::vector<long>& e) {
      mpz_class pw;
      mpz_ui_pow_ui(pw.get_mpz_t(), 2, static_cast<unsigned long>(stats(e, s).col));
      direct += pw;
    });
    CHECK(brute_binomial_eulerian(s).eval(mpq_class{1}) == direct);
  }
}

TEST_CASE("involution exchanges ascents and descents") {
  SVec s{{2, 3}};
  InvSeq e({1, 2}, s);
  InvSeq fe = involution_f(e, s);
  CHECK(fe.values == std::vector<long>{1, 1});
  CHECK(stats(e, s).asc == stats(fe, s).des);

  SVec zeros_s{{3, 4, 5}};
  InvSeq zeros({0, 0, 0}, zeros_s);
  CHECK(involution_f(zeros, zeros_s).values == zeros.values);

  for (const auto& s2 : small_corpus()) {
    if (s2.product_clamped(10000) > 10000) continue;
    for_each_inversion_sequence(s2, [&](const std::vector<long>& raw) {
      InvSeq x{raw, s2};
      InvSeq fx = involution_f(x, s2);
      CHECK(involution_f(fx, s2).values == x.values);
      StatTuple a = stats(x, s2), b = stats(fx, s2);
      CHECK(a.asc == b.des);
      CHECK(a.des == b.asc);
      CHECK(a.col == b.col);
      CHECK(a.col_prime == b.col_prime);
    });
  }
}
