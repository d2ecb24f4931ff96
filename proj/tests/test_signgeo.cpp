#include "arq/signgeo.hpp"

#include "arq/catalog.hpp"
#include "arq/cone.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace arq;
using test::make_arr;

TEST_CASE("chambers of tiny arrangements") {
  // coordinate planes in R^3: 8 orthants
  CHECK(enumerate_chambers(catalog_get("boolean(3)")).size() == 8);
  // three concurrent lines in the plane: 6 sectors
  Arrangement tri = make_arr({{1, 0}, {0, 1}, {1, 1}});
  ChamberSet cs = enumerate_chambers(tri);
  CHECK(cs.size() == 6);
  // sorted, distinct, each witness realizes its sign word
  for (std::size_t i = 0; i < cs.chambers.size(); ++i) {
    const Chamber& c = cs.chambers[i];
    if (i > 0) CHECK(cs.chambers[i - 1].sign < c.sign);
    for (std::size_t h = 0; h < tri.size(); ++h) {
      const int s = sign_of(dot(tri.normal(h), c.witness));
      CHECK(s == c.sign.at(h));
    }
  }
}

TEST_CASE("chamber count equals Zaslavsky's evaluation") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 25; ++trial) {
    Arrangement a = test::random_arrangement(rng, 6, 3);
    const std::vector<Int> chi = test::whitney_characteristic(a);
    const Int expected = test::eval_poly(chi, Int(-1)) * (a.rank() % 2 ? -1 : 1);
    CHECK(Int(enumerate_chambers(a).size()) == expected);
  }
}

TEST_CASE("local chamber patterns of a rank-2 flat") {
  Arrangement a = make_arr({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}});
  std::vector<Flat> r2 = flats_of_rank(a, 2);
  const Flat* line = nullptr;
  for (const Flat& f : r2)
    if (f.elements.size() == 3) line = &f;
  REQUIRE(line != nullptr);
  auto pats = local_chamber_patterns(a, *line);
  CHECK(pats.size() == 6);  // 2m with m = 3
  for (std::uint64_t p : pats) CHECK((p & ~line->mask) == 0);

  // independent flat: all patterns
  const Flat* pair = nullptr;
  for (const Flat& f : r2)
    if (f.elements.size() == 2) pair = &f;
  REQUIRE(pair != nullptr);
  CHECK(local_chamber_patterns(a, *pair).size() == 4);
}

TEST_CASE("sigma counts: boolean and x2 frozen values") {
  Arrangement b3 = catalog_get("boolean(3)");
  CHECK(count_sigma(b3, 1) == 8);
  CHECK(count_sigma(b3, 2) == 8);
  CHECK(count_sigma(b3, 3) == 8);

  Arrangement x2 = catalog_get("x2");
  SigmaChain chain = sigma_chain(x2);
  CHECK(chain.sigma == std::vector<std::uint64_t>{128, 34, 34});
  CHECK(yoshinaga(x2));
  CHECK(count_sigma(x2, 2) == 34);
  CHECK(enumerate_chambers(x2).size() == 34);
}

TEST_CASE("sigma_members materializes exactly Sigma_k") {
  Arrangement x2 = catalog_get("x2");
  for (std::size_t k = 1; k <= x2.rank(); ++k) {
    std::vector<std::uint64_t> mem = sigma_members(x2, k);
    CHECK(mem.size() == count_sigma(x2, k));
    CHECK(std::is_sorted(mem.begin(), mem.end()));
    // closed under negation
    const std::uint64_t full = x2.full_mask();
    for (std::uint64_t w : mem)
      CHECK(std::binary_search(mem.begin(), mem.end(), full & ~w));
  }
  // Sigma_rank = chamber sign words
  std::vector<std::uint64_t> top = sigma_members(x2, x2.rank());
  ChamberSet cs = enumerate_chambers(x2);
  REQUIRE(top.size() == cs.size());
  for (std::size_t i = 0; i < top.size(); ++i) CHECK(top[i] == cs.chambers[i].sign.plus);
}

TEST_CASE("count_sigma agrees with the definitional oracle") {
  std::mt19937_64 rng(220044);
  for (int trial = 0; trial < 20; ++trial) {
    Arrangement a = test::random_arrangement(rng, 6, 3);
    for (std::size_t k = 1; k <= a.rank(); ++k)
      CHECK(count_sigma(a, k) == test::brute_sigma(a, k));
  }
}

TEST_CASE("sigma chain is weakly decreasing and pinned at both ends") {
  std::mt19937_64 rng(88110);
  for (int trial = 0; trial < 10; ++trial) {
    Arrangement a = test::random_arrangement(rng, 7, 4);
    SigmaChain chain = sigma_chain(a);
    REQUIRE(chain.sigma.size() == a.rank());
    CHECK(chain.sigma.front() == (std::uint64_t(1) << a.size()));
    CHECK(chain.sigma.back() == enumerate_chambers(a).size());
    for (std::size_t i = 1; i < chain.sigma.size(); ++i)
      CHECK(chain.sigma[i - 1] >= chain.sigma[i]);
  }
}

TEST_CASE("caps abort enumerative work") {
  Caps tiny;
  tiny.chamber_cap = 5;
  CHECK_THROWS_AS(enumerate_chambers(catalog_get("boolean(4)"), tiny), CapExceeded);
  Caps nodes;
  nodes.node_cap = 10;
  CHECK_THROWS_AS(count_sigma(catalog_get("x2"), 2, nodes), CapExceeded);
}
