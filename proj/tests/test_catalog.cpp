#include "arq/catalog.hpp"

#include "arq/matroid.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <set>

using namespace arq;

TEST_CASE("catalog entries enumerate every family once") {
  std::set<std::string> names;
  for (const CatalogEntry& e : catalog_entries()) {
    CHECK(!e.name.empty());
    CHECK(!e.note.empty());
    CHECK(names.insert(e.name).second);
  }
  for (const char* required :
       {"remark13", "x2", "bracelet", "er", "d4", "primegap6", "boolean", "braid",
        "typeD", "graphic", "ziegler"})
    CHECK(names.count(required) == 1);
}

TEST_CASE("fixed arrangements have the frozen shapes") {
  Arrangement r13 = catalog_get("remark13");
  CHECK(r13.size() == 20);
  CHECK(r13.dim() == 4);
  CHECK(r13.rank() == 4);

  Arrangement x2 = catalog_get("x2");
  CHECK(x2.size() == 7);
  CHECK(x2.rank() == 3);

  Arrangement br = catalog_get("bracelet");
  CHECK(br.size() == 9);
  CHECK(br.rank() == 4);

  Arrangement pg = catalog_get("primegap6");
  CHECK(pg.size() == 23);
  CHECK(pg.rank() == 6);

  CHECK(catalog_get("d4").size() == 12);
  CHECK(catalog_get("d4").rank() == 4);
}

TEST_CASE("er family: proportional duplicates collapse") {
  CHECK(catalog_get("er(0)").size() == 6);
  CHECK(catalog_get("er(1)").size() == 6);
  CHECK(catalog_get("er(-1)").size() == 9);
  CHECK(catalog_get("er(2)").size() == 9);
  CHECK(catalog_get("er(1/2)").size() == 9);
  // rational parameters parse exactly
  CHECK(catalog_get("er(-3/2)").size() == 9);
}

TEST_CASE("parameterized families") {
  CHECK(catalog_get("boolean(1)").size() == 1);
  CHECK(catalog_get("boolean(62)").size() == 62);
  CHECK(catalog_get("braid(2)").size() == 1);
  CHECK(catalog_get("braid(5)").size() == 10);
  CHECK(catalog_get("braid(5)").rank() == 4);
  CHECK(catalog_get("typeD(2)").size() == 2);
  CHECK(catalog_get("typeD(8)").size() == 56);

  // d4 is typeD(4) under its stable name
  Arrangement d4 = catalog_get("d4");
  Arrangement td4 = catalog_get("typeD(4)");
  REQUIRE(d4.size() == td4.size());
  for (std::size_t i = 0; i < d4.size(); ++i) CHECK(d4.normal(i) == td4.normal(i));
}

TEST_CASE("graphic parsing and validation") {
  Arrangement k3 = catalog_get("graphic(1-2,2-3,1-3)");
  CHECK(k3.size() == 3);
  CHECK(k3.rank() == 2);
  CHECK(catalog_get("graphic( 1-2 , 3-4 )").size() == 2);

  CHECK_THROWS_AS(catalog_get("graphic()"), std::invalid_argument);
  CHECK_THROWS_AS(catalog_get("graphic(1-1)"), std::invalid_argument);
  CHECK_THROWS_AS(catalog_get("graphic(1-2,2-1)"), std::invalid_argument);
  CHECK_THROWS_AS(catalog_get("graphic(0-2)"), std::invalid_argument);
  CHECK_THROWS_AS(catalog_get("graphic(1-2,)"), std::invalid_argument);
  CHECK_THROWS_AS(catalog_get("graphic(a-b)"), std::invalid_argument);
}

TEST_CASE("ziegler pair: same matroid, different geometry") {
  Arrangement special = catalog_get("ziegler(special)");
  Arrangement general = catalog_get("ziegler(general)");
  CHECK(special.size() == 9);
  CHECK(general.size() == 9);
  CHECK(special.rank() == 3);
  CHECK(general.rank() == 3);
  // identical circuits, signs included
  CHECK(circuits(special) == circuits(general));

  CHECK_THROWS_AS(catalog_get("ziegler(sideways)"), std::invalid_argument);
  CHECK_THROWS_AS(catalog_get("ziegler()"), std::invalid_argument);
  CHECK_THROWS_AS(catalog_get("ziegler"), std::invalid_argument);
}

TEST_CASE("malformed specs are rejected") {
  CHECK_THROWS_AS(catalog_get("unknown"), std::invalid_argument);
  CHECK_THROWS_AS(catalog_get(""), std::invalid_argument);
  CHECK_THROWS_AS(catalog_get("er"), std::invalid_argument);
  CHECK_THROWS_AS(catalog_get("er()"), std::invalid_argument);
  CHECK_THROWS_AS(catalog_get("er(x)"), std::invalid_argument);
  CHECK_THROWS_AS(catalog_get("er(1/0)"), std::invalid_argument);
  CHECK_THROWS_AS(catalog_get("boolean(0)"), std::invalid_argument);
  CHECK_THROWS_AS(catalog_get("boolean(63)"), std::invalid_argument);
  CHECK_THROWS_AS(catalog_get("braid(1)"), std::invalid_argument);
  CHECK_THROWS_AS(catalog_get("braid(12)"), std::invalid_argument);
  CHECK_THROWS_AS(catalog_get("typeD(1)"), std::invalid_argument);
  CHECK_THROWS_AS(catalog_get("typeD(9)"), std::invalid_argument);
  CHECK_THROWS_AS(catalog_get("x2(3)"), std::invalid_argument);
  CHECK_THROWS_AS(catalog_get("boolean(3"), std::invalid_argument);
  CHECK_THROWS_AS(catalog_get("boolean(3))"), std::invalid_argument);
}

TEST_CASE("catalog names round trip through catalog_get") {
  // every listed fixed entry loads; parameterized ones load with a sample
  for (const CatalogEntry& e : catalog_entries()) {
    std::string spec = e.name;
    if (e.name == "er")
      spec = "er(-1)";
    else if (e.name == "boolean")
      spec = "boolean(3)";
    else if (e.name == "braid")
      spec = "braid(4)";
    else if (e.name == "typeD")
      spec = "typeD(4)";
    else if (e.name == "graphic")
      spec = "graphic(1-2,2-3,1-3)";
    else if (e.name == "ziegler")
      spec = "ziegler(special)";
    CHECK(catalog_get(spec).size() >= 1);
  }
}
