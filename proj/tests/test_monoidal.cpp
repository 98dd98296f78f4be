#include "doctest.h"

#include "catlift/instances.hpp"
#include "catlift/monoidal.hpp"

using namespace catlift;

TEST_CASE("max and min chain monoidal structures verify") {
  for (int n = 2; n <= 4; ++n) {
    CatPtr c = chain_category(n);
    MonoidalPtr mx = max_monoidal(c);
    CHECK(mx->unit == 0);
    CHECK(mx->strict);
    CHECK(check_monoidal(*mx).ok());
    MonoidalPtr mn = min_monoidal(c);
    CHECK(mn->unit == n - 1);
    CHECK(check_monoidal(*mn).ok());
  }
}

TEST_CASE("tensor helpers agree with the tables") {
  MonoidalPtr mx = max_monoidal(chain_category(3));
  CHECK(mx->ten(1, 2) == 2);
  const FinCategory& c = *mx->base;
  MorId f = chain_mor(c, 0, 1);
  CHECK(mx->ten_mo(f, 2) == c.identity[2]);
  CHECK(mx->ten_om(0, f) == f);
  CHECK(mx->assoc_at(0, 1, 2) == c.identity[2]);
}

TEST_CASE("declared-strict structure with non-identity coherence is rejected") {
  MonoidalPtr mx = max_monoidal(chain_category(2));
  MonoidalCategory bent = *mx;
  bent.runit[0] = chain_mor(*mx->base, 0, 1);
  CHECK_FALSE(check_monoidal(bent).ok());
}

TEST_CASE("explicit coherence tables equal to identities verify non-strictly") {
  MonoidalPtr mx = max_monoidal(chain_category(3));
  const FinCategory& c = *mx->base;
  int n = c.n_obj();
  std::vector<MorId> assoc(n * n * n), runit(n), lunit(n);
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y)
      for (ObjId z = 0; z < n; ++z)
        assoc[(x * n + y) * n + z] = c.identity[mx->ten(mx->ten(x, y), z)];
  for (ObjId x = 0; x < n; ++x) runit[x] = lunit[x] = c.identity[x];
  MonoidalCategory m =
      make_monoidal(mx->base, mx->tensor, 0, assoc, runit, lunit);
  CHECK_FALSE(m.strict);
  CHECK(check_monoidal(m).ok());
}

TEST_CASE("ill-typed associator entry is caught") {
  MonoidalPtr mx = max_monoidal(chain_category(3));
  MonoidalCategory bent = *mx;
  bent.assoc[0] = chain_mor(*mx->base, 0, 1);  // should be id at 0
  Report r = check_monoidal(bent);
  CHECK_FALSE(r.ok());
}

TEST_CASE("unit object must be unital for the tensor") {
  CatPtr c = chain_category(2);
  MonoidalPtr mx = max_monoidal(c);
  // claim top is the unit: runit x -> max(x, top) is not an iso at 0
  CHECK_THROWS_AS(make_strict_monoidal(c, mx->tensor, 1), MalformedInput);
}

TEST_CASE("discrete monoid as a strict monoidal category") {
  CatPtr d = discrete_category({"e", "s"});
  MonoidalPtr z2 = discrete_monoid_monoidal(d, {0, 1, 1, 0}, 0);
  CHECK(check_monoidal(*z2).ok());
  CHECK(z2->ten(1, 1) == 0);
}

TEST_CASE("non-unital table is rejected at construction") {
  CatPtr d = discrete_category({"e", "s"});
  // e*s = e, so e is not a left unit
  CHECK_THROWS_AS(discrete_monoid_monoidal(d, {0, 0, 1, 1}, 0),
                  MalformedInput);
}

TEST_CASE("every chain element is a monoid under max") {
  MonoidalPtr mx = max_monoidal(chain_category(3));
  const FinCategory& c = *mx->base;
  for (ObjId b = 0; b < 3; ++b) {
    MonoidObject mo{b, c.identity[b], chain_mor(c, 0, b)};
    CHECK(check_monoid(*mx, mo).ok());
  }
}

TEST_CASE("wrongly typed monoid unit is caught") {
  MonoidalPtr mx = max_monoidal(chain_category(3));
  const FinCategory& c = *mx->base;
  MonoidObject mo{1, c.identity[1], c.identity[2]};
  CHECK_FALSE(check_monoid(*mx, mo).ok());
}
