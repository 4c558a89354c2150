#include <algorithm>
#include <vector>

#include "catch_amalgamated.hpp"

#include "compbase/poag.hpp"
#include "support.hpp"

using namespace compbase;
using namespace testing_support;

namespace {

  // Integer points g of the box [-b, b]^n with 0 <= g <= u, tested row by
  // row against the cone inequalities.
  std::vector<Coords> interval_by_box(IntMatrix const& rows, Coords const& u, long b) {
    std::size_t         n = u.size();
    std::vector<Coords> out;
    std::vector<long>   x(n, -b);
    while (true) {
      std::vector<Integer> v(x.begin(), x.end());
      Coords               g(v);
      bool                 ok = true;
      for (std::size_t r = 0; r < rows.rows(); ++r) {
        Integer lo = 0, hi = 0;
        for (std::size_t k = 0; k < n; ++k) {
          lo += rows(r, k) * g[k];
          hi += rows(r, k) * (u[k] - g[k]);
        }
        ok = ok && lo >= 0 && hi >= 0;
      }
      if (ok) {
        out.push_back(g);
      }
      std::size_t i = 0;
      while (i < n && x[i] == b) {
        x[i++] = -b;
      }
      if (i == n) {
        break;
      }
      ++x[i];
    }
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace

TEST_CASE("positivity and order on the lattice model", "[poag]") {
  auto const& m = m1();
  CHECK(is_positive(m, c({1, 0})));
  CHECK_FALSE(is_positive(m, c({1, -1})));
  CHECK(leq(m, c({0, 1}), c({1, 1})));
  CHECK_FALSE(leq(m, c({1, 0}), c({0, 1})));
  CHECK_THROWS_AS(is_positive(m, c({1, 0, 0})), ShapeError);
}

TEST_CASE("positivity and order on the matrix model", "[poag]") {
  auto const& m = m3();
  CHECK_FALSE(is_positive(m, sym({{0, q(1, 2)}, {q(1, 2), q(1, 2)}})));
  CHECK(leq(m, diag({1, 0}), SymMatrix::identity(2)));
  CHECK_THROWS_AS(is_positive(m, SymMatrix::identity(3)), ShapeError);
}

TEST_CASE("unit intervals of the bundled lattice models", "[poag]") {
  CHECK(enumerate_unit_interval(m1())
        == std::vector<Coords>{c({0, 0}), c({0, 1}), c({1, 0}), c({1, 1})});
  CHECK(enumerate_unit_interval(m2()) == std::vector<Coords>{c({0}), c({1}), c({2})});
  LatticeConeModel zero_unit(2, IntMatrix{{1, 0}, {0, 1}}, c({0, 0}));
  CHECK(enumerate_unit_interval(zero_unit) == std::vector<Coords>{c({0, 0})});
  CHECK_THROWS_AS(enumerate_unit_interval(m3()), NotEnumerable);
}

TEST_CASE("unit-interval enumeration agrees with a box scan", "[poag][property]") {
  std::vector<std::pair<IntMatrix, Coords>> cases = {
      {IntMatrix{{1, 0}, {0, 1}}, c({2, 1})},
      {IntMatrix{{1, 0}, {1, 1}}, c({1, 1})},
      {IntMatrix{{1, 1}, {1, -1}}, c({2, 0})},
      {IntMatrix{{2, -1}, {-1, 2}}, c({1, 1})},
      {IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}}, c({1, 1, 1})},
  };
  for (auto const& [rows, u] : cases) {
    LatticeConeModel m(u.size(), rows, u);
    INFO("unit " << to_string(u));
    CHECK(m.enumerate_unit_interval() == interval_by_box(rows, u, 4));
  }
}

TEST_CASE("non-pointed cone has no finite unit interval", "[poag]") {
  LatticeConeModel m(2, IntMatrix{{1, 0}}, c({1, 0}));
  CHECK_FALSE(m.is_pointed());
  CHECK_THROWS_AS(m.enumerate_unit_interval(), NotEnumerable);
  try {
    m.enumerate_unit_interval();
  } catch (NotEnumerable const& e) {
    CHECK(std::string(e.what()).find("unit interval infinite") != std::string::npos);
  }
}

TEST_CASE("unital-group axioms", "[poag]") {
  CHECK(validate_unital_group(make_structure(m1())).ok());
  CHECK(validate_unital_group(make_structure(m2())).ok());
  CHECK(validate_unital_group(make_structure(m3(), small_universe())).ok());

  LatticeConeModel zero_unit(2, IntMatrix{{1, 0}, {0, 1}}, c({0, 0}));
  auto             r = validate_unital_group(make_structure(zero_unit));
  CHECK_FALSE(r.ok());
  REQUIRE(r.first_failure());
  CHECK(r.first_failure()->clause == "(b) directed");

  // u = (2,0) on Z^2: E = {(0,0),(1,0),(2,0)} generates nothing in the
  // second coordinate.
  LatticeConeModel flat(2, IntMatrix{{1, 0}, {0, 1}}, c({2, 0}));
  CHECK_FALSE(validate_unital_group(make_structure(flat)).ok());

  auto rm = validate_unital_group(make_structure(m1()));
  REQUIRE(rm.find("(d) E generates G+"));
  CHECK(rm.find("(d) E generates G+")->note.value_or("").find("3u") != std::string::npos);
}

TEST_CASE("order laws on the lattice model", "[poag][property]") {
  auto s = make_structure(m1());
  auto const& xs = s.signed_elems;
  for (auto const& a : xs) {
    CHECK(s.leq(a, a));
  }
  std::size_t step = 7;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    auto const& a = xs[i];
    auto const& b = xs[(i * step + 3) % xs.size()];
    auto const& k = xs[(i * 13 + 5) % xs.size()];
    if (s.leq(a, b) && s.leq(b, a)) {
      CHECK(a == b);
    }
    if (s.leq(a, b)) {
      CHECK(s.leq(a + k, b + k));
    }
    for (auto const& d : xs) {
      if (s.leq(a, b) && s.leq(b, d)) {
        CHECK(s.leq(a, d));
      }
    }
  }
}

TEST_CASE("order laws on the matrix model", "[poag][property]") {
  MatrixSampler rng(3, 11);
  MatrixModel   m(3);
  for (int i = 0; i < 200; ++i) {
    SymMatrix a = rng.effect();
    SymMatrix d = rng.effect();
    SymMatrix k = rng.effect() - rng.effect();
    SymMatrix b = a + d;  // a <= b
    CHECK(m.leq(a, a));
    CHECK(m.leq(a, b));
    CHECK(m.leq(a + k, b + k));
    CHECK(m.leq(a, b + rng.effect()));
    if (m.leq(b, a)) {
      CHECK(a == b);
    }
  }
}

TEST_CASE("unit interval is closed under complement", "[poag][property]") {
  for (auto const* m : {&m1(), &m2()}) {
    auto e = m->enumerate_unit_interval();
    for (auto const& x : e) {
      CHECK(std::binary_search(e.begin(), e.end(), m->unit() - x));
    }
  }
}

TEST_CASE("apply and compose", "[poag]") {
  auto j = endo({{1, 0}, {0, 0}});
  CHECK(j(c({3, 5})) == c({3, 0}));
  CHECK(MatrixEndo::conjugation(diag({1, 0}).matrix())(sym({{2, 1}, {1, 3}}))
        == sym({{2, 0}, {0, 0}}));
  auto const& m = m1();
  auto        z = compose(m.zero_map(), m.identity_map());
  for (auto const& e : m.enumerate_unit_interval()) {
    CHECK(z(e) == m.zero());
  }
  // Additivity on the bounded universe.
  auto s = make_structure(m);
  auto k = endo({{2, -1}, {1, 3}});
  for (auto const& a : s.signed_elems) {
    CHECK(k(a + s.unit) == k(a) + k(s.unit));
  }
}
