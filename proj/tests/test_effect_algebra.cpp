#include <algorithm>
#include <set>
#include <vector>

#include "catch_amalgamated.hpp"

#include "compbase/effect_algebra.hpp"
#include "support.hpp"

using namespace compbase;
using namespace testing_support;

namespace {

  // All (e1, f1, d) in E^3 with e1 + d = e, f1 + d = f, e1 + f1 + d <= u.
  std::vector<MackeyTriple<Coords>> mackey_by_triple_scan(Structure<LatticeConeModel> const& s,
                                                          Coords const& e,
                                                          Coords const& f) {
    std::vector<MackeyTriple<Coords>> out;
    for (auto const& e1 : s.interval) {
      for (auto const& f1 : s.interval) {
        for (auto const& d : s.interval) {
          if (e1 + d == e && f1 + d == f && s.leq(e1 + f1 + d, s.unit)) {
            out.push_back({e1, f1, d});
          }
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Normality straight from the definition: every Mackey decomposition
  // of a pair in the subset has all three components in the subset.
  bool normal_by_definition(Structure<LatticeConeModel> const& s,
                            std::set<Coords> const&            sub) {
    for (auto const& e : sub) {
      for (auto const& f : sub) {
        for (auto const& t : mackey_by_triple_scan(s, e, f)) {
          if (!sub.count(t.e1) || !sub.count(t.f1) || !sub.count(t.d)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // c is central iff the maps e -> (e /\ c, e /\ (u - c)) split E as a
  // product: counted as pairs (a, b) with a <= c, b <= u - c, a + b in E.
  bool central_by_product(Structure<LatticeConeModel> const& s, Coords const& c) {
    std::vector<Coords> lo, hi;
    for (auto const& e : s.interval) {
      if (s.leq(e, c)) {
        lo.push_back(e);
      }
      if (s.leq(e, s.unit - c)) {
        hi.push_back(e);
      }
    }
    std::set<Coords> sums;
    for (auto const& a : lo) {
      for (auto const& b : hi) {
        if (!s.in_interval(a + b)) {
          return false;
        }
        sums.insert(a + b);
      }
    }
    return sums.size() == lo.size() * hi.size() && sums.size() == s.interval.size();
  }

  std::vector<std::vector<Coords>> subsets(std::vector<Coords> const& xs) {
    std::vector<std::vector<Coords>> out;
    for (unsigned mask = 0; mask < (1u << xs.size()); ++mask) {
      std::vector<Coords> s;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (mask & (1u << i)) {
          s.push_back(xs[i]);
        }
      }
      out.push_back(s);
    }
    return out;
  }

}  // namespace

TEST_CASE("partial sum and orthosupplement", "[effect]") {
  auto                            s = make_structure(m1());
  EffectAlgebraView<LatticeConeModel> ea(s);
  CHECK(ea.oplus(c({1, 0}), c({0, 1})) == c({1, 1}));
  CHECK_FALSE(ea.oplus(c({1, 0}), c({1, 0})));
  CHECK(ea.orthosupplement(c({1, 0})) == c({0, 1}));
  CHECK_THROWS_AS(ea.oplus(c({2, 0}), c({0, 0})), DomainError);
  CHECK(ea.elements().size() == 4);
}

TEST_CASE("Mackey decompositions on M1", "[effect]") {
  auto                                s = make_structure(m1());
  EffectAlgebraView<LatticeConeModel> ea(s);
  using T = MackeyTriple<Coords>;
  CHECK(ea.mackey_decompositions(c({1, 0}), c({0, 1}))
        == std::vector<T>{{c({1, 0}), c({0, 1}), c({0, 0})}});
  CHECK(ea.mackey_decompositions(c({1, 0}), c({1, 0}))
        == std::vector<T>{{c({0, 0}), c({0, 0}), c({1, 0})}});
  for (auto const& f : s.interval) {
    CHECK(ea.mackey_decompositions(c({0, 0}), f)
          == std::vector<T>{{c({0, 0}), f, c({0, 0})}});
  }
  for (auto const& e : s.interval) {
    for (auto const& f : s.interval) {
      CHECK(ea.is_mackey_compatible(e, f));
    }
  }
}

TEST_CASE("d-search agrees with the triple scan over E^3", "[effect][oracle]") {
  std::vector<LatticeConeModel> models = {
      m1(), m2(),
      LatticeConeModel(2, IntMatrix{{1, 0}, {0, 1}}, c({2, 1})),
      LatticeConeModel(2, IntMatrix{{1, 0}, {1, 1}}, c({1, 1})),
      LatticeConeModel(2, IntMatrix{{2, -1}, {-1, 2}}, c({1, 1}))};
  for (auto const& m : models) {
    auto                                s = make_structure(m);
    EffectAlgebraView<LatticeConeModel> ea(s);
    for (auto const& e : s.interval) {
      for (auto const& f : s.interval) {
        INFO("u = " << to_string(m.unit()) << ", e = " << to_string(e)
                    << ", f = " << to_string(f));
        auto got    = ea.mackey_decompositions(e, f);
        auto expect = mackey_by_triple_scan(s, e, f);
        std::sort(got.begin(), got.end());
        std::sort(expect.begin(), expect.end());
        CHECK(got == expect);
      }
    }
  }
}

TEST_CASE("Mackey search needs an enumerable interval", "[effect]") {
  auto                           s = make_structure(m3(), small_universe(10));
  EffectAlgebraView<MatrixModel> ea(s);
  CHECK_THROWS_AS(ea.mackey_decompositions(diag({1, 0}), diag({0, 1})), NotEnumerable);
  try {
    ea.mackey_decompositions(diag({1, 0}), diag({0, 1}));
  } catch (NotEnumerable const& e) {
    CHECK(std::string(e.what()).find("is_mackey_compatible_witness") != std::string::npos);
  }
}

TEST_CASE("sub-effect algebras and normality", "[effect]") {
  auto                                s1 = make_structure(m1());
  EffectAlgebraView<LatticeConeModel> ea1(s1);
  CHECK(ea1.is_sub_effect_algebra(s1.interval));
  CHECK(ea1.is_normal_subalgebra(SubEffectAlgebra<Coords>(s1.interval)));
  CHECK(ea1.is_normal_subalgebra(SubEffectAlgebra<Coords>({c({0, 0}), c({1, 1})})));
  auto missing = ea1.is_sub_effect_algebra({c({0, 0}), c({1, 0}), c({1, 1})});
  CHECK_FALSE(missing);
  CHECK(missing.witness.value_or("").find("(0,1)") != std::string::npos);

  auto                                s2 = make_structure(m2());
  EffectAlgebraView<LatticeConeModel> ea2(s2);
  CHECK(ea2.is_normal_subalgebra(SubEffectAlgebra<Coords>({c({0}), c({2})})));

  // {0, (1,1), (2,2)} in [0, (2,2)] is a sub-effect algebra but not
  // normal: (0,1) + (1,0) = (1,1) twice over.
  LatticeConeModel                    big(2, IntMatrix{{1, 0}, {0, 1}}, c({2, 2}));
  auto                                sb = make_structure(big);
  EffectAlgebraView<LatticeConeModel> eab(sb);
  std::vector<Coords>                 diag_set{c({0, 0}), c({1, 1}), c({2, 2})};
  CHECK(eab.is_sub_effect_algebra(diag_set));
  auto nn = eab.is_normal_subalgebra(SubEffectAlgebra<Coords>(diag_set));
  CHECK_FALSE(nn);
  CHECK(nn.witness);
}

TEST_CASE("normality sweep agrees with the definition", "[effect][oracle]") {
  std::vector<LatticeConeModel> models = {
      m1(), m2(), LatticeConeModel(2, IntMatrix{{1, 0}, {0, 1}}, c({2, 1}))};
  for (auto const& m : models) {
    auto                                s = make_structure(m);
    EffectAlgebraView<LatticeConeModel> ea(s);
    for (auto const& sub : subsets(s.interval)) {
      if (!ea.is_sub_effect_algebra(sub)) {
        continue;
      }
      std::set<Coords> set(sub.begin(), sub.end());
      INFO("subset " << to_string_list(sub));
      CHECK(bool(ea.is_normal_subalgebra(SubEffectAlgebra<Coords>(sub)))
            == normal_by_definition(s, set));
    }
  }
}

TEST_CASE("center", "[effect]") {
  auto                                s1 = make_structure(m1());
  EffectAlgebraView<LatticeConeModel> ea1(s1);
  CHECK(ea1.center() == s1.interval);
  auto                                s2 = make_structure(m2());
  EffectAlgebraView<LatticeConeModel> ea2(s2);
  CHECK(ea2.center() == std::vector<Coords>{c({0}), c({2})});
}

TEST_CASE("center agrees with the product-splitting test", "[effect][oracle]") {
  std::vector<LatticeConeModel> models = {
      m1(), m2(),
      LatticeConeModel(2, IntMatrix{{1, 0}, {0, 1}}, c({2, 1})),
      LatticeConeModel(3, IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, c({1, 2, 1})),
      LatticeConeModel(2, IntMatrix{{1, 0}, {1, 1}}, c({1, 1}))};
  for (auto const& m : models) {
    auto                                s = make_structure(m);
    EffectAlgebraView<LatticeConeModel> ea(s);
    auto                                center = ea.center();
    CHECK(std::binary_search(center.begin(), center.end(), s.zero()));
    CHECK(std::binary_search(center.begin(), center.end(), s.unit));
    for (auto const& e : s.interval) {
      INFO("u = " << to_string(m.unit()) << ", c = " << to_string(e));
      CHECK(std::binary_search(center.begin(), center.end(), e)
            == central_by_product(s, e));
    }
  }
}
