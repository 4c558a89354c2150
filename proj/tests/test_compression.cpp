#include <algorithm>
#include <set>
#include <vector>

#include "catch_amalgamated.hpp"

#include "compbase/compression.hpp"
#include "support.hpp"

using namespace compbase;
using namespace testing_support;

namespace {

  // Retractions among integer matrices with entries in [-b, b], straight
  // from the definition, as the set of their restrictions to E.
  std::set<std::vector<Coords>> retractions_by_scan(Structure<LatticeConeModel> const& s,
                                                    long b) {
    std::size_t                   n = s.model->dim();
    std::set<std::vector<Coords>> out;
    std::vector<long>             x(n * n, -b);
    while (true) {
      IntMatrix m(n, n);
      for (std::size_t i = 0; i < n * n; ++i) {
        m(i / n, i % n) = x[i];
      }
      LatticeEndo j(m);
      Coords      p  = j(s.unit);
      bool        ok = s.in_interval(p);
      for (auto const& g : s.positives) {
        ok = ok && s.is_positive(j(g));
      }
      for (auto const& e : s.interval) {
        if (s.leq(e, p)) {
          ok = ok && j(e) == e;
        }
      }
      if (ok) {
        std::vector<Coords> restricted;
        for (auto const& e : s.interval) {
          restricted.push_back(j(e));
        }
        out.insert(restricted);
      }
      std::size_t i = 0;
      while (i < x.size() && x[i] == b) {
        x[i++] = -b;
      }
      if (i == x.size()) {
        break;
      }
      ++x[i];
    }
    return out;
  }

  std::set<std::vector<Coords>> restrictions(Structure<LatticeConeModel> const& s,
                                             std::vector<RetractionCertificate<LatticeConeModel>> const& rs) {
    std::set<std::vector<Coords>> out;
    for (auto const& r : rs) {
      std::vector<Coords> restricted;
      for (auto const& e : s.interval) {
        restricted.push_back(r.endo(e));
      }
      out.insert(restricted);
    }
    return out;
  }

}  // namespace

TEST_CASE("retraction certificates on M1", "[compression]") {
  auto s    = make_structure(m1());
  auto cert = is_retraction(s, endo({{1, 0}, {0, 0}}));
  CHECK(cert.valid());
  CHECK(cert.focus == c({1, 0}));

  auto bad = is_retraction(s, endo({{1, 1}, {0, 0}}));
  CHECK_FALSE(bad.valid());
  CHECK(bad.failure().value_or("") == "J(u) = (2,0) not in E");

  auto id = is_retraction(s, m1().identity_map());
  CHECK(id.valid());
  CHECK(id.focus == s.unit);
  CHECK(is_retraction(make_structure(m3(), small_universe(50)), m3().identity_map()).valid());
}

TEST_CASE("compressions", "[compression]") {
  auto s = make_structure(m1());
  CHECK(is_compression(s, endo({{1, 0}, {0, 0}})));
  CHECK(is_compression(s, m1().zero_map()));
  CHECK_THROWS_AS(is_compression(s, endo({{1, 1}, {0, 0}})), DomainError);

  // (x, y) -> (x, x) moves (0,1), which lies below its focus u.
  CHECK_FALSE(is_retraction(s, endo({{1, 0}, {1, 0}})).valid());

  auto s3 = make_structure(m3(), small_universe(100));
  auto v  = is_compression(s3, m3().compression(diag({1, 0})));
  CHECK(v);
  CHECK(v.note);
}

TEST_CASE("kernel and fixed points of complementary maps", "[compression]") {
  auto s = make_structure(m1());
  CHECK(kernel_fixpoint_check(s, endo({{1, 0}, {0, 0}}), endo({{0, 0}, {0, 1}})));
  CHECK_THROWS_AS(kernel_fixpoint_check(s, endo({{1, 0}, {0, 0}}), endo({{1, 0}, {0, 0}})),
                  DomainError);

  auto j  = m3().compression(diag({1, 0}));
  auto jc = m3().compression(diag({0, 1}));
  auto g  = diag({0, 5});
  CHECK(j(g).is_zero());
  CHECK(jc(g) == g);
  CHECK(j(SymMatrix::zero(2)).is_zero());
  CHECK(jc(SymMatrix::zero(2)).is_zero());
  CHECK(kernel_fixpoint_check(make_structure(m3(), small_universe(100)), j, jc));
}

TEST_CASE("direct retractions", "[compression]") {
  auto s = make_structure(m1());
  CHECK(is_direct(s, endo({{1, 0}, {0, 0}})));
  CHECK(is_direct(s, m1().identity_map()));

  auto s3 = make_structure(m3(), small_universe(20));
  auto v  = is_direct(s3, m3().compression(diag({1, 0})));
  CHECK_FALSE(v);
  CHECK(v.witness.value_or("").rfind("g = [[1/2,1/2],[1/2,1/2]]:", 0) == 0);
  CHECK(is_direct(s3, m3().identity_map()));
}

TEST_CASE("retraction enumeration", "[compression]") {
  auto s2 = make_structure(m2());
  auto r2 = enumerate_retractions(s2);
  REQUIRE(r2.size() == 2);
  CHECK(r2[0].focus == c({0}));
  CHECK(r2[1].focus == c({2}));

  auto s1 = make_structure(m1());
  auto r1 = enumerate_retractions(s1);
  for (auto const& [p, j] : m1_family()) {
    CHECK(std::any_of(r1.begin(), r1.end(), [&](auto const& r) {
      return r.focus == p && s1.maps_equal(r.endo, j);
    }));
  }

  LatticeConeModel zero_unit(2, IntMatrix{{1, 0}, {0, 1}}, c({0, 0}));
  auto             r0 = enumerate_retractions(make_structure(zero_unit));
  REQUIRE(r0.size() == 1);
  CHECK(r0[0].focus == c({0, 0}));

  CHECK_THROWS_AS(direct_compression_base(make_structure(m1())).base.compression(c({2, 2})),
                  DomainError);
}

TEST_CASE("retraction enumeration agrees with a matrix scan", "[compression][oracle]") {
  std::vector<LatticeConeModel> models = {
      m1(), m2(), LatticeConeModel(2, IntMatrix{{1, 0}, {0, 1}}, c({2, 1})),
      LatticeConeModel(2, IntMatrix{{1, 0}, {0, 1}}, c({0, 1}))};
  for (auto const& m : models) {
    auto s = make_structure(m);
    INFO("u = " << to_string(m.unit()));
    CHECK(restrictions(s, enumerate_retractions(s)) == retractions_by_scan(s, 2));
  }
}

TEST_CASE("compressible groups", "[compression]") {
  auto c1 = is_compressible_group(make_structure(m1()));
  CHECK(c1.decided);
  CHECK(c1.compressible);
  CHECK(c1.report.ok());
  CHECK(c1.projections == make_structure(m1()).interval);

  auto c2 = is_compressible_group(make_structure(m2()));
  CHECK(c2.compressible);
  CHECK(c2.projections == std::vector<Coords>{c({0}), c({2})});

  auto c3 = is_compressible_group(make_structure(m3(), small_universe(10)));
  CHECK_FALSE(c3.decided);
  REQUIRE(c3.report.items().size() == 1);
  CHECK(c3.report.items()[0].verdict.note.value_or("").find("not decidable by enumeration")
        != std::string::npos);
}

TEST_CASE("compression-base validation", "[compression]") {
  auto s1 = make_structure(m1());
  CHECK(validate_compression_base(s1, CompressionBase<LatticeConeModel>(m1_family())).ok());
  auto s2 = make_structure(m2());
  CHECK(validate_compression_base(s2, CompressionBase<LatticeConeModel>(m2_family())).ok());

  CompressionBase<LatticeConeModel> trivial({{s1.zero(), m1().zero_map()},
                                             {s1.unit, m1().identity_map()}});
  CHECK(validate_compression_base(s1, trivial).ok());

  auto s3   = make_structure(m3(), small_universe(100));
  auto base = conjugation_base(m3(), {SymMatrix::zero(2), diag({1, 0}), diag({0, 1}),
                                      SymMatrix::identity(2)});
  auto r3   = validate_compression_base(s3, base);
  CHECK(r3.ok());
  CHECK(r3.find("P.projections"));
  CHECK(validate_compression_base(s3, conjugation_base(m3(), {SymMatrix::zero(2),
                                                              SymMatrix::identity(2)}))
            .ok());
  CHECK(validate_compression_base(s3, conjugation_base(m3(), m3_projections())).ok());
}

TEST_CASE("corrupted bases name the failing clause", "[compression]") {
  auto s1 = make_structure(m1());

  auto swapped = m1_family();
  std::swap(swapped[1].second, swapped[2].second);
  auto r = validate_compression_base(s1, CompressionBase<LatticeConeModel>(swapped));
  REQUIRE(r.first_failure());
  CHECK(r.first_failure()->clause == "compression_focus");
  CHECK(r.first_failure()->verdict.witness.value_or("").find("declared focus (0,1)")
        != std::string::npos);

  auto shear = m1_family();
  shear[1].second = endo({{1, 1}, {0, 0}});
  r = validate_compression_base(s1, CompressionBase<LatticeConeModel>(shear));
  REQUIRE(r.first_failure());
  CHECK(r.first_failure()->clause == "compression_focus");
  CHECK(r.first_failure()->verdict.witness.value_or("").find("J(u) = (2,0) not in E")
        != std::string::npos);

  auto partial = m1_family();
  partial.erase(partial.begin() + 2);
  r = validate_compression_base(s1, CompressionBase<LatticeConeModel>(partial));
  REQUIRE(r.first_failure());
  CHECK(r.first_failure()->clause == "P.sub_effect_algebra");

  LatticeConeModel big(2, IntMatrix{{1, 0}, {0, 1}}, c({2, 2}));
  auto             sb = make_structure(big);
  CompressionBase<LatticeConeModel> diag_base(
      {{c({0, 0}), big.zero_map()}, {c({1, 1}), big.identity_map()}, {c({2, 2}), big.identity_map()}});
  r = validate_compression_base(sb, diag_base);
  REQUIRE(r.first_failure());
  CHECK(r.first_failure()->clause == "P.normal");

  auto s3 = make_structure(m3(), small_universe(20));
  std::vector<std::pair<SymMatrix, MatrixEndo>> fam;
  for (auto const& p : {SymMatrix::zero(2), diag({q(1, 2), 0}), diag({q(1, 2), 1}),
                        SymMatrix::identity(2)}) {
    fam.emplace_back(p, m3().compression(p));
  }
  r = validate_compression_base(s3, CompressionBase<MatrixModel>(fam));
  REQUIRE(r.first_failure());
  CHECK(r.first_failure()->clause == "P.projections");

  CHECK_THROWS_AS(CompressionBase<LatticeConeModel>({{c({0, 0}), m1().zero_map()},
                                                     {c({0, 0}), m1().zero_map()}}),
                  DomainError);
}

TEST_CASE("direct compression bases", "[compression]") {
  CHECK(direct_compression_base(make_structure(m1())).base.foci()
        == make_structure(m1()).interval);
  CHECK(direct_compression_base(make_structure(m2())).base.foci()
        == std::vector<Coords>{c({0}), c({2})});
  auto d3 = direct_compression_base(make_structure(m3(), small_universe(50)), m3_projections());
  CHECK(d3.base.foci() == std::vector<SymMatrix>{SymMatrix::zero(2), SymMatrix::identity(2)});
  CHECK(d3.report.ok());
}

TEST_CASE("laws of the M1 base", "[compression][property]") {
  auto                              s = make_structure(m1());
  CompressionBase<LatticeConeModel> base(m1_family());
  for (auto const& p : base.foci()) {
    CHECK(retraction_laws(s, base.compression(p), true));
    CHECK(complement_kernel_check(s, base, p));
    for (auto const& qq : base.foci()) {
      auto oe = order_equivalence(s, base, p, qq);
      CHECK(oe.agree());
      CHECK(oe.q_le_p == s.leq(qq, p));
      for (auto const& r : base.foci()) {
        if (s.leq(p + qq + r, s.unit)) {
          CHECK(s.maps_equal(compose(base.compression(p + r), base.compression(qq + r)),
                             base.compression(r)));
        }
      }
    }
  }
}

TEST_CASE("conjugation compressions of sampled projections", "[compression][property]") {
  MatrixModel   m(3);
  auto          s = make_structure(m, small_universe(40));
  MatrixSampler rng(3, 5);
  for (int i = 0; i < 25; ++i) {
    auto p    = rng.projection();
    auto j    = m.compression(p);
    auto cert = is_retraction(s, j);
    CHECK(cert.valid());
    CHECK(cert.focus == p);
    CHECK(is_compression(s, j));
  }
}
