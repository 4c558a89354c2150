// Shared fixtures for the test programs.

#pragma once

#include <string>
#include <vector>

#include "compbase/compression.hpp"
#include "compbase/element.hpp"
#include "compbase/lattice_cone.hpp"
#include "compbase/matrix_model.hpp"
#include "compbase/structure.hpp"

namespace testing_support {

  using namespace compbase;

  inline std::string model_path(std::string const& name) {
    return std::string(COMPBASE_MODELS_DIR) + "/" + name;
  }
  inline std::string fixture_path(std::string const& name) {
    return std::string(COMPBASE_FIXTURES_DIR) + "/" + name;
  }

  inline Coords c(std::initializer_list<long> xs) {
    std::vector<Integer> v;
    for (long x : xs) {
      v.emplace_back(x);
    }
    return Coords(std::move(v));
  }

  inline Rational q(long n, long d = 1) {
    Rational r(n, d);
    r.canonicalize();
    return r;
  }

  inline SymMatrix sym(std::vector<std::vector<Rational>> rows) {
    return SymMatrix(RatMatrix::from_rows(rows));
  }

  inline SymMatrix diag(std::vector<Rational> d) {
    return SymMatrix::diagonal(d);
  }

  inline LatticeEndo endo(std::vector<std::vector<Integer>> rows) {
    return LatticeEndo(IntMatrix::from_rows(rows));
  }

  // Z^2, coordinate cone, u = (1,1).
  inline LatticeConeModel const& m1() {
    static LatticeConeModel m(2, IntMatrix{{1, 0}, {0, 1}}, c({1, 1}));
    return m;
  }

  // Z, u = 2.
  inline LatticeConeModel const& m2() {
    static LatticeConeModel m(1, IntMatrix{{1}}, c({2}));
    return m;
  }

  inline std::vector<std::pair<Coords, LatticeEndo>> m1_family() {
    return {{c({0, 0}), endo({{0, 0}, {0, 0}})},
            {c({1, 0}), endo({{1, 0}, {0, 0}})},
            {c({0, 1}), endo({{0, 0}, {0, 1}})},
            {c({1, 1}), endo({{1, 0}, {0, 1}})}};
  }

  inline std::vector<std::pair<Coords, LatticeEndo>> m2_family() {
    return {{c({0}), endo({{0}})}, {c({2}), endo({{1}})}};
  }

  inline SymMatrix half_plus() {
    return sym({{q(1, 2), q(1, 2)}, {q(1, 2), q(1, 2)}});
  }
  inline SymMatrix half_minus() {
    return sym({{q(1, 2), q(-1, 2)}, {q(-1, 2), q(1, 2)}});
  }

  // The six bundled projections of the 2x2 model, in file order.
  inline std::vector<SymMatrix> m3_projections() {
    return {SymMatrix::zero(2), diag({1, 0}), diag({0, 1}),
            half_plus(),        half_minus(), SymMatrix::identity(2)};
  }

  inline MatrixModel const& m3() {
    static MatrixModel m(2, m3_projections());
    return m;
  }

  inline UniverseConfig small_universe(std::size_t samples = 200) {
    UniverseConfig cfg;
    cfg.samples = samples;
    return cfg;
  }

}  // namespace testing_support
