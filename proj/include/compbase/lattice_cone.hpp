// compbase - unital groups with compression bases, checked exactly
//
// Lattice-cone models: the group Z^dim ordered by a polyhedral cone
// {x : cone_rows * x >= 0}, with a distinguished unit.  Endomorphisms are
// integer matrices acting on coordinates.

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "compbase/element.hpp"
#include "compbase/error.hpp"
#include "compbase/numeric.hpp"

namespace compbase {

  class LatticeEndo {
   public:
    LatticeEndo() = default;
    explicit LatticeEndo(IntMatrix m) : _m(std::move(m)) {
      if (!_m.is_square()) {
        throw ShapeError("endomorphism matrix must be square");
      }
    }

    std::size_t dim() const noexcept {
      return _m.rows();
    }
    IntMatrix const& matrix() const noexcept {
      return _m;
    }

    Coords operator()(Coords const& g) const {
      return Coords(_m * g.entries());
    }

    friend bool operator==(LatticeEndo const& a, LatticeEndo const& b) {
      return a._m == b._m;
    }
    friend bool operator<(LatticeEndo const& a, LatticeEndo const& b) {
      return a._m < b._m;
    }

   private:
    IntMatrix _m;
  };

  // a after b.
  inline LatticeEndo compose(LatticeEndo const& a, LatticeEndo const& b) {
    return LatticeEndo(a.matrix() * b.matrix());
  }

  inline LatticeEndo operator+(LatticeEndo const& a, LatticeEndo const& b) {
    return LatticeEndo(a.matrix() + b.matrix());
  }

  inline std::string to_string(LatticeEndo const& j) {
    std::string s = "[";
    for (std::size_t i = 0; i < j.dim(); ++i) {
      s += i == 0 ? "[" : ",[";
      for (std::size_t k = 0; k < j.dim(); ++k) {
        if (k > 0) {
          s += ",";
        }
        s += j.matrix()(i, k).get_str();
      }
      s += "]";
    }
    return s + "]";
  }

  class LatticeConeModel {
   public:
    using element_type = Coords;
    using endo_type    = LatticeEndo;

    static constexpr bool        enumerable = true;
    static constexpr char const* kind_name  = "lattice_cone";

    LatticeConeModel(std::size_t dim, IntMatrix cone_rows, Coords unit)
        : _dim(dim), _cone(std::move(cone_rows)), _unit(std::move(unit)) {
      if (_dim == 0) {
        throw ShapeError("lattice-cone model needs dim >= 1");
      }
      if (_cone.rows() == 0 || _cone.cols() != _dim) {
        throw ShapeError("malformed cone matrix",
                         "k x " + std::to_string(_dim) + " with k >= 1",
                         std::to_string(_cone.rows()) + " x "
                             + std::to_string(_cone.cols()));
      }
      check_element(_unit);
    }

    std::size_t dim() const noexcept {
      return _dim;
    }
    IntMatrix const& cone_rows() const noexcept {
      return _cone;
    }
    Coords const& unit() const noexcept {
      return _unit;
    }
    Coords zero() const {
      return Coords::zero(_dim);
    }

    void check_element(Coords const& g) const {
      if (g.size() != _dim) {
        throw ShapeError("element shape",
                         std::to_string(_dim) + " coordinates",
                         std::to_string(g.size()) + " coordinates");
      }
    }

    void check_endo(LatticeEndo const& j) const {
      if (j.dim() != _dim) {
        throw ShapeError("endomorphism shape",
                         std::to_string(_dim) + "x" + std::to_string(_dim),
                         std::to_string(j.dim()) + "x"
                             + std::to_string(j.dim()));
      }
    }

    bool is_positive(Coords const& g) const {
      check_element(g);
      for (std::size_t i = 0; i < _cone.rows(); ++i) {
        Integer s = 0;
        for (std::size_t j = 0; j < _dim; ++j) {
          s += _cone(i, j) * g[j];
        }
        if (s < 0) {
          return false;
        }
      }
      return true;
    }

    bool leq(Coords const& g, Coords const& h) const {
      return is_positive(h - g);
    }

    // Pointed cone <=> cone_rows has full column rank <=> every interval
    // [lo, hi] contains finitely many lattice points.
    bool is_pointed() const {
      return rank(to_rational(_cone)) == _dim;
    }

    LatticeEndo identity_map() const {
      return LatticeEndo(IntMatrix::identity(_dim));
    }
    LatticeEndo zero_map() const {
      return LatticeEndo(IntMatrix(_dim, _dim));
    }

    std::vector<Coords> group_generators() const {
      std::vector<Coords> basis;
      for (std::size_t i = 0; i < _dim; ++i) {
        Coords e = zero();
        e[i]     = 1;
        basis.push_back(std::move(e));
      }
      return basis;
    }

    // All lattice points x with lo <= x <= hi, lexicographically sorted.
    //
    // Picks dim linearly independent cone rows B; lo <= x <= hi forces
    // B*lo <= B*x <= B*hi, and x = B^{-1}(B*x) then gives an exact
    // coordinate box which is scanned and filtered.
    std::vector<Coords> interval_points(Coords const& lo, Coords const& hi) const {
      check_element(lo);
      check_element(hi);
      if (!leq(lo, hi)) {
        return {};
      }
      auto box = coordinate_box(lo, hi);
      std::vector<Coords> out;
      Coords              x(box.first);
      while (true) {
        if (leq(lo, x) && leq(x, hi)) {
          out.push_back(x);
        }
        std::size_t i = _dim;
        while (i > 0) {
          --i;
          if (x[i] < box.second[i]) {
            x[i] += 1;
            break;
          }
          x[i] = box.first[i];
          if (i == 0) {
            return out;
          }
        }
      }
    }

    std::vector<Coords> enumerate_unit_interval() const {
      return interval_points(zero(), _unit);
    }

   private:
    std::pair<std::vector<Integer>, std::vector<Integer>>
    coordinate_box(Coords const& lo, Coords const& hi) const {
      if (!is_pointed()) {
        throw NotEnumerable("unit interval infinite: cone is not pointed "
                            "(cone_rows rank < dim)");
      }
      std::vector<std::vector<Rational>> chosen;
      for (std::size_t i = 0; i < _cone.rows() && chosen.size() < _dim; ++i) {
        std::vector<Rational> row(_dim);
        for (std::size_t j = 0; j < _dim; ++j) {
          row[j] = Rational(_cone(i, j));
        }
        auto trial = chosen;
        trial.push_back(row);
        if (rank(RatMatrix::from_rows(trial)) == trial.size()) {
          chosen = std::move(trial);
        }
      }
      RatMatrix b   = RatMatrix::from_rows(chosen);
      RatMatrix inv = *inverse(b);

      std::vector<Rational> qlo(_dim), qhi(_dim);
      for (std::size_t j = 0; j < _dim; ++j) {
        qlo[j] = Rational(lo[j]);
        qhi[j] = Rational(hi[j]);
      }
      auto ylo = b * qlo;
      auto yhi = b * qhi;

      std::vector<Integer> bl(_dim), bh(_dim);
      for (std::size_t i = 0; i < _dim; ++i) {
        Rational mn = 0, mx = 0;
        for (std::size_t j = 0; j < _dim; ++j) {
          Rational a = inv(i, j) * ylo[j];
          Rational c = inv(i, j) * yhi[j];
          mn += a < c ? a : c;
          mx += a < c ? c : a;
        }
        Integer f, cl;
        mpz_cdiv_q(cl.get_mpz_t(), mn.get_num_mpz_t(), mn.get_den_mpz_t());
        mpz_fdiv_q(f.get_mpz_t(), mx.get_num_mpz_t(), mx.get_den_mpz_t());
        bl[i] = cl;
        bh[i] = f;
      }
      return {bl, bh};
    }

    std::size_t _dim;
    IntMatrix   _cone;
    Coords      _unit;
  };

}  // namespace compbase
