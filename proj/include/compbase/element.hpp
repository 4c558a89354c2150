// compbase - unital groups with compression bases, checked exactly
//
// Group elements for the two model families: integer coordinate vectors
// (lattice-cone models) and exactly symmetric rational matrices (operator
// models).  Both are regular value types with a total order so they can key
// std::map and be listed deterministically.

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "compbase/error.hpp"
#include "compbase/numeric.hpp"

namespace compbase {

  class Coords {
   public:
    Coords() = default;
    explicit Coords(std::vector<Integer> v) : _v(std::move(v)) {}
    Coords(std::initializer_list<Integer> v) : _v(v) {}

    static Coords zero(std::size_t n) {
      return Coords(std::vector<Integer>(n, Integer(0)));
    }

    std::size_t size() const noexcept {
      return _v.size();
    }
    Integer const& operator[](std::size_t i) const {
      return _v[i];
    }
    Integer& operator[](std::size_t i) {
      return _v[i];
    }
    std::vector<Integer> const& entries() const noexcept {
      return _v;
    }

    bool is_zero() const {
      for (auto const& x : _v) {
        if (x != 0) {
          return false;
        }
      }
      return true;
    }

    Coords& operator+=(Coords const& that) {
      check(that);
      for (std::size_t i = 0; i < _v.size(); ++i) {
        _v[i] += that._v[i];
      }
      return *this;
    }
    Coords& operator-=(Coords const& that) {
      check(that);
      for (std::size_t i = 0; i < _v.size(); ++i) {
        _v[i] -= that._v[i];
      }
      return *this;
    }

    friend Coords operator+(Coords a, Coords const& b) {
      return a += b;
    }
    friend Coords operator-(Coords a, Coords const& b) {
      return a -= b;
    }
    friend Coords operator-(Coords a) {
      for (auto& x : a._v) {
        x = -x;
      }
      return a;
    }
    friend Coords operator*(Integer const& k, Coords a) {
      for (auto& x : a._v) {
        x *= k;
      }
      return a;
    }

    friend bool operator==(Coords const& a, Coords const& b) {
      return a._v == b._v;
    }
    friend bool operator!=(Coords const& a, Coords const& b) {
      return !(a == b);
    }
    friend bool operator<(Coords const& a, Coords const& b) {
      return a._v < b._v;
    }

   private:
    void check(Coords const& that) const {
      if (_v.size() != that._v.size()) {
        throw ShapeError("coordinate vectors",
                         std::to_string(_v.size()) + " entries",
                         std::to_string(that._v.size()));
      }
    }

    std::vector<Integer> _v;
  };

  inline std::string to_string(Coords const& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i > 0) {
        s += ",";
      }
      s += c[i].get_str();
    }
    return s + ")";
  }

  // A symmetric rational matrix.  Construction rejects asymmetric input.
  class SymMatrix {
   public:
    SymMatrix() = default;
    explicit SymMatrix(RatMatrix m) : _m(std::move(m)) {
      if (!_m.is_symmetric()) {
        throw ShapeError("matrix element is not exactly symmetric");
      }
    }
    SymMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
        : SymMatrix(RatMatrix(rows)) {}

    static SymMatrix zero(std::size_t n) {
      return SymMatrix(RatMatrix(n, n));
    }
    static SymMatrix identity(std::size_t n) {
      return SymMatrix(RatMatrix::identity(n));
    }
    static SymMatrix diagonal(std::vector<Rational> const& d) {
      RatMatrix m(d.size(), d.size());
      for (std::size_t i = 0; i < d.size(); ++i) {
        m(i, i) = d[i];
      }
      return SymMatrix(std::move(m));
    }

    std::size_t dim() const noexcept {
      return _m.rows();
    }
    RatMatrix const& matrix() const noexcept {
      return _m;
    }
    Rational const& operator()(std::size_t i, std::size_t j) const {
      return _m(i, j);
    }
    bool is_zero() const {
      return _m.is_zero();
    }

    friend SymMatrix operator+(SymMatrix const& a, SymMatrix const& b) {
      return SymMatrix(Raw{}, a._m + b._m);
    }
    friend SymMatrix operator-(SymMatrix const& a, SymMatrix const& b) {
      return SymMatrix(Raw{}, a._m - b._m);
    }
    friend SymMatrix operator-(SymMatrix const& a) {
      return SymMatrix(Raw{}, -a._m);
    }
    friend SymMatrix operator*(Rational const& k, SymMatrix const& a) {
      return SymMatrix(Raw{}, k * a._m);
    }
    SymMatrix& operator+=(SymMatrix const& b) {
      _m += b._m;
      return *this;
    }
    SymMatrix& operator-=(SymMatrix const& b) {
      _m -= b._m;
      return *this;
    }

    friend bool operator==(SymMatrix const& a, SymMatrix const& b) {
      return a._m == b._m;
    }
    friend bool operator!=(SymMatrix const& a, SymMatrix const& b) {
      return !(a == b);
    }
    friend bool operator<(SymMatrix const& a, SymMatrix const& b) {
      return a._m < b._m;
    }

   private:
    struct Raw {};
    SymMatrix(Raw, RatMatrix m) : _m(std::move(m)) {}

    RatMatrix _m;
  };

  inline std::string to_string(SymMatrix const& g) {
    std::string s = "[";
    for (std::size_t i = 0; i < g.dim(); ++i) {
      s += i == 0 ? "[" : ",[";
      for (std::size_t j = 0; j < g.dim(); ++j) {
        if (j > 0) {
          s += ",";
        }
        s += g(i, j).get_str();
      }
      s += "]";
    }
    return s + "]";
  }

  template <typename Range>
  std::string to_string_list(Range const& r) {
    std::string s = "{";
    bool        first = true;
    for (auto const& x : r) {
      if (!first) {
        s += ", ";
      }
      first = false;
      s += to_string(x);
    }
    return s + "}";
  }

}  // namespace compbase
