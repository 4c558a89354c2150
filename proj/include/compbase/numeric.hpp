// compbase - unital groups with compression bases, checked exactly
//
// Arbitrary-precision scalars, dense matrices over them, and the small
// amount of exact linear algebra the models need: rank, inverse, an exact
// positive-semidefiniteness test, and integer lattice membership.

#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "compbase/error.hpp"

namespace compbase {

  using Integer  = mpz_class;
  using Rational = mpq_class;

  inline std::string to_string(Integer const& x) {
    return x.get_str();
  }

  // "a/b" with b > 0 in lowest terms, or "a" for integers.
  inline std::string to_string(Rational const& x) {
    return x.get_str();
  }

  inline Integer parse_integer(std::string_view text) {
    std::string s(text);
    if (s.empty()) {
      throw ParseError("empty integer");
    }
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()
        || !std::all_of(s.begin() + i, s.end(), [](char c) {
             return c >= '0' && c <= '9';
           })) {
      throw ParseError("not an integer: \"" + s + "\"");
    }
    if (s[0] == '+') {
      s.erase(0, 1);
    }
    return Integer(s, 10);
  }

  // Accepts "a", "-a", "a/b", "-a/b" with b != 0.
  inline Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      return Rational(parse_integer(text));
    }
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) {
      throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  ////////////////////////////////////////////////////////////////////////
  // Matrix
  ////////////////////////////////////////////////////////////////////////

  template <typename Scalar>
  class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : _rows(rows), _cols(cols), _data(rows * cols, Scalar(0)) {}

    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows)
        : _rows(rows.size()), _cols(rows.size() == 0 ? 0 : rows.begin()->size()) {
      _data.reserve(_rows * _cols);
      for (auto const& row : rows) {
        if (row.size() != _cols) {
          throw ShapeError("ragged matrix literal");
        }
        _data.insert(_data.end(), row.begin(), row.end());
      }
    }

    static Matrix identity(std::size_t n) {
      Matrix m(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
      }
      return m;
    }

    static Matrix from_rows(std::vector<std::vector<Scalar>> const& rows) {
      std::size_t cols = rows.empty() ? 0 : rows.front().size();
      Matrix      m(rows.size(), cols);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) {
          throw ShapeError("ragged matrix rows");
        }
        for (std::size_t j = 0; j < cols; ++j) {
          m(i, j) = rows[i][j];
        }
      }
      return m;
    }

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }
    bool is_square() const noexcept {
      return _rows == _cols;
    }

    Scalar& operator()(std::size_t i, std::size_t j) {
      return _data[i * _cols + j];
    }
    Scalar const& operator()(std::size_t i, std::size_t j) const {
      return _data[i * _cols + j];
    }

    std::vector<Scalar> const& data() const noexcept {
      return _data;
    }

    Matrix transpose() const {
      Matrix t(_cols, _rows);
      for (std::size_t i = 0; i < _rows; ++i) {
        for (std::size_t j = 0; j < _cols; ++j) {
          t(j, i) = (*this)(i, j);
        }
      }
      return t;
    }

    bool is_symmetric() const {
      if (!is_square()) {
        return false;
      }
      for (std::size_t i = 0; i < _rows; ++i) {
        for (std::size_t j = i + 1; j < _cols; ++j) {
          if ((*this)(i, j) != (*this)(j, i)) {
            return false;
          }
        }
      }
      return true;
    }

    bool is_zero() const {
      return std::all_of(
          _data.begin(), _data.end(), [](Scalar const& x) { return x == 0; });
    }

    Matrix& operator+=(Matrix const& that) {
      check_same_shape(that, "matrix addition");
      for (std::size_t k = 0; k < _data.size(); ++k) {
        _data[k] += that._data[k];
      }
      return *this;
    }

    Matrix& operator-=(Matrix const& that) {
      check_same_shape(that, "matrix subtraction");
      for (std::size_t k = 0; k < _data.size(); ++k) {
        _data[k] -= that._data[k];
      }
      return *this;
    }

    Matrix& operator*=(Scalar const& c) {
      for (auto& x : _data) {
        x *= c;
      }
      return *this;
    }

    friend Matrix operator+(Matrix a, Matrix const& b) {
      return a += b;
    }
    friend Matrix operator-(Matrix a, Matrix const& b) {
      return a -= b;
    }
    friend Matrix operator-(Matrix a) {
      for (auto& x : a._data) {
        x = -x;
      }
      return a;
    }
    friend Matrix operator*(Scalar const& c, Matrix a) {
      return a *= c;
    }

    friend Matrix operator*(Matrix const& a, Matrix const& b) {
      if (a._cols != b._rows) {
        throw ShapeError("matrix product",
                         "inner dimensions equal",
                         std::to_string(a._cols) + " vs "
                             + std::to_string(b._rows));
      }
      Matrix c(a._rows, b._cols);
      for (std::size_t i = 0; i < a._rows; ++i) {
        for (std::size_t k = 0; k < a._cols; ++k) {
          Scalar const& aik = a(i, k);
          if (aik == 0) {
            continue;
          }
          for (std::size_t j = 0; j < b._cols; ++j) {
            c(i, j) += aik * b(k, j);
          }
        }
      }
      return c;
    }

    friend std::vector<Scalar> operator*(Matrix const&              a,
                                         std::vector<Scalar> const& x) {
      if (a._cols != x.size()) {
        throw ShapeError("matrix-vector product",
                         std::to_string(a._cols) + " entries",
                         std::to_string(x.size()));
      }
      std::vector<Scalar> y(a._rows, Scalar(0));
      for (std::size_t i = 0; i < a._rows; ++i) {
        for (std::size_t j = 0; j < a._cols; ++j) {
          y[i] += a(i, j) * x[j];
        }
      }
      return y;
    }

    friend bool operator==(Matrix const& a, Matrix const& b) {
      return a._rows == b._rows && a._cols == b._cols && a._data == b._data;
    }

    // Lexicographic on shape, then row-major entries.
    friend bool operator<(Matrix const& a, Matrix const& b) {
      if (a._rows != b._rows) {
        return a._rows < b._rows;
      }
      if (a._cols != b._cols) {
        return a._cols < b._cols;
      }
      return std::lexicographical_compare(
          a._data.begin(), a._data.end(), b._data.begin(), b._data.end());
    }

   private:
    void check_same_shape(Matrix const& that, char const* what) const {
      if (_rows != that._rows || _cols != that._cols) {
        throw ShapeError(what,
                         std::to_string(_rows) + "x" + std::to_string(_cols),
                         std::to_string(that._rows) + "x"
                             + std::to_string(that._cols));
      }
    }

    std::size_t         _rows = 0;
    std::size_t         _cols = 0;
    std::vector<Scalar> _data;
  };

  using IntMatrix = Matrix<Integer>;
  using RatMatrix = Matrix<Rational>;

  inline RatMatrix to_rational(IntMatrix const& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        r(i, j) = Rational(m(i, j));
      }
    }
    return r;
  }

  // Empty optional when some entry is not an integer.
  inline std::optional<IntMatrix> to_integer(RatMatrix const& m) {
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (m(i, j).get_den() != 1) {
          return std::nullopt;
        }
        r(i, j) = m(i, j).get_num();
      }
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Exact linear algebra over Q
  ////////////////////////////////////////////////////////////////////////

  inline std::size_t rank(RatMatrix m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
      std::size_t piv = r;
      while (piv < m.rows() && m(piv, c) == 0) {
        ++piv;
      }
      if (piv == m.rows()) {
        continue;
      }
      for (std::size_t j = 0; j < m.cols(); ++j) {
        std::swap(m(r, j), m(piv, j));
      }
      for (std::size_t i = r + 1; i < m.rows(); ++i) {
        if (m(i, c) == 0) {
          continue;
        }
        Rational f = m(i, c) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) {
          m(i, j) -= f * m(r, j);
        }
      }
      ++r;
    }
    return r;
  }

  // Gauss-Jordan; empty optional for singular input.
  inline std::optional<RatMatrix> inverse(RatMatrix const& m) {
    if (!m.is_square()) {
      throw ShapeError("inverse of non-square matrix");
    }
    std::size_t n = m.rows();
    RatMatrix   a = m;
    RatMatrix   inv = RatMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = c;
      while (piv < n && a(piv, c) == 0) {
        ++piv;
      }
      if (piv == n) {
        return std::nullopt;
      }
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(c, j), a(piv, j));
        std::swap(inv(c, j), inv(piv, j));
      }
      Rational d = a(c, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(c, j) /= d;
        inv(c, j) /= d;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (i == c || a(i, c) == 0) {
          continue;
        }
        Rational f = a(i, c);
        for (std::size_t j = 0; j < n; ++j) {
          a(i, j) -= f * a(c, j);
          inv(i, j) -= f * inv(c, j);
        }
      }
    }
    return inv;
  }

  // Exact PSD test for a symmetric rational matrix.
  //
  // Symmetric elimination pivoting on nonzero diagonal entries.  Each step
  // replaces the remaining block by a_kk * A - a_k * a_k^T, which is a
  // positive multiple of the Schur complement, so no division is needed.
  // A negative pivot refutes PSD.  Once every remaining diagonal entry is
  // zero the block is PSD iff it is entirely zero.
  inline bool is_positive_semidefinite(RatMatrix const& m) {
    if (!m.is_symmetric()) {
      throw ShapeError("PSD test requires a symmetric matrix");
    }
    // Scaling by the common denominator keeps the elimination in Z.
    std::size_t n = m.rows();
    Integer     den = 1;
    for (auto const& x : m.data()) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    }
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = m(i, j).get_num() * (den / m(i, j).get_den());
      }
    }
    std::vector<std::size_t> live(n);
    for (std::size_t i = 0; i < n; ++i) {
      live[i] = i;
    }
    while (!live.empty()) {
      auto it = std::find_if(live.begin(), live.end(), [&a](std::size_t i) {
        return a(i, i) != 0;
      });
      if (it == live.end()) {
        for (std::size_t i : live) {
          for (std::size_t j : live) {
            if (a(i, j) != 0) {
              return false;
            }
          }
        }
        return true;
      }
      std::size_t k = *it;
      if (a(k, k) < 0) {
        return false;
      }
      live.erase(it);
      Integer pivot = a(k, k);
      for (std::size_t i : live) {
        for (std::size_t j : live) {
          if (j < i) {
            continue;
          }
          a(i, j) = pivot * a(i, j) - a(i, k) * a(k, j);
          a(j, i) = a(i, j);
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Integer lattices
  ////////////////////////////////////////////////////////////////////////

  // The subgroup of Z^n generated by a finite set of vectors, kept as a
  // row echelon basis built with unimodular row operations.
  class IntLattice {
   public:
    explicit IntLattice(std::size_t n) : _n(n) {}

    template <typename Range>
    IntLattice(std::size_t n, Range const& generators) : _n(n) {
      for (auto const& g : generators) {
        insert(g);
      }
    }

    std::size_t ambient_dim() const noexcept {
      return _n;
    }
    std::size_t rank() const noexcept {
      return _rows.size();
    }

    void insert(std::vector<Integer> v) {
      check(v);
      for (std::size_t c = 0; c < _n; ++c) {
        if (v[c] == 0) {
          continue;
        }
        auto row = find_pivot(c);
        if (row == _rows.end()) {
          if (v[c] < 0) {
            for (auto& x : v) {
              x = -x;
            }
          }
          _rows.insert(std::upper_bound(_rows.begin(),
                                        _rows.end(),
                                        c,
                                        [this](std::size_t col, Row const& r) {
                                          return col < r.pivot;
                                        }),
                       Row{c, std::move(v)});
          return;
        }
        auto& b = row->entries;
        Integer g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                   b[c].get_mpz_t(), v[c].get_mpz_t());
        Integer bc = b[c] / g, vc = v[c] / g;
        std::vector<Integer> nb(_n), nv(_n);
        for (std::size_t j = 0; j < _n; ++j) {
          nb[j] = s * b[j] + t * v[j];
          nv[j] = bc * v[j] - vc * b[j];
        }
        if (nb[c] < 0) {
          for (auto& x : nb) {
            x = -x;
          }
        }
        b = std::move(nb);
        v = std::move(nv);
      }
    }

    bool contains(std::vector<Integer> v) const {
      check(v);
      for (std::size_t c = 0; c < _n; ++c) {
        if (v[c] == 0) {
          continue;
        }
        auto row = find_pivot(c);
        if (row == _rows.end() || !mpz_divisible_p(v[c].get_mpz_t(),
                                                   row->entries[c].get_mpz_t())) {
          return false;
        }
        Integer q = v[c] / row->entries[c];
        for (std::size_t j = c; j < _n; ++j) {
          v[j] -= q * row->entries[j];
        }
      }
      return true;
    }

   private:
    struct Row {
      std::size_t          pivot;
      std::vector<Integer> entries;
    };

    void check(std::vector<Integer> const& v) const {
      if (v.size() != _n) {
        throw ShapeError("lattice vector",
                         std::to_string(_n) + " entries",
                         std::to_string(v.size()));
      }
    }

    std::vector<Row>::iterator find_pivot(std::size_t c) {
      return std::find_if(
          _rows.begin(), _rows.end(), [c](Row const& r) { return r.pivot == c; });
    }
    std::vector<Row>::const_iterator find_pivot(std::size_t c) const {
      return std::find_if(
          _rows.begin(), _rows.end(), [c](Row const& r) { return r.pivot == c; });
    }

    std::size_t      _n;
    std::vector<Row> _rows;
  };

}  // namespace compbase
