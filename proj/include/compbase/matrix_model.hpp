// compbase - unital groups with compression bases, checked exactly
//
// The operator model at finite dimension: real symmetric rational matrices
// ordered by positive semidefiniteness, unit the identity, and compressions
// g -> p g p for rational projections p.  No floating point anywhere.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "compbase/element.hpp"
#include "compbase/error.hpp"
#include "compbase/numeric.hpp"

namespace compbase {

  namespace detail {
    // Coordinates of a symmetric matrix: entries (i, j) with i <= j in
    // row-major order.  Basis element k is E_ii, or E_ij + E_ji for i < j.
    inline std::vector<std::pair<std::size_t, std::size_t>>
    sym_index(std::size_t n) {
      std::vector<std::pair<std::size_t, std::size_t>> idx;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
          idx.emplace_back(i, j);
        }
      }
      return idx;
    }

    inline std::vector<Rational> vec(SymMatrix const& g) {
      std::vector<Rational> v;
      for (auto [i, j] : sym_index(g.dim())) {
        v.push_back(g(i, j));
      }
      return v;
    }

    inline SymMatrix unvec(std::vector<Rational> const& v, std::size_t n) {
      RatMatrix m(n, n);
      auto      idx = sym_index(n);
      for (std::size_t k = 0; k < idx.size(); ++k) {
        auto [i, j] = idx[k];
        m(i, j)     = v[k];
        m(j, i)     = v[k];
      }
      return SymMatrix(std::move(m));
    }

    inline SymMatrix sym_basis(std::size_t n, std::size_t i, std::size_t j) {
      RatMatrix m(n, n);
      m(i, j) = 1;
      m(j, i) = 1;
      return SymMatrix(std::move(m));
    }
  }  // namespace detail

  // A Q-linear map on symmetric n x n matrices, stored as its matrix on the
  // vectorised space.  Maps built by conjugation remember the conjugator.
  class MatrixEndo {
   public:
    MatrixEndo() = default;
    MatrixEndo(std::size_t n, RatMatrix linear)
        : _n(n), _linear(std::move(linear)) {
      std::size_t s = n * (n + 1) / 2;
      if (_linear.rows() != s || _linear.cols() != s) {
        throw ShapeError("linear map on symmetric matrices",
                         std::to_string(s) + "x" + std::to_string(s),
                         std::to_string(_linear.rows()) + "x"
                             + std::to_string(_linear.cols()));
      }
    }

    // g -> a g a^T
    static MatrixEndo conjugation(RatMatrix const& a) {
      if (!a.is_square()) {
        throw ShapeError("conjugator must be square");
      }
      std::size_t n   = a.rows();
      auto        idx = detail::sym_index(n);
      RatMatrix   lin(idx.size(), idx.size());
      RatMatrix   at = a.transpose();
      for (std::size_t k = 0; k < idx.size(); ++k) {
        auto [i, j] = idx[k];
        RatMatrix img = a * detail::sym_basis(n, i, j).matrix() * at;
        for (std::size_t r = 0; r < idx.size(); ++r) {
          lin(r, k) = img(idx[r].first, idx[r].second);
        }
      }
      MatrixEndo e(n, std::move(lin));
      e._conjugator = a;
      return e;
    }

    std::size_t dim() const noexcept {
      return _n;
    }
    RatMatrix const& linear() const noexcept {
      return _linear;
    }
    std::optional<RatMatrix> const& conjugator() const noexcept {
      return _conjugator;
    }

    SymMatrix operator()(SymMatrix const& g) const {
      if (g.dim() != _n) {
        throw ShapeError("element shape",
                         std::to_string(_n) + "x" + std::to_string(_n),
                         std::to_string(g.dim()) + "x"
                             + std::to_string(g.dim()));
      }
      if (_conjugator) {
        return SymMatrix(*_conjugator * g.matrix() * _conjugator->transpose());
      }
      return detail::unvec(_linear * detail::vec(g), _n);
    }

    friend MatrixEndo compose(MatrixEndo const& a, MatrixEndo const& b) {
      MatrixEndo c(a._n, a._linear * b._linear);
      if (a._conjugator && b._conjugator) {
        c._conjugator = *a._conjugator * *b._conjugator;
      }
      return c;
    }

    friend MatrixEndo operator+(MatrixEndo const& a, MatrixEndo const& b) {
      return MatrixEndo(a._n, a._linear + b._linear);
    }

    friend bool operator==(MatrixEndo const& a, MatrixEndo const& b) {
      return a._n == b._n && a._linear == b._linear;
    }
    friend bool operator<(MatrixEndo const& a, MatrixEndo const& b) {
      return a._linear < b._linear;
    }

   private:
    std::size_t              _n = 0;
    RatMatrix                _linear;
    std::optional<RatMatrix> _conjugator;
  };

  inline std::string to_string(MatrixEndo const& j) {
    if (j.conjugator() && j.conjugator()->is_symmetric()) {
      return "conj " + to_string(SymMatrix(*j.conjugator()));
    }
    std::string s = "linear[";
    auto const& m = j.linear();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      s += i == 0 ? "[" : ",[";
      for (std::size_t k = 0; k < m.cols(); ++k) {
        s += (k == 0 ? "" : ",") + m(i, k).get_str();
      }
      s += "]";
    }
    return s + "]";
  }

  inline bool is_projection(RatMatrix const& m) {
    return m.is_symmetric() && m * m == m;
  }
  inline bool is_projection(SymMatrix const& m) {
    return is_projection(m.matrix());
  }

  // p g p, exactly.
  inline SymMatrix conjugate(SymMatrix const& p, SymMatrix const& g) {
    if (p.dim() != g.dim()) {
      throw ShapeError("conjugate",
                       std::to_string(p.dim()) + "x" + std::to_string(p.dim()),
                       std::to_string(g.dim()) + "x"
                           + std::to_string(g.dim()));
    }
    return SymMatrix(p.matrix() * g.matrix() * p.matrix());
  }

  class MatrixModel {
   public:
    using element_type = SymMatrix;
    using endo_type    = MatrixEndo;

    static constexpr bool        enumerable = false;
    static constexpr char const* kind_name  = "matrix";

    explicit MatrixModel(std::size_t dim, std::vector<SymMatrix> projections = {})
        : _dim(dim), _unit(SymMatrix::identity(dim)),
          _projections(std::move(projections)) {
      if (_dim == 0) {
        throw ShapeError("matrix model needs dim >= 1");
      }
      for (auto const& p : _projections) {
        check_element(p);
      }
    }

    std::size_t dim() const noexcept {
      return _dim;
    }
    SymMatrix const& unit() const noexcept {
      return _unit;
    }
    SymMatrix zero() const {
      return SymMatrix::zero(_dim);
    }
    // Declared projection list, in file order.
    std::vector<SymMatrix> const& projections() const noexcept {
      return _projections;
    }

    void check_element(SymMatrix const& g) const {
      if (g.dim() != _dim) {
        throw ShapeError("element shape",
                         std::to_string(_dim) + "x" + std::to_string(_dim),
                         std::to_string(g.dim()) + "x"
                             + std::to_string(g.dim()));
      }
    }
    void check_endo(MatrixEndo const& j) const {
      if (j.dim() != _dim) {
        throw ShapeError("endomorphism shape",
                         "acting on " + std::to_string(_dim) + "x"
                             + std::to_string(_dim),
                         "acting on " + std::to_string(j.dim()) + "x"
                             + std::to_string(j.dim()));
      }
    }

    bool is_positive(SymMatrix const& g) const {
      check_element(g);
      return is_positive_semidefinite(g.matrix());
    }
    bool leq(SymMatrix const& g, SymMatrix const& h) const {
      return is_positive(h - g);
    }

    MatrixEndo identity_map() const {
      return MatrixEndo::conjugation(RatMatrix::identity(_dim));
    }
    MatrixEndo zero_map() const {
      return MatrixEndo::conjugation(RatMatrix(_dim, _dim));
    }
    MatrixEndo compression(SymMatrix const& p) const {
      check_element(p);
      return MatrixEndo::conjugation(p.matrix());
    }

    // Q-basis of the symmetric matrices.
    std::vector<SymMatrix> group_generators() const {
      std::vector<SymMatrix> basis;
      for (auto [i, j] : detail::sym_index(_dim)) {
        basis.push_back(detail::sym_basis(_dim, i, j));
      }
      return basis;
    }

   private:
    std::size_t            _dim;
    SymMatrix              _unit;
    std::vector<SymMatrix> _projections;
  };

  ////////////////////////////////////////////////////////////////////////
  // Seeded samplers
  ////////////////////////////////////////////////////////////////////////

  enum class PairKind { independent, commuting, nested };

  // Deterministic per (dim, seed).  Orthogonal matrices come from the
  // Cayley transform Q = (I - A)(I + A)^{-1} of a small rational
  // antisymmetric A, so every sample is exact and the spectra of
  // Q D Q^T are exactly the chosen diagonal D.
  class MatrixSampler {
   public:
    MatrixSampler(std::size_t dim, std::uint64_t seed, unsigned bound = 16)
        : _dim(dim), _bound(bound), _rng(seed) {
      if (dim == 0 || bound == 0) {
        throw DomainError("sampler needs dim >= 1 and bound >= 1");
      }
    }

    std::size_t dim() const noexcept {
      return _dim;
    }

    RatMatrix orthogonal() {
      RatMatrix a(_dim, _dim);
      for (std::size_t i = 0; i < _dim; ++i) {
        for (std::size_t j = i + 1; j < _dim; ++j) {
          a(i, j) = small_rational();
          a(j, i) = -a(i, j);
        }
      }
      RatMatrix id = RatMatrix::identity(_dim);
      return (id - a) * *inverse(id + a);
    }

    // 0 <= g <= I with eigenvalues k / bound.
    SymMatrix effect() {
      std::vector<Rational> d(_dim);
      for (auto& x : d) {
        x = Rational(static_cast<long>(below(_bound + 1)),
                     static_cast<long>(_bound));
        x.canonicalize();
      }
      return rotate(orthogonal(), d);
    }

    SymMatrix projection() {
      return rotate(orthogonal(), indicator(random_subset()));
    }

    SymMatrix projection_of_rank(std::size_t r) {
      std::vector<bool> s(_dim, false);
      std::fill(s.begin(), s.begin() + std::min(r, _dim), true);
      for (std::size_t i = _dim; i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(below(i));
        std::swap(s[i - 1], s[j]);
      }
      return rotate(orthogonal(), indicator(s));
    }

    std::pair<SymMatrix, SymMatrix> projection_pair(PairKind kind) {
      switch (kind) {
        case PairKind::independent: {
          SymMatrix p = projection();
          return {p, projection()};
        }
        case PairKind::commuting: {
          RatMatrix q = orthogonal();
          auto      a = random_subset();
          auto      b = random_subset();
          return {rotate(q, indicator(a)), rotate(q, indicator(b))};
        }
        case PairKind::nested: {
          RatMatrix q = orthogonal();
          auto      a = random_subset();
          auto      b = a;
          for (std::size_t i = 0; i < _dim; ++i) {
            b[i] = a[i] && below(2) == 1;
          }
          return {rotate(q, indicator(a)), rotate(q, indicator(b))};
        }
      }
      throw DomainError("unknown pair kind");
    }

    std::uint64_t below(std::uint64_t n) {
      return _rng() % n;
    }

   private:
    Rational small_rational() {
      long num = static_cast<long>(below(2 * _bound + 1)) - static_cast<long>(_bound);
      long den = static_cast<long>(below(_bound)) + 1;
      Rational q(num, den);
      q.canonicalize();
      return q;
    }

    std::vector<bool> random_subset() {
      std::vector<bool> s(_dim);
      for (std::size_t i = 0; i < _dim; ++i) {
        s[i] = below(2) == 1;
      }
      return s;
    }

    std::vector<Rational> indicator(std::vector<bool> const& s) const {
      std::vector<Rational> d(_dim);
      for (std::size_t i = 0; i < _dim; ++i) {
        d[i] = s[i] ? 1 : 0;
      }
      return d;
    }

    SymMatrix rotate(RatMatrix const& q, std::vector<Rational> const& d) const {
      RatMatrix m = q * SymMatrix::diagonal(d).matrix() * q.transpose();
      return SymMatrix(std::move(m));
    }

    std::size_t     _dim;
    unsigned        _bound;
    std::mt19937_64 _rng;
  };

  inline SymMatrix random_effect(std::size_t dim, std::uint64_t seed) {
    return MatrixSampler(dim, seed).effect();
  }

  inline SymMatrix random_projection(std::size_t dim, std::uint64_t seed) {
    return MatrixSampler(dim, seed).projection();
  }

}  // namespace compbase
