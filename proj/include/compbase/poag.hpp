// compbase - unital groups with compression bases, checked exactly
//
// Partially ordered abelian groups with order unit: order queries and the
// unital-group axioms, checked on a Structure.

#pragma once

#include <cstddef>
#include <deque>
#include <set>
#include <string>
#include <vector>

#include "compbase/element.hpp"
#include "compbase/error.hpp"
#include "compbase/report.hpp"
#include "compbase/structure.hpp"

namespace compbase {

  template <typename Model>
  bool is_positive(Model const& model, typename Model::element_type const& g) {
    return model.is_positive(g);
  }

  template <typename Model>
  bool leq(Model const&                        model,
           typename Model::element_type const& g,
           typename Model::element_type const& h) {
    return model.leq(g, h);
  }

  inline std::vector<Coords> enumerate_unit_interval(LatticeConeModel const& m) {
    return m.enumerate_unit_interval();
  }

  inline std::vector<SymMatrix> enumerate_unit_interval(MatrixModel const&) {
    throw NotEnumerable("unit interval of the matrix model is not enumerable");
  }

  namespace detail {

    inline Integer ceil_rational(Rational const& q) {
      Integer c;
      mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
      return c;
    }

    inline Rational trace(SymMatrix const& g) {
      Rational t = 0;
      for (std::size_t i = 0; i < g.dim(); ++i) {
        t += g(i, i);
      }
      return t;
    }

    inline Rational abs_sum(SymMatrix const& g) {
      Rational t = 0;
      for (auto const& x : g.matrix().data()) {
        t += abs(x);
      }
      return t;
    }

    // Positives of the bounded universe reachable as sums of nonzero
    // elements of E.  Partial sums of such a sum stay below the total, so
    // the search never leaves the universe.
    inline std::set<Coords> interval_sums(Structure<LatticeConeModel> const& s) {
      std::set<Coords> universe(s.positives.begin(), s.positives.end());
      std::set<Coords> reached{s.zero()};
      std::deque<Coords> todo{s.zero()};
      while (!todo.empty()) {
        Coords g = todo.front();
        todo.pop_front();
        for (auto const& e : s.interval) {
          if (e.is_zero()) {
            continue;
          }
          Coords h = g + e;
          if (universe.count(h) && reached.insert(h).second) {
            todo.push_back(h);
          }
        }
      }
      return reached;
    }

  }  // namespace detail

  // Unital-group axioms:
  //   (a) translation-invariant partial order (cone well-formed, carrier a subgroup)
  //   (b) directed
  //   (c) u in G+
  //   (d) every positive element is a finite sum of elements of E
  inline Report validate_unital_group(Structure<LatticeConeModel> const& s) {
    Report r("unital_group");
    auto const& m = *s.model;

    Verdict a;
    a.tally(m.is_pointed(),
            "cone_rows rank < dim: cone not pointed, unit interval infinite");
    for (auto const& g : s.generators) {
      for (auto const& h : s.generators) {
        a.tally_lazy(s.contains(g + h) && s.contains(g - h), [&] {
          return "carrier not closed under +/- at " + to_string(g) + ", "
                 + to_string(h);
        });
      }
    }
    for (auto const& e : s.interval) {
      a.tally_lazy(s.contains(e), [&] {
        return "interval element " + to_string(e) + " outside carrier";
      });
    }
    r.add("(a) order well-formed", a);

    Verdict b;
    IntLattice span(m.dim());
    for (auto const& e : s.interval) {
      span.insert(e.entries());
    }
    for (auto const& g : s.generators) {
      b.tally_lazy(span.contains(g.entries()), [&] {
        return "generator " + to_string(g)
               + " not in the subgroup generated by E";
      });
    }
    r.add("(b) directed", b);

    Verdict c;
    c.tally(s.contains(s.unit) && s.is_positive(s.unit),
            "unit " + to_string(s.unit) + " not in G+");
    r.add("(c) unit positive", c);

    Verdict d;
    auto reached = detail::interval_sums(s);
    for (auto const& g : s.positives) {
      d.tally_lazy(reached.count(g) > 0, [&] {
        return to_string(g) + " is not a sum of elements of E";
      });
    }
    d.note = "checked on {g : 0 <= g <= " + std::to_string(s.height_bound)
             + "u}";
    r.add("(d) E generates G+", d);
    return r;
  }

  inline Report validate_unital_group(Structure<MatrixModel> const& s) {
    Report r("unital_group");

    Verdict a;
    for (auto const& g : s.generators) {
      for (auto const& h : s.generators) {
        a.tally_lazy(s.contains(g + h) && s.contains(g - h), [&] {
          return "carrier not closed under +/- at " + to_string(g) + ", "
                 + to_string(h);
        });
      }
    }
    a.note = "certified by construction: PSD cone is a translation-invariant "
             "pointed cone";
    r.add("(a) order well-formed", a);

    // g = (g + t u) - t u with t >= sum |g_ij|, via diagonal dominance
    // when u = I.  For a proper substructure the shift uses its own unit,
    // so g + t u is only checked, never assumed, positive.
    Verdict b;
    for (auto const& g : s.signed_elems) {
      Integer   t = detail::ceil_rational(detail::abs_sum(g));
      SymMatrix shifted = g + Rational(t) * s.unit;
      b.tally_lazy(s.is_positive(shifted) || !s.contains(g), [&] {
        return to_string(g) + " + " + t.get_str() + "u is not positive";
      });
    }
    b.note = "certified by construction; spot-checked on signed samples";
    r.add("(b) directed", b);

    Verdict c;
    c.tally(s.contains(s.unit) && s.is_positive(s.unit),
            "unit " + to_string(s.unit) + " not in G+");
    r.add("(c) unit positive", c);

    // g >= 0 has g <= trace(g) u on its support, so g is n copies of g/n
    // with n = max(1, ceil(trace g)).
    Verdict d;
    for (auto const& g : s.positives) {
      Integer n = detail::ceil_rational(detail::trace(g));
      if (n < 1) {
        n = 1;
      }
      SymMatrix part = Rational(1, 1) / Rational(n) * g;
      d.tally_lazy(s.in_interval(part), [&] {
        return to_string(g) + "/" + n.get_str() + " is not in E";
      });
    }
    d.note = "certified by construction; spot-checked on positive samples";
    r.add("(d) E generates G+", d);
    return r;
  }

}  // namespace compbase
