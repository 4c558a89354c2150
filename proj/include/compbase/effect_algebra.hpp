// compbase - unital groups with compression bases, checked exactly
//
// The unit interval E of a unital group as an effect algebra: partial sum,
// orthosupplement, Mackey decompositions, sub-effect algebras, normality
// and the center.  Everything that quantifies over E needs an enumerated
// interval and throws NotEnumerable otherwise.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "compbase/error.hpp"
#include "compbase/report.hpp"
#include "compbase/structure.hpp"

namespace compbase {

  // (e1, f1, d) with e = e1 + d, f = f1 + d and e1 + f1 + d <= u.
  template <typename E>
  struct MackeyTriple {
    E e1;
    E f1;
    E d;

    friend bool operator==(MackeyTriple const& a, MackeyTriple const& b) {
      return a.e1 == b.e1 && a.f1 == b.f1 && a.d == b.d;
    }
    friend bool operator<(MackeyTriple const& a, MackeyTriple const& b) {
      if (!(a.e1 == b.e1)) {
        return a.e1 < b.e1;
      }
      if (!(a.f1 == b.f1)) {
        return a.f1 < b.f1;
      }
      return a.d < b.d;
    }
  };

  template <typename E>
  std::string to_string(MackeyTriple<E> const& t) {
    return "(" + to_string(t.e1) + ", " + to_string(t.f1) + ", "
           + to_string(t.d) + ")";
  }

  // A finite subset of E, kept sorted.  Whether it really is a sub-effect
  // algebra is a separate check.
  template <typename E>
  class SubEffectAlgebra {
   public:
    SubEffectAlgebra() = default;
    explicit SubEffectAlgebra(std::vector<E> members)
        : _members(sorted_unique(std::move(members))) {}

    bool contains(E const& x) const {
      return std::binary_search(_members.begin(), _members.end(), x);
    }
    std::vector<E> const& members() const noexcept {
      return _members;
    }
    std::size_t size() const noexcept {
      return _members.size();
    }

   private:
    std::vector<E> _members;
  };

  template <typename Model>
  class EffectAlgebraView {
   public:
    using element_type = typename Model::element_type;
    using E            = element_type;

    explicit EffectAlgebraView(Structure<Model> const& s) : _s(&s) {}

    Structure<Model> const& structure() const noexcept {
      return *_s;
    }
    E const& unit() const noexcept {
      return _s->unit;
    }

    bool enumerable() const noexcept {
      return _s->exhaustive;
    }

    std::vector<E> const& elements() const {
      require_enumerable("elements of E");
      return _s->interval;
    }

    bool contains(E const& e) const {
      return _s->in_interval(e);
    }

    E orthosupplement(E const& e) const {
      require_member(e, "orthosupplement");
      return _s->unit - e;
    }

    // e + f when e + f <= u; nullopt is the "undefined" outcome.
    std::optional<E> oplus(E const& e, E const& f) const {
      require_member(e, "oplus");
      require_member(f, "oplus");
      E s = e + f;
      if (_s->leq(s, _s->unit)) {
        return s;
      }
      return std::nullopt;
    }

    // All d in E with d <= e, d <= f and e + f - d <= u; then
    // (e1, f1) = (e - d, f - d).  Sorted by d.
    std::vector<MackeyTriple<E>> mackey_decompositions(E const& e,
                                                       E const& f) const {
      require_enumerable(
          "Mackey search (use is_mackey_compatible_witness for non-enumerable models)");
      require_member(e, "mackey_decompositions");
      require_member(f, "mackey_decompositions");
      std::vector<MackeyTriple<E>> out;
      E                            sum = e + f;
      for (auto const& d : _s->interval) {
        if (_s->leq(d, e) && _s->leq(d, f) && _s->leq(sum - d, _s->unit)) {
          out.push_back(MackeyTriple<E>{e - d, f - d, d});
        }
      }
      return out;
    }

    // Mackey compatibility in E, or in `within` when given (all three
    // components of the decomposition must then lie in it).
    bool is_mackey_compatible(E const&                      e,
                              E const&                      f,
                              SubEffectAlgebra<E> const*    within = nullptr) const {
      for (auto const& t : mackey_decompositions(e, f)) {
        if (within == nullptr
            || (within->contains(t.e1) && within->contains(t.f1)
                && within->contains(t.d))) {
          return true;
        }
      }
      return false;
    }

    // Contains 0 and u, lies in E, closed under e -> u - e and under every
    // defined partial sum.  Needs no enumeration of E.
    Verdict is_sub_effect_algebra(std::vector<E> const& members) const {
      SubEffectAlgebra<E> sub(members);
      Verdict             v;
      v.tally(sub.contains(_s->zero()), "0 missing");
      v.tally(sub.contains(_s->unit), "u = " + to_string(_s->unit) + " missing");
      for (auto const& p : sub.members()) {
        v.tally_lazy(contains(p),
                     [&] { return to_string(p) + " not in E"; });
      }
      if (!v) {
        return v;
      }
      for (auto const& p : sub.members()) {
        E c = _s->unit - p;
        v.tally_lazy(sub.contains(c), [&] {
          return "u - " + to_string(p) + " = " + to_string(c) + " missing";
        });
      }
      for (auto const& p : sub.members()) {
        for (auto const& q : sub.members()) {
          E s = p + q;
          if (_s->leq(s, _s->unit)) {
            v.tally_lazy(sub.contains(s), [&] {
              return to_string(p) + " + " + to_string(q) + " = "
                     + to_string(s) + " missing";
            });
          }
        }
      }
      return v;
    }

    // For all e, f, d in E with e + f + d <= u: e + d, f + d in P implies
    // d in P.  Witness is the first violating (e, f, d).
    Verdict is_normal_subalgebra(SubEffectAlgebra<E> const& sub) const {
      require_enumerable("normality sweep");
      Verdict v;
      auto const& el = _s->interval;
      for (auto const& d : el) {
        for (auto const& e : el) {
          E ed = e + d;
          if (!sub.contains(ed)) {
            continue;
          }
          for (auto const& f : el) {
            E fd = f + d;
            if (!sub.contains(fd) || !_s->leq(ed + f, _s->unit)) {
              continue;
            }
            v.tally_lazy(sub.contains(d), [&] {
              return "(e,f,d) = (" + to_string(e) + ", " + to_string(f) + ", "
                     + to_string(d) + "): e+d, f+d in P but d not in P";
            });
          }
        }
      }
      return v;
    }

    // c is central iff every f in E splits uniquely as f1 + f2 with
    // f1 <= c and f2 <= u - c (f1, f2 in E).
    std::vector<E> center() const {
      require_enumerable("center");
      std::vector<E> out;
      auto const&    el = _s->interval;
      for (auto const& c : el) {
        E    cc      = _s->unit - c;
        bool central = true;
        for (auto const& f : el) {
          std::size_t splits = 0;
          for (auto const& f1 : el) {
            if (!_s->leq(f1, c) || !_s->leq(f1, f)) {
              continue;
            }
            E f2 = f - f1;
            if (_s->leq(f2, cc)) {
              ++splits;
            }
          }
          if (splits != 1) {
            central = false;
            break;
          }
        }
        if (central) {
          out.push_back(c);
        }
      }
      return out;
    }

   private:
    void require_enumerable(char const* what) const {
      if (!_s->exhaustive) {
        throw NotEnumerable(std::string(what)
                            + ": unit interval is not enumerable");
      }
    }
    void require_member(E const& e, char const* what) const {
      if (!contains(e)) {
        throw DomainError(std::string(what) + ": " + to_string(e)
                          + " is not in E");
      }
    }

    Structure<Model> const* _s;
  };

}  // namespace compbase
