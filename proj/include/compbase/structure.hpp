// compbase - unital groups with compression bases, checked exactly
//
// A Structure is a unital group presented intensionally inside a model's
// carrier: a membership predicate, a unit, and the finite test universe
// every universally quantified law is swept over.
//
//   interval      all of E (lattice models) or probes + samples of E
//   positives     {g : 0 <= g <= N u} or sampled positives
//   signed        {g : -N u <= g <= N u} or sampled signed elements
//   generators    generate the carrier as a group (Z-basis / Q-basis)
//
// Map equality is decided on `map_basis()`: E itself when E is enumerated
// (E generates G), the generators otherwise (exact on the vectorised space).

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "compbase/element.hpp"
#include "compbase/lattice_cone.hpp"
#include "compbase/matrix_model.hpp"

namespace compbase {

  struct UniverseConfig {
    unsigned      height_bound = 3;
    std::size_t   samples      = 1000;
    std::uint64_t seed         = 0;
  };

  template <typename T>
  std::vector<T> sorted_unique(std::vector<T> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  }

  // Removes later duplicates, keeping the first occurrence's position.
  template <typename T>
  std::vector<T> stable_unique(std::vector<T> const& v) {
    std::set<T>    seen;
    std::vector<T> out;
    for (auto const& x : v) {
      if (seen.insert(x).second) {
        out.push_back(x);
      }
    }
    return out;
  }

  template <typename Model>
  struct Structure {
    using model_type   = Model;
    using element_type = typename Model::element_type;
    using endo_type    = typename Model::endo_type;
    using Membership   = std::function<bool(element_type const&)>;

    Model const*              model = nullptr;
    std::string               name;
    element_type              unit;
    Membership                member;  // empty: the whole carrier
    bool                      exhaustive = false;
    unsigned                  height_bound = 3;
    std::vector<element_type> interval;
    std::vector<element_type> positives;
    std::vector<element_type> signed_elems;
    std::vector<element_type> generators;

    bool contains(element_type const& g) const {
      model->check_element(g);
      return !member || member(g);
    }
    bool is_positive(element_type const& g) const {
      return model->is_positive(g);
    }
    bool leq(element_type const& g, element_type const& h) const {
      return model->leq(g, h);
    }
    bool in_interval(element_type const& e) const {
      return contains(e) && is_positive(e) && leq(e, unit);
    }
    element_type zero() const {
      return model->zero();
    }

    std::vector<element_type> const& map_basis() const {
      return exhaustive ? interval : generators;
    }

    // First basis element on which the maps differ.
    std::optional<element_type> map_difference(endo_type const& a,
                                               endo_type const& b) const {
      for (auto const& x : map_basis()) {
        if (a(x) != b(x)) {
          return x;
        }
      }
      return std::nullopt;
    }
    bool maps_equal(endo_type const& a, endo_type const& b) const {
      return !map_difference(a, b).has_value();
    }
  };

  inline Structure<LatticeConeModel> make_structure(LatticeConeModel const& m,
                                                    UniverseConfig const& cfg = {}) {
    Structure<LatticeConeModel> s;
    s.model        = &m;
    s.name         = "G";
    s.unit         = m.unit();
    s.exhaustive   = true;
    s.height_bound = cfg.height_bound;
    Integer n(cfg.height_bound);
    s.interval     = m.enumerate_unit_interval();
    s.positives    = m.interval_points(m.zero(), n * m.unit());
    s.signed_elems = m.interval_points(-(n * m.unit()), n * m.unit());
    s.generators   = m.group_generators();
    return s;
  }

  // Interval probes are the declared projections (file order), then 0 and
  // I, then `samples` seeded random effects.
  inline Structure<MatrixModel> make_structure(MatrixModel const&    m,
                                               UniverseConfig const& cfg = {}) {
    Structure<MatrixModel> s;
    s.model        = &m;
    s.name         = "G";
    s.unit         = m.unit();
    s.exhaustive   = false;
    s.height_bound = cfg.height_bound;

    MatrixSampler sampler(m.dim(), cfg.seed);
    std::vector<SymMatrix> interval = m.projections();
    interval.push_back(m.zero());
    interval.push_back(m.unit());
    for (std::size_t i = 0; i < cfg.samples; ++i) {
      interval.push_back(sampler.effect());
    }
    s.interval = stable_unique(interval);

    unsigned n = std::max(1u, cfg.height_bound);
    std::vector<SymMatrix> pos, sgn;
    for (std::size_t i = 0; i < cfg.samples; ++i) {
      Rational k(static_cast<long>(1 + i % n));
      pos.push_back(k * sampler.effect());
      SymMatrix a = sampler.effect();
      SymMatrix b = sampler.effect();
      sgn.push_back(a - k * b);
    }
    s.positives    = stable_unique(pos);
    s.signed_elems = stable_unique(sgn);
    s.generators   = m.group_generators();
    return s;
  }

  // The structure carried by the image of an idempotent endomorphism
  // `onto` of the parent carrier (J_v for H, J_v + J_{u-v} for C(v)).
  // Since `onto` fixes the new carrier pointwise and maps the parent's test
  // universe onto the corresponding universe of the image, every universe
  // is transported by applying it.
  template <typename Model>
  Structure<Model> project_structure(Structure<Model> const&           parent,
                                     typename Model::endo_type const&  onto,
                                     typename Model::element_type      unit,
                                     std::string                       name) {
    using E = typename Model::element_type;
    Structure<Model> s;
    s.model        = parent.model;
    s.name         = std::move(name);
    s.unit         = std::move(unit);
    s.exhaustive   = parent.exhaustive;
    s.height_bound = parent.height_bound;
    auto parent_member = parent.member;
    s.member = [onto, parent_member](E const& g) {
      return (!parent_member || parent_member(g)) && onto(g) == g;
    };
    auto transport = [&](std::vector<E> const& xs) {
      std::vector<E> out;
      out.reserve(xs.size());
      for (auto const& x : xs) {
        out.push_back(onto(x));
      }
      return parent.exhaustive ? sorted_unique(std::move(out))
                               : stable_unique(out);
    };
    s.interval     = transport(parent.interval);
    s.positives    = transport(parent.positives);
    s.signed_elems = transport(parent.signed_elems);
    std::vector<E> gens;
    for (auto const& g : transport(parent.generators)) {
      if (!g.is_zero()) {
        gens.push_back(g);
      }
    }
    s.generators = std::move(gens);
    return s;
  }

}  // namespace compbase
