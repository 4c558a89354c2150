// compbase - unital groups with compression bases, checked exactly
//
// Retractions, compressions and compression bases.
//
// A retraction with focus p is an order-preserving endomorphism J with
// p = J(u) in E fixing every e <= p.  A compression additionally sends to
// zero only elements below u - p.  A compression base is a family
// (J_p) indexed by a normal sub-effect algebra P with J_p of focus p and
// J_{p+r} J_{q+r} = J_r whenever p + q + r <= u.

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "compbase/effect_algebra.hpp"
#include "compbase/error.hpp"
#include "compbase/report.hpp"
#include "compbase/structure.hpp"

namespace compbase {

  ////////////////////////////////////////////////////////////////////////
  // Retractions
  ////////////////////////////////////////////////////////////////////////

  template <typename Model>
  struct RetractionCertificate {
    using E = typename Model::element_type;
    using J = typename Model::endo_type;

    J       endo;
    E       focus;
    Verdict order_preserving;
    Verdict maps_into_carrier;
    Verdict focus_in_interval;
    Verdict fixes_below_focus;

    bool valid() const {
      return order_preserving.holds && maps_into_carrier.holds
             && focus_in_interval.holds && fixes_below_focus.holds;
    }

    // First failing check, for witness reporting.
    std::optional<std::string> failure() const {
      for (auto const* v : {&order_preserving,
                            &maps_into_carrier,
                            &focus_in_interval,
                            &fixes_below_focus}) {
        if (!v->holds) {
          return v->witness;
        }
      }
      return std::nullopt;
    }
  };

  namespace detail {

    inline std::optional<SymMatrix> complement_projection(Structure<MatrixModel> const& s,
                                                          SymMatrix const& p) {
      SymMatrix c = s.unit - p;
      if (is_projection(c)) {
        return c;
      }
      return std::nullopt;
    }

    // Extra probes for sampled models: elements of the interval that are
    // forced into special position relative to J, so that implications
    // with rarely-true premises are exercised.
    template <typename Model>
    std::vector<typename Model::element_type>
    images(std::vector<typename Model::element_type> const& xs,
           typename Model::endo_type const&                  j) {
      std::vector<typename Model::element_type> out;
      out.reserve(xs.size());
      for (auto const& x : xs) {
        out.push_back(j(x));
      }
      return out;
    }

  }  // namespace detail

  template <typename Model>
  RetractionCertificate<Model> is_retraction(Structure<Model> const&          s,
                                             typename Model::endo_type const& j) {
    using E = typename Model::element_type;
    s.model->check_endo(j);
    RetractionCertificate<Model> cert{j, j(s.unit), {}, {}, {}, {}};

    // Positivity on E suffices: E generates G+ and J is additive.
    for (auto const& e : s.interval) {
      E je = j(e);
      cert.order_preserving.tally_lazy(s.is_positive(je), [&] {
        return "J(" + to_string(e) + ") = " + to_string(je) + " is not positive";
      });
    }
    if (!s.exhaustive) {
      for (auto const& g : s.positives) {
        E jg = j(g);
        cert.order_preserving.tally_lazy(s.is_positive(jg), [&] {
          return "J(" + to_string(g) + ") = " + to_string(jg)
                 + " is not positive";
        });
      }
    }

    for (auto const* xs : {&s.map_basis(), &s.generators}) {
      for (auto const& x : *xs) {
        E jx = j(x);
        cert.maps_into_carrier.tally_lazy(s.contains(jx), [&] {
          return "J(" + to_string(x) + ") = " + to_string(jx)
                 + " leaves the carrier";
        });
      }
    }

    cert.focus_in_interval.tally(s.in_interval(cert.focus),
                                 "J(u) = " + to_string(cert.focus)
                                     + " not in E");
    if (!cert.focus_in_interval) {
      return cert;
    }

    std::vector<E> candidates = s.interval;
    if (!s.exhaustive) {
      auto img = detail::images<Model>(s.interval, j);
      candidates.insert(candidates.end(), img.begin(), img.end());
    }
    for (auto const& e : candidates) {
      if (!s.in_interval(e) || !s.leq(e, cert.focus)) {
        continue;
      }
      E je = j(e);
      cert.fixes_below_focus.tally_lazy(je == e, [&] {
        return "e = " + to_string(e) + " <= focus but J(e) = " + to_string(je);
      });
    }
    return cert;
  }

  namespace detail {

    // J(e) = 0 implies e <= u - p, for e in E, given a valid certificate.
    template <typename Model>
    Verdict kernel_below_complement(Structure<Model> const&             s,
                                    RetractionCertificate<Model> const& cert) {
      using E = typename Model::element_type;
      auto const& j = cert.endo;
      E       complement = s.unit - cert.focus;
      Verdict v;
      std::vector<E> candidates = s.interval;
      if constexpr (std::is_same_v<Model, MatrixModel>) {
        if (auto c = detail::complement_projection(s, cert.focus);
            c && j.conjugator() && is_projection(*j.conjugator())) {
          auto cj = MatrixEndo::conjugation(c->matrix());
          auto img = detail::images<Model>(s.interval, cj);
          candidates.insert(candidates.end(), img.begin(), img.end());
          v.note = "certified by construction: pgp = 0 with 0 <= g <= 1 "
                   "forces g <= 1 - p; spot-checked on samples";
        }
      }
      for (auto const& e : candidates) {
        if (!s.in_interval(e) || !j(e).is_zero()) {
          continue;
        }
        v.tally_lazy(s.leq(e, complement), [&] {
          return "J(" + to_string(e) + ") = 0 but " + to_string(e)
                 + " is not <= u - p = " + to_string(complement);
        });
      }
      return v;
    }

  }  // namespace detail

  // J(e) = 0 implies e <= u - p, for e in E.
  template <typename Model>
  Verdict is_compression(Structure<Model> const&          s,
                         typename Model::endo_type const& j) {
    auto cert = is_retraction(s, j);
    if (!cert.valid()) {
      throw DomainError("is_compression: not a retraction: "
                        + cert.failure().value_or("?"));
    }
    return detail::kernel_below_complement(s, cert);
  }

  // Positive test universe used for laws quantified over G+: the bounded
  // positives, their images under the given maps, and E.
  template <typename Model>
  std::vector<typename Model::element_type>
  positive_probes(Structure<Model> const&                               s,
                  std::vector<typename Model::endo_type> const&         maps) {
    using E           = typename Model::element_type;
    std::vector<E> out = s.positives;
    out.insert(out.end(), s.interval.begin(), s.interval.end());
    std::size_t base_size = out.size();
    for (auto const& j : maps) {
      for (std::size_t i = 0; i < base_size; ++i) {
        out.push_back(j(out[i]));
      }
    }
    return s.exhaustive ? sorted_unique(std::move(out)) : stable_unique(out);
  }

  // For g in G+: J(g) = 0 iff J'(g) = g, where J is a compression with
  // focus p and J' a retraction with focus u - p.
  template <typename Model>
  Verdict kernel_fixpoint_check(Structure<Model> const&          s,
                        typename Model::endo_type const& j,
                        typename Model::endo_type const& jprime) {
    auto p  = j(s.unit);
    auto pp = jprime(s.unit);
    if (!(p + pp == s.unit)) {
      throw DomainError("foci not complementary: " + to_string(p) + " + "
                        + to_string(pp) + " != u");
    }
    Verdict v;
    for (auto const& g : positive_probes(s, {j, jprime})) {
      if (!s.is_positive(g) || !s.contains(g)) {
        continue;
      }
      bool killed = j(g).is_zero();
      bool fixed  = jprime(g) == g;
      v.tally_lazy(killed == fixed, [&] {
        return "g = " + to_string(g) + ": J(g)=0 is "
               + (killed ? "true" : "false") + ", J'(g)=g is "
               + (fixed ? "true" : "false");
      });
    }
    return v;
  }

  // J(g) <= g for all g in G+.
  template <typename Model>
  Verdict is_direct(Structure<Model> const& s, typename Model::endo_type const& j) {
    auto cert = is_retraction(s, j);
    if (!cert.valid()) {
      throw DomainError("is_direct: not a retraction: "
                        + cert.failure().value_or("?"));
    }
    Verdict v;
    auto    check = [&](auto const& g) {
      auto jg = j(g);
      v.tally_lazy(s.leq(jg, g), [&] {
        return "g = " + to_string(g) + ": J(g) = " + to_string(jg)
               + " is not <= g";
      });
    };
    for (auto const& e : s.interval) {
      check(e);
    }
    if (!s.exhaustive) {
      for (auto const& g : s.positives) {
        check(g);
      }
      v.note = "decided by sampling";
    }
    return v;
  }

  ////////////////////////////////////////////////////////////////////////
  // Retraction enumeration (lattice-cone models)
  ////////////////////////////////////////////////////////////////////////

  // Every retraction maps E into [0, p] subset of E, so it is determined by
  // the images of a basis of E drawn from E.  All |E|^rank assignments are
  // solved for an integer matrix and the survivors certified.  Result is
  // sorted by (focus, matrix).  Retractions are distinguished by their
  // action on E.
  inline std::vector<RetractionCertificate<LatticeConeModel>>
  enumerate_retractions(Structure<LatticeConeModel> const& s) {
    if (!s.exhaustive) {
      throw NotEnumerable("enumerate_retractions needs an enumerated E");
    }
    std::size_t         n  = s.model->dim();
    auto const&         el = s.interval;
    std::vector<Coords> basis;
    std::vector<std::vector<Rational>> rows;
    auto as_row = [](Coords const& c) {
      std::vector<Rational> r;
      for (auto const& x : c.entries()) {
        r.emplace_back(x);
      }
      return r;
    };
    for (auto const& e : el) {
      auto trial = rows;
      trial.push_back(as_row(e));
      if (rank(RatMatrix::from_rows(trial)) == trial.size()) {
        rows = std::move(trial);
        basis.push_back(e);
      }
    }
    std::size_t k = basis.size();
    // Complete to a Q-basis of Q^n with standard vectors sent to zero.
    for (auto const& g : s.model->group_generators()) {
      if (rows.size() == n) {
        break;
      }
      auto trial = rows;
      trial.push_back(as_row(g));
      if (rank(RatMatrix::from_rows(trial)) == trial.size()) {
        rows = std::move(trial);
      }
    }
    RatMatrix binv = *inverse(RatMatrix::from_rows(rows).transpose());

    std::map<IntMatrix, RetractionCertificate<LatticeConeModel>> found;
    std::vector<std::size_t> choice(k, 0);
    while (true) {
      RatMatrix img(n, n);
      for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t r = 0; r < n; ++r) {
          img(r, c) = Rational(el[choice[c]][r]);
        }
      }
      if (auto m = to_integer(img * binv)) {
        LatticeEndo j(*m);
        if (found.count(j.matrix()) == 0) {
          auto cert = is_retraction(s, j);
          if (cert.valid()) {
            found.emplace(j.matrix(), std::move(cert));
          }
        }
      }
      std::size_t i = 0;
      while (i < k && ++choice[i] == el.size()) {
        choice[i++] = 0;
      }
      if (i == k) {
        break;
      }
    }
    std::vector<RetractionCertificate<LatticeConeModel>> out;
    for (auto& kv : found) {
      out.push_back(std::move(kv.second));
    }
    std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
      if (!(a.focus == b.focus)) {
        return a.focus < b.focus;
      }
      return a.endo < b.endo;
    });
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Compression bases
  ////////////////////////////////////////////////////////////////////////

  template <typename Model>
  class CompressionBase {
   public:
    using E          = typename Model::element_type;
    using J          = typename Model::endo_type;
    using Membership = std::function<bool(E const&)>;
    using Maker      = std::function<J(E const&)>;

    CompressionBase() = default;

    // P is the set of listed foci; each must have a family member.
    explicit CompressionBase(std::vector<std::pair<E, J>> const& family) {
      std::vector<E> foci;
      for (auto const& [p, j] : family) {
        if (!_family.emplace(p, j).second) {
          throw DomainError("duplicate focus " + to_string(p)
                            + " in compression family");
        }
        foci.push_back(p);
      }
      _foci = sorted_unique(std::move(foci));
    }

    // P given separately; members without a family entry are reported by
    // validate_compression_base.
    CompressionBase(std::vector<E> foci, std::map<E, J> family)
        : _foci(sorted_unique(std::move(foci))), _family(std::move(family)) {}

    // Admit further foci by predicate, with J_p produced on demand.  Used
    // for the operator model where P is every projection.
    CompressionBase& open(Membership member, Maker maker) {
      _open_member = std::move(member);
      _open_maker  = std::move(maker);
      return *this;
    }

    bool is_open() const noexcept {
      return static_cast<bool>(_open_member);
    }

    std::vector<E> const& foci() const noexcept {
      return _foci;
    }
    std::map<E, J> const& family() const noexcept {
      return _family;
    }

    bool is_listed(E const& p) const {
      return std::binary_search(_foci.begin(), _foci.end(), p);
    }

    bool is_member(E const& p) const {
      return is_listed(p) || (_open_member && _open_member(p));
    }

    J compression(E const& p) const {
      if (auto it = _family.find(p); it != _family.end() && is_listed(p)) {
        return it->second;
      }
      if (_open_member && _open_member(p)) {
        return _open_maker(p);
      }
      throw DomainError("no compression with focus " + to_string(p)
                        + " in the base");
    }

    bool has_family_member(E const& p) const {
      return _family.count(p) > 0 || (_open_member && _open_member(p));
    }

    // Sub-base on the foci satisfying `keep`; the open part is restricted
    // the same way.
    CompressionBase restricted(Membership keep) const {
      CompressionBase out;
      for (auto const& p : _foci) {
        if (keep(p)) {
          out._foci.push_back(p);
          if (auto it = _family.find(p); it != _family.end()) {
            out._family.emplace(p, it->second);
          }
        }
      }
      if (_open_member) {
        auto member       = _open_member;
        out._open_member  = [member, keep](E const& p) {
          return member(p) && keep(p);
        };
        out._open_maker = _open_maker;
      }
      return out;
    }

   private:
    std::vector<E> _foci;
    std::map<E, J> _family;
    Membership     _open_member;
    Maker          _open_maker;
  };

  // The operator-model base: listed projections plus every projection on
  // demand, J_p(g) = pgp.
  inline CompressionBase<MatrixModel>
  conjugation_base(MatrixModel const& m, std::vector<SymMatrix> const& projections) {
    std::vector<std::pair<SymMatrix, MatrixEndo>> family;
    for (auto const& p : sorted_unique(projections)) {
      family.emplace_back(p, m.compression(p));
    }
    CompressionBase<MatrixModel> base(family);
    base.open([](SymMatrix const& p) { return is_projection(p); },
              [&m](SymMatrix const& p) { return m.compression(p); });
    return base;
  }

  namespace detail {

    // A finite set of projections is normal in the operator effect algebra
    // iff it contains pq for every commuting pair p, q in it: a Mackey
    // decomposition (e1, f1, d) of projections forces pq = qp and d = pq.
    template <typename Model>
    Verdict normal_by_meets(Structure<Model> const&       s,
                            CompressionBase<Model> const& base) {
      Verdict v;
      auto const& foci = base.foci();
      for (auto const& p : foci) {
        for (auto const& q : foci) {
          auto jp = base.compression(p);
          auto jq = base.compression(q);
          if (!s.maps_equal(compose(jp, jq), compose(jq, jp))) {
            continue;
          }
          auto d = jp(q);
          v.tally_lazy(base.is_listed(d), [&] {
            return "commuting " + to_string(p) + ", " + to_string(q)
                   + " have Mackey part d = " + to_string(d) + " not in P";
          });
        }
      }
      v.note = "decided via meets of commuting projections";
      return v;
    }

  }  // namespace detail

  template <typename Model>
  Verdict normality_check(Structure<Model> const&       s,
                          CompressionBase<Model> const& base) {
    if (s.exhaustive) {
      EffectAlgebraView<Model> ea(s);
      return ea.is_normal_subalgebra(
          SubEffectAlgebra<typename Model::element_type>(base.foci()));
    }
    return detail::normal_by_meets(s, base);
  }

  // Compression with the declared focus: retraction, J(u) = p, kernel law.
  template <typename Model>
  Verdict compression_with_focus(Structure<Model> const&             s,
                                 typename Model::endo_type const&    j,
                                 typename Model::element_type const& p) {
    auto    cert = is_retraction(s, j);
    Verdict v;
    v.checks = cert.order_preserving.checks + cert.fixes_below_focus.checks + 1;
    if (!cert.valid()) {
      v.holds   = false;
      v.witness = "focus " + to_string(p) + ": " + cert.failure().value_or("?");
      return v;
    }
    if (!(cert.focus == p)) {
      v.holds   = false;
      v.witness = "declared focus " + to_string(p) + " but J(u) = "
                  + to_string(cert.focus);
      return v;
    }
    Verdict c = detail::kernel_below_complement(s, cert);
    if (!c) {
      c.witness = "focus " + to_string(p) + ": " + c.witness.value_or("?");
    }
    v.merge(c);
    return v;
  }

  // Full compression-base validation.  Clauses, in order:
  //   P.sub_effect_algebra, P.normal, compression_focus, composition_law,
  // followed by one composition_law[...] item per admissible triple.
  template <typename Model>
  Report validate_compression_base(Structure<Model> const&       s,
                                   CompressionBase<Model> const& base) {
    using E = typename Model::element_type;
    for (auto const& p : base.foci()) {
      if (!base.has_family_member(p)) {
        throw DomainError("family member missing for focus " + to_string(p));
      }
    }
    Report r("compression_base");

    if constexpr (!Model::enumerable) {
      Verdict proj;
      for (auto const& p : base.foci()) {
        proj.tally_lazy(is_projection(p), [&] {
          return to_string(p) + " is not a projection";
        });
      }
      r.add("P.projections", proj);
    }

    EffectAlgebraView<Model> ea(s);
    Verdict sub = ea.is_sub_effect_algebra(base.foci());
    r.add("P.sub_effect_algebra", sub);
    if (sub) {
      r.add("P.normal", normality_check(s, base));
    } else {
      r.add("P.normal", Verdict::fail("skipped: P is not a sub-effect algebra", 0));
    }

    Verdict focus;
    for (auto const& p : base.foci()) {
      focus.merge(compression_with_focus(s, base.compression(p), p));
    }
    r.add("compression_focus", focus);

    Verdict                   law;
    std::vector<Check>        triples;
    auto const&               P = base.foci();
    for (auto const& p : P) {
      for (auto const& q : P) {
        for (auto const& rr : P) {
          E sum = p + q + rr;
          if (!s.leq(sum, s.unit)) {
            continue;
          }
          std::string name = "composition_law[p=" + to_string(p) + ",q="
                             + to_string(q) + ",r=" + to_string(rr) + "]";
          Verdict     t;
          E           pr = p + rr, qr = q + rr;
          std::string where = "(p,q,r) = (" + to_string(p) + ", "
                              + to_string(q) + ", " + to_string(rr) + "): ";
          if (!base.has_family_member(pr) || !base.has_family_member(qr)) {
            t.tally(false,
                    where + "no compression with focus "
                        + to_string(base.has_family_member(pr) ? qr : pr));
          } else {
            auto lhs  = compose(base.compression(pr), base.compression(qr));
            auto diff = s.map_difference(lhs, base.compression(rr));
            t.tally_lazy(!diff, [&] {
              return where + "J_{p+r} J_{q+r} != J_r at " + to_string(*diff);
            });
          }
          law.merge(t);
          triples.push_back(Check{std::move(name), t});
        }
      }
    }
    r.add("composition_law", law);
    for (auto& c : triples) {
      r.add(std::move(c.clause), std::move(c.verdict));
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Laws of a single base
  ////////////////////////////////////////////////////////////////////////

  // The five mutually equivalent conditions relating q <= p to the maps.
  struct OrderEquivalence {
    bool q_le_p;
    bool jp_jq_eq_jq;
    bool jp_q_eq_q;
    bool jq_jp_eq_jq;
    bool jq_p_eq_q;

    bool agree() const {
      return q_le_p == jp_jq_eq_jq && q_le_p == jp_q_eq_q
             && q_le_p == jq_jp_eq_jq && q_le_p == jq_p_eq_q;
    }
    std::string bits() const {
      std::string s;
      for (bool b : {q_le_p, jp_jq_eq_jq, jp_q_eq_q, jq_jp_eq_jq, jq_p_eq_q}) {
        s += b ? '1' : '0';
      }
      return s;
    }
  };

  template <typename Model>
  OrderEquivalence order_equivalence(Structure<Model> const&             s,
                                     CompressionBase<Model> const&       base,
                                     typename Model::element_type const& p,
                                     typename Model::element_type const& q) {
    auto jp = base.compression(p);
    auto jq = base.compression(q);
    return OrderEquivalence{s.leq(q, p),
                            s.maps_equal(compose(jp, jq), jq),
                            jp(q) == q,
                            s.maps_equal(compose(jq, jp), jq),
                            jq(p) == q};
  }

  // For g in G+: J_p(g) = 0 iff J_{u-p}(g) = g.
  template <typename Model>
  Verdict complement_kernel_check(Structure<Model> const&             s,
                                  CompressionBase<Model> const&       base,
                                  typename Model::element_type const& p) {
    auto c = s.unit - p;
    if (!base.is_member(c)) {
      throw DomainError("u - p = " + to_string(c) + " is not in P");
    }
    return kernel_fixpoint_check(s, base.compression(p), base.compression(c));
  }

  // J J = J, J(p) = p, and on E: e <= u - p => J(e) = 0 (with the converse
  // for compressions).
  template <typename Model>
  Verdict retraction_laws(Structure<Model> const&          s,
                          typename Model::endo_type const& j,
                          bool                             compression) {
    using E = typename Model::element_type;
    Verdict v;
    E       p = j(s.unit);
    auto    diff = s.map_difference(compose(j, j), j);
    v.tally_lazy(!diff, [&] {
      return "J J != J at " + to_string(*diff);
    });
    v.tally(j(p) == p, "J(p) != p for p = " + to_string(p));
    E complement = s.unit - p;
    std::vector<E> candidates = s.interval;
    if constexpr (std::is_same_v<Model, MatrixModel>) {
      if (auto c = detail::complement_projection(s, p)) {
        auto img = detail::images<Model>(s.interval, MatrixEndo::conjugation(c->matrix()));
        candidates.insert(candidates.end(), img.begin(), img.end());
      }
    }
    for (auto const& e : candidates) {
      if (!s.in_interval(e)) {
        continue;
      }
      bool below = s.leq(e, complement);
      bool killed = j(e).is_zero();
      v.tally_lazy(!below || killed, [&] {
        return to_string(e) + " <= u - p but J(e) != 0";
      });
      if (compression) {
        v.tally_lazy(!killed || below, [&] {
          return "J(" + to_string(e) + ") = 0 but e not <= u - p";
        });
      }
    }
    return v;
  }

  ////////////////////////////////////////////////////////////////////////
  // Compressibility and direct compressions
  ////////////////////////////////////////////////////////////////////////

  template <typename Model>
  struct CompressibilityReport {
    Report                                     report{"compressible_group"};
    std::vector<RetractionCertificate<Model>>  retractions;
    std::vector<typename Model::element_type>  projections;
    bool                                       decided     = false;
    bool                                       compressible = false;
  };

  inline CompressibilityReport<LatticeConeModel>
  is_compressible_group(Structure<LatticeConeModel> const& s) {
    using E = Coords;
    CompressibilityReport<LatticeConeModel> out;
    out.decided     = true;
    out.retractions = enumerate_retractions(s);
    auto& rets      = out.retractions;

    Verdict unique;
    for (std::size_t i = 0; i + 1 < rets.size(); ++i) {
      unique.tally_lazy(!(rets[i].focus == rets[i + 1].focus), [&] {
        return "two retractions with focus " + to_string(rets[i].focus) + ": "
               + to_string(rets[i].endo) + ", " + to_string(rets[i + 1].endo);
      });
    }
    unique.checks += rets.empty() ? 0 : 1;
    out.report.add("retraction determined by focus", unique);

    std::vector<LatticeEndo> all;
    for (auto const& c : rets) {
      all.push_back(c.endo);
    }
    auto probes = positive_probes(s, all);

    Verdict partner;
    for (auto const& a : rets) {
      bool ok = false;
      for (auto const& b : rets) {
        bool pair_ok = true;
        for (auto const& g : probes) {
          bool az = a.endo(g).is_zero(), af = a.endo(g) == g;
          bool bz = b.endo(g).is_zero(), bf = b.endo(g) == g;
          if (az != bf || bz != af) {
            pair_ok = false;
            break;
          }
        }
        if (pair_ok) {
          ok = true;
          break;
        }
      }
      partner.tally_lazy(ok, [&] {
        return "no partner retraction for " + to_string(a.endo) + " (focus "
               + to_string(a.focus) + ")";
      });
    }
    out.report.add("retraction has complementary partner", partner);

    Verdict every_compression;
    for (auto const& c : rets) {
      Verdict k = is_compression(s, c.endo);
      every_compression.tally_lazy(k.holds, [&] {
        return to_string(c.endo) + ": " + k.witness.value_or("?");
      });
    }
    out.report.add("every retraction is a compression", every_compression);

    out.compressible = unique.holds && partner.holds;
    for (auto const& c : rets) {
      out.projections.push_back(c.focus);
    }
    out.projections = sorted_unique(out.projections);

    if (out.compressible) {
      std::vector<std::pair<E, LatticeEndo>> family;
      for (auto const& c : rets) {
        family.emplace_back(c.focus, c.endo);
      }
      CompressionBase<LatticeConeModel> base(family);
      EffectAlgebraView<LatticeConeModel> ea(s);
      Verdict normal = ea.is_sub_effect_algebra(out.projections);
      normal.merge(ea.is_normal_subalgebra(
          SubEffectAlgebra<E>(out.projections)));
      out.report.add("projections form a normal sub-effect algebra", normal);
      Report base_report = validate_compression_base(s, base);
      out.report.add("projections satisfy the composition law",
                     *base_report.find("composition_law"));
    }
    return out;
  }

  inline CompressibilityReport<MatrixModel>
  is_compressible_group(Structure<MatrixModel> const&) {
    CompressibilityReport<MatrixModel> out;
    Verdict v = Verdict::pass(0);
    v.note = "not decidable by enumeration; compressible analytically: the "
             "self-adjoint part of a unital C*-algebra with J_p(g) = pgp";
    out.report.add("compressible", v);
    out.decided      = false;
    out.compressible = true;
    return out;
  }

  template <typename Model>
  struct DirectBase {
    CompressionBase<Model> base;
    Report                 report{"direct_compression_base"};
  };

  inline DirectBase<LatticeConeModel>
  direct_compression_base(Structure<LatticeConeModel> const& s) {
    DirectBase<LatticeConeModel> out;
    auto rets = enumerate_retractions(s);
    std::vector<std::pair<Coords, LatticeEndo>> family;
    std::vector<Coords> foci;
    for (auto const& c : rets) {
      if (is_direct(s, c.endo)) {
        family.emplace_back(c.focus, c.endo);
        foci.push_back(c.focus);
      }
    }
    Verdict unique;
    for (auto const& p : foci) {
      auto n = std::count_if(rets.begin(), rets.end(), [&](auto const& c) {
        return c.focus == p;
      });
      unique.tally(n == 1, "focus " + to_string(p) + " has "
                               + std::to_string(n) + " retractions");
    }
    out.report.add("unique retraction per focus", unique);
    if (!unique) {
      return out;
    }
    out.base = CompressionBase<LatticeConeModel>(family);

    EffectAlgebraView<LatticeConeModel> ea(s);
    SubEffectAlgebra<Coords>            center(ea.center());
    Verdict                             in_center;
    for (auto const& p : out.base.foci()) {
      in_center.tally(center.contains(p), to_string(p) + " is not central");
    }
    in_center.merge(ea.is_sub_effect_algebra(out.base.foci()));
    out.report.add("P sub-effect algebra of the center", in_center);
    out.report.absorb(validate_compression_base(s, out.base));
    return out;
  }

  // Operator model: direct retractions among the supplied projections.
  inline DirectBase<MatrixModel>
  direct_compression_base(Structure<MatrixModel> const& s,
                          std::vector<SymMatrix> const& supplied) {
    DirectBase<MatrixModel> out;
    std::vector<std::pair<SymMatrix, MatrixEndo>> family;
    for (auto const& p : sorted_unique(supplied)) {
      if (!is_projection(p)) {
        throw DomainError(to_string(p) + " is not a projection");
      }
      auto j = s.model->compression(p);
      if (is_direct(s, j)) {
        family.emplace_back(p, j);
      }
    }
    out.base = CompressionBase<MatrixModel>(family);
    Verdict unique = Verdict::pass(0);
    unique.note = "not decidable by enumeration for the operator model";
    out.report.add("unique retraction per focus", unique);
    Verdict central;
    EffectAlgebraView<MatrixModel> ea(s);
    central.merge(ea.is_sub_effect_algebra(out.base.foci()));
    // Central projections of the full matrix algebra commute with every
    // element; checked against the symmetric basis.
    for (auto const& p : out.base.foci()) {
      for (auto const& g : s.generators) {
        central.tally_lazy(p.matrix() * g.matrix() == g.matrix() * p.matrix(),
                           [&] { return to_string(p) + " is not central"; });
      }
    }
    out.report.add("P sub-effect algebra of the center", central);
    out.report.absorb(validate_compression_base(s, out.base));
    return out;
  }

}  // namespace compbase
