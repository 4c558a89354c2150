// compbase - unital groups with compression bases, checked exactly
//
// The theorem suite: every law of a compression base swept over a model.
// Lattice models are swept exhaustively over P and the bounded universe;
// the matrix model is swept over its listed projections and then over
// seeded random projection pairs (independent, commuting and nested in
// turn) and random probe elements.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

#include "compbase/compatibility.hpp"
#include "compbase/compression.hpp"
#include "compbase/report.hpp"
#include "compbase/structure.hpp"

namespace compbase {

  namespace detail {

    template <typename Model>
    void sweep_listed(Report&                       r,
                      Structure<Model> const&       s,
                      CompressionBase<Model> const& base) {
      using E     = typename Model::element_type;
      auto const& P = base.foci();

      Verdict laws;
      for (auto const& p : P) {
        laws.merge(retraction_laws(s, base.compression(p), true));
      }
      r.add("retraction_laws", laws);

      // J_p against every retraction with focus u - p.
      Verdict duality;
      for (auto const& p : P) {
        E c = s.unit - p;
        if constexpr (std::is_same_v<Model, LatticeConeModel>) {
          for (auto const& cert : enumerate_retractions(s)) {
            if (cert.focus == c) {
              duality.merge(kernel_fixpoint_check(s, base.compression(p), cert.endo));
            }
          }
        } else {
          duality.merge(kernel_fixpoint_check(s, base.compression(p), base.compression(c)));
        }
      }
      r.add("retraction_kernel_duality", duality);

      Verdict order;
      for (auto const& p : P) {
        for (auto const& q : P) {
          auto oe = order_equivalence(s, base, p, q);
          order.tally_lazy(oe.agree(), [&] {
            return "p = " + to_string(p) + ", q = " + to_string(q)
                   + ": bits " + oe.bits();
          });
        }
      }
      r.add("order_vs_composition", order);

      Verdict complement;
      for (auto const& p : P) {
        complement.merge(complement_kernel_check(s, base, p));
      }
      r.add("complement_kernel", complement);
      r.absorb(omp_check(s, base));

      Verdict criterion;
      for (auto const& p : P) {
        auto           jp = base.compression(p);
        auto           jc = base.compression(s.unit - p);
        std::vector<E> probes = s.signed_elems;
        probes.insert(probes.end(), s.positives.begin(), s.positives.end());
        for (auto const& g : s.positives) {
          probes.push_back(jp(g) + jc(g));
        }
        for (auto const& g : probes) {
          criterion.merge(commutant_criterion(s, base, p, g));
        }
      }
      r.add("commutant_criterion", criterion);

      Verdict battery, symmetry, meets;
      for (auto const& p : P) {
        for (auto const& q : P) {
          auto b = compat_battery(s, base, p, q);
          battery.tally_lazy(b.agree(), [&] { return to_string(b); });
          auto c = compat_battery(s, base, q, p);
          symmetry.tally_lazy(b.conditions == c.conditions, [&] {
            return to_string(b) + " vs " + to_string(c);
          });
          if (b.all_true()) {
            auto m  = meet(s, base, p, q);
            auto m2 = meet(s, base, q, p);
            meets.merge(m.verdict);
            meets.tally_lazy(m.value == m2.value, [&] {
              return "meet not symmetric for " + to_string(p) + ", "
                     + to_string(q);
            });
          }
        }
      }
      r.add("compatibility_equivalences", battery);
      r.add("compatibility_symmetry", symmetry);
      r.add("meet", meets);

      for (auto const& v : P) {
        r.absorb(direct_product_check(s, base, v));
      }
    }

    // Random pairs and probes for the matrix model; `n` samples per law.
    inline void sweep_random(Report&                              r,
                             Structure<MatrixModel> const&        s,
                             CompressionBase<MatrixModel> const&  base,
                             std::size_t                          n,
                             std::uint64_t                        seed) {
      MatrixSampler sampler(s.model->dim(), seed ^ 0x9e3779b97f4a7c15ULL);
      auto const&   u = s.unit;
      auto          pick = [&](std::vector<SymMatrix> const& xs, std::size_t i) {
        return xs[i % xs.size()];
      };
      constexpr PairKind kinds[] = {PairKind::independent, PairKind::commuting,
                                    PairKind::nested};

      Verdict battery, symmetry, meets, order, duality, criterion;
      for (std::size_t i = 0; i < n; ++i) {
        auto [p, q] = sampler.projection_pair(kinds[i % 3]);
        auto b      = compat_battery(s, base, p, q);
        battery.tally_lazy(b.agree(), [&] { return to_string(b); });
        auto c = compat_battery(s, base, q, p);
        symmetry.tally_lazy(b.conditions == c.conditions, [&] {
          return to_string(b) + " vs " + to_string(c);
        });
        if (b.all_true()) {
          auto m  = meet(s, base, p, q);
          auto m2 = meet(s, base, q, p);
          meets.merge(m.verdict);
          meets.tally_lazy(m.value == m2.value, [&] {
            return "meet not symmetric for " + to_string(p) + ", " + to_string(q);
          });
        }
        auto oe = order_equivalence(s, base, p, q);
        order.tally_lazy(oe.agree(), [&] {
          return "p = " + to_string(p) + ", q = " + to_string(q) + ": bits "
                 + oe.bits();
        });

        // One probe element per sample, pushed into special position.
        auto      jp = base.compression(p);
        auto      jc = base.compression(u - p);
        SymMatrix g  = pick(s.positives, i);
        Verdict   d;
        for (auto const& x : {g, jp(g), jc(g)}) {
          bool killed = jp(x).is_zero();
          bool fixed  = jc(x) == x;
          d.tally_lazy(killed == fixed, [&] {
            return "p = " + to_string(p) + ", g = " + to_string(x)
                   + ": J_p(g)=0 and J_{u-p}(g)=g disagree";
          });
        }
        d.checks = 1;
        duality.merge(d);

        Verdict cc;
        for (auto const& x : {pick(s.signed_elems, i), g, jp(g) + jc(g)}) {
          cc.merge(commutant_criterion(s, base, p, x));
        }
        cc.checks = 1;
        criterion.merge(cc);
      }
      r.add("random: compatibility_equivalences", battery);
      r.add("random: compatibility_symmetry", symmetry);
      r.add("random: meet", meets);
      r.add("random: order_vs_composition", order);
      r.add("random: retraction_kernel_duality", duality);
      r.add("random: commutant_criterion", criterion);
    }

  }  // namespace detail

  inline Report run_theorem_suite(Structure<LatticeConeModel> const&       s,
                                  CompressionBase<LatticeConeModel> const& base,
                                  UniverseConfig const& = {}) {
    Report r("theorems");
    auto   comp = is_compressible_group(s);
    r.absorb(comp.report);
    detail::sweep_listed(r, s, base);
    return r;
  }

  inline Report run_theorem_suite(Structure<MatrixModel> const&       s,
                                  CompressionBase<MatrixModel> const& base,
                                  UniverseConfig const&               cfg = {}) {
    Report r("theorems");
    detail::sweep_listed(r, s, base);
    detail::sweep_random(r, s, base, cfg.samples, cfg.seed);
    return r;
  }

}  // namespace compbase
