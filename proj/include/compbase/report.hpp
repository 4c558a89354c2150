// compbase - unital groups with compression bases, checked exactly
//
// Outcomes of universally quantified checks.  A Verdict is one boolean
// with the first counterexample found (in deterministic sweep order) and
// the number of instances examined.  A Report is an ordered list of named
// verdicts and serialises to {clause, status, witness?, checks}.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace compbase {

  struct Verdict {
    bool                       holds = true;
    std::optional<std::string> witness;
    std::size_t                checks = 0;
    // Set when the property was certified analytically rather than swept.
    std::optional<std::string> note;

    static Verdict pass(std::size_t checks = 1) {
      return Verdict{true, std::nullopt, checks, std::nullopt};
    }
    static Verdict fail(std::string witness, std::size_t checks = 1) {
      return Verdict{false, std::move(witness), checks, std::nullopt};
    }

    explicit operator bool() const noexcept {
      return holds;
    }

    // Record one instance; keeps only the first witness.
    void tally(bool ok, std::string const& witness_if_bad) {
      ++checks;
      if (!ok && holds) {
        holds   = false;
        witness = witness_if_bad;
      }
    }
    template <typename Fn>
    void tally_lazy(bool ok, Fn&& make_witness) {
      ++checks;
      if (!ok && holds) {
        holds   = false;
        witness = make_witness();
      }
    }

    Verdict& merge(Verdict const& other) {
      checks += other.checks;
      if (!other.holds && holds) {
        holds   = false;
        witness = other.witness;
      }
      if (other.note && !note) {
        note = other.note;
      }
      return *this;
    }
  };

  struct Check {
    std::string clause;
    Verdict     verdict;
  };

  class Report {
   public:
    Report() = default;
    explicit Report(std::string title) : _title(std::move(title)) {}

    std::string const& title() const noexcept {
      return _title;
    }

    Verdict const& add(std::string clause, Verdict v) {
      _items.push_back(Check{std::move(clause), std::move(v)});
      return _items.back().verdict;
    }

    // Nest another report; clause names are prefixed with its title.
    void absorb(Report const& other) {
      for (auto const& c : other._items) {
        std::string name = other._title.empty()
                               ? c.clause
                               : other._title + "/" + c.clause;
        _items.push_back(Check{std::move(name), c.verdict});
      }
    }

    std::vector<Check> const& items() const noexcept {
      return _items;
    }

    bool ok() const {
      for (auto const& c : _items) {
        if (!c.verdict.holds) {
          return false;
        }
      }
      return true;
    }

    Check const* first_failure() const {
      for (auto const& c : _items) {
        if (!c.verdict.holds) {
          return &c;
        }
      }
      return nullptr;
    }

    Verdict const* find(std::string const& clause) const {
      for (auto const& c : _items) {
        if (c.clause == clause) {
          return &c.verdict;
        }
      }
      return nullptr;
    }

    std::size_t total_checks() const {
      std::size_t n = 0;
      for (auto const& c : _items) {
        n += c.verdict.checks;
      }
      return n;
    }

   private:
    std::string        _title;
    std::vector<Check> _items;
  };

  inline nlohmann::ordered_json to_json(Check const& c) {
    nlohmann::ordered_json j;
    j["clause"] = c.clause;
    j["status"] = c.verdict.holds ? "pass" : "fail";
    if (c.verdict.witness) {
      j["witness"] = *c.verdict.witness;
    }
    j["checks"] = c.verdict.checks;
    if (c.verdict.note) {
      j["note"] = *c.verdict.note;
    }
    return j;
  }

  inline nlohmann::ordered_json to_json(Report const& r) {
    nlohmann::ordered_json j;
    j["title"]  = r.title();
    j["status"] = r.ok() ? "pass" : "fail";
    j["items"]  = nlohmann::ordered_json::array();
    for (auto const& c : r.items()) {
      j["items"].push_back(to_json(c));
    }
    return j;
  }

}  // namespace compbase
