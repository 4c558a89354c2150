// compbase - unital groups with compression bases, checked exactly
//
// Command-line driver.  `cli::run` parses arguments, loads a model file,
// runs one command and writes its report; the return value is the exit
// code: 0 everything holds, 1 a mathematical violation or an element
// outside the required set, 2 bad input or usage.
//
// Every report is JSON by default ({command, status, first_failure?, ...}
// with reports in the {title, status, items: [{clause, status, witness?,
// checks, note?}]} form) or a plain-text table with --table.

#pragma once

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "compbase/compatibility.hpp"
#include "compbase/compression.hpp"
#include "compbase/effect_algebra.hpp"
#include "compbase/error.hpp"
#include "compbase/model_file.hpp"
#include "compbase/poag.hpp"
#include "compbase/report.hpp"
#include "compbase/structure.hpp"
#include "compbase/theorems.hpp"

namespace compbase::cli {

  using ojson = nlohmann::ordered_json;

  struct RunConfig {
    std::string                model_path;
    std::string                command;
    std::vector<std::string>   elements;
    std::string                kind = "image";
    unsigned                   height_bound = 3;
    std::size_t                samples      = 1000;
    std::uint64_t              seed         = 0;
    bool                       table        = false;
    std::optional<std::string> output;
  };

  // Raised for a failure that should end the run with exit code 1 and a
  // message instead of a report.
  class Violation : public Error {
   public:
    using Error::Error;
  };

  namespace detail {

    inline ojson report_entry(Report const& r) {
      return to_json(r);
    }

    inline std::optional<std::string> first_failure(std::vector<Report> const& rs) {
      for (auto const& r : rs) {
        if (auto f = r.first_failure()) {
          return r.title() + "/" + f->clause;
        }
      }
      return std::nullopt;
    }

    inline void render_report(std::ostream& out, Report const& r) {
      out << r.title() << ": " << (r.ok() ? "pass" : "FAIL") << "\n";
      for (auto const& c : r.items()) {
        out << "  " << (c.verdict.holds ? "pass" : "FAIL") << "  " << c.clause
            << "  (" << c.verdict.checks << " checks)";
        if (c.verdict.witness) {
          out << "  witness: " << *c.verdict.witness;
        }
        if (c.verdict.note) {
          out << "  note: " << *c.verdict.note;
        }
        out << "\n";
      }
    }

    // A loaded model with its structure and base.
    template <typename Model>
    struct Session {
      Model const&           model;
      Structure<Model>       s;
      CompressionBase<Model> base;
      std::string            base_source;
      std::optional<Report>  base_report;  // set when the base was derived
    };

    inline Session<LatticeConeModel> open_session(LatticeModelFile const& f,
                                                  UniverseConfig const&   cfg) {
      Session<LatticeConeModel> ses{f.model, make_structure(f.model, cfg), {}, {}, {}};
      if (f.compressions) {
        try {
          ses.base = CompressionBase<LatticeConeModel>(*f.compressions);
        } catch (DomainError const& e) {
          throw Violation(e.what());
        }
        ses.base_source = "declared";
      } else {
        auto direct     = direct_compression_base(ses.s);
        ses.base        = std::move(direct.base);
        ses.base_report = std::move(direct.report);
        ses.base_source = "direct compression base (enumerated)";
      }
      return ses;
    }

    inline Session<MatrixModel> open_session(MatrixModelFile const& f,
                                             UniverseConfig const&  cfg) {
      return Session<MatrixModel>{f.model,
                                  make_structure(f.model, cfg),
                                  conjugation_base(f.model, f.model.projections()),
                                  "declared projections, J_p(g) = pgp",
                                  {}};
    }

    template <typename Model>
    std::vector<Report> validation_reports(Session<Model> const& ses) {
      std::vector<Report> out{validate_unital_group(ses.s)};
      if (ses.base_report) {
        out.push_back(*ses.base_report);
      } else {
        out.push_back(validate_compression_base(ses.s, ses.base));
      }
      return out;
    }

    struct Outcome {
      ojson               json;
      std::vector<Report> reports;
      std::string         table;  // extra table text before the reports
      bool                ok = true;
    };

    template <typename Model>
    ojson header(Session<Model> const& ses, std::string const& command) {
      ojson j;
      j["command"] = command;
      j["kind"]    = Model::kind_name;
      j["dim"]     = ses.model.dim();
      j["unit"]    = to_string(ses.s.unit);
      j["base"]    = ses.base_source;
      return j;
    }

    template <typename Model>
    Outcome cmd_validate(Session<Model> const& ses) {
      Outcome o;
      o.json    = header(ses, "validate");
      o.reports = validation_reports(ses);
      return o;
    }

    template <typename Model>
    Outcome cmd_theorems(Session<Model> const& ses, UniverseConfig const& cfg) {
      Outcome o;
      o.json    = header(ses, "theorems");
      o.reports = validation_reports(ses);
      if (!first_failure(o.reports)) {
        o.reports = {run_theorem_suite(ses.s, ses.base, cfg)};
      }
      return o;
    }

    template <typename Model>
    Outcome cmd_compat_table(Session<Model> const& ses) {
      Outcome     o;
      auto const& P = ses.base.foci();
      o.json        = header(ses, "compat-table");
      ojson names   = ojson::array();
      for (auto const* n : compat_condition_names) {
        names.push_back(n);
      }
      o.json["conditions"] = names;
      ojson              rows = ojson::array();
      std::ostringstream t;
      t << "compatibility (Y all eight hold, . none hold, ! disagreement)\n";
      std::size_t idx = 0;
      for (auto const& p : P) {
        t << "  [" << idx++ << "] " << to_string(p) << "\n";
      }
      t << "     ";
      for (std::size_t j = 0; j < P.size(); ++j) {
        t << std::setw(3) << j;
      }
      t << "\n";
      for (std::size_t i = 0; i < P.size(); ++i) {
        t << std::setw(3) << i << "  ";
        for (auto const& q : P) {
          auto  b = compat_battery(ses.s, ses.base, P[i], q);
          ojson row;
          row["p"]     = to_string(b.p);
          row["q"]     = to_string(b.q);
          row["bits"]  = b.bits();
          row["agree"] = b.agree();
          rows.push_back(row);
          o.ok = o.ok && b.agree();
          t << std::setw(3) << (!b.agree() ? "!" : b.conditions[0] ? "Y" : ".");
        }
        t << "\n";
      }
      o.json["rows"] = rows;
      o.table        = t.str();
      return o;
    }

    template <typename Model>
    typename Model::element_type element_arg(Session<Model> const&    ses,
                                             std::vector<std::string> const& args,
                                             std::size_t i) {
      if (args.size() <= i) {
        throw ParseError("missing element argument");
      }
      return parse_element(ses.model, args[i]);
    }

    template <typename Model>
    Outcome cmd_mackey(Session<Model> const&           ses,
                       std::vector<std::string> const& args) {
      using E = typename Model::element_type;
      E e     = element_arg(ses, args, 0);
      E f     = element_arg(ses, args, 1);
      EffectAlgebraView<Model> ea(ses.s);
      for (auto const* x : {&e, &f}) {
        if (!ea.contains(*x)) {
          throw Violation(to_string(*x) + " is not in E");
        }
      }
      Outcome o;
      o.json      = header(ses, "mackey");
      o.json["e"] = to_string(e);
      o.json["f"] = to_string(f);
      std::vector<MackeyTriple<E>> triples;
      if (ses.s.exhaustive) {
        triples = ea.mackey_decompositions(e, f);
      } else {
        if (!ses.base.is_member(e) || !ses.base.is_member(f)) {
          throw Violation("witness form needs e and f in P");
        }
        if (is_mackey_compatible_witness(ses.s, ses.base, e, f, false)) {
          E r = ses.base.compression(e)(f);
          triples.push_back(MackeyTriple<E>{e - r, f - r, r});
        }
        o.json["note"] = "witness form r = J_e(f); E is not enumerable";
      }
      ojson list = ojson::array();
      std::ostringstream t;
      t << "Mackey decompositions (e1, f1, d) of e = " << to_string(e)
        << ", f = " << to_string(f) << ": " << triples.size() << "\n";
      for (auto const& x : triples) {
        list.push_back(to_string(x));
        t << "  " << to_string(x) << "\n";
      }
      o.json["count"]   = triples.size();
      o.json["triples"] = list;
      o.table           = t.str();
      return o;
    }

    template <typename Model>
    Outcome cmd_substructure(Session<Model> const&           ses,
                             std::vector<std::string> const& args,
                             std::string const&              kind) {
      auto v = element_arg(ses, args, 0);
      if (!ses.base.is_member(v)) {
        throw Violation(to_string(v) + " is not in P");
      }
      auto sub = kind == "image" ? image_substructure(ses.s, ses.base, v)
                                 : commutant_substructure(ses.s, ses.base, v);
      Outcome o;
      o.json                  = header(ses, "substructure");
      o.json["substructure"]  = kind;
      o.json["v"]             = to_string(v);
      o.json["sub_unit"]      = to_string(sub.structure.unit);
      o.json["interval_size"] = sub.structure.interval.size();
      ojson p = ojson::array();
      for (auto const& q : sub.base.foci()) {
        p.push_back(to_string(q));
      }
      o.json["P"] = p;
      std::ostringstream t;
      t << kind << " substructure at v = " << to_string(v) << "\n"
        << "  unit " << to_string(sub.structure.unit) << "\n"
        << "  |E| = " << sub.structure.interval.size()
        << (sub.structure.exhaustive ? "" : " (sampled)") << "\n"
        << "  P = " << to_string_list(sub.base.foci()) << "\n";
      o.table   = t.str();
      o.reports = {sub.validation};
      return o;
    }

    inline Outcome cmd_retractions(Session<LatticeConeModel> const& ses) {
      Outcome o;
      o.json        = header(ses, "retractions");
      auto  rets    = enumerate_retractions(ses.s);
      ojson list    = ojson::array();
      std::ostringstream t;
      t << "retractions: " << rets.size() << "\n";
      for (auto const& c : rets) {
        bool  comp = is_compression(ses.s, c.endo).holds;
        bool  dir  = is_direct(ses.s, c.endo).holds;
        ojson item;
        item["focus"]       = to_string(c.focus);
        item["matrix"]      = to_string(c.endo);
        item["compression"] = comp;
        item["direct"]      = dir;
        list.push_back(item);
        t << "  focus " << to_string(c.focus) << "  " << to_string(c.endo)
          << (comp ? "  compression" : "") << (dir ? "  direct" : "") << "\n";
      }
      o.json["count"]       = rets.size();
      o.json["retractions"] = list;
      o.table               = t.str();
      return o;
    }

    inline Outcome cmd_retractions(Session<MatrixModel> const&) {
      throw NotEnumerable("retractions: the matrix model has infinitely many");
    }

    template <typename Model>
    Outcome cmd_report(Session<Model> const& ses, UniverseConfig const& cfg) {
      Outcome o;
      o.json = header(ses, "report");
      auto validate = cmd_validate(ses);
      o.reports     = validate.reports;
      if constexpr (std::is_same_v<Model, LatticeConeModel>) {
        auto rets                 = cmd_retractions(ses);
        o.json["retractions"]     = rets.json["retractions"];
        o.table += rets.table;
        o.reports.push_back(is_compressible_group(ses.s).report);
      }
      if (!first_failure(o.reports)) {
        auto compat        = cmd_compat_table(ses);
        o.json["compat"]   = compat.json["rows"];
        o.table += compat.table;
        o.ok = compat.ok;
        o.reports.push_back(run_theorem_suite(ses.s, ses.base, cfg));
      }
      return o;
    }

    template <typename Model>
    Outcome dispatch(Session<Model> const& ses, RunConfig const& rc,
                     UniverseConfig const& cfg) {
      auto const& c = rc.command;
      if (c == "validate") {
        return cmd_validate(ses);
      }
      if (c == "theorems") {
        return cmd_theorems(ses, cfg);
      }
      if (c == "compat-table") {
        return cmd_compat_table(ses);
      }
      if (c == "mackey") {
        return cmd_mackey(ses, rc.elements);
      }
      if (c == "substructure") {
        return cmd_substructure(ses, rc.elements, rc.kind);
      }
      if (c == "retractions") {
        return cmd_retractions(ses);
      }
      return cmd_report(ses, cfg);
    }

    inline std::string render(Outcome& o, bool table) {
      auto failure = first_failure(o.reports);
      bool ok      = o.ok && !failure;
      if (table) {
        std::ostringstream t;
        t << o.json["command"].get<std::string>() << " ("
          << o.json["kind"].get<std::string>() << ", dim "
          << o.json["dim"].get<std::size_t>() << ", unit "
          << o.json["unit"].get<std::string>() << "): "
          << (ok ? "pass" : "FAIL") << "\n";
        if (failure) {
          t << "first failure: " << *failure << "\n";
        }
        t << o.table;
        for (auto const& r : o.reports) {
          render_report(t, r);
        }
        return t.str();
      }
      ojson j = o.json;
      j["status"] = ok ? "pass" : "fail";
      if (failure) {
        j["first_failure"] = *failure;
      }
      if (!o.reports.empty()) {
        ojson rs = ojson::array();
        for (auto const& r : o.reports) {
          rs.push_back(report_entry(r));
        }
        j["reports"] = rs;
      }
      return j.dump(2) + "\n";
    }

    inline bool passed(Outcome const& o) {
      return o.ok && !first_failure(o.reports);
    }

  }  // namespace detail

  // args excludes the program name.
  inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    RunConfig rc;
    if (char const* env = std::getenv("COMPBASE_SEED")) {
      try {
        rc.seed = std::stoull(env);
      } catch (std::exception const&) {
        err << "error: COMPBASE_SEED is not an unsigned integer\n";
        return 2;
      }
    }

    CLI::App app{"Checks unital groups with compression bases exactly"};
    app.name("compbase");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--height-bound", rc.height_bound,
                   "positive universe is {g : 0 <= g <= N u}")
        ->check(CLI::PositiveNumber);
    app.add_option("--samples", rc.samples,
                   "random samples for the matrix model")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", rc.seed, "sampler seed (default $COMPBASE_SEED or 0)");
    auto* json_flag  = app.add_flag("--json", "JSON report (default)");
    auto* table_flag = app.add_flag("--table", rc.table, "plain-text table");
    json_flag->excludes(table_flag);
    app.add_option("--output", rc.output, "write the report to a file");

    auto add = [&](char const* name, char const* help) {
      auto* sub = app.add_subcommand(name, help);
      sub->add_option("model", rc.model_path, "model file")->required();
      sub->callback([&rc, name] { rc.command = name; });
      return sub;
    };
    add("validate", "unital-group axioms and compression-base clauses");
    add("theorems", "every theorem suite for the model kind");
    add("compat-table", "compatibility battery over P x P");
    add("mackey", "Mackey decompositions of two elements of E")
        ->add_option("elements", rc.elements, "e f")
        ->expected(2)
        ->required();
    auto* sub = add("substructure", "image or commutant at a focus");
    sub->add_option("v", rc.elements, "focus v")->expected(1)->required();
    sub->add_option("--kind", rc.kind, "image or commutant")
        ->check(CLI::IsMember({"image", "commutant"}));
    add("retractions", "all retractions of a lattice-cone model");
    add("report", "everything");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return 0;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }

    UniverseConfig cfg{rc.height_bound, rc.samples, rc.seed};
    std::string    text;
    bool           ok = false;
    try {
      auto file = load_model(rc.model_path);
      std::visit(
          [&](auto const& f) {
            auto ses = detail::open_session(f, cfg);
            auto o   = detail::dispatch(ses, rc, cfg);
            text     = detail::render(o, rc.table);
            ok       = detail::passed(o);
          },
          file);
    } catch (ParseError const& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    } catch (NotEnumerable const& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    } catch (ShapeError const& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    } catch (Violation const& e) {
      err << "violation: " << e.what() << "\n";
      return 1;
    } catch (DomainError const& e) {
      err << "violation: " << e.what() << "\n";
      return 1;
    }

    if (rc.output) {
      std::ofstream f(*rc.output);
      if (!f || !(f << text)) {
        err << "error: cannot write " << *rc.output << "\n";
        return 2;
      }
    } else {
      out << text;
    }
    return ok ? 0 : 1;
  }

}  // namespace compbase::cli
