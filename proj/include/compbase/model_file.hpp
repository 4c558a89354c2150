// compbase - unital groups with compression bases, checked exactly
//
// Model-definition files (JSON).
//
//   {"kind": "lattice_cone",
//    "dim": 2,
//    "cone_rows": [[1,0],[0,1]],
//    "unit": [1,1],
//    "compressions": [{"focus": [1,0], "matrix": [[1,0],[0,0]]}, ...]}
//
//   {"kind": "matrix",
//    "dim": 2,
//    "projections": [[[1,0],[0,0]], [["1/2","1/2"],["1/2","1/2"]], ...]}
//
// Integers may be JSON numbers or decimal strings; rationals may also be
// "a/b" strings.  "compressions" is optional: without it the base is the
// direct compression base found by enumerating retractions.  An optional
// "description" string is allowed at top level.  Any other key is an error.

#pragma once

#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "compbase/element.hpp"
#include "compbase/error.hpp"
#include "compbase/lattice_cone.hpp"
#include "compbase/matrix_model.hpp"
#include "compbase/numeric.hpp"

namespace compbase {

  struct LatticeModelFile {
    LatticeConeModel                                    model;
    std::optional<std::vector<std::pair<Coords, LatticeEndo>>> compressions;
    std::string                                         description;
  };

  struct MatrixModelFile {
    MatrixModel model;
    std::string description;
  };

  using ModelFile = std::variant<LatticeModelFile, MatrixModelFile>;

  namespace detail {

    using json = nlohmann::json;

    class FileReader {
     public:
      explicit FileReader(std::string source) : _source(std::move(source)) {}

      [[noreturn]] void fail(std::string const& where, std::string const& what) const {
        throw ParseError(_source + ": " + (where.empty() ? "/" : where) + ": " + what);
      }

      void only_keys(json const& obj,
                     std::string const& where,
                     std::vector<std::string> const& allowed) const {
        if (!obj.is_object()) {
          fail(where, "expected an object");
        }
        for (auto const& [key, value] : obj.items()) {
          bool known = false;
          for (auto const& a : allowed) {
            known = known || a == key;
          }
          if (!known) {
            fail(where, "unknown key \"" + key + "\"");
          }
        }
      }

      json const& required(json const& obj, std::string const& where,
                           std::string const& key) const {
        auto it = obj.find(key);
        if (it == obj.end()) {
          fail(where, "missing key \"" + key + "\"");
        }
        return *it;
      }

      std::size_t size(json const& j, std::string const& where) const {
        if (!j.is_number_integer() || j.get<long long>() < 1) {
          fail(where, "expected a positive integer");
        }
        return static_cast<std::size_t>(j.get<long long>());
      }

      Rational rational(json const& j, std::string const& where,
                        bool integral) const {
        try {
          if (j.is_number_integer()) {
            return Rational(parse_integer(j.dump()));
          }
          if (j.is_string()) {
            auto const& text = j.get_ref<std::string const&>();
            if (integral) {
              return Rational(parse_integer(text));
            }
            return parse_rational(text);
          }
        } catch (ParseError const& e) {
          fail(where, e.what());
        }
        fail(where, integral ? "expected an integer" : "expected a rational");
      }

      std::vector<Rational> vector(json const& j, std::string const& where,
                                   std::size_t n, bool integral) const {
        if (!j.is_array() || j.size() != n) {
          fail(where, "expected an array of " + std::to_string(n) + " entries");
        }
        std::vector<Rational> out;
        for (std::size_t i = 0; i < n; ++i) {
          out.push_back(rational(j[i], where + "/" + std::to_string(i), integral));
        }
        return out;
      }

      RatMatrix matrix(json const& j, std::string const& where, std::size_t rows,
                       std::size_t cols, bool integral) const {
        if (!j.is_array() || j.size() != rows) {
          fail(where, "expected " + std::to_string(rows) + " rows");
        }
        RatMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
          auto row = vector(j[i], where + "/" + std::to_string(i), cols, integral);
          for (std::size_t k = 0; k < cols; ++k) {
            m(i, k) = row[k];
          }
        }
        return m;
      }

      Coords coords(json const& j, std::string const& where, std::size_t n) const {
        std::vector<Integer> out;
        for (auto const& q : vector(j, where, n, true)) {
          out.push_back(q.get_num());
        }
        return Coords(std::move(out));
      }

      IntMatrix int_matrix(json const& j, std::string const& where,
                           std::size_t rows, std::size_t cols) const {
        return *to_integer(matrix(j, where, rows, cols, true));
      }

     private:
      std::string _source;
    };

    inline std::string description_of(FileReader const& rd, json const& doc) {
      auto it = doc.find("description");
      if (it == doc.end()) {
        return {};
      }
      if (!it->is_string()) {
        rd.fail("/description", "expected a string");
      }
      return it->get<std::string>();
    }

    inline LatticeModelFile read_lattice(FileReader const& rd, json const& doc) {
      rd.only_keys(doc, "", {"kind", "description", "dim", "cone_rows", "unit",
                             "compressions"});
      std::size_t n    = rd.size(rd.required(doc, "", "dim"), "/dim");
      auto const& rows = rd.required(doc, "", "cone_rows");
      if (!rows.is_array() || rows.empty()) {
        rd.fail("/cone_rows", "expected a non-empty array of rows");
      }
      IntMatrix cone = rd.int_matrix(rows, "/cone_rows", rows.size(), n);
      Coords    unit = rd.coords(rd.required(doc, "", "unit"), "/unit", n);

      std::optional<std::vector<std::pair<Coords, LatticeEndo>>> family;
      if (auto it = doc.find("compressions"); it != doc.end()) {
        if (!it->is_array()) {
          rd.fail("/compressions", "expected an array");
        }
        family.emplace();
        for (std::size_t i = 0; i < it->size(); ++i) {
          std::string where = "/compressions/" + std::to_string(i);
          auto const& c     = (*it)[i];
          rd.only_keys(c, where, {"focus", "matrix"});
          Coords    focus = rd.coords(rd.required(c, where, "focus"), where + "/focus", n);
          IntMatrix m     = rd.int_matrix(rd.required(c, where, "matrix"),
                                          where + "/matrix", n, n);
          family->emplace_back(std::move(focus), LatticeEndo(std::move(m)));
        }
      }
      try {
        return LatticeModelFile{LatticeConeModel(n, std::move(cone), std::move(unit)),
                                std::move(family), description_of(rd, doc)};
      } catch (ShapeError const& e) {
        rd.fail("", e.what());
      }
    }

    inline MatrixModelFile read_matrix(FileReader const& rd, json const& doc) {
      rd.only_keys(doc, "", {"kind", "description", "dim", "projections"});
      std::size_t n     = rd.size(rd.required(doc, "", "dim"), "/dim");
      auto const& projs = rd.required(doc, "", "projections");
      if (!projs.is_array()) {
        rd.fail("/projections", "expected an array of matrices");
      }
      std::vector<SymMatrix> ps;
      for (std::size_t i = 0; i < projs.size(); ++i) {
        std::string where = "/projections/" + std::to_string(i);
        RatMatrix   m     = rd.matrix(projs[i], where, n, n, false);
        if (!m.is_symmetric()) {
          rd.fail(where, "matrix is not symmetric");
        }
        ps.emplace_back(std::move(m));
      }
      return MatrixModelFile{MatrixModel(n, std::move(ps)), description_of(rd, doc)};
    }

  }  // namespace detail

  // `source` names the input in error messages.
  inline ModelFile parse_model(std::string const& text, std::string const& source) {
    detail::FileReader rd(source);
    detail::json       doc;
    try {
      doc = detail::json::parse(text);
    } catch (detail::json::parse_error const& e) {
      throw ParseError(source + ": " + e.what());
    }
    if (!doc.is_object()) {
      rd.fail("", "expected a JSON object");
    }
    auto const& kind = rd.required(doc, "", "kind");
    if (kind == "lattice_cone") {
      return detail::read_lattice(rd, doc);
    }
    if (kind == "matrix") {
      return detail::read_matrix(rd, doc);
    }
    rd.fail("/kind", "expected \"lattice_cone\" or \"matrix\"");
  }

  inline ModelFile load_model(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError(path + ": cannot open file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_model(buf.str(), path);
  }

  // "1,0" for lattice models; row-major rationals "1/2,1/2,1/2,1/2" for
  // matrix models.
  inline Coords parse_element(LatticeConeModel const& m, std::string const& text) {
    std::vector<Integer> out;
    std::stringstream    ss(text);
    std::string          item;
    while (std::getline(ss, item, ',')) {
      out.push_back(parse_integer(item));
    }
    if (out.size() != m.dim()) {
      throw ParseError("element \"" + text + "\": expected "
                       + std::to_string(m.dim()) + " comma-separated integers");
    }
    return Coords(std::move(out));
  }

  inline SymMatrix parse_element(MatrixModel const& m, std::string const& text) {
    std::vector<Rational> out;
    std::stringstream     ss(text);
    std::string           item;
    while (std::getline(ss, item, ',')) {
      out.push_back(parse_rational(item));
    }
    std::size_t n = m.dim();
    if (out.size() != n * n) {
      throw ParseError("element \"" + text + "\": expected "
                       + std::to_string(n * n) + " row-major rationals");
    }
    RatMatrix a(n, n);
    for (std::size_t i = 0; i < n * n; ++i) {
      a(i / n, i % n) = out[i];
    }
    if (!a.is_symmetric()) {
      throw ParseError("element \"" + text + "\": matrix is not symmetric");
    }
    return SymMatrix(std::move(a));
  }

}  // namespace compbase
