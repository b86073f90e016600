#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "softdm/cli.hpp"
#include "softdm/decision.hpp"
#include "softdm/error.hpp"
#include "softdm/grade_scale.hpp"
#include "softdm/grey_number.hpp"
#include "softdm/neutrosophic.hpp"
#include "softdm/report.hpp"
#include "softdm/soft_set.hpp"
#include "softdm/table_io.hpp"

namespace py = pybind11;
using namespace softdm;

namespace {

Cell to_cell(const py::handle& obj) {
  if (py::isinstance<GreyNumber>(obj)) {
    return obj.cast<GreyNumber>();
  }
  if (py::isinstance<NeutrosophicTriplet>(obj)) {
    return obj.cast<NeutrosophicTriplet>();
  }
  if (py::isinstance<py::bool_>(obj) || py::isinstance<py::int_>(obj)) {
    auto value = obj.cast<long long>();
    if (value != 0 && value != 1) {
      throw DomainError("binary cell must be 0 or 1, got " + std::to_string(value));
    }
    return BinaryCell{value == 1};
  }
  if (py::isinstance<py::str>(obj)) {
    return parse_cell(obj.cast<std::string>());
  }
  throw py::type_error("cell must be 0/1, a grade label, a cell token string, "
                       "GreyNumber or NeutrosophicTriplet");
}

py::object from_cell(const Cell& cell) {
  if (const auto* bin = std::get_if<BinaryCell>(&cell)) {
    return py::int_(bin->value ? 1 : 0);
  }
  if (const auto* grade = std::get_if<GradeCell>(&cell)) {
    return py::str(grade->label);
  }
  if (const auto* grey = std::get_if<GreyNumber>(&cell)) {
    return py::cast(*grey);
  }
  return py::cast(std::get<NeutrosophicTriplet>(cell));
}

DecisionTable make_table(std::vector<std::string> candidates,
                         std::vector<std::string> parameters, const py::sequence& rows) {
  std::vector<Cell> cells;
  if (py::len(rows) != candidates.size()) {
    throw DomainError("expected one row of cells per candidate");
  }
  for (const auto& row : rows) {
    auto seq = row.cast<py::sequence>();
    if (py::len(seq) != parameters.size()) {
      throw DomainError("expected one cell per parameter in every row");
    }
    for (const auto& cell : seq) {
      cells.push_back(to_cell(cell));
    }
  }
  return DecisionTable(std::move(candidates), std::move(parameters), std::move(cells));
}

template <class T>
py::list scored_list(const std::vector<Scored<T>>& scores) {
  py::list out;
  for (const auto& s : scores) {
    out.append(py::make_tuple(s.candidate, s.score));
  }
  return out;
}

TripletScores triplet_scores(const std::vector<std::pair<std::string, NeutrosophicTriplet>>& in) {
  TripletScores out;
  for (const auto& [name, value] : in) {
    out.push_back({name, value});
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_softdm, m) {
  m.doc() = "Soft-set decision making under binary, grey and neutrosophic information";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  static py::exception<DomainError> domain_error(m, "DomainError", error.ptr());
  static py::exception<UnknownGradeError> unknown_grade(m, "UnknownGradeError", error.ptr());
  static py::exception<CellMismatchError> mismatch(m, "CellMismatchError", error.ptr());
  static py::exception<InvalidOptionsError> invalid_options(m, "InvalidOptionsError",
                                                            error.ptr());
  static py::exception<ParseError> parse_error(m, "ParseError", error.ptr());
  static py::exception<ValidationError> validation_error(m, "ValidationError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) {
        std::rethrow_exception(p);
      }
    } catch (const DomainError& e) {
      PyErr_SetString(domain_error.ptr(), e.what());
    } catch (const UnknownGradeError& e) {
      PyErr_SetString(unknown_grade.ptr(), e.what());
    } catch (const CellMismatchError& e) {
      PyErr_SetString(mismatch.ptr(), e.what());
    } catch (const InvalidOptionsError& e) {
      PyErr_SetString(invalid_options.ptr(), e.what());
    } catch (const ParseError& e) {
      PyErr_SetString(parse_error.ptr(), e.what());
    } catch (const ValidationError& e) {
      PyErr_SetString(validation_error.ptr(), e.what());
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), e.what());
    }
  });

  m.attr("DEFAULT_EPSILON") = kDefaultEpsilon;

  py::class_<GreyNumber>(m, "GreyNumber")
      .def(py::init<double, double>(), py::arg("lower"), py::arg("upper"))
      .def_property_readonly("lower", &GreyNumber::lower)
      .def_property_readonly("upper", &GreyNumber::upper)
      .def_property_readonly("width", &GreyNumber::width)
      .def("__add__", [](const GreyNumber& a, const GreyNumber& b) { return a + b; })
      .def("__eq__", [](const GreyNumber& a, const GreyNumber& b) { return a == b; })
      .def("__repr__", [](const GreyNumber& a) { return "GreyNumber" + to_string(a); })
      .def("__str__", [](const GreyNumber& a) { return to_string(a); });
  m.def("scale_grey", [](double k, const GreyNumber& a) { return scale(k, a); },
        py::arg("k"), py::arg("value"));
  m.def("representative_value", &representative_value);

  py::class_<NeutrosophicTriplet>(m, "NeutrosophicTriplet")
      .def(py::init<double, double, double>(), py::arg("t"), py::arg("i"), py::arg("f"))
      .def_property_readonly("t", &NeutrosophicTriplet::truth)
      .def_property_readonly("i", &NeutrosophicTriplet::indeterminacy)
      .def_property_readonly("f", &NeutrosophicTriplet::falsity)
      .def("astuple",
           [](const NeutrosophicTriplet& x) {
             return py::make_tuple(x.truth(), x.indeterminacy(), x.falsity());
           })
      .def("__eq__", [](const NeutrosophicTriplet& a, const NeutrosophicTriplet& b) {
        return a == b;
      })
      .def("__repr__",
           [](const NeutrosophicTriplet& x) { return "NeutrosophicTriplet" + to_string(x); })
      .def("__str__", [](const NeutrosophicTriplet& x) { return to_string(x); });

  py::class_<TripletAccumulator>(m, "TripletAccumulator")
      .def(py::init<double, double, double>(), py::arg("t"), py::arg("i"), py::arg("f"))
      .def(py::init<const NeutrosophicTriplet&>())
      .def_property_readonly("t", &TripletAccumulator::truth)
      .def_property_readonly("i", &TripletAccumulator::indeterminacy)
      .def_property_readonly("f", &TripletAccumulator::falsity)
      .def("__add__",
           [](const TripletAccumulator& a, const TripletAccumulator& b) { return a + b; });
  py::implicitly_convertible<NeutrosophicTriplet, TripletAccumulator>();
  m.def("scale_triplet", [](double k, const TripletAccumulator& a) { return scale(k, a); },
        py::arg("k"), py::arg("value"));

  m.def(
      "triplet_mean",
      [](const std::vector<std::pair<NeutrosophicTriplet, std::size_t>>& items) {
        std::vector<WeightedTriplet> weighted;
        for (const auto& [value, count] : items) {
          weighted.push_back({value, count});
        }
        return mean(std::span<const WeightedTriplet>(weighted));
      },
      py::arg("items"), "Mean of (triplet, multiplicity) pairs.");

  py::enum_<Information>(m, "Information")
      .value("INCOMPLETE", Information::Incomplete)
      .value("COMPLETE", Information::Complete)
      .value("INCONSISTENT", Information::Inconsistent);
  m.def("classify_information", &classify_information, py::arg("triplet"),
        py::arg("epsilon") = kDefaultEpsilon);

  m.def(
      "tabulate",
      [](const std::vector<std::string>& universe, const std::vector<std::string>& parameters,
         const std::map<std::string, std::set<std::string>>& value_sets) {
        auto table = tabulate(SoftSet(universe, parameters, value_sets));
        std::vector<std::vector<int>> rows(table.rows(), std::vector<int>(table.cols()));
        for (std::size_t r = 0; r < table.rows(); ++r) {
          for (std::size_t c = 0; c < table.cols(); ++c) {
            rows[r][c] = table.at(r, c);
          }
        }
        return rows;
      },
      py::arg("universe"), py::arg("parameters"), py::arg("value_sets"),
      "Binary matrix of a soft set, rows in universe order.");
  m.def(
      "alpha_cuts",
      [](const std::vector<std::pair<std::string, double>>& membership,
         const std::vector<double>& alphas) {
        auto soft = fuzzy_to_soft(membership, alphas);
        std::vector<std::pair<std::string, std::vector<std::string>>> out;
        for (const auto& parameter : soft.parameters()) {
          std::vector<std::string> members;
          for (const auto& element : soft.universe()) {
            if (soft.contains(parameter, element)) {
              members.push_back(element);
            }
          }
          out.emplace_back(parameter, std::move(members));
        }
        return out;
      },
      py::arg("membership"), py::arg("alphas"));

  py::class_<GradeScale>(m, "GradeScale")
      .def(py::init([](const std::vector<std::pair<std::string, GreyNumber>>& entries) {
        std::vector<ScaleEntry> list;
        for (const auto& [label, interval] : entries) {
          list.push_back({label, interval});
        }
        return GradeScale(std::move(list));
      }))
      .def("interval", &GradeScale::interval, py::arg("label"))
      .def_property_readonly("labels", [](const GradeScale& s) {
        std::vector<std::string> labels;
        for (const auto& e : s.entries()) {
          labels.push_back(e.label);
        }
        return labels;
      });
  m.def("default_scale", &default_scale);
  m.def(
      "validate_scale",
      [](const std::vector<std::pair<std::string, GreyNumber>>& entries) {
        std::vector<ScaleEntry> list;
        for (const auto& [label, interval] : entries) {
          list.push_back({label, interval});
        }
        std::vector<std::string> messages;
        for (auto& v : validate_scale(list)) {
          messages.push_back(std::move(v.message));
        }
        return messages;
      },
      py::arg("entries"), "Violated scale invariants; empty when valid.");

  py::class_<DecisionTable>(m, "DecisionTable")
      .def(py::init(&make_table), py::arg("candidates"), py::arg("parameters"),
           py::arg("rows"))
      .def_property_readonly("candidates", &DecisionTable::candidates)
      .def_property_readonly("parameters", &DecisionTable::parameters)
      .def("cell", [](const DecisionTable& t, std::size_t r, std::size_t c) {
        return from_cell(t.at(r, c));
      });

  m.def("parse_table", &parse_table, py::arg("text"));
  m.def("write_table", &write_table, py::arg("table"));
  m.def("parse_scale", &parse_scale, py::arg("text"));
  m.def("write_scale", &write_scale, py::arg("scale"));

  m.def("choice_values_binary",
        [](const DecisionTable& t) { return scored_list(choice_values_binary(t)); });
  m.def(
      "choice_values_grey",
      [](const DecisionTable& t, const GradeScale& s) {
        return scored_list(choice_values_grey(t, s));
      },
      py::arg("table"), py::arg("scale") = default_scale());
  m.def("choice_values_neutrosophic",
        [](const DecisionTable& t) { return scored_list(choice_values_neutrosophic(t)); });

  auto ranker = [&m](const char* name, auto fn) {
    m.def(
        name,
        [fn](const std::vector<std::pair<std::string, NeutrosophicTriplet>>& scores,
             double epsilon) { return fn(triplet_scores(scores), epsilon); },
        py::arg("scores"), py::arg("epsilon") = kDefaultEpsilon);
  };
  ranker("rank_optimistic", [](const TripletScores& s, double e) { return rank_optimistic(s, e); });
  ranker("rank_conservative",
         [](const TripletScores& s, double e) { return rank_conservative(s, e); });
  ranker("rank_combined", [](const TripletScores& s, double e) { return rank_combined(s, e); });

  py::class_<DecisionReport>(m, "DecisionReport")
      .def_property_readonly("method",
                             [](const DecisionReport& r) { return std::string(to_string(r.method)); })
      .def_property_readonly("criterion",
                             [](const DecisionReport& r) -> py::object {
                               if (!r.criterion) {
                                 return py::none();
                               }
                               return py::str(std::string(to_string(*r.criterion)));
                             })
      .def_readonly("winners", &DecisionReport::winners)
      .def_readonly("flags", &DecisionReport::flags)
      .def_property_readonly("scores",
                             [](const DecisionReport& r) {
                               py::list out;
                               for (const auto& s : r.scores) {
                                 out.append(py::make_tuple(
                                     s.candidate, std::visit(
                                                      [](const auto& v) { return py::cast(v); },
                                                      s.score)));
                               }
                               return out;
                             })
      .def_property_readonly("risk_notes",
                             [](const DecisionReport& r) {
                               py::list out;
                               for (const auto& n : r.risk_notes) {
                                 out.append(py::make_tuple(n.candidate, n.indeterminacy, n.text));
                               }
                               return out;
                             })
      .def("to_text", &render_text)
      .def("to_json", &render_json);

  m.def(
      "decide",
      [](const DecisionTable& table, const std::string& method,
         std::optional<GradeScale> scale, std::optional<std::string> criterion,
         double epsilon) {
        auto parsed_method = parse_method(method);
        if (!parsed_method) {
          throw InvalidOptionsError("unknown method '" + method + "'");
        }
        DecideOptions options;
        options.scale = std::move(scale);
        options.epsilon = epsilon;
        if (criterion) {
          auto parsed = parse_criterion(*criterion);
          if (!parsed) {
            throw InvalidOptionsError("unknown criterion '" + *criterion + "'");
          }
          options.criterion = *parsed;
        }
        return decide(table, *parsed_method, options);
      },
      py::arg("table"), py::arg("method"), py::arg("scale") = py::none(),
      py::arg("criterion") = py::none(), py::arg("epsilon") = kDefaultEpsilon);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line tool in-process; returns (code, stdout, stderr).");
}
