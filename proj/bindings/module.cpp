#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "json.hpp"

#include "cylabacus/abacus.hpp"
#include "cylabacus/crystal.hpp"
#include "cylabacus/cylindric.hpp"
#include "cylabacus/enumerate_verify.hpp"
#include "cylabacus/level_rank.hpp"
#include "cylabacus/notation.hpp"
#include "cylabacus/periodicity.hpp"

namespace py = pybind11;
using namespace cylabacus;

namespace {

ChargedMultipartition make_instance(const std::string& mp, const std::string& charge) {
  return {parse_multipartition(mp), parse_charge(charge)};
}

std::pair<std::string, std::string> pack(const ChargedMultipartition& w) {
  return {format_multipartition(w.components), format_charge(w.charge)};
}

EnumerationDomain make_domain(int level, int rank, int max_size, int charge_min,
                              int charge_max, bool in_window) {
  EnumerationDomain d;
  d.level = level;
  d.rank = rank;
  d.max_size = max_size;
  d.charge_min = charge_min;
  d.charge_max = charge_max;
  d.in_window = in_window;
  return d;
}

py::dict pack_report(const VerificationReport& r) {
  py::dict out;
  out["pass"] = r.pass();
  out["instances"] = r.instances;
  out["counterexamples"] = r.counterexamples;
  out["millis"] = r.millis;
  return out;
}

}  // namespace

PYBIND11_MODULE(_cylabacus, m) {
  m.doc() = "charged multipartitions, abaci, yokes, periods and sl_e crystals";

  m.def(
      "dual",
      [](const std::string& mp, const std::string& charge, int rank) {
        return pack(dualize(make_instance(mp, charge), rank));
      },
      py::arg("mp"), py::arg("charge"), py::arg("rank"),
      "level-rank transpose; returns (mp, charge)");
  m.def(
      "dual_inverse",
      [](const std::string& mp, const std::string& charge, int level) {
        return pack(dualize_inverse(make_instance(mp, charge), level));
      },
      py::arg("mp"), py::arg("charge"), py::arg("level"));

  m.def(
      "is_cylindric",
      [](const std::string& mp, const std::string& charge, int rank) {
        return is_cylindric_def(make_instance(mp, charge), rank);
      },
      py::arg("mp"), py::arg("charge"), py::arg("rank"));
  m.def(
      "is_flotw",
      [](const std::string& mp, const std::string& charge, int rank) {
        return is_flotw(make_instance(mp, charge), rank);
      },
      py::arg("mp"), py::arg("charge"), py::arg("rank"));
  m.def(
      "is_totally_periodic",
      [](const std::string& mp, const std::string& charge, int rank) {
        return is_totally_periodic(abacus_from(make_instance(mp, charge)), rank);
      },
      py::arg("mp"), py::arg("charge"), py::arg("rank"));
  m.def(
      "is_source",
      [](const std::string& mp, const std::string& charge, int rank) {
        return is_source(make_instance(mp, charge), rank);
      },
      py::arg("mp"), py::arg("charge"), py::arg("rank"));

  m.def(
      "periods",
      [](const std::string& mp, const std::string& charge, int rank, int count) {
        std::vector<std::vector<std::pair<int, int>>> out;
        for (const Period& p : periods(abacus_from(make_instance(mp, charge)), rank, count)) {
          out.push_back(p.beads);
        }
        return out;
      },
      py::arg("mp"), py::arg("charge"), py::arg("rank"), py::arg("count") = 4,
      "greedy periods as lists of (position, row) beads");

  m.def(
      "abacus_json",
      [](const std::string& mp, const std::string& charge) {
        return nlohmann::json(abacus_from(make_instance(mp, charge))).dump();
      },
      py::arg("mp"), py::arg("charge"));
  m.def(
      "from_abacus_json",
      [](const std::string& text) {
        return pack(multipartition_of(nlohmann::json::parse(text).get<Abacus>()));
      },
      py::arg("abacus_json"));

  m.def(
      "enumerate_multipartitions",
      [](int level, int max_size) {
        std::vector<std::string> out;
        for (const Multipartition& mp : enumerate_multipartitions(level, max_size)) {
          out.push_back(format_multipartition(mp));
        }
        return out;
      },
      py::arg("level"), py::arg("max_size"));
  m.def("count_multipartitions", &count_multipartitions, py::arg("level"),
        py::arg("max_size"));

  m.def(
      "component_json",
      [](const std::string& mp, const std::string& charge, int rank, int depth) {
        return nlohmann::json(crystal_component(make_instance(mp, charge), rank, depth)).dump();
      },
      py::arg("mp"), py::arg("charge"), py::arg("rank"), py::arg("depth") = 2);

  m.def(
      "verify_cylindric_equivalence",
      [](int level, int rank, int max_size, int charge_min, int charge_max,
         bool in_window, int jobs) {
        return pack_report(verify_cylindric_equivalence(
            make_domain(level, rank, max_size, charge_min, charge_max, in_window), jobs));
      },
      py::arg("level"), py::arg("rank"), py::arg("max_size"),
      py::arg("charge_min") = 0, py::arg("charge_max") = 0,
      py::arg("in_window") = false, py::arg("jobs") = 1);
  m.def(
      "verify_periodicity_source",
      [](int level, int rank, int max_size, int charge_min, int charge_max,
         bool in_window, int jobs) {
        return pack_report(verify_periodicity_source(
            make_domain(level, rank, max_size, charge_min, charge_max, in_window), jobs));
      },
      py::arg("level"), py::arg("rank"), py::arg("max_size"),
      py::arg("charge_min") = 0, py::arg("charge_max") = 0,
      py::arg("in_window") = false, py::arg("jobs") = 1);
  m.def(
      "verify_duality_transport",
      [](int level, int rank, int max_size, int charge_min, int charge_max,
         bool in_window, int jobs) {
        return pack_report(verify_duality_transport(
            make_domain(level, rank, max_size, charge_min, charge_max, in_window), jobs));
      },
      py::arg("level"), py::arg("rank"), py::arg("max_size"),
      py::arg("charge_min") = 0, py::arg("charge_max") = 0,
      py::arg("in_window") = false, py::arg("jobs") = 1);

  py::register_exception<ParseError>(m, "NotationError", PyExc_ValueError);
  py::register_exception<GuardError>(m, "GuardError", PyExc_RuntimeError);
}
