#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fluctab/bk.hpp"
#include "fluctab/crystal.hpp"
#include "fluctab/dihedral.hpp"
#include "fluctab/enumerate.hpp"
#include "fluctab/grid.hpp"
#include "fluctab/growth.hpp"
#include "fluctab/jdt.hpp"
#include "fluctab/selftest.hpp"
#include "fluctab/serialize.hpp"

namespace py = pybind11;
using namespace fluctab;

namespace {

Word word_from_lists(const std::vector<std::vector<int>>& letters) {
  Word w;
  for (const auto& l : letters) w.push_back(Letter::make(l));
  return w;
}

std::vector<std::vector<int>> word_to_lists(const Word& w) {
  std::vector<std::vector<int>> out;
  for (const Letter& l : w) out.push_back(l.elems());
  return out;
}

std::vector<std::vector<std::vector<int>>> pm_to_lists(
    const PromotionMatrix& pm) {
  std::vector<std::vector<std::vector<int>>> out;
  for (const auto& row : pm.entries) {
    std::vector<std::vector<int>> r;
    for (const Interval& e : row)
      r.push_back(e.empty() ? std::vector<int>{} : std::vector<int>{e.lo, e.hi});
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_fluctab, m) {
  m.doc() = "fluctuating tableaux: promotion, evacuation, Bender-Knuth, "
            "jeu de taquin, promotion matrices, type-A crystals";

  py::register_exception<Error>(m, "FluctabError");

  py::class_<Tableau>(m, "Tableau")
      .def(py::init([](int rows, const std::vector<std::vector<int>>& word,
                       const Part& initial) {
             return Tableau::build(rows, initial, word_from_lists(word));
           }),
           py::arg("rows"), py::arg("word"), py::arg("initial") = Part{})
      .def_property_readonly("rows", &Tableau::rows)
      .def_property_readonly("length", &Tableau::length)
      .def_property_readonly("initial_shape", &Tableau::initial_shape)
      .def_property_readonly("final_shape", &Tableau::final_shape)
      .def_property_readonly(
          "shapes", [](const Tableau& t) { return t.shapes(); })
      .def_property_readonly(
          "word", [](const Tableau& t) { return word_to_lists(t.word()); })
      .def_property_readonly("type", &Tableau::type)
      .def_property_readonly("total_size", &Tableau::total_size)
      .def_property_readonly("rectangular", &Tableau::is_rectangular)
      .def("__eq__", [](const Tableau& a, const Tableau& b) { return a == b; })
      .def("__repr__", [](const Tableau& t) {
        return "Tableau(r=" + std::to_string(t.rows()) + ", word=\"" +
               word_to_text(t.word()) + "\")";
      });

  m.def("from_text", [](int rows, const std::string& text, const Part& initial) {
    return Tableau::build(rows, initial, word_from_text(text));
  }, py::arg("rows"), py::arg("text"), py::arg("initial") = Part{});
  m.def("to_text", [](const Tableau& t) { return word_to_text(t.word()); });
  m.def("from_json", &tableau_from_json);
  m.def("to_json", &tableau_to_json);

  m.def("promote", &promote);
  m.def("inverse_promote", &inverse_promote);
  m.def("promote_power", &promote_power);
  m.def("evacuate", &evacuate);
  m.def("devacuate", &devacuate);
  m.def("bender_knuth", &bender_knuth);
  m.def("bk_promote", &bk_promote);
  m.def("promote_via_jdt", &promote_via_jdt);
  m.def("evacuate_via_jdt", &evacuate_via_jdt);
  m.def("devacuate_via_jdt", &devacuate_via_jdt);
  m.def("promote_via_crystal",
        [](const Tableau& t) { return promote_via_crystal(t); });
  m.def("oscillize", [](const Tableau& t) { return oscillize(t); });
  m.def("toggle", &toggle);
  m.def("extremal_tableau", &extremal_tableau);
  m.def("weight_class", &weight_class);

  m.def("tau", &tau);
  m.def("varpi", &varpi);
  m.def("epsilon", &epsilon);

  m.def("promotion_matrix", [](const Tableau& t) {
    PromotionMatrix pm = promotion_matrix(t);
    py::dict d;
    d["t"] = pm.t;
    d["blocks"] = pm.block_sizes;
    d["entries"] = pm_to_lists(pm);
    return d;
  });
  m.def("reduced_matrices",
        [](const Tableau& t) { return reduced_matrices(t); });
  m.def("reduced_matrices_via_crystal", &reduced_matrices_via_crystal);
  m.def("promotion_permutations", [](const Tableau& t) {
    std::vector<std::vector<int>> out;
    for (const auto& f : promotion_functions(t)) out.push_back(f.map);
    return out;
  });
  m.def("antiexcedances", [](const std::vector<int>& one_line) {
    PromotionFunction f;
    f.map = one_line;
    return antiexcedance_set(f);
  });
  m.def("reconstruct_from_permutations",
        [](int rows, const std::vector<int>& type,
           const std::vector<std::vector<int>>& perms) {
          std::vector<PromotionFunction> fs;
          int level = 1;
          for (const auto& p : perms) {
            PromotionFunction f;
            f.level = level++;
            f.map = p;
            fs.push_back(std::move(f));
          }
          return reconstruct_from_permutations(rows, type, fs);
        });

  m.def("raise_to_highest", [](int rows,
                               const std::vector<std::vector<int>>& word) {
    auto [w, log] = raise_to_highest(word_from_lists(word), rows);
    std::vector<std::pair<int, int>> steps;
    for (const RaisingStep& s : log) steps.emplace_back(s.level, s.pos);
    return py::make_tuple(word_to_lists(w), steps);
  });
  m.def("is_highest_weight",
        [](int rows, const std::vector<std::vector<int>>& word) {
          return is_highest_weight(word_from_lists(word), rows);
        });

  m.def("enumerate_tableaux", [](int rows, const std::vector<int>& type) {
    std::vector<Tableau> out;
    EnumSpec spec;
    spec.rows = rows;
    spec.type = type;
    enumerate_ft(spec, [&](const Tableau& t) {
      out.push_back(t);
      return true;
    });
    return out;
  });
  m.def("count_hw_oracle", &count_hw_oracle);

  m.def("orbit", [](const Tableau& t, const std::string& op) {
    return orbit(t, op == "E" ? OrbitOp::evacuation : OrbitOp::promotion);
  }, py::arg("t"), py::arg("op") = "P");
  m.def("render_dihedral", [](const Tableau& t, const std::string& format) {
    return render_dihedral(
        t, format == "dot" ? RenderFormat::dot : RenderFormat::svg);
  }, py::arg("t"), py::arg("format") = "svg");

  m.def("selftest", [](int max_rows, int tmax, int crystal_tmax, int threads) {
    SelftestOptions o{max_rows, tmax, crystal_tmax, threads};
    std::vector<std::tuple<std::string, bool, std::uint64_t, double>> out;
    for (const CheckResult& r : run_selftest(o))
      out.emplace_back(r.name, r.pass, r.cases, r.seconds);
    return out;
  }, py::arg("max_rows") = 3, py::arg("tmax") = 6, py::arg("crystal_tmax") = 5,
     py::arg("threads") = 0);
}
