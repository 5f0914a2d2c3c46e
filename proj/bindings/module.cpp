// Python bindings: thin string-based wrappers over the core operations.
// Words, cells, and traces cross the boundary as their text forms; see the
// library headers for the grammar of each.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "braid/cubes.hpp"
#include "braid/errors.hpp"
#include "braid/monoid.hpp"
#include "braid/rewrite.hpp"
#include "braid/term.hpp"

namespace py = pybind11;
using namespace braid;

namespace {

std::vector<int> set_list(const std::set<int>& s) {
  return std::vector<int>(s.begin(), s.end());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "positive braid rewriting and coherence toolkit";

  py::register_exception<Error>(m, "BraidError", PyExc_RuntimeError);
  py::register_exception<ValidationError>(m, "ValidationError",
                                          PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
  py::register_exception<RedexError>(m, "RedexError", PyExc_ValueError);

  m.def(
      "perm",
      [](const std::string& word) {
        return to_text(underlying_permutation(word_from_text(word)));
      },
      py::arg("word"), "one-line permutation of a braid word, e.g. [3,2,1]");

  m.def(
      "is_minimal",
      [](const std::string& word) { return is_minimal(word_from_text(word)); },
      py::arg("word"));

  m.def(
      "starting_set",
      [](const std::string& word) {
        return set_list(starting_set(word_from_text(word)));
      },
      py::arg("word"), "generators that can start the braid");

  m.def(
      "finishing_set",
      [](const std::string& word) {
        return set_list(finishing_set(word_from_text(word)));
      },
      py::arg("word"), "generators that can end the braid");

  m.def(
      "factor",
      [](const std::string& word) {
        auto [tau, omega] = left_weighted_factorization(word_from_text(word));
        return py::make_tuple(to_text(tau), to_text(omega));
      },
      py::arg("word"), "left-weighted factorization (tau, omega)");

  m.def(
      "normal_form",
      [](const std::string& word) {
        std::vector<std::string> out;
        for (const Permutation& p : normal_form(word_from_text(word)).factors)
          out.push_back(to_text(p));
        return out;
      },
      py::arg("word"), "left-weighted factor permutations, one-line forms");

  m.def(
      "monoid_equal",
      [](const std::string& a, const std::string& b) {
        return monoid_equal(word_from_text(a), word_from_text(b));
      },
      py::arg("a"), py::arg("b"));

  m.def(
      "reduce",
      [](const std::string& word, int budget) {
        return to_text(complete_reduce(word_from_text(word), budget).target);
      },
      py::arg("word"), py::arg("budget") = kDefaultBudget,
      "minimal word reached by the certified reduction");

  m.def(
      "reduce_trace",
      [](const std::string& word, int budget) {
        return to_text(complete_reduce(word_from_text(word), budget));
      },
      py::arg("word"), py::arg("budget") = kDefaultBudget,
      "full reduction trace text");

  m.def(
      "verify_trace",
      [](const std::string& text) {
        TraceCheck c = verify_trace_detail(trace_from_text(text));
        return py::make_tuple(c.ok, c.reason);
      },
      py::arg("text"), "(ok, reason) for a reduction trace text");

  m.def(
      "confluence",
      [](const std::string& word, int budget) {
        return to_text(check_confluence(word_from_text(word), budget));
      },
      py::arg("word"), py::arg("budget") = kDefaultBudget,
      "one-step branch rejoining report text");

  m.def(
      "cell_perm",
      [](const std::string& cell) {
        return to_text(pi_functor(cell_from_text(cell)));
      },
      py::arg("cell"), "underlying permutation of a diagram cell");

  m.def(
      "cell_word",
      [](const std::string& cell) {
        return to_text(rho_functor(positivize(cell_from_text(cell))));
      },
      py::arg("cell"), "positive braid word of a diagram cell");

  m.def(
      "coherent",
      [](const std::string& f, const std::string& g,
         int budget) -> py::object {
        auto cert = coherent(cell_from_text(f), cell_from_text(g), budget);
        if (!cert) return py::none();
        return py::make_tuple(to_text(cert->common_target),
                              to_text(cert->trace_f), to_text(cert->trace_g));
      },
      py::arg("f"), py::arg("g"), py::arg("budget") = kDefaultBudget,
      "(common, trace_f, trace_g) when coherent, None when not");

  m.def(
      "cubes",
      [](const std::string& id, int grid, double side, double tol) {
        HomotopyReport rep = verify_homotopy(path_from_text(id), grid, side,
                                             tol);
        return py::make_tuple(rep.all_pass, to_text(rep));
      },
      py::arg("id"), py::arg("grid") = 64, py::arg("side") = 0.0,
      py::arg("tol") = 1e-9,
      "(all_pass, report text) for a cube homotopy id");
}
