#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "edr/cli.hpp"
#include "edr/completion.hpp"
#include "edr/matred.hpp"
#include "edr/registry.hpp"
#include "edr/stability.hpp"

namespace py = pybind11;
using namespace edr;

namespace {

std::vector<Element> elements(const Ring& r, const std::string& json) {
  const Json doc = parse_json(json);
  if (!doc.is_array()) throw ParseError("expected an array of elements");
  std::vector<Element> out;
  for (const auto& e : doc.items()) out.push_back(element_from_json(r, e));
  return out;
}

Element element(const Ring& r, const std::string& json) { return element_from_json(r, parse_json(json)); }

std::string reduce(const std::string& ring, const std::string& rows, bool verify, bool two_by_two) {
  const Matrix A = matrix_from_json(parse_ring(ring), parse_json(rows));
  const ReductionResult res = two_by_two ? reduce_2x2(A) : diagonal_reduce(A);
  if (verify) {
    const auto report = verify_reduction(A, res);
    if (!report) throw InternalError("verification failed: " + report.failure);
  }
  return dump_json(reduction_to_json(res, verify));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact diagonal reduction, row completion and stability checks";

  auto base = py::register_exception<Error>(m, "EdrError");
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<Unsupported>(m, "UnsupportedError", base.ptr());
  py::register_exception<InternalError>(m, "InternalError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  m.def("ring_expression", [](const std::string& spec) { return parse_ring(spec).expression(); });
  m.def("shipped_rings", &shipped_ring_examples);
  m.def("snf", [](const std::string& ring, const std::string& rows, bool verify) {
    return reduce(ring, rows, verify, false);
  });
  m.def("reduce2x2", [](const std::string& ring, const std::string& rows, bool verify) {
    return reduce(ring, rows, verify, true);
  });
  m.def("complete", [](const std::string& ring, const std::string& row, std::optional<std::string> d) {
    const Ring r = parse_ring(ring);
    const auto a = elements(r, row);
    const CompletionResult res = d ? complete_row(a, element(r, *d)) : complete_unimodular(a);
    return dump_json(completion_to_json(res, true));
  });
  m.def("check", [](const std::string& ring, const std::string& property, std::optional<std::uint64_t> bound) {
    return dump_json(verdict_to_json(check_property(parse_ring(ring), parse_property(property), bound)));
  });
  m.def("bezout", [](const std::string& ring, const std::string& a, const std::string& b) {
    const Ring r = parse_ring(ring);
    const auto c = bezout(element(r, a), element(r, b));
    return dump_json(Json::object({{"d", element_to_json(c.d)},
                                   {"x", element_to_json(c.x)},
                                   {"y", element_to_json(c.y)},
                                   {"a0", element_to_json(c.a0)},
                                   {"b0", element_to_json(c.b0)}}));
  });
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
