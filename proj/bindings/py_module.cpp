// Python bindings: thin string-in, string-out wrappers over the library.
// Groups are selected the same way the CLI selects them — either a preset
// name ("S3", "torus_t", ...) or a JSON descriptor ('{"cyclic": 6}').

#include "cgl/codegree.hpp"
#include "cgl/constructors.hpp"
#include "cgl/descriptor.hpp"
#include "cgl/errors.hpp"
#include "cgl/table_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <set>
#include <string>
#include <vector>

namespace py = pybind11;

namespace {

cgl::GroupDescriptor resolve(const std::string& spec) {
    if (!spec.empty() && spec.front() == '{') return cgl::GroupDescriptor::parse(spec);
    return cgl::GroupDescriptor::preset(spec);
}

struct Computed {
    cgl::GroupDescriptor d;
    cgl::CharacterTable tbl;
    std::vector<cgl::CodegreeRecord> recs;
};

Computed compute(const std::string& spec, int threads) {
    Computed c{resolve(spec), {}, {}};
    c.tbl = cgl::character_table(cgl::build_from_descriptor(c.d), threads);
    c.recs = cgl::codegrees(c.tbl);
    return c;
}

std::string build_summary(const std::string& spec) {
    cgl::GroupDescriptor d = resolve(spec);
    return cgl::dump_document(cgl::group_summary_json(d, cgl::build_from_descriptor(d)));
}

std::string table_json(const std::string& spec, int threads) {
    Computed c = compute(spec, threads);
    return cgl::table_file_text(c.d, c.tbl);
}

std::vector<uint64_t> codegree_set(const std::string& spec) {
    Computed c = compute(spec, 1);
    std::set<uint64_t> s = cgl::codegree_set(c.recs);
    return {s.begin(), s.end()};
}

std::string moreto_report(const std::string& spec) {
    Computed c = compute(spec, 1);
    return cgl::dump_document(cgl::moreto_json(cgl::moreto_check(c.tbl, c.recs)));
}

bool moreto_negative(const std::string& spec) {
    Computed c = compute(spec, 1);
    return cgl::moreto_check(c.tbl, c.recs).negative_answer;
}

bool qian_holds(const std::string& spec) {
    Computed c = compute(spec, 1);
    return cgl::qian_property_test(c.tbl, c.recs).holds;
}

} // namespace

PYBIND11_MODULE(codegree_lab, m) {
    m.doc() = "character codegrees of finite solvable groups";

    py::register_exception<cgl::InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<cgl::ResourceError>(m, "ResourceError", PyExc_RuntimeError);
    py::register_exception<cgl::InternalError>(m, "InternalError", PyExc_RuntimeError);

    m.def("build_summary", &build_summary, py::arg("group"),
          "structural summary (order, classes, center, Fitting subgroup) as JSON text");
    m.def("table_json", &table_json, py::arg("group"), py::arg("threads") = 1,
          "full character-table document as JSON text");
    m.def("codegree_set", &codegree_set, py::arg("group"),
          "sorted distinct character codegrees");
    m.def("moreto_report", &moreto_report, py::arg("group"),
          "per-character prime-support verdicts as JSON text");
    m.def("moreto_negative", &moreto_negative, py::arg("group"),
          "True when some character's codegree primes are covered by no element order");
    m.def("qian_holds", &qian_holds, py::arg("group"),
          "True when every element order divides some codegree");
}
