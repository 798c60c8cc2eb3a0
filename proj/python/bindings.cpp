#include "cob1/cob2.hpp"
#include "cob1/common.hpp"
#include "cob1/homology.hpp"
#include "cob1/hurwitz.hpp"
#include "cob1/io.hpp"
#include "cob1/ranks.hpp"
#include "cob1/search.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;

namespace {

using cob1::Mode;

py::int_ to_py_int(const cob1::fgab::Int& value)
{
    PyObject* obj = PyLong_FromString(value.str().c_str(), nullptr, 10);
    if (!obj)
        throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

Mode mode_of(const std::string& s)
{
    return cob1::parse_mode(s);
}

cob1::BranchedCoveringSet parse(const std::string& document)
{
    return cob1::io::parse_document(document);
}

cob1::cob2::ClassVector vector_of(int k, const std::string& mode, const std::vector<std::int64_t>& c)
{
    return cob1::cob2::ClassVector{k, mode_of(mode), c};
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Cobordism calculator for k-fold simple branched coverings of surfaces. "
              "Covering data travel as JSON document strings; see the project README "
              "for the schema.";

    m.def("partition_count",
          [](int i) { return to_py_int(cob1::ranks::partition_count(i)); },
          py::arg("i"), "Number of partitions of i.");

    m.def("rank",
          [](int n, int k, const std::string& mode) {
              return to_py_int(cob1::ranks::rank_cob({n, k, mode_of(mode)}).total);
          },
          py::arg("n"), py::arg("k"), py::arg("mode"),
          "Rank of the cobordism group of k-fold data in dimension n.");

    m.def("rank_breakdown",
          [](int n, int k, const std::string& mode) {
              auto b = cob1::ranks::rank_cob({n, k, mode_of(mode)});
              py::dict out;
              out["total"] = to_py_int(b.total);
              out["omega_n"] = to_py_int(b.omega_n);
              out["summand"] = to_py_int(b.summand);
              out["multiplicity"] = b.multiplicity;
              return out;
          },
          py::arg("n"), py::arg("k"), py::arg("mode"));

    m.def("group",
          [](int k, const std::string& mode) {
              return cob1::homology::h2_classifying(k, mode_of(mode)).to_string();
          },
          py::arg("k"), py::arg("mode"),
          "The 2-dimensional cobordism group, printed in invariant-factor form.");

    m.def("group_orders",
          [](int k, const std::string& mode) {
              py::list out;
              for (const auto& d : cob1::homology::h2_classifying(k, mode_of(mode)).orders())
                  out.append(to_py_int(d));
              return out;
          },
          py::arg("k"), py::arg("mode"),
          "Invariant factors (0 = an infinite cyclic factor).");

    m.def("validate",
          [](const std::string& document) {
              try {
                  return cob1::validate(parse(document));
              } catch (const cob1::InvalidDataError& e) {
                  return e.violations();
              }
          },
          py::arg("document"), "All violations of a document; empty list = valid.");

    m.def("invariants",
          [](const std::string& document) { return cob1::cob2::invariant(parse(document)).entries; },
          py::arg("document"), "The class vector c_2..c_k of a valid document.");

    m.def("euler",
          [](const std::string& document) {
              py::list out;
              auto set = parse(document);
              cob1::require_valid(set);
              for (const auto& component : set.components)
                  for (const auto& piece : cob1::euler_characteristics(component)) {
                      py::dict row;
                      row["orbit"] = piece.orbit;
                      row["chi"] = piece.euler_characteristic;
                      row["genus"] = piece.genus;
                      out.append(std::move(row));
                  }
              return out;
          },
          py::arg("document"), "Per-component Euler characteristic and genus.");

    m.def("cobordant",
          [](const std::string& doc_a, const std::string& doc_b) {
              return cob1::cob2::cobordant(parse(doc_a), parse(doc_b));
          },
          py::arg("document_a"), py::arg("document_b"));

    m.def("in_image",
          [](int k, const std::string& mode, const std::vector<std::int64_t>& c) {
              return cob1::cob2::in_image(vector_of(k, mode, c));
          },
          py::arg("k"), py::arg("mode"), py::arg("c"));

    m.def("basis_row",
          [](int i, int k, const std::string& mode) {
              return cob1::cob2::basis_row(i, k, mode_of(mode)).entries;
          },
          py::arg("i"), py::arg("k"), py::arg("mode"));

    m.def("decompose",
          [](int k, const std::string& mode, const std::vector<std::int64_t>& c) {
              return cob1::cob2::decompose(vector_of(k, mode, c)).coeffs;
          },
          py::arg("k"), py::arg("mode"), py::arg("c"),
          "Basis coefficients (lambda_2.. in 'so' mode, lambda_3.. in 'o' mode).");

    m.def("recompose",
          [](int k, const std::string& mode, const std::vector<std::int64_t>& coeffs) {
              return cob1::cob2::recompose({k, mode_of(mode), coeffs}).entries;
          },
          py::arg("k"), py::arg("mode"), py::arg("coeffs"));

    m.def("generator",
          [](int i, int k, const std::string& mode) {
              return cob1::io::serialize(cob1::cob2::generator(i, k, mode_of(mode)), false);
          },
          py::arg("i"), py::arg("k"), py::arg("mode"),
          "Canonical sphere witness of the i-th basis class, as a document string.");

    m.def("realize",
          [](int k, const std::string& mode, const std::vector<std::int64_t>& c) {
              return cob1::io::serialize(cob1::cob2::realize(vector_of(k, mode, c)), false);
          },
          py::arg("k"), py::arg("mode"), py::arg("c"));

    m.def("search_minimal",
          [](int i, int k, const std::string& mode, std::uint64_t budget) -> std::optional<std::string> {
              cob1::cob2::MinimalSearchOptions opts;
              opts.budget = budget;
              auto witness = cob1::cob2::search_minimal(i, k, mode_of(mode), opts);
              if (!witness)
                  return std::nullopt;
              return cob1::io::serialize(*witness, false);
          },
          py::arg("i"), py::arg("k"), py::arg("mode"), py::arg("budget") = 10'000'000ULL,
          "Minimal-branch-point witness, or None when the search budget runs out.");

    m.def("disjoint_union",
          [](const std::string& doc_a, const std::string& doc_b) {
              return cob1::io::serialize(cob1::disjoint_union(parse(doc_a), parse(doc_b)), false);
          },
          py::arg("document_a"), py::arg("document_b"));

    m.def("negate",
          [](const std::string& document) {
              return cob1::io::serialize(cob1::negate(parse(document)), false);
          },
          py::arg("document"));

    m.def("enumerate_count",
          [](int k, int points, const std::vector<int>& types, int genus, bool transitive,
             bool reduce) {
              cob1::search::EnumSpec spec;
              spec.degree = k;
              spec.points = points;
              spec.types = types;
              spec.target_genus = genus;
              spec.transitive_only = transitive;
              spec.reduce_symmetry = reduce;
              return cob1::search::count(spec);
          },
          py::arg("k"), py::arg("points"), py::arg("types") = std::vector<int>{},
          py::arg("genus") = 0, py::arg("transitive") = false, py::arg("reduce") = false);

    m.def("verify_nonexistence",
          [](int k) {
              auto report = cob1::search::verify_nonexistence(k);
              py::dict single, equal;
              py::list mixed;
              for (const auto& [type, n] : report.single_point)
                  single[py::int_(type)] = n;
              for (const auto& [pair, n] : report.mixed_pairs) {
                  py::dict row;
                  row["types"] = py::make_tuple(pair.first, pair.second);
                  row["count"] = n;
                  mixed.append(std::move(row));
              }
              for (const auto& [type, n] : report.equal_pairs)
                  equal[py::int_(type)] = n;
              py::dict out;
              out["single_point"] = std::move(single);
              out["mixed_pairs"] = std::move(mixed);
              out["equal_pairs"] = std::move(equal);
              out["consistent"] = report.consistent();
              return out;
          },
          py::arg("k"));

    m.def("verify_parity",
          [](int k, int r_max) {
              auto report = cob1::search::verify_parity(k, r_max);
              py::dict out;
              out["instances"] = report.instances;
              out["violations"] = report.violations;
              return out;
          },
          py::arg("k"), py::arg("r_max") = 3);

    m.def("random_valid_data",
          [](std::uint64_t seed, int k, int g, int r, const std::string& mode) {
              auto data = cob1::search::random_valid_data(seed, k, g, r, mode_of(mode));
              return cob1::io::serialize(cob1::BranchedCoveringSet{k, data.mode, {data}}, false);
          },
          py::arg("seed"), py::arg("k"), py::arg("g"), py::arg("r"), py::arg("mode"));
}
