#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "webdimer/duality.hpp"
#include "webdimer/fixtures.hpp"
#include "webdimer/invariant_ops.hpp"
#include "webdimer/moves.hpp"
#include "webdimer/skein.hpp"
#include "webdimer/suite.hpp"
#include "webdimer/tagged.hpp"
#include "webdimer/topcell.hpp"

namespace py = pybind11;
using namespace webdimer;

namespace {

Network net(const std::string& json) { return parse_network(json); }

std::string top_cell_json(int k, int n) {
    return serialize_network(unit_network(top_cell_graph(k, n)));
}

py::dict plucker_dict(const std::string& json) {
    PluckerVector p = plucker_vector(net(json));
    py::dict out;
    for (const auto& [I, v] : p.values) {
        std::string key;
        for (int x : I) key += (key.empty() ? "" : ",") + std::to_string(x);
        out[py::str(key)] = v.str();
    }
    return out;
}

py::list report_list(const Report& rep) {
    py::list out;
    for (const auto& c : rep.checks) out.append(py::make_tuple(c.name, c.pass, c.detail));
    return out;
}

}  // namespace

PYBIND11_MODULE(_webdimer, m) {
    m.doc() = "exact dimer boundary measurements and SL_r web invariants";

    m.def("validate_network", [](const std::string& j) { return net(j).validate(); });
    m.def("excedance", [](const std::string& j) { return net(j).g.excedance(); });
    m.def("serialize_roundtrip",
          [](const std::string& j) { return serialize_network(net(j)); });
    m.def("top_cell_network", &top_cell_json, py::arg("k"), py::arg("n"));
    m.def("matching_boundaries", [](const std::string& j) {
        py::list out;
        for (const auto& mm : enumerate_matchings(net(j).g)) out.append(mm.boundary);
        return out;
    });
    m.def("boundary_measurement", [](const std::string& j, const Subset& I) {
        return boundary_measurement(net(j), I).str();
    });
    m.def("plucker", &plucker_dict);
    m.def("check_plucker_relations",
          [](const std::string& j) { return check_plucker_relations(plucker_vector(net(j))); });
    m.def("positroid", [](const std::string& j) {
        py::list out;
        for (const auto& I : positroid(net(j).g)) out.append(I);
        return out;
    });
    m.def("web_measurement",
          [](const std::string& j, int r, const std::vector<int>& lambda) {
              return serialize_invariant(web_measurement(net(j), r, lambda));
          });
    m.def("verify_factorization", [](const std::string& j, int r, const std::vector<int>& lam) {
        return report_list(verify_factorization(net(j), r, lam));
    });
    m.def("spider_move", [](const std::string& j, const std::vector<std::string>& face) {
        MoveResult res = spider_move(net(j), face);
        return py::make_tuple(serialize_network(res.network), res.scalar.str());
    });
    m.def("verify_move_invariance",
          [](const std::string& before, const std::string& after, const std::string& scalar) {
              MoveResult res{net(after), MultiPoly::parse(scalar)};
              return verify_move_invariance(net(before), res).all_pass();
          });
    m.def("dim_invariant_space", [](int r, const std::vector<int>& lam) {
        return dim_invariant_space(r, lam);
    });
    m.def("positroid_dim", [](const std::string& j, int r, const std::vector<int>& lam) {
        return positroid_subspace(net(j).g, r, lam).dimension;
    });
    m.def("square_move_identity", [](int r, int j, int l, int v, int s) {
        return square_move_identity(FragmentScenario{r, j, l, v, s}).all_pass();
    });
    m.def("duality_signed_permutation", [] {
        return check_signed_permutation(duality_matrix(crossingless_matchings(6), sl3_basis_n6()));
    });
    m.def("pinned_example_suite", [] { return report_list(run_pinned_example_suite()); });
}
