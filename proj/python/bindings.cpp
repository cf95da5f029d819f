#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hallinv/braids.hpp"
#include "hallinv/census.hpp"
#include "hallinv/charvar.hpp"
#include "hallinv/cli.hpp"
#include "hallinv/error.hpp"
#include "hallinv/fox.hpp"
#include "hallinv/hall.hpp"
#include "hallinv/oracle.hpp"

namespace py = pybind11;
using namespace hallinv;

namespace {

py::int_ to_py(const BigInt& v)
{
    return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str().c_str(), nullptr, 10)));
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_RuntimeError);
    py::register_exception<InvariantError>(m, "InvariantError", PyExc_AssertionError);

    py::class_<Presentation>(m, "Presentation")
        .def_readonly("generators", &Presentation::generators)
        .def_property_readonly("relators",
                               [](const Presentation& p) {
                                   std::vector<std::string> out;
                                   for (const auto& r : p.relators) out.push_back(render_word(r, p.generators));
                                   return out;
                               })
        .def("__str__", &render_presentation)
        .def("__eq__", [](const Presentation& a, const Presentation& b) { return a == b; });

    m.def("parse_presentation", &parse_presentation, py::arg("text"));
    m.def("fixture", [](const std::string& name) { return fixture(name); }, py::arg("name"));

    m.def("abelianization", [](const Presentation& p) {
        AbelStructure a = abelianization(p);
        return py::make_tuple(a.free_rank, a.torsion);
    });
    m.def(
        "beta",
        [](const Presentation& p, long prime, long q, unsigned threads) {
            BetaOptions o;
            o.threads = threads;
            BettiDistribution b = beta_distribution(p, prime, q, o);
            py::dict d;
            for (const auto& [k, v] : b.counts) d[py::int_(k)] = to_py(v);
            return d;
        },
        py::arg("presentation"), py::arg("p"), py::arg("q"), py::arg("threads") = 1);
    m.def("delta_abelian", [](const Presentation& p, const std::vector<long>& orders) {
        return to_py(delta_abelian(abelianization(p), AbelianGroupSpec::from_cyclic(orders)));
    });
    m.def("delta_mpqs", [](const Presentation& p, long prime, long q) { return to_py(delta_mpqs(p, prime, q)); });
    m.def(
        "hom_count",
        [](const Presentation& p, const std::string& target, bool epi) {
            FiniteGroupTable t;
            if (target == "s3")
                t = symmetric_group(3);
            else if (target == "a4")
                t = alternating_group(4);
            else
                throw InputError("hom_count target must be 's3' or 'a4'");
            return to_py(hom_count(p, t, epi ? HomMode::Epi : HomMode::All));
        },
        py::arg("presentation"), py::arg("target"), py::arg("epi") = false);
    m.def("b1_cover_cyclic", [](const Presentation& p, const std::vector<long>& images, long n, long q) {
        return b1_cover_cyclic(p, images, n, q);
    });
    m.def("a2_a3", [](const Presentation& p) {
        auto [a2, a3] = a2_a3(p);
        return py::make_tuple(to_py(a2), to_py(a3));
    });
    m.def("run", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
