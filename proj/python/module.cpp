#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qkgr/errors.hpp"
#include "qkgr/invariants.hpp"
#include "qkgr/io.hpp"

namespace py = pybind11;

namespace {

qkgr::Partition to_partition(const std::vector<int>& rows) {
    return qkgr::Partition(rows);
}

// Exposes one ring instance per (m, n); the underlying caches are shared with
// every other consumer of the same context.
class RingHandle {
public:
    RingHandle(int m, int n) : ring_(qkgr::ring_for(qkgr::GrassCtx(m, n))) {}

    std::string multiply_text(const std::vector<int>& lhs,
                              const std::vector<int>& rhs) {
        return qkgr::render_text(ring_.star(to_partition(lhs),
                                            to_partition(rhs)));
    }

    // [(nu_rows, d, coeff)] with exact integer coefficients.
    std::vector<std::tuple<std::vector<int>, int, long long>>
    star(const std::vector<int>& lhs, const std::vector<int>& rhs) {
        const qkgr::QKElement& product =
            ring_.star(to_partition(lhs), to_partition(rhs));
        std::vector<std::tuple<std::vector<int>, int, long long>> out;
        for (const auto& [nu, poly] : product.terms()) {
            std::vector<int> rows(nu.rows().begin(), nu.rows().end());
            for (const auto& [d, c] : poly.coeffs())
                out.emplace_back(rows, d, qkgr::to_ll(c));
        }
        return out;
    }

    long long structure_constant(const std::vector<int>& lambda,
                                 const std::vector<int>& mu,
                                 const std::vector<int>& nu, int d) {
        return qkgr::to_ll(ring_.structure_constant(
            to_partition(lambda), to_partition(mu), to_partition(nu), d));
    }

    long long gw_dual(const std::vector<int>& lambda,
                      const std::vector<int>& mu, const std::vector<int>& nu,
                      int d) {
        return qkgr::to_ll(qkgr::gw_dual(ring_, to_partition(lambda),
                                         to_partition(mu), to_partition(nu),
                                         d));
    }

    long long gw_sheaf(const std::vector<int>& lambda,
                       const std::vector<int>& mu, const std::vector<int>& nu,
                       int d) {
        return qkgr::to_ll(qkgr::gw_sheaf(ring_, to_partition(lambda),
                                          to_partition(mu), to_partition(nu),
                                          d));
    }

    long long special_gw(const std::vector<int>& lambda,
                         const std::vector<int>& mu,
                         const std::vector<int>& nu, int d) {
        return qkgr::to_ll(qkgr::special_gw(ring_.ctx(), to_partition(lambda),
                                            to_partition(mu),
                                            to_partition(nu), d));
    }

    // {d: coefficient} of chi_q(t_q * O_lambda * O_mu * O_nu).
    std::map<int, long long> sym3(const std::vector<int>& lambda,
                                  const std::vector<int>& mu,
                                  const std::vector<int>& nu) {
        qkgr::QPoly poly = qkgr::sym3(ring_, to_partition(lambda),
                                      to_partition(mu), to_partition(nu));
        std::map<int, long long> out;
        for (const auto& [d, c] : poly.coeffs()) out[d] = qkgr::to_ll(c);
        return out;
    }

    std::string giambelli_text(const std::vector<int>& lambda) {
        return qkgr::render_giambelli(ring_.giambelli(), to_partition(lambda));
    }

private:
    qkgr::QKRing& ring_;
};

} // namespace

PYBIND11_MODULE(qkgr, m) {
    m.doc() = "Exact quantum K-theory of Grassmannians: Schubert products, "
              "structure constants, and Gromov-Witten invariants";

    py::register_exception<qkgr::invalid_argument>(m, "InvalidArgument",
                                                   PyExc_ValueError);
    py::register_exception<qkgr::internal_error>(m, "InternalError",
                                                 PyExc_RuntimeError);

    py::class_<RingHandle>(m, "Ring")
        .def(py::init<int, int>(), py::arg("m"), py::arg("n"))
        .def("multiply_text", &RingHandle::multiply_text, py::arg("lhs"),
             py::arg("rhs"),
             "Rendered product O_lhs * O_rhs, terms by ascending q-degree")
        .def("star", &RingHandle::star, py::arg("lhs"), py::arg("rhs"),
             "Product as a list of (nu, d, coeff) triples")
        .def("structure_constant", &RingHandle::structure_constant,
             py::arg("lam"), py::arg("mu"), py::arg("nu"), py::arg("d"))
        .def("gw_dual", &RingHandle::gw_dual, py::arg("lam"), py::arg("mu"),
             py::arg("nu"), py::arg("d"))
        .def("gw_sheaf", &RingHandle::gw_sheaf, py::arg("lam"), py::arg("mu"),
             py::arg("nu"), py::arg("d"))
        .def("special_gw", &RingHandle::special_gw, py::arg("lam"),
             py::arg("mu"), py::arg("nu"), py::arg("d"))
        .def("sym3", &RingHandle::sym3, py::arg("lam"), py::arg("mu"),
             py::arg("nu"),
             "chi_q of the t_q-twisted triple product, as {degree: coeff}")
        .def("giambelli_text", &RingHandle::giambelli_text, py::arg("lam"));
}
