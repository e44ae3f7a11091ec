// Python bindings for the Schur multiple zeta toolkit. Shapes, tableaux and
// bindings use the same JSON-style encodings as the command-line tool, passed
// as plain Python lists/dicts; exact values come back as fractions.Fraction.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "schurzeta/identities.hpp"
#include "schurzeta/json_io.hpp"
#include "schurzeta/qsym.hpp"
#include "schurzeta/tableau.hpp"
#include "schurzeta/zeta.hpp"

namespace py = pybind11;
namespace sz = schurzeta;
using sz::Json;

namespace {

Json py_to_json(const py::handle& obj) {
    if (obj.is_none()) return nullptr;
    if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
    if (py::isinstance<py::int_>(obj)) return obj.cast<long long>();
    if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
    if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
    if (py::isinstance<py::tuple>(obj) || py::isinstance<py::list>(obj)) {
        Json arr = Json::array();
        for (const auto& item : obj) arr.push_back(py_to_json(item));
        return arr;
    }
    if (py::isinstance<py::dict>(obj)) {
        Json out = Json::object();
        for (const auto& item : obj.cast<py::dict>())
            out[py::str(item.first).cast<std::string>()] = py_to_json(item.second);
        return out;
    }
    throw py::type_error("cannot encode object of type " +
                         py::str(py::type::of(obj)).cast<std::string>());
}

py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null: return py::none();
        case Json::value_t::boolean: return py::bool_(j.get<bool>());
        case Json::value_t::number_integer: return py::int_(j.get<long long>());
        case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case Json::value_t::number_float: return py::float_(j.get<double>());
        case Json::value_t::string: return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case Json::value_t::object: {
            py::dict out;
            for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
            return out;
        }
        default: throw py::value_error("unsupported JSON payload");
    }
}

py::object scalar_to_py(const sz::Scalar& s) {
    if (s.is_exact()) {
        const auto fraction = py::module_::import("fractions").attr("Fraction");
        return fraction(sz::rational_str(s.rational()));
    }
    return py::cast(s.to_complex());
}

sz::ExponentTableau tableau_of(const py::handle& shape) {
    return sz::tableau_from_json(py_to_json(shape));
}

sz::Binding binding_of(const py::object& bindings) {
    if (bindings.is_none()) return {};
    return sz::binding_from_json(py_to_json(bindings));
}

std::pair<std::optional<sz::ExponentTableau>, std::optional<sz::ExponentTableau>> wings_of(
    const py::object& wings) {
    std::pair<std::optional<sz::ExponentTableau>, std::optional<sz::ExponentTableau>> out;
    if (wings.is_none()) return out;
    const Json j = py_to_json(wings);
    if (j.contains("lower") && !j.at("lower").is_null())
        out.first = sz::tableau_from_json(j.at("lower"));
    if (j.contains("upper") && !j.at("upper").is_null())
        out.second = sz::tableau_from_json(j.at("upper"));
    return out;
}

sz::Partition partition_of(const py::handle& shape) {
    return sz::partition_from_json(py_to_json(shape));
}

sz::EvalMode mode_of(bool exact) { return exact ? sz::EvalMode::Exact : sz::EvalMode::Float; }

py::dict qsym_to_py(const sz::QSymElement& q) {
    py::dict out;
    for (const auto& [comp, coeff] : q.terms()) out[py::tuple(py::cast(comp))] = coeff;
    return out;
}

sz::QSymElement qsym_of(const py::dict& d) {
    sz::QSymElement out;
    for (const auto& item : d) {
        const auto comp = item.first.cast<std::vector<int>>();
        out.add(comp, item.second.cast<long long>());
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Truncated Schur multiple zeta evaluation and determinant identity checks";

    m.def(
        "eval_truncated",
        [](const py::object& shape, const py::object& bindings, int bound, bool exact) {
            const auto tv = sz::eval_truncated(tableau_of(shape), binding_of(bindings), bound,
                                               mode_of(exact));
            return py::make_tuple(scalar_to_py(tv.value), tv.fillings);
        },
        py::arg("shape"), py::arg("bindings") = py::none(), py::arg("bound") = 3,
        py::arg("exact") = true,
        "Truncated zeta value of an exponent tableau; returns (value, filling_count)");

    m.def(
        "eval_ez",
        [](const std::vector<py::object>& exponents, int bound, bool exact) {
            std::vector<sz::Scalar> s;
            s.reserve(exponents.size());
            for (const auto& e : exponents) s.push_back(sz::scalar_from_json(py_to_json(e)));
            const auto tv = sz::eval_ez(s, bound, mode_of(exact));
            return scalar_to_py(tv.value);
        },
        py::arg("exponents"), py::arg("bound"), py::arg("exact") = true,
        "Nested-sum (Euler-Zagier style) truncation with the first exponent on the "
        "smallest index");

    m.def(
        "eval_adaptive",
        [](const py::object& shape, const py::object& bindings, double tol, int cap) {
            const auto est = sz::eval_adaptive(tableau_of(shape), binding_of(bindings), tol, cap);
            py::dict out;
            out["value"] = est.value;
            out["final_bound"] = est.final_bound;
            out["last_increment"] = est.last_increment;
            out["converged"] = est.converged;
            out["fillings"] = est.fillings;
            return out;
        },
        py::arg("shape"), py::arg("bindings") = py::none(), py::arg("tol") = 1e-6,
        py::arg("cap") = (1 << 20),
        "Heuristic cut-off refinement (floating point); requires admissible exponents");

    m.def(
        "enumerate_ssyt",
        [](const py::object& shape, int bound) {
            const auto shape_diag = tableau_of(shape).shape();
            py::list out;
            for (const auto& f : sz::enumerate_ssyt(shape_diag, bound))
                out.append(json_to_py(sz::filling_to_json(f)["entries"]));
            return out;
        },
        py::arg("shape"), py::arg("bound"),
        "Semistandard fillings as lists of rows");

    m.def(
        "count_ssyt",
        [](const py::object& shape, int bound) {
            return sz::count_ssyt(tableau_of(shape).shape(), bound);
        },
        py::arg("shape"), py::arg("bound"));

    m.def(
        "verify",
        [](const std::string& identity, const py::object& shape, const py::object& bindings,
           int bound, bool exact, double tol, const py::object& wings, int jobs) {
            const sz::Partition lambda = partition_of(shape);
            const auto [lower, upper] = wings_of(wings);
            sz::IdentityInstance inst;
            if (identity == "jt") inst = sz::jacobi_trudi_spec(lambda);
            else if (identity == "giambelli") inst = sz::giambelli_spec(lambda);
            else if (identity == "laced") inst = sz::laced_giambelli_spec(lambda, lower, upper);
            else if (identity == "skew") inst = sz::skew_giambelli_spec(lambda);
            else if (identity == "rectangle") inst = sz::rectangle_pair_spec(lambda, lower, upper);
            else throw py::value_error("unknown identity '" + identity + "'");
            const auto rep =
                sz::verify(inst, binding_of(bindings), bound, mode_of(exact), tol, jobs);
            return json_to_py(sz::report_to_json(rep));
        },
        py::arg("identity"), py::arg("shape"), py::arg("bindings") = py::none(),
        py::arg("bound") = 3, py::arg("exact") = true, py::arg("tol") = 0.0,
        py::arg("wings") = py::none(), py::arg("jobs") = 1,
        "Verify one determinant identity ('jt', 'giambelli', 'laced', 'skew', 'rectangle') "
        "at a cut-off; returns the full report as a dict");

    m.def(
        "cancel",
        [](const py::object& shape, const py::object& bindings, int bound, bool exact,
           const py::object& wings) {
            const sz::Partition lambda = partition_of(shape);
            const auto [lower, upper] = wings_of(wings);
            const auto core = sz::content_fill(sz::SkewDiagram::of_partition(lambda));
            const auto rep = sz::cancellation_sum(lambda, core, lower, upper,
                                                  binding_of(bindings), bound, mode_of(exact));
            py::dict out;
            out["ssyt_count"] = rep.ssyt_count;
            out["cancelled_count"] = rep.cancelled_count;
            out["ssyt_sum"] = scalar_to_py(rep.ssyt_sum);
            out["cancelled_sum"] = scalar_to_py(rep.cancelled_sum);
            return out;
        },
        py::arg("shape"), py::arg("bindings") = py::none(), py::arg("bound") = 3,
        py::arg("exact") = true, py::arg("wings") = py::none(),
        "Signed sum over the non-semistandard expansion pairs (vanishes exactly)");

    m.def(
        "schur_qsym",
        [](const py::object& shape, const py::object& bindings) {
            return qsym_to_py(sz::schur_qsym(tableau_of(shape), binding_of(bindings)));
        },
        py::arg("shape"), py::arg("bindings") = py::none(),
        "Quasi-symmetric expansion as {composition tuple: coefficient}");

    m.def(
        "antipode",
        [](const py::dict& element) { return qsym_to_py(sz::antipode(qsym_of(element))); },
        py::arg("element"));

    m.def(
        "harmonic_product",
        [](const py::dict& a, const py::dict& b, int cap) {
            return qsym_to_py(sz::harmonic_product(qsym_of(a), qsym_of(b), cap));
        },
        py::arg("a"), py::arg("b"), py::arg("cap") = (1 << 28),
        "Quasi-shuffle product of coefficient maps");

    m.def(
        "specialize_zeta",
        [](const py::dict& element, int bound) {
            const auto fraction = py::module_::import("fractions").attr("Fraction");
            return fraction(sz::rational_str(sz::specialize_zeta(qsym_of(element), bound)));
        },
        py::arg("element"), py::arg("bound"),
        "Evaluate a coefficient map at t_m = 1/m for m <= bound");

    m.def(
        "hopf_check",
        [](int cap) {
            const auto axiom = sz::verify_hopf_axiom(cap);
            const auto invol = sz::verify_antipode_involution(cap);
            return py::make_tuple(axiom.ok && invol.ok,
                                  axiom.ok ? invol.detail : axiom.detail);
        },
        py::arg("cap") = 6,
        "Antipode convolution identity and involution sweep up to a weight cap");

    m.def(
        "s_giambelli_check",
        [](const py::object& shape, const py::object& bindings, int cap) {
            const sz::Partition lambda = partition_of(shape);
            const auto gamma = sz::content_fill(sz::SkewDiagram::of_partition(lambda));
            const auto chk = sz::verify_s_giambelli(lambda, gamma, binding_of(bindings), cap);
            return py::make_tuple(chk.ok, chk.detail);
        },
        py::arg("shape"), py::arg("bindings") = py::none(), py::arg("cap") = 10,
        "Symbolic hook-determinant expansion under the quasi-shuffle product");

    m.def(
        "antidiagonal_transpose",
        [](const py::object& shape) {
            const auto flipped = sz::transpose_tableau(tableau_of(shape));
            return json_to_py(sz::tableau_to_json(flipped));
        },
        py::arg("shape"),
        "Reflect a tableau (shape and entries) across the anti-diagonal");
}
