// Copyright 2026 The qcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qcorr/error.h"
#include "qcorr/evolution.h"
#include "qcorr/hamiltonian.h"
#include "qcorr/measures.h"
#include "qcorr/states.h"
#include "qcorr/sweep.h"

namespace py = pybind11;

namespace {

using ComplexArray = py::array_t<qcorr::Complex, py::array::c_style | py::array::forcecast>;

struct ErrorTypes {
    PyObject *base = nullptr;
    PyObject *config = nullptr;
    PyObject *physicality = nullptr;
    PyObject *numerical = nullptr;
};

ErrorTypes g_errors;

PyObject *new_exception(py::module_ &m, const char *name, PyObject *base, const char *doc) {
    std::string qualified = std::string("qcorr._qcorr.") + name;
    PyObject *type = PyErr_NewExceptionWithDoc(qualified.c_str(), doc, base, nullptr);
    if (type == nullptr) {
        throw py::error_already_set();
    }
    m.add_object(name, py::handle(type));
    return type;
}

void raise(const qcorr::Error &e) {
    PyObject *type = g_errors.numerical;
    switch (e.category()) {
        case qcorr::ErrorCategory::InvalidConfig:
            type = g_errors.config;
            break;
        case qcorr::ErrorCategory::Physicality:
            type = g_errors.physicality;
            break;
        case qcorr::ErrorCategory::Numerical:
            break;
    }
    py::object exc = py::reinterpret_steal<py::object>(PyObject_CallFunction(type, "s", e.what()));
    if (!exc) {
        return;
    }
    exc.attr("kind") = std::string(qcorr::error_kind_name(e.kind()));
    PyErr_SetObject(type, exc.ptr());
}

qcorr::Matrix4 to_matrix(const ComplexArray &a) {
    if (a.ndim() != 2 || a.shape(0) != 4 || a.shape(1) != 4) {
        throw qcorr::Error(qcorr::ErrorKind::InvalidArgument, "expected a 4x4 matrix");
    }
    auto view = a.unchecked<2>();
    qcorr::Matrix4 m;
    for (std::size_t r = 0; r < 4; r++) {
        for (std::size_t c = 0; c < 4; c++) {
            m(r, c) = view(r, c);
        }
    }
    return m;
}

ComplexArray to_array(const qcorr::Matrix4 &m) {
    ComplexArray out({4, 4});
    auto view = out.mutable_unchecked<2>();
    for (std::size_t r = 0; r < 4; r++) {
        for (std::size_t c = 0; c < 4; c++) {
            view(r, c) = m(r, c);
        }
    }
    return out;
}

qcorr::DensityMatrix to_density(const ComplexArray &a) {
    return qcorr::DensityMatrix::from_matrix(to_matrix(a));
}

qcorr::ModelParams model(double mu, double field_b, double zeta, double gamma_xy) {
    qcorr::ModelParams p;
    p.mu = mu;
    p.field_b = field_b;
    p.zeta = zeta;
    p.gamma_xy = gamma_xy;
    p.validate();
    return p;
}

py::dict result_dict(const qcorr::MeasureResult &r) {
    py::dict d;
    d["value"] = r.value;
    d["method"] = r.method == qcorr::Method::ClosedForm ? "closed-form" : "brute-force";
    d["optimizer_argument"] = r.optimizer_argument;
    return d;
}

}  // namespace

PYBIND11_MODULE(_qcorr, m) {
    m.doc() = "Two-qubit quantum correlations under intrinsic decoherence";

    g_errors.base = new_exception(m, "QcorrError", PyExc_Exception, "Base class for qcorr failures.");
    g_errors.config = new_exception(m, "InvalidConfigError", g_errors.base, "Bad parameters or options.");
    g_errors.physicality = new_exception(m, "PhysicalityError", g_errors.base, "Input is not a valid quantum state.");
    g_errors.numerical = new_exception(m, "NumericalError", g_errors.base, "A numerical guard tripped.");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const qcorr::Error &e) {
            raise(e);
        }
    });

    py::class_<qcorr::BellDiagonalSpec>(m, "BellDiagonal")
        .def(py::init([](double c1, double c2, double c3) { return qcorr::BellDiagonalSpec{c1, c2, c3}; }),
             py::arg("c1"), py::arg("c2"), py::arg("c3"))
        .def_readwrite("c1", &qcorr::BellDiagonalSpec::c1)
        .def_readwrite("c2", &qcorr::BellDiagonalSpec::c2)
        .def_readwrite("c3", &qcorr::BellDiagonalSpec::c3)
        .def("__repr__", [](const qcorr::BellDiagonalSpec &s) {
            std::ostringstream out;
            out << "BellDiagonal(" << s.c1 << ", " << s.c2 << ", " << s.c3 << ")";
            return out.str();
        });

    py::class_<qcorr::WernerSpec>(m, "Werner")
        .def(py::init([](double r) { return qcorr::WernerSpec{r}; }), py::arg("r"))
        .def_readwrite("r", &qcorr::WernerSpec::r)
        .def("__repr__", [](const qcorr::WernerSpec &s) {
            std::ostringstream out;
            out << "Werner(" << s.r << ")";
            return out.str();
        });

    py::class_<qcorr::SweepConfig>(m, "SweepConfig")
        .def(py::init<>())
        .def_readwrite("state", &qcorr::SweepConfig::state)
        .def_property(
            "mu", [](const qcorr::SweepConfig &c) { return c.model.mu; },
            [](qcorr::SweepConfig &c, double v) { c.model.mu = v; })
        .def_property(
            "B", [](const qcorr::SweepConfig &c) { return c.model.field_b; },
            [](qcorr::SweepConfig &c, double v) { c.model.field_b = v; })
        .def_property(
            "zeta", [](const qcorr::SweepConfig &c) { return c.model.zeta; },
            [](qcorr::SweepConfig &c, double v) { c.model.zeta = v; })
        .def_property(
            "gamma_xy", [](const qcorr::SweepConfig &c) { return c.model.gamma_xy; },
            [](qcorr::SweepConfig &c, double v) { c.model.gamma_xy = v; })
        .def_readwrite("gamma", &qcorr::SweepConfig::gamma)
        .def_readwrite("t_max", &qcorr::SweepConfig::t_max)
        .def_readwrite("t_steps", &qcorr::SweepConfig::t_steps)
        .def_property(
            "measures",
            [](const qcorr::SweepConfig &c) {
                std::vector<std::string> names;
                for (qcorr::Measure k : qcorr::kAllMeasures) {
                    if (c.wants(k)) {
                        names.emplace_back(qcorr::measure_name(k));
                    }
                }
                return names;
            },
            [](qcorr::SweepConfig &c, const std::vector<std::string> &names) {
                std::array<bool, 4> wanted = {false, false, false, false};
                for (const auto &name : names) {
                    wanted[static_cast<int>(qcorr::parse_measure(name))] = true;
                }
                c.measures = wanted;
            })
        .def_property(
            "backend", [](const qcorr::SweepConfig &c) { return std::string(qcorr::backend_name(c.backend)); },
            [](qcorr::SweepConfig &c, const std::string &name) { c.backend = qcorr::parse_backend(name); })
        .def_readwrite("oracle_check", &qcorr::SweepConfig::oracle_check)
        .def_readwrite("n_grid", &qcorr::SweepConfig::n_grid)
        .def_readwrite("dt", &qcorr::SweepConfig::dt)
        .def("scale", [](qcorr::SweepConfig &c, const std::string &name,
                         double factor) { c.scale_factors[static_cast<int>(qcorr::parse_measure(name))] = factor; })
        .def("validate", &qcorr::SweepConfig::validate)
        .def("csv_header", [](const qcorr::SweepConfig &c) { return qcorr::csv_header(c); });

    m.def("preset_names", &qcorr::preset_names);
    m.def("figure_preset", [](const std::string &name) { return qcorr::figure_preset(name); }, py::arg("name"));

    m.def(
        "run_sweep",
        [](const qcorr::SweepConfig &cfg, int threads) {
            qcorr::SweepResult result;
            {
                py::gil_scoped_release release;
                result = qcorr::run_sweep(cfg, threads);
            }
            std::size_t n = result.records.size();
            py::array_t<double> t(std::vector<py::ssize_t>{static_cast<py::ssize_t>(n)});
            auto tv = t.mutable_unchecked<1>();
            py::dict columns;
            columns["t"] = t;
            for (std::size_t k = 0; k < n; k++) {
                tv(k) = result.records[k].t;
            }
            py::dict deltas;
            for (qcorr::Measure meas : qcorr::kAllMeasures) {
                if (!cfg.wants(meas)) {
                    continue;
                }
                int idx = static_cast<int>(meas);
                std::string name(qcorr::measure_name(meas));
                py::array_t<double> values(std::vector<py::ssize_t>{static_cast<py::ssize_t>(n)});
                auto vv = values.mutable_unchecked<1>();
                for (std::size_t k = 0; k < n; k++) {
                    vv(k) = *result.records[k].values[idx] * cfg.scale_factors[idx];
                }
                columns[name.c_str()] = values;
                if (cfg.oracle_check) {
                    py::array_t<double> bf(std::vector<py::ssize_t>{static_cast<py::ssize_t>(n)});
                    auto bv = bf.mutable_unchecked<1>();
                    for (std::size_t k = 0; k < n; k++) {
                        bv(k) = *result.records[k].oracle[idx] * cfg.scale_factors[idx];
                    }
                    columns[(name + "_bf").c_str()] = bf;
                    deltas[name.c_str()] = *result.max_delta[idx];
                }
            }
            py::dict out;
            out["columns"] = columns;
            out["max_delta"] = deltas;
            std::vector<std::string> failures;
            for (qcorr::Measure meas : result.oracle_failures()) {
                failures.emplace_back(qcorr::measure_name(meas));
            }
            out["oracle_failures"] = failures;
            std::ostringstream csv;
            qcorr::write_csv(csv, cfg, result.records);
            out["csv"] = csv.str();
            return out;
        },
        py::arg("config"), py::arg("threads") = 1,
        "Evaluates the configured measures over the time grid. Returns a dict with "
        "'columns' (scaled numpy arrays), 'max_delta', 'oracle_failures' and 'csv'.");

    m.def(
        "steady_state_report",
        [](const qcorr::SweepConfig &cfg) {
            qcorr::CorrelationRecord rec = qcorr::steady_state_report(cfg);
            py::dict out;
            for (qcorr::Measure meas : qcorr::kAllMeasures) {
                if (cfg.wants(meas)) {
                    out[std::string(qcorr::measure_name(meas)).c_str()] = *rec.values[static_cast<int>(meas)];
                }
            }
            return out;
        },
        py::arg("config"));

    m.def(
        "hamiltonian",
        [](double mu, double field_b, double zeta, double gamma_xy) {
            return to_array(qcorr::build_hamiltonian(model(mu, field_b, zeta, gamma_xy)));
        },
        py::arg("mu"), py::arg("B"), py::arg("zeta") = 0.0, py::arg("gamma_xy") = 0.0);

    m.def(
        "eigensystem",
        [](double mu, double field_b, double zeta, double gamma_xy) {
            qcorr::Eigensystem es = qcorr::sweep_eigensystem(model(mu, field_b, zeta, gamma_xy));
            py::array_t<double> energies(std::vector<py::ssize_t>{4});
            auto ev = energies.mutable_unchecked<1>();
            for (std::size_t k = 0; k < 4; k++) {
                ev(k) = es.energies[k];
            }
            return py::make_tuple(energies, to_array(es.unitary()));
        },
        py::arg("mu"), py::arg("B"), py::arg("zeta") = 0.0, py::arg("gamma_xy") = 0.0,
        "Energies and a unitary whose columns are the matching eigenvectors.");

    m.def(
        "bell_diagonal", [](double c1, double c2, double c3) { return to_array(qcorr::bell_diagonal({c1, c2, c3}).matrix()); },
        py::arg("c1"), py::arg("c2"), py::arg("c3"));
    m.def(
        "werner", [](double r) { return to_array(qcorr::werner({r}).matrix()); }, py::arg("r"));

    m.def(
        "evolve",
        [](const ComplexArray &rho0, double mu, double field_b, double gamma, double t, double zeta, double gamma_xy,
           const std::string &backend, double dt) {
            qcorr::SweepConfig cfg;
            cfg.model = model(mu, field_b, zeta, gamma_xy);
            cfg.gamma = gamma;
            cfg.backend = qcorr::parse_backend(backend);
            cfg.dt = dt;
            qcorr::DensityMatrix rho = to_density(rho0);
            qcorr::Eigensystem es = qcorr::sweep_eigensystem(cfg.model);
            return to_array(qcorr::evolve(cfg, es, rho, t).matrix());
        },
        py::arg("rho0"), py::arg("mu"), py::arg("B"), py::arg("gamma"), py::arg("t"), py::arg("zeta") = 0.0,
        py::arg("gamma_xy") = 0.0, py::arg("backend") = "spectral", py::arg("dt") = 1e-3);

    m.def(
        "steady_state",
        [](const ComplexArray &rho0, double mu, double field_b, double zeta, double gamma_xy) {
            qcorr::Eigensystem es = qcorr::sweep_eigensystem(model(mu, field_b, zeta, gamma_xy));
            return to_array(qcorr::steady_state(es, to_density(rho0)).matrix());
        },
        py::arg("rho0"), py::arg("mu"), py::arg("B"), py::arg("zeta") = 0.0, py::arg("gamma_xy") = 0.0);

    m.def(
        "concurrence", [](const ComplexArray &rho) { return qcorr::concurrence(to_density(rho)).value; },
        py::arg("rho"));
    m.def(
        "lqu", [](const ComplexArray &rho) { return qcorr::lqu(to_density(rho)).value; }, py::arg("rho"));
    m.def(
        "uin", [](const ComplexArray &rho) { return qcorr::uin(to_density(rho)).value; }, py::arg("rho"));
    m.def(
        "tdd",
        [](const ComplexArray &rho) { return qcorr::tdd_x(qcorr::elements_from_density(to_density(rho))).value; },
        py::arg("rho"), "Closed form; the state must be X-shaped.");
    m.def(
        "lqu_bruteforce",
        [](const ComplexArray &rho, int n_grid) { return result_dict(qcorr::lqu_bruteforce(to_density(rho), n_grid)); },
        py::arg("rho"), py::arg("n_grid") = qcorr::tol::kDefaultGrid);
    m.def(
        "uin_bruteforce",
        [](const ComplexArray &rho, int n_grid) { return result_dict(qcorr::uin_bruteforce(to_density(rho), n_grid)); },
        py::arg("rho"), py::arg("n_grid") = qcorr::tol::kDefaultGrid);
    m.def(
        "tdd_bruteforce",
        [](const ComplexArray &rho, int n_grid) { return result_dict(qcorr::tdd_bruteforce(to_density(rho), n_grid)); },
        py::arg("rho"), py::arg("n_grid") = qcorr::tol::kDefaultGrid);
}
