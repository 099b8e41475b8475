// Copyright 2026 The entglkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "entglkit/distill.hpp"
#include "entglkit/montecarlo.hpp"
#include "entglkit/permcrit.hpp"
#include "entglkit/protocol.hpp"
#include "entglkit/qstate.hpp"
#include "entglkit/robustness.hpp"
#include "entglkit/witness.hpp"
#include "entglkit/zoo.hpp"

namespace py = pybind11;
using namespace entglkit;

namespace {

py::dict point_dict(const FamilyPoint &p) {
    py::dict out;
    out["family"] = family_name(p.family);
    out["matrix"] = p.state.matrix();
    out["dims"] = p.state.dims();
    out["params"] = p.params;
    out["flags"] = p.flags;
    return out;
}

QuantumState state(const ComplexMatrix &m, const std::vector<int> &dims) { return QuantumState(m, dims); }

DistillOptions distill_options(long long n_tests, int opt_steps, std::uint64_t seed, double precision) {
    DistillOptions o;
    o.n_tests = n_tests;
    o.opt_steps = opt_steps;
    o.seed = seed;
    o.precision = precision;
    return o;
}

py::dict verdict_dict(const DistillVerdict &v) {
    py::dict out;
    out["detected"] = v.detected;
    out["min_value"] = v.min_value;
    out["best_rows"] = v.best_rows;
    out["tests_run"] = v.tests_run;
    out["detection_index"] = v.detection_index;
    out["seed"] = v.seed;
    out["copies"] = v.copies;
    if (v.copies > 1) {
        out["best_rows_a"] = v.best_rows_a;
        out["lifted"] = v.lifted;
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_entglkit, m) {
    m.doc() = "Entanglement criteria, distillability tests and state families";

    // Messages start with the error code name, e.g. "ParamOutOfRange: ...".
    py::register_exception<Error>(m, "EntglkitError", PyExc_ValueError);

    // qstate
    m.def("partial_transpose", [](const ComplexMatrix &rho, const std::vector<int> &dims, int subsystem) {
        return partial_transpose(state(rho, dims), subsystem);
    }, py::arg("rho"), py::arg("dims"), py::arg("subsystem") = 1);
    m.def("partial_trace", [](const ComplexMatrix &rho, const std::vector<int> &dims, const std::vector<int> &keep) {
        return partial_trace(state(rho, dims), keep).matrix();
    }, py::arg("rho"), py::arg("dims"), py::arg("keep"));
    m.def("realign", [](const ComplexMatrix &rho, const std::vector<int> &dims) { return realign(state(rho, dims)); },
          py::arg("rho"), py::arg("dims"));
    m.def("trace_norm", &trace_norm, py::arg("a"));
    m.def("min_eigenvalue", &min_eigenvalue, py::arg("h"));
    m.def("is_ppt", [](const ComplexMatrix &rho, const std::vector<int> &dims) { return is_ppt(state(rho, dims)); },
          py::arg("rho"), py::arg("dims"));
    m.def("max_entangled_projector", &max_entangled_projector, py::arg("d"));
    m.def("swap_operator", &swap_operator, py::arg("d"));

    // permcrit
    m.def("apply_permutation",
          py::overload_cast<const ComplexMatrix &, const std::vector<int> &, int, int>(&apply_permutation),
          py::arg("a"), py::arg("sigma"), py::arg("r"), py::arg("d"));
    m.def("criterion_value", [](const ComplexMatrix &rho, const std::vector<int> &dims, const std::vector<int> &sigma) {
        const int r = static_cast<int>(sigma.size()) / 2;
        return criterion_value(state(rho, dims), PermutationCriterion(sigma, r, dims.at(0)));
    }, py::arg("rho"), py::arg("dims"), py::arg("sigma"));
    m.def("permutation_witness", [](const ComplexMatrix &rho, const std::vector<int> &dims, const std::vector<int> &sigma) {
        const int r = static_cast<int>(sigma.size()) / 2;
        return permutation_witness(state(rho, dims), PermutationCriterion(sigma, r, dims.at(0)));
    }, py::arg("rho"), py::arg("dims"), py::arg("sigma") = std::vector<int>{1, 3, 2, 4});
    m.def("classify_independent", [](int r) {
        const CriterionClassification c = classify_independent(r);
        py::dict out;
        out["r"] = c.r;
        out["orbit_count"] = c.orbit_count;
        out["representatives"] = c.representatives;
        out["includes_identity"] = c.includes_identity;
        return out;
    }, py::arg("r"));

    // witness
    m.def("schmidt_witness", [](int d, int n) { return schmidt_witness(d, n).matrix; }, py::arg("d"), py::arg("n"));
    m.def("evaluate_witness", [](const ComplexMatrix &w, const ComplexMatrix &rho, const std::vector<int> &dims) {
        return evaluate_witness(w, state(rho, dims));
    }, py::arg("w"), py::arg("rho"), py::arg("dims"));
    m.def("choi_map", &choi_map, py::arg("a"));

    // zoo
    m.def("werner", [](int d, double beta) { return point_dict(werner(d, beta)); }, py::arg("d"), py::arg("beta"));
    m.def("isotropic", [](int d, double beta) { return point_dict(isotropic(d, beta)); }, py::arg("d"), py::arg("beta"));
    m.def("stormer", [](double alpha) { return point_dict(stormer(alpha)); }, py::arg("alpha"));
    m.def("chessboard", [] { return point_dict(chessboard()); });
    m.def("edge55", [] { return point_dict(edge55()); });
    m.def("edge66", [] { return point_dict(edge66()); });
    m.def("tiles_upb", [] { return point_dict(tiles_upb().point); });
    m.def("uuvvf", [](int d, double eps, double delta) { return point_dict(uuvvf(d, eps, delta)); },
          py::arg("d"), py::arg("eps"), py::arg("delta"));
    m.def("uuvvf_two_copy_recursion", &uuvvf_two_copy_recursion, py::arg("eps"), py::arg("delta"), py::arg("d"));
    m.def("watrous", [](int d, double eps) { return point_dict(watrous(d, eps)); }, py::arg("d"), py::arg("eps"));
    m.def("rainbow", [](int m_, int d, double eps, double delta) { return point_dict(rainbow(m_, d, eps, delta)); },
          py::arg("m"), py::arg("d"), py::arg("eps"), py::arg("delta"));
    m.def("bell_diagonal", [](const std::array<double, 4> &p) { return point_dict(bell_diagonal(p)); }, py::arg("p"));

    // distill
    m.def("distill_test_1copy", [](const ComplexMatrix &rho, const std::vector<int> &dims, long long n_tests,
                                   int opt_steps, std::uint64_t seed, double precision) {
        return verdict_dict(distill_test_1copy(state(rho, dims), distill_options(n_tests, opt_steps, seed, precision)));
    }, py::arg("rho"), py::arg("dims"), py::arg("n_tests") = 10000, py::arg("opt_steps") = 0, py::arg("seed") = 0,
          py::arg("precision") = 1e-8);
    m.def("distill_test_ncopy", [](const ComplexMatrix &rho, const std::vector<int> &dims, int n, long long n_tests,
                                   int opt_steps, std::uint64_t seed, double precision) {
        return verdict_dict(
            distill_test_ncopy(state(rho, dims), n, distill_options(n_tests, opt_steps, seed, precision)));
    }, py::arg("rho"), py::arg("dims"), py::arg("n"), py::arg("n_tests") = 10000, py::arg("opt_steps") = 0,
          py::arg("seed") = 0, py::arg("precision") = 1e-8);
    m.def("reduction_check", [](const ComplexMatrix &rho, const std::vector<int> &dims) {
        return reduction_check(state(rho, dims));
    }, py::arg("rho"), py::arg("dims"));
    m.def("robustness_distill_check", [](const ComplexMatrix &rho, const std::vector<int> &dims) {
        const RobustnessDistill r = robustness_distill_check(state(rho, dims));
        py::dict out;
        out["distillable"] = r.distillable;
        out["lambda"] = r.lambda;
        out["psi"] = r.psi;
        out["bound"] = r.bound;
        return out;
    }, py::arg("rho"), py::arg("dims"));

    // robustness
    m.def("robustness_pure", [](const std::vector<double> &coeffs, int d) {
        const PureRobustness r = robustness_pure(SchmidtSpectrum(coeffs, d));
        return py::make_tuple(r.r_s, r.r_g, r.r_r);
    }, py::arg("coeffs"), py::arg("d"));
    m.def("gen_schmidt_robustness_maxent", &gen_schmidt_robustness_maxent, py::arg("d"), py::arg("n"));
    m.def("gen_schmidt_robustness_bounds", [](const std::vector<double> &coeffs, int d, int n) {
        const BoundPair b = gen_schmidt_robustness_bounds(SchmidtSpectrum(coeffs, d), n);
        return py::make_tuple(b.lower, b.upper);
    }, py::arg("coeffs"), py::arg("d"), py::arg("n"));
    m.def("random_schmidt_upper", [](const std::vector<double> &coeffs, int d, int n) {
        return random_schmidt_upper(SchmidtSpectrum(coeffs, d), n);
    }, py::arg("coeffs"), py::arg("d"), py::arg("n"));
    m.def("random_schmidt_lower", [](const std::vector<double> &coeffs, int d, int n) {
        const ConjectureBound b = random_schmidt_lower(SchmidtSpectrum(coeffs, d), n);
        py::dict out;
        out["value"] = b.value;
        out["conjecture"] = b.conjecture;
        return out;
    }, py::arg("coeffs"), py::arg("d"), py::arg("n"));

    // protocol
    m.def("nielsen_feasible", &nielsen_feasible, py::arg("source"), py::arg("target"));
    m.def("max_conversion_prob", &max_conversion_prob, py::arg("source"), py::arg("target"));
    m.def("optimal_concentration", [](const std::vector<double> &lambda) {
        const Concentration c = optimal_concentration(lambda);
        return py::make_tuple(c.probs, c.avg_entanglement);
    }, py::arg("lam"));
    m.def("e_det", &e_det, py::arg("lam"));
    m.def("recurrence_step", &recurrence_step, py::arg("y"));
    m.def("recurrence_iterate", &recurrence_iterate, py::arg("y0"), py::arg("tol") = 1e-6, py::arg("max_iter") = 1000);
    m.def("qpa_step", &qpa_step, py::arg("p"));
    m.def("qpa_iterate", &qpa_iterate, py::arg("p"), py::arg("rounds"));
    m.def("bxor_bell", [](std::pair<int, int> s, std::pair<int, int> t) {
        const auto [a, b] = bxor_bell({s.first, s.second}, {t.first, t.second});
        return py::make_tuple(py::make_tuple(a.phase, a.shift), py::make_tuple(b.phase, b.shift));
    }, py::arg("source"), py::arg("target"));
    m.def("breeding_yield", [](const BellWeights &p) {
        const Yield y = breeding_yield(p);
        return py::make_tuple(y.raw, y.clamped);
    }, py::arg("p"));

    // montecarlo
    m.def("haar_unitary", [](int d, std::uint64_t seed) {
        Rng rng(seed);
        return haar_unitary(d, rng);
    }, py::arg("d"), py::arg("seed"));
    m.def("random_density", [](const std::vector<int> &dims, std::uint64_t seed) {
        Rng rng(seed);
        return random_density(dims, rng).matrix();
    }, py::arg("dims"), py::arg("seed"));
    m.def("volume_experiment", [](int d, long long n_states, long long n_tests, int opt_steps, std::uint64_t seed,
                                  int threads) {
        VolumeOptions o;
        o.d = d;
        o.n_states = n_states;
        o.n_tests = n_tests;
        o.opt_steps = opt_steps;
        o.seed = seed;
        o.threads = threads;
        VolumeReport r;
        {
            py::gil_scoped_release release;
            r = volume_experiment(o);
        }
        py::dict out;
        out["d"] = r.d;
        out["n_states"] = r.n_states;
        out["n_tests_per_state"] = r.n_tests_per_state;
        out["opt_steps"] = r.opt_steps;
        out["seed"] = r.seed;
        out["frac_ppt"] = r.frac_ppt;
        out["frac_npt_undetected"] = r.frac_npt_undetected;
        out["first_test_fraction"] = r.first_test_fraction;
        out["detection_curve"] = r.detection_curve;
        out["wall_time"] = r.wall_time;
        return out;
    }, py::arg("d"), py::arg("n_states") = 10000, py::arg("n_tests") = 1000, py::arg("opt_steps") = -1,
          py::arg("seed") = 0, py::arg("threads") = 1);
}
