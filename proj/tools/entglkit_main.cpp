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


// entglkit command-line front end.
//
// Exit codes: 0 success or detected, 10 clean negative verdict, 2 usage,
// 3 parse error, 4 numeric invariant failure, 1 anything else.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "entglkit/distill.hpp"
#include "entglkit/io.hpp"
#include "entglkit/montecarlo.hpp"
#include "entglkit/permcrit.hpp"
#include "entglkit/protocol.hpp"
#include "entglkit/qstate.hpp"
#include "entglkit/rng.hpp"
#include "entglkit/witness.hpp"
#include "entglkit/zoo.hpp"

using namespace entglkit;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 10;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitInvariant = 4;

int exit_code_for(ErrorCode c) {
    switch (c) {
        case ErrorCode::ParseError:
            return kExitParse;
        case ErrorCode::InvariantViolation:
        case ErrorCode::NotHermitian:
        case ErrorCode::NotSquare:
        case ErrorCode::WrongDimension:
        case ErrorCode::DimensionMismatch:
            return kExitInvariant;
        case ErrorCode::ParamOutOfRange:
        case ErrorCode::InvalidOrder:
        case ErrorCode::PartyCountTooLarge:
        case ErrorCode::SizeCapExceeded:
        case ErrorCode::NotBipartite:
        case ErrorCode::InvalidSubsystem:
            return kExitUsage;
        default:
            return 1;
    }
}

void write_text(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
    out << text;
}

json rows_json(const ComplexMatrix &rows) {
    json out = json::array();
    for (Eigen::Index r = 0; r < rows.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index k = 0; k < rows.cols(); ++k) row.push_back({rows(r, k).real(), rows(r, k).imag()});
        out.push_back(row);
    }
    return out;
}

QuantumState load_state(const std::string &path) {
    MatrixFile mf = read_matrix_file(path);
    return QuantumState(mf.data, mf.dims);
}

int default_threads() {
    if (const char *env = std::getenv("ENTGLKIT_THREADS")) {
        try {
            return std::max(1, std::stoi(env));
        } catch (...) {
        }
    }
    return 1;
}

std::uint64_t resolve_seed(const CLI::Option *opt, std::uint64_t value) {
    if (opt->count() > 0) return value;
    const std::uint64_t s = fresh_seed();
    std::cerr << "seed: " << s << '\n';
    return s;
}

// ---- check ----------------------------------------------------------------

struct CheckArgs {
    std::string path;
    std::string witness_out;
    std::string sigma;
    bool normalize_witness = false;
};

int cmd_check(const CheckArgs &a) {
    const QuantumState s = load_state(a.path);
    json rep;
    rep["dims"] = s.dims();
    if (!s.bipartite()) throw Error(ErrorCode::NotBipartite, "check needs a bipartite state");
    rep["ppt"] = is_ppt(s);
    rep["min_eigenvalue_pt"] = min_eigenvalue(partial_transpose(s, 1));
    const int d = s.dims()[0];
    const bool square = s.dims()[0] == s.dims()[1];
    rep["realignment_norm"] = trace_norm(realign(s));
    rep["reduction_violation"] = reduction_check(s);
    rep["witness"] = nullptr;

    if (!a.sigma.empty()) {
        if (!square) throw Error(ErrorCode::ParamOutOfRange, "--sigma needs equal local dimensions");
        std::vector<int> sigma;
        std::stringstream ss(a.sigma);
        std::string tok;
        while (std::getline(ss, tok, ',')) sigma.push_back(std::stoi(tok));
        const PermutationCriterion c(sigma, static_cast<int>(sigma.size()) / 2, d);
        rep["sigma"] = sigma;
        rep["criterion_value"] = criterion_value(s, c);
    }
    if (!a.witness_out.empty()) {
        // Witness for the realignment criterion, or the chosen permutation.
        if (!square) throw Error(ErrorCode::ParamOutOfRange, "witness needs equal local dimensions");
        PermutationCriterion c({1, 3, 2, 4}, 2, d);
        if (rep.contains("sigma")) c = PermutationCriterion(rep["sigma"].get<std::vector<int>>(), 2, d);
        try {
            ComplexMatrix w = permutation_witness(s, c);
            if (a.normalize_witness) {
                // Scale to unit trace; the sign of Tr(rho W) is unchanged.
                const double tr = w.trace().real();
                if (!(tr > 0.0)) throw Error(ErrorCode::ParamOutOfRange, "witness trace is not positive");
                w /= tr;
            }
            write_matrix_file(a.witness_out, w, s.dims());
            rep["witness"] = a.witness_out;
            rep["witness_value"] = evaluate_witness(w, s);
        } catch (const Error &e) {
            if (e.code() != ErrorCode::NotDetected) throw;
        }
    }
    std::cout << dump_json(rep) << '\n';
    return kExitOk;
}

// ---- distill --------------------------------------------------------------

int cmd_distill(const std::string &path, int copies, const DistillOptions &opt) {
    const QuantumState s = load_state(path);
    const DistillVerdict v = distill_test_ncopy(s, copies, opt);
    json rep;
    rep["detected"] = v.detected;
    rep["min_value"] = v.min_value;
    rep["tests_run"] = v.tests_run;
    rep["detection_index"] = v.detection_index;
    rep["copies"] = v.copies;
    rep["seed"] = v.seed;
    rep["precision"] = opt.precision;
    rep["opt_steps"] = opt.opt_steps;
    rep["best_rows"] = rows_json(v.best_rows);
    if (v.copies > 1) {
        rep["best_rows_a"] = rows_json(v.best_rows_a);
        rep["lifted"] = v.lifted;
    }
    std::cout << dump_json(rep) << '\n';
    return v.detected ? kExitOk : kExitNegative;
}

// ---- classify-permutations -----------------------------------------------

int cmd_classify(int r) {
    const CriterionClassification c = classify_independent(r);
    json rep;
    rep["r"] = c.r;
    rep["orbit_count"] = c.orbit_count;
    rep["independent_nontrivial"] = c.orbit_count - (c.includes_identity ? 1 : 0);
    rep["includes_identity"] = c.includes_identity;
    rep["representatives"] = c.representatives;
    std::cout << dump_json(rep) << '\n';
    return kExitOk;
}

// ---- volume ---------------------------------------------------------------

int cmd_volume(VolumeOptions opt, const std::string &csv_path, const std::string &json_path) {
    long long step = std::max<long long>(1, opt.n_states / 20);
    opt.progress = [&](long long done) {
        if (done % step == 0 || done == opt.n_states)
            std::cerr << "volume d=" << opt.d << ": " << done << "/" << opt.n_states << " states\n";
    };
    const VolumeReport r = volume_experiment(opt);
    json rep;
    rep["d"] = r.d;
    rep["n_states"] = r.n_states;
    rep["n_tests_per_state"] = r.n_tests_per_state;
    rep["opt_steps"] = r.opt_steps;
    rep["seed"] = r.seed;
    rep["n_ppt"] = r.n_ppt;
    rep["n_npt"] = r.n_npt;
    rep["n_npt_detected"] = r.n_npt_detected;
    rep["frac_ppt"] = r.frac_ppt;
    rep["frac_npt_undetected"] = r.frac_npt_undetected;
    rep["first_test_fraction"] = r.first_test_fraction;
    rep["wall_time"] = r.wall_time;
    json curve = json::array();
    for (const auto &[t, f] : r.detection_curve) curve.push_back({t, f});
    rep["detection_curve"] = curve;

    if (!csv_path.empty()) {
        std::string csv = "test_index,cumulative_fraction\n";
        for (const auto &[t, f] : r.detection_curve) csv += std::to_string(t) + "," + format_double(f) + "\n";
        write_text(csv_path, csv);
    }
    const std::string text = dump_json(rep) + "\n";
    if (!json_path.empty())
        write_text(json_path, text);
    else if (csv_path != "-")
        std::cout << text;
    return kExitOk;
}

// ---- zoo ------------------------------------------------------------------

struct ZooArgs {
    std::string family;
    int d = 3;
    int m = 3;
    double beta = 0.0;
    double alpha = 2.0;
    double eps = 0.0;
    double delta = 0.0;
    std::vector<double> p;
    std::string out;
    bool with_meta = false;
};

FamilyPoint make_family(const ZooArgs &a) {
    const std::string &f = a.family;
    if (f == "werner") return werner(a.d, a.beta);
    if (f == "isotropic") return isotropic(a.d, a.beta);
    if (f == "stormer") return stormer(a.alpha);
    if (f == "chessboard") return chessboard();
    if (f == "edge55") return edge55();
    if (f == "edge66") return edge66();
    if (f == "tiles") return tiles_upb().point;
    if (f == "uuvvf") return uuvvf(a.d, a.eps, a.delta);
    if (f == "watrous") return watrous(a.d, a.eps);
    if (f == "rainbow") return rainbow(a.m, a.d, a.eps, a.delta);
    if (f == "bell") {
        if (a.p.size() != 4) throw Error(ErrorCode::ParamOutOfRange, "--p needs four weights");
        return bell_diagonal({a.p[0], a.p[1], a.p[2], a.p[3]});
    }
    throw Error(ErrorCode::ParamOutOfRange, "unknown family " + f);
}

int cmd_zoo(const ZooArgs &a) {
    const FamilyPoint fp = make_family(a);
    json j = matrix_to_json(fp.state.matrix(), fp.state.dims());
    if (a.with_meta) {
        j["family"] = family_name(fp.family);
        j["params"] = fp.params;
        j["flags"] = fp.flags;
    }
    write_text(a.out, dump_json(j) + "\n");
    return kExitOk;
}

// ---- protocol -------------------------------------------------------------

struct ProtocolArgs {
    std::string name;
    double y0 = 0.65;
    double tol = 1e-12;
    int rounds = 20;
    std::vector<double> p;
    std::string out;
};

int cmd_protocol(const ProtocolArgs &a) {
    std::string csv;
    if (a.name == "recurrence") {
        if (a.y0 < 0.0 || a.y0 > 1.0) throw Error(ErrorCode::ParamOutOfRange, "--y0 must lie in [0, 1]");
        const std::vector<double> traj = recurrence_iterate(a.y0, a.tol, a.rounds);
        csv = "step,fidelity\n";
        for (std::size_t k = 0; k < traj.size(); ++k) csv += std::to_string(k) + "," + format_double(traj[k]) + "\n";
    } else if (a.name == "qpa") {
        if (a.p.size() != 4) throw Error(ErrorCode::ParamOutOfRange, "--p needs four weights");
        const auto traj = qpa_iterate({a.p[0], a.p[1], a.p[2], a.p[3]}, a.rounds);
        csv = "step,p00,p01,p10,p11\n";
        for (std::size_t k = 0; k < traj.size(); ++k) {
            csv += std::to_string(k);
            for (double w : traj[k]) csv += "," + format_double(w);
            csv += "\n";
        }
    } else if (a.name == "breeding") {
        if (a.p.size() != 4) throw Error(ErrorCode::ParamOutOfRange, "--p needs four weights");
        const Yield y = breeding_yield({a.p[0], a.p[1], a.p[2], a.p[3]});
        csv = "raw,clamped\n" + format_double(y.raw) + "," + format_double(y.clamped) + "\n";
    } else if (a.name == "concentration") {
        if (a.p.empty()) throw Error(ErrorCode::ParamOutOfRange, "--p needs squared Schmidt coefficients");
        const Concentration c = optimal_concentration(a.p);
        csv = "level,probability\n";
        for (std::size_t j = 0; j < c.probs.size(); ++j)
            csv += std::to_string(j + 1) + "," + format_double(c.probs[j]) + "\n";
        csv += "average," + format_double(c.avg_entanglement) + "\n";
    } else {
        throw Error(ErrorCode::ParamOutOfRange, "unknown protocol " + a.name);
    }
    write_text(a.out, csv);
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"entglkit: entanglement criteria, distillability tests and state families"};
    app.require_subcommand(1);

    CheckArgs check;
    auto *c_check = app.add_subcommand("check", "PPT, realignment and reduction checks on a matrix file");
    c_check->add_option("path", check.path, "MatrixFile JSON")->required();
    c_check->add_option("--witness-out", check.witness_out, "write a permutation witness when one exists");
    c_check->add_option("--sigma", check.sigma, "extra permutation criterion, e.g. 1,3,2,4");
    c_check->add_flag("--normalize-witness", check.normalize_witness, "scale the written witness to unit trace");

    std::string distill_path;
    int copies = 1;
    DistillOptions dopt;
    std::uint64_t dseed = 0;
    int dthreads = default_threads();
    auto *c_distill = app.add_subcommand("distill", "randomized n-copy distillability test");
    c_distill->add_option("path", distill_path, "MatrixFile JSON")->required();
    c_distill->add_option("--copies", copies, "number of copies")->check(CLI::Range(1, 8));
    c_distill->add_option("--tests", dopt.n_tests, "random tests")->check(CLI::PositiveNumber);
    c_distill->add_option("--opt-steps", dopt.opt_steps, "local optimization rounds")->check(CLI::NonNegativeNumber);
    auto *dseed_opt = c_distill->add_option("--seed", dseed, "master seed");
    c_distill->add_option("--precision", dopt.precision, "detection threshold")->check(CLI::PositiveNumber);
    c_distill->add_option("--threads", dthreads, "accepted for symmetry; the search itself is sequential");

    int parties = 2;
    auto *c_classify = app.add_subcommand("classify-permutations", "independent permutation criteria");
    c_classify->add_option("--parties,-r", parties, "number of parties")->check(CLI::Range(2, 4));

    VolumeOptions vopt;
    std::uint64_t vseed = 0;
    std::string csv_path, json_path;
    vopt.threads = default_threads();
    auto *c_volume = app.add_subcommand("volume", "volume of 1-distillable NPT states");
    c_volume->add_option("--dim", vopt.d, "local dimension")->check(CLI::Range(3, 7));
    c_volume->add_option("--states", vopt.n_states, "number of random states")->check(CLI::PositiveNumber);
    c_volume->add_option("--tests", vopt.n_tests, "tests per state")->check(CLI::PositiveNumber);
    c_volume->add_option("--opt-steps", vopt.opt_steps, "optimization rounds (default 100 d)");
    auto *vseed_opt = c_volume->add_option("--seed", vseed, "master seed");
    c_volume->add_option("--out", csv_path, "detection curve CSV");
    c_volume->add_option("--json", json_path, "report JSON (default stdout)");
    c_volume->add_option("--threads", vopt.threads, "worker threads")->check(CLI::PositiveNumber);

    ZooArgs zoo;
    auto *c_zoo = app.add_subcommand("zoo", "emit a named state as a MatrixFile");
    c_zoo->add_option("--family", zoo.family, "werner|isotropic|stormer|chessboard|edge55|edge66|tiles|uuvvf|watrous|rainbow|bell")
        ->required();
    c_zoo->add_option("--d", zoo.d, "local dimension");
    c_zoo->add_option("--m", zoo.m, "rainbow: first dimension");
    c_zoo->add_option("--beta", zoo.beta);
    c_zoo->add_option("--alpha", zoo.alpha);
    c_zoo->add_option("--eps", zoo.eps);
    c_zoo->add_option("--delta", zoo.delta);
    c_zoo->add_option("--p", zoo.p, "Bell weights p00 p01 p10 p11")->delimiter(',');
    c_zoo->add_option("--out", zoo.out, "output path (default stdout)");
    c_zoo->add_flag("--meta", zoo.with_meta, "include family parameters and flags");

    ProtocolArgs proto;
    auto *c_proto = app.add_subcommand("protocol", "distillation protocol trajectories as CSV");
    c_proto->add_option("--name", proto.name, "recurrence|qpa|breeding|concentration")->required();
    c_proto->add_option("--y0", proto.y0, "recurrence: initial fidelity");
    c_proto->add_option("--tol", proto.tol, "recurrence: convergence tolerance");
    c_proto->add_option("--rounds", proto.rounds, "iteration cap")->check(CLI::NonNegativeNumber);
    c_proto->add_option("--p", proto.p, "weights")->delimiter(',');
    c_proto->add_option("--out", proto.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*c_check) return cmd_check(check);
        if (*c_distill) {
            dopt.seed = resolve_seed(dseed_opt, dseed);
            return cmd_distill(distill_path, copies, dopt);
        }
        if (*c_classify) return cmd_classify(parties);
        if (*c_volume) {
            vopt.seed = resolve_seed(vseed_opt, vseed);
            return cmd_volume(vopt, csv_path, json_path);
        }
        if (*c_zoo) return cmd_zoo(zoo);
        if (*c_proto) return cmd_protocol(proto);
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kExitUsage;
}
