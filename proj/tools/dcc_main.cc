// Copyright 2026 The dcc Authors.
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

// Command-line front end: predict, simulate, validate, threshold.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dcc/closed_forms.h"
#include "dcc/rational_io.h"
#include "dcc/simulate.h"
#include "dcc/validation.h"
#include "dcc/version.h"

namespace {

using namespace dcc;
using json = nlohmann::ordered_json;

constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::vector<std::string> kColumns = {"probe", "d", "dA", "k", "theta", "state", "value", "value_float",
                                           "mc_mean", "mc_stderr", "z", "samples", "seed"};

struct Cell {
    std::string text;
    json js;
};

using Row = std::vector<std::pair<std::string, Cell>>;

Cell str_cell(const std::string &s) { return {s, s}; }
Cell int_cell(long long v) { return {std::to_string(v), v}; }
Cell dbl_cell(double v) { return {format_double(v), v}; }
Cell rat_cell(const mpq_class &v) {
    json j;
    auto put = [&](const char *key, const mpz_class &z) {
        if (z.fits_slong_p()) j[key] = z.get_si();
        else j[key] = z.get_str();
    };
    put("num", v.get_num());
    put("den", v.get_den());
    return {rational_str(v), j};
}
/// Integers become JSON numbers (or strings when too large), fractions {num, den}.
Cell num_cell(const mpq_class &v) {
    if (v.get_den() != 1) return rat_cell(v);
    if (v.get_num().fits_slong_p()) return int_cell(v.get_num().get_si());
    return str_cell(v.get_num().get_str());
}

std::string csv_quote(const std::string &s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string r = "\"";
    for (char c : s) {
        if (c == '"') r += '"';
        r += c;
    }
    return r + "\"";
}

struct Output {
    std::string command;
    std::string argv;
    json config = json::object();
    std::vector<std::string> columns = kColumns;
    std::vector<Row> rows;
    json extra = json::object();
    std::vector<std::string> notes;

    void write(const std::string &format, const std::string &path) const {
        std::ofstream file;
        if (!path.empty()) {
            file.open(path);
            if (!file) throw UsageError("cannot open output file: " + path);
        }
        std::ostream &os = path.empty() ? std::cout : file;
        if (format == "json") {
            json doc;
            doc["version"] = DCC_VERSION;
            doc["command"] = command;
            doc["argv"] = argv;
            doc["config"] = config;
            json rs = json::array();
            for (const auto &r : rows) {
                json o = json::object();
                for (const auto &[k, c] : r) o[k] = c.js;
                rs.push_back(o);
            }
            doc["rows"] = rs;
            for (auto it = extra.begin(); it != extra.end(); ++it) doc[it.key()] = it.value();
            os << doc.dump(2) << "\n";
            return;
        }
        os << "# dcc " << DCC_VERSION << "\n";
        os << "# argv: " << argv << "\n";
        os << "# config: " << config.dump() << "\n";
        for (const auto &n : notes) os << "# " << n << "\n";
        for (size_t i = 0; i < columns.size(); i++) os << (i ? "," : "") << columns[i];
        os << "\n";
        for (const auto &r : rows) {
            for (size_t i = 0; i < columns.size(); i++) {
                if (i) os << ",";
                for (const auto &[k, c] : r)
                    if (k == columns[i]) os << csv_quote(c.text);
            }
            os << "\n";
        }
    }
};

// "0..8", "0,1,2,4", "inf" (Haar limit, encoded as -1).
std::vector<long> parse_k_list(const std::string &text, bool allow_inf) {
    std::vector<long> ks;
    std::stringstream ss(text);
    std::string item;
    auto num = [&](const std::string &s) {
        size_t pos = 0;
        long v = -1;
        try {
            v = std::stol(s, &pos);
        } catch (const std::exception &) {
            pos = 0;
        }
        if (pos != s.size() || v < 0) throw UsageError("bad k value: " + s);
        return v;
    };
    while (std::getline(ss, item, ',')) {
        if (item == "inf") {
            if (!allow_inf) throw UsageError("k = inf is only valid for predict");
            ks.push_back(-1);
            continue;
        }
        auto dots = item.find("..");
        if (dots == std::string::npos) {
            ks.push_back(num(item));
            continue;
        }
        long a = num(item.substr(0, dots)), b = num(item.substr(dots + 2));
        if (b < a) throw UsageError("empty k range: " + item);
        for (long k = a; k <= b; k++) ks.push_back(k);
    }
    if (ks.empty()) throw UsageError("empty k list");
    return ks;
}

mpq_class cos4_of(const Angle &a) { return a.exact() ? *a.cos4 : mpq_class(std::cos(4 * a.radians)); }

Cell k_cell(long k) { return k < 0 ? str_cell("inf") : int_cell(k); }

struct Common {
    std::string format = "csv";
    std::string output;
};

void add_common(CLI::App *sub, Common &c) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("-o,--output", c.output, "Output file (default stdout)");
}

struct PredictConfig {
    std::string probe = "otoc8";
    std::optional<int> N;
    std::optional<std::string> d, dA, dB;
    std::string k = "0";
    std::string theta = "pi/4";
    std::string state = "stabilizer";
    std::optional<std::string> trq;
    std::string form = "derived";
};

mpq_class resolve_d(const std::optional<int> &N, const std::optional<std::string> &d) {
    if (N && d) throw UsageError("give either --N or --d, not both");
    if (N) {
        if (*N < 1 || *N > 60) throw UsageError("--N must be in [1, 60]");
        return dimension_of(*N);
    }
    if (d) return parse_rational(*d);
    throw UsageError("--N or --d is required");
}

int cmd_predict(const PredictConfig &c, Output &out) {
    Angle th = Angle::parse(c.theta);
    mpq_class cos4 = cos4_of(th);
    out.config = {{"probe", c.probe}, {"theta", th.str()}, {"state", c.state}, {"form", c.form}, {"k", c.k}};
    auto base = [&](const mpq_class &d, std::optional<mpq_class> dA, long k) {
        Row r{{"probe", str_cell(c.probe)}, {"d", num_cell(d)}};
        if (dA) r.push_back({"dA", num_cell(*dA)});
        r.push_back({"k", k_cell(k)});
        r.push_back({"theta", str_cell(th.str())});
        return r;
    };
    auto push = [&](Row r, const mpq_class &v) {
        r.push_back({"value", rat_cell(v)});
        r.push_back({"value_float", dbl_cell(v.get_d())});
        out.rows.push_back(r);
    };
    if (c.probe == "purity-mean") {
        if (!c.dA || !c.dB) throw UsageError("purity-mean needs --dA and --dB");
        mpq_class a = parse_rational(*c.dA), b = parse_rational(*c.dB);
        Row r{{"probe", str_cell(c.probe)}, {"d", num_cell(a * b)}, {"dA", num_cell(a)}};
        push(r, purity_average(a, b));
        return 0;
    }
    mpq_class d = resolve_d(c.N, c.d);
    out.config["d"] = rational_str(d);
    auto ks = parse_k_list(c.k, true);
    StateClass sc = parse_state_class(c.state);
    mpq_class custom = c.trq ? parse_rational(*c.trq) : mpq_class(0);
    if (sc == StateClass::Custom && !c.trq) throw UsageError("--state custom needs --trq");
    if (c.probe == "otoc8") {
        if (otoc8_is_formal(d)) out.notes.push_back("formal evaluation: d < 16 cannot host four disjoint Paulis");
        bool printed = c.form == "printed";
        for (long k : ks) {
            mpq_class v = k < 0 ? (printed ? otoc8_haar_printed(d) : otoc8_haar(d))
                                : (printed ? otoc8_doped_printed(d, k) : otoc8_doped(d, k));
            push(base(d, std::nullopt, k), v);
        }
        return 0;
    }
    if (c.probe == "purity-fluct" || c.probe == "purity-second-moment") {
        mpq_class dA = exact_sqrt(d);
        for (long k : ks) {
            Row r = base(d, dA, k);
            r.push_back({"state", str_cell(state_class_name(sc))});
            mpq_class v;
            if (c.probe == "purity-second-moment") {
                if (sc != StateClass::StabilizerZero) throw UsageError("purity-second-moment is for the stabilizer state");
                mpq_class m = purity_average(dA, dA);
                v = k < 0 ? purity_fluct_haar(d) + m * m : purity_second_moment(d, k, cos4);
            } else {
                v = k < 0 ? purity_fluct_haar(d) : purity_fluct(d, k, cos4, sc, custom);
            }
            push(r, v);
        }
        return 0;
    }
    if (c.probe == "purity-fluct-asym") {
        if (!c.dA) throw UsageError("purity-fluct-asym needs --dA");
        mpq_class dA = parse_rational(*c.dA);
        mpq_class tq = state_trQ(sc, d, custom);
        for (long k : ks) {
            Row r = base(d, dA, k);
            r.push_back({"state", str_cell(state_class_name(sc))});
            push(r, k < 0 ? purity_fluct_asymmetric_haar(d, dA) : purity_fluct_asymmetric(d, dA, k, cos4, tq));
        }
        return 0;
    }
    throw UsageError("unknown probe: " + c.probe);
}

struct SimulateConfig {
    std::string probe = "otoc8";
    int N = 4;
    std::optional<int> NA;
    std::string k = "0";
    std::string theta = "pi/4";
    std::string state = "stabilizer";
    long long samples = 10000;
    uint64_t seed = 1;
    std::string placement = "uniform";
    int fixed_qubit = 0;
    int threads = 0;
    std::string reference = "derived";
};

int cmd_simulate(const SimulateConfig &c, Output &out) {
    if (c.samples <= 0) throw UsageError("--samples must be positive");
    Angle th = Angle::parse(c.theta);
    auto ks = parse_k_list(c.k, false);
    mpq_class d = dimension_of(c.N);
    DopedCircuitSpec spec;
    spec.N = c.N;
    spec.theta = th.radians;
    spec.seed = c.seed;
    spec.placement = c.placement == "fixed" ? Placement::Fixed : Placement::UniformRandom;
    spec.fixed_qubit = c.fixed_qubit;
    out.config = {{"probe", c.probe}, {"N", c.N}, {"theta", th.str()}, {"k", c.k}, {"samples", c.samples},
                  {"seed", c.seed}, {"placement", c.placement}, {"state", c.state}, {"reference", c.reference}};
    auto finish = [&](Row r, const std::optional<mpq_class> &ref, const EstimatorResult &e) {
        if (ref) {
            r.push_back({"value", rat_cell(*ref)});
            r.push_back({"value_float", dbl_cell(ref->get_d())});
            r.push_back({"z", dbl_cell(e.z_against(ref->get_d()))});
        }
        r.push_back({"mc_mean", dbl_cell(e.mean)});
        r.push_back({"mc_stderr", dbl_cell(e.stderr_)});
        r.push_back({"samples", int_cell((long long)e.samples)});
        r.push_back({"seed", int_cell((long long)e.seed)});
        out.rows.push_back(r);
    };
    if (c.probe == "otoc8") {
        if (c.N < 4 || c.N > 6) throw UsageError("otoc8 simulation needs 4 <= N <= 6");
        bool exact_t = th.exact() && *th.cos4 == -1;
        for (long k : ks) {
            spec.k = (int)k;
            auto e = mc_otoc8(spec, default_otoc_paulis(c.N), (size_t)c.samples, c.threads);
            std::optional<mpq_class> ref;
            if (exact_t || k == 0) ref = c.reference == "printed" ? otoc8_doped_printed(d, k) : otoc8_doped(d, k);
            finish(Row{{"probe", str_cell(c.probe)}, {"d", num_cell(d)}, {"k", int_cell(k)},
                       {"theta", str_cell(th.str())}},
                   ref, e);
        }
        return 0;
    }
    if (c.probe == "purity-fluct" || c.probe == "purity-mean") {
        if (c.N < 1 || c.N > 14) throw UsageError("purity simulation needs 1 <= N <= 14");
        int na = c.NA.value_or(c.N / 2);
        if (na < 0 || na > c.N) throw UsageError("--NA must be in [0, N]");
        StateClass sc = parse_state_class(c.state);
        if (sc == StateClass::Custom) throw UsageError("simulate supports stabilizer and random-product states");
        StateSpec ss;
        ss.kind = sc == StateClass::RandomProduct ? StateSpec::RandomProduct : StateSpec::Zero;
        mpq_class dA = dimension_of(na), dB = dimension_of(c.N - na);
        for (long k : ks) {
            spec.k = (int)k;
            auto e = mc_purity_fluct(spec, na, ss, (size_t)c.samples, c.threads);
            std::optional<mpq_class> ref;
            if (c.probe == "purity-mean") ref = purity_average(dA, dB);
            else if (th.exact()) ref = purity_fluct_general(dA, dB, k, *th.cos4, state_trQ(sc, d));
            finish(Row{{"probe", str_cell(c.probe)}, {"d", num_cell(d)}, {"dA", num_cell(dA)},
                       {"k", int_cell(k)}, {"theta", str_cell(th.str())}, {"state", str_cell(state_class_name(sc))}},
                   ref, c.probe == "purity-mean" ? e.mean : e.variance);
        }
        return 0;
    }
    throw UsageError("unknown probe: " + c.probe);
}

struct ThresholdConfig {
    std::string probe = "otoc8";
    int n_min = 4, n_max = 12;
    std::string ratio = "1";
    std::string theta = "pi/4";
    long k_max = 100000;
};

int cmd_threshold(const ThresholdConfig &c, Output &out) {
    if (c.n_min < 2 || c.n_max < c.n_min || c.n_max > 40) throw UsageError("need 2 <= N-min <= N-max <= 40");
    Angle th = Angle::parse(c.theta);
    ThresholdQuery q;
    q.ratio = parse_rational(c.ratio);
    if (q.ratio <= 0) throw UsageError("--ratio must be positive");
    q.k_max = c.k_max;
    if (c.probe == "otoc8") {
        q.probe = Probe::Otoc8;
    } else if (c.probe == "purity-fluct") {
        q.probe = Probe::PurityFluct;
        if (!th.exact()) throw UsageError("purity thresholds need an angle with rational cos(4 theta)");
        q.cos4 = *th.cos4;
    } else {
        throw UsageError("unknown probe: " + c.probe);
    }
    out.config = {{"probe", c.probe}, {"N_min", c.n_min}, {"N_max", c.n_max}, {"ratio", rational_str(q.ratio)},
                  {"theta", c.probe == "otoc8" ? "pi/4" : th.str()}};
    out.columns = {"probe", "N", "d", "r", "theta", "k_star"};
    std::vector<double> xs, ys;
    bool skipped_odd = false;
    for (int N = c.n_min; N <= c.n_max; N++) {
        if (q.probe == Probe::PurityFluct && N % 2) {
            skipped_odd = true;
            continue;
        }
        q.d = dimension_of(N);
        long k = threshold_k(q);
        out.rows.push_back(Row{{"probe", str_cell(c.probe)}, {"N", int_cell(N)}, {"d", num_cell(q.d)},
                               {"r", num_cell(q.ratio)}, {"theta", str_cell(out.config["theta"])},
                               {"k_star", int_cell(k)}});
        if (k >= 0) {
            xs.push_back(N);
            ys.push_back((double)k);
        }
    }
    if (skipped_odd) out.notes.push_back("odd N skipped: the symmetric cut needs d_A = sqrt(d) to be an integer");
    if (xs.size() >= 2) {
        auto f = fit_affine(xs, ys);
        out.extra["fit"] = {{"slope", f.slope}, {"intercept", f.intercept}, {"max_residual", f.max_residual}};
        std::string sign = f.intercept < 0 ? " - " : " + ";
        out.notes.push_back("fit: k_star = " + format_double(f.slope) + " * N" + sign + format_double(std::abs(f.intercept)) +
                            ", max residual " + format_double(f.max_residual));
    }
    return 0;
}

int cmd_validate(const std::string &level, uint64_t seed, const Common &c) {
    auto checks = run_validation(level, seed);
    bool all = true;
    for (const auto &r : checks) all = all && r.pass;
    std::ofstream file;
    if (!c.output.empty()) {
        file.open(c.output);
        if (!file) throw UsageError("cannot open output file: " + c.output);
    }
    std::ostream &os = c.output.empty() ? std::cout : file;
    if (c.format == "json") {
        json doc;
        doc["version"] = DCC_VERSION;
        doc["level"] = level;
        doc["seed"] = seed;
        doc["pass"] = all;
        json arr = json::array();
        for (const auto &r : checks)
            arr.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
        doc["checks"] = arr;
        os << doc.dump(2) << "\n";
    } else {
        os << "# dcc " << DCC_VERSION << " validate level=" << level << " seed=" << seed << "\n";
        os << "name,pass,detail,seconds\n";
        for (const auto &r : checks)
            os << r.name << "," << (r.pass ? "PASS" : "FAIL") << "," << csv_quote(r.detail) << ","
               << format_double(r.seconds) << "\n";
    }
    return all ? 0 : kExitValidation;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Fourth-moment channel of k-doped random Clifford circuits"};
    app.set_version_flag("--version", DCC_VERSION);
    app.require_subcommand(1);

    std::string joined;
    for (int i = 1; i < argc; i++) joined += (i > 1 ? " " : "") + std::string(argv[i]);

    Common pc, sc, tc, vc;
    PredictConfig pred;
    auto *p = app.add_subcommand("predict", "Exact closed-form predictions");
    p->add_option("--probe", pred.probe)
        ->check(CLI::IsMember({"otoc8", "purity-fluct", "purity-mean", "purity-second-moment", "purity-fluct-asym"}));
    p->add_option("--N", pred.N, "Qubits (d = 2^N)");
    p->add_option("--d", pred.d, "Dimension (formal values allowed for otoc8)");
    p->add_option("--dA", pred.dA);
    p->add_option("--dB", pred.dB);
    p->add_option("--k", pred.k, "k list: 3, 0..8, 0,1,4 or inf");
    p->add_option("--theta", pred.theta, "Phase-gate angle, e.g. pi/4");
    p->add_option("--state", pred.state)->check(CLI::IsMember({"stabilizer", "random-product", "custom"}));
    p->add_option("--trq", pred.trq, "tr(psi^4 Q) for --state custom");
    p->add_option("--form", pred.form, "derived or printed OTOC forms")->check(CLI::IsMember({"derived", "printed"}));
    add_common(p, pc);

    SimulateConfig sim;
    auto *s = app.add_subcommand("simulate", "Monte-Carlo estimates with error bars");
    s->add_option("--probe", sim.probe)->check(CLI::IsMember({"otoc8", "purity-fluct", "purity-mean"}));
    s->add_option("--N", sim.N);
    s->add_option("--NA", sim.NA, "Qubits in subsystem A (default N/2)");
    s->add_option("--k", sim.k);
    s->add_option("--theta", sim.theta);
    s->add_option("--state", sim.state)->check(CLI::IsMember({"stabilizer", "random-product"}));
    s->add_option("--samples", sim.samples);
    s->add_option("--seed", sim.seed);
    s->add_option("--placement", sim.placement)->check(CLI::IsMember({"uniform", "fixed"}));
    s->add_option("--fixed-qubit", sim.fixed_qubit);
    s->add_option("--threads", sim.threads, "Worker threads (default DCC_THREADS or all cores)");
    s->add_option("--reference", sim.reference)->check(CLI::IsMember({"derived", "printed"}));
    add_common(s, sc);

    std::string level = "fast";
    uint64_t vseed = 1;
    auto *v = app.add_subcommand("validate", "Run the invariant suites");
    v->add_option("--level", level)->check(CLI::IsMember({"fast", "full"}));
    v->add_option("--seed", vseed);
    v->add_option("--format", vc.format)->check(CLI::IsMember({"csv", "json"}));
    v->add_option("-o,--output", vc.output);

    ThresholdConfig thr;
    auto *t = app.add_subcommand("threshold", "Smallest k reaching the Haar value within a ratio");
    t->add_option("--probe", thr.probe)->check(CLI::IsMember({"otoc8", "purity-fluct"}));
    t->add_option("--N-min", thr.n_min);
    t->add_option("--N-max", thr.n_max);
    t->add_option("--ratio", thr.ratio);
    t->add_option("--theta", thr.theta);
    t->add_option("--k-max", thr.k_max);
    add_common(t, tc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        Output out;
        out.argv = joined;
        if (*p) {
            out.command = "predict";
            cmd_predict(pred, out);
            out.write(pc.format, pc.output);
        } else if (*s) {
            out.command = "simulate";
            cmd_simulate(sim, out);
            out.write(sc.format, sc.output);
        } else if (*t) {
            out.command = "threshold";
            cmd_threshold(thr, out);
            out.write(tc.format, tc.output);
        } else if (*v) {
            return cmd_validate(level, vseed, vc);
        }
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::length_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
