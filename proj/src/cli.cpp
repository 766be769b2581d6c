#include "sympcausal/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sympcausal/pathlab.hpp"

#ifndef SYMPCAUSAL_VERSION
#define SYMPCAUSAL_VERSION "0.0.0"
#endif

namespace sympcausal::cli {

namespace {

using Json = nlohmann::ordered_json;

// Doubles always carry 17 significant digits; non-finite values become null.
void emit(const Json& j, std::ostream& os, int level) {
  const std::string pad(static_cast<std::size_t>(2 * level), ' ');
  const std::string inner(static_cast<std::size_t>(2 * level + 2), ' ');
  switch (j.type()) {
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        os << "null";
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      os << buf;
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      // Rows of numbers stay on one line.
      const bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
      os << '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i > 0) os << (flat ? ", " : ",");
        if (!flat) os << '\n' << inner;
        emit(j[i], os, level + 1);
      }
      if (!flat) os << '\n' << pad;
      os << ']';
      return;
    }
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        os << (first ? "\n" : ",\n") << inner << Json(key).dump() << ": ";
        first = false;
        emit(value, os, level + 1);
      }
      os << '\n' << pad << '}';
      return;
    }
    default:
      os << j.dump();
  }
}

Error malformed(const std::string& what) { return Error(ErrorKind::MalformedInput, what); }

Json matrix_rows(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json matrix_document(const Matrix& m, const std::string& label) {
  return Json{{"n", m.rows() / 2}, {"matrix", matrix_rows(m)}, {"label", label}};
}

Json complex_value(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Matrix parse_rows(const Json& rows, int n, const std::string& what) {
  const auto dim = static_cast<std::size_t>(2 * n);
  if (!rows.is_array() || rows.size() != dim) {
    throw malformed(what + " must be an array of 2n = " + std::to_string(dim) + " rows");
  }
  Matrix m(2 * n, 2 * n);
  for (std::size_t i = 0; i < dim; ++i) {
    const Json& row = rows[i];
    if (!row.is_array() || row.size() != dim) {
      throw malformed(what + " row " + std::to_string(i) + " must have 2n = " +
                      std::to_string(dim) + " entries");
    }
    for (std::size_t k = 0; k < dim; ++k) {
      if (!row[k].is_number() || !std::isfinite(row[k].get<double>())) {
        throw malformed(what + " entry (" + std::to_string(i) + ", " + std::to_string(k) +
                        ") must be a finite number");
      }
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = row[k].get<double>();
    }
  }
  return m;
}

int parse_n(const Json& doc) {
  if (!doc.is_object()) throw malformed("document must be a JSON object with \"n\" and \"matrix\"");
  const auto it = doc.find("n");
  if (it == doc.end() || !it->is_number_integer() || it->get<long long>() < 1 ||
      it->get<long long>() > 4096) {
    throw malformed("\"n\" must be a positive integer");
  }
  return static_cast<int>(it->get<long long>());
}

struct MatrixDoc {
  Matrix m;
  std::string label;
};

MatrixDoc parse_matrix_document(const Json& doc) {
  const int n = parse_n(doc);
  if (!doc.contains("matrix")) throw malformed("document needs a \"matrix\" field");
  MatrixDoc out{parse_rows(doc["matrix"], n, "\"matrix\""), {}};
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw malformed("\"label\" must be a string");
    out.label = doc["label"].get<std::string>();
  }
  return out;
}

Json parse_text(const std::string& text, const std::string& source) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw malformed(source + " is not valid JSON");
  return j;
}

std::vector<Json> load(const std::vector<std::string>& inputs, std::istream& in) {
  std::vector<std::string> paths = inputs;
  if (paths.empty()) paths.push_back("-");
  std::vector<Json> docs;
  for (const auto& p : paths) {
    std::string text;
    if (p == "-") {
      std::ostringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    } else {
      std::ifstream f(p);
      if (!f) throw malformed("cannot read input file " + p);
      std::ostringstream ss;
      ss << f.rdbuf();
      text = ss.str();
    }
    Json j = parse_text(text, p == "-" ? "standard input" : p);
    if (j.is_array()) {
      for (auto& e : j) docs.push_back(std::move(e));
    } else {
      docs.push_back(std::move(j));
    }
  }
  return docs;
}

struct Settings {
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  int trials = 100;
  double t_max = kDefaultTMax;
  int steps = 50;
  int n = 1;
  double t = 1.0;
  bool symplectic = false, hamiltonian = false, cone = false, elliptic = false;
  std::vector<std::string> inputs;

  Tolerances tolerances() const { return tol ? Tolerances::uniform(*tol) : Tolerances{}; }
  SpectrumTolerances spectrum() const {
    SpectrumTolerances s;
    if (tol) s.circle = s.real = s.signature = *tol;
    return s;
  }
};

Json tolerance_report(const Settings& s) {
  const Tolerances t = s.tolerances();
  const SpectrumTolerances st = s.spectrum();
  return Json{{"symplectic", t.symplectic}, {"hamiltonian", t.hamiltonian}, {"cone", t.cone},
              {"cluster_gap", st.cluster_gap}, {"circle", st.circle}, {"real", st.real},
              {"signature", st.signature}};
}

struct Outcome {
  Json result = Json::object();
  Json diagnostics = Json::object();
  int code = kSuccess;
};

class Runner {
 public:
  Runner(const Settings& s, std::istream& in) : s_(s), in_(in) {}

  std::vector<MatrixDoc> matrices(std::size_t min, std::size_t max) {
    const auto docs = load(s_.inputs, in_);
    if (docs.size() < min || docs.size() > max) {
      throw malformed("expected " + (min == max ? std::to_string(min)
                                                : std::to_string(min) + " to " + std::to_string(max)) +
                      " matrix documents, got " + std::to_string(docs.size()));
    }
    std::vector<MatrixDoc> out;
    for (const auto& d : docs) out.push_back(parse_matrix_document(d));
    for (const auto& d : out) {
      if (d.m.rows() != out.front().m.rows()) {
        throw Error(ErrorKind::DimensionMismatch, "all matrix documents must share the same n");
      }
    }
    return out;
  }

  SympMatrix symp(const MatrixDoc& d) { return SympMatrix(d.m, s_.tolerances().symplectic); }
  HamElement ham(const MatrixDoc& d) { return HamElement(d.m, s_.tolerances().hamiltonian); }
  SympMatrix one_symp() { return symp(matrices(1, 1).front()); }

  Outcome check() {
    const int flags = s_.symplectic + s_.hamiltonian + s_.cone + s_.elliptic;
    if (flags != 1) {
      throw Error(ErrorKind::InvalidArgument,
                  "check needs exactly one of --symplectic, --hamiltonian, --cone, --elliptic");
    }
    const MatrixDoc d = matrices(1, 1).front();
    Outcome o;
    if (s_.symplectic) {
      const auto c = is_symplectic(d.m, s_.tolerances().symplectic);
      o.result["symplectic"] = c.symplectic;
      o.diagnostics["residual"] = c.residual;
      o.diagnostics["relative_residual"] = c.relative_residual;
    } else if (s_.hamiltonian) {
      const double asym = hamiltonian_asymmetry(d.m);
      o.result["hamiltonian"] = asym <= s_.tolerances().hamiltonian * d.m.norm();
      o.diagnostics["asymmetry"] = asym;
    } else if (s_.cone) {
      const ConeStatus st = cone_status(ham(d), s_.tolerances());
      o.result["cone_status"] = std::string(to_string(st));
      o.result["causal"] = is_causal(st);
      o.result["interior"] = st == ConeStatus::Interior;
      const Eigen::SelfAdjointEigenSolver<Matrix> es(ham(d).symmetric_form(), Eigen::EigenvaluesOnly);
      o.diagnostics["min_eigenvalue_of_omega_x"] = es.eigenvalues().minCoeff();
      o.diagnostics["max_eigenvalue_of_omega_x"] = es.eigenvalues().maxCoeff();
    } else {
      const EllipticCheck c = is_positively_elliptic(symp(d), s_.spectrum());
      o.result["elliptic"] = c.elliptic;
      if (!c.elliptic) o.result["reason"] = std::string(describe(c.diagnosis));
      o.diagnostics["diagnosis"] = std::string(describe(c.diagnosis));
    }
    return o;
  }

  Outcome spectrum() {
    const SympMatrix w = one_symp();
    const KreinSpectrum spec = analyze_spectrum(w.matrix(), s_.spectrum());
    Outcome o;
    Json clusters = Json::array();
    for (const auto& c : spec.clusters) {
      Json eig = Json::array();
      for (Complex z : c.eigenvalues) eig.push_back(complex_value(z));
      Json sig = nullptr;
      if (c.krein_signature) sig = Json{{"p", c.krein_signature->p}, {"q", c.krein_signature->q}};
      clusters.push_back(Json{{"value", complex_value(c.value)},
                              {"multiplicity", c.alg_mult},
                              {"location", std::string(to_string(c.location))},
                              {"krein_signature", sig},
                              {"degenerate", c.degenerate},
                              {"eigenvalues", eig}});
    }
    o.result["clusters"] = clusters;
    o.result["any_degenerate"] = spec.any_degenerate();
    o.diagnostics["cluster_count"] = spec.clusters.size();
    return o;
  }

  Outcome splitting() {
    const SympMatrix w = one_symp();
    const EllipticSplitting sp = elliptic_splitting(w, s_.spectrum());
    Outcome o;
    o.result["angles"] = sp.angles;
    o.result["basis"] = matrix_rows(sp.basis);
    const Matrix normal = sp.basis.inverse() * w.matrix() * sp.basis;
    o.diagnostics["basis_symplectic_residual"] = is_symplectic(sp.basis).relative_residual;
    o.diagnostics["normal_form_residual"] = (normal - expm(sp.normal_form_log())).norm();
    return o;
  }

  Outcome log() {
    const SympMatrix w = one_symp();
    const EllipticLog lg = log_elliptic(w, s_.spectrum());
    Outcome o;
    o.result["x"] = matrix_document(lg.x.matrix(), "log");
    o.result["spectral_bound"] = lg.spectral_bound;
    o.result["angles"] = lg.angles;
    o.diagnostics["cone_status"] = std::string(to_string(cone_status(lg.x, s_.tolerances())));
    o.diagnostics["ill_conditioned"] = lg.ill_conditioned;
    o.diagnostics["roundtrip_residual"] =
        (exp_ham(lg.x).matrix() - w.matrix()).norm() / w.matrix().norm();
    return o;
  }

  Outcome tau_cmd() {
    const SympMatrix w = one_symp();
    Outcome o;
    o.result["tau"] = tau(w, s_.spectrum());
    o.diagnostics["angles"] = elliptic_angles(w, s_.spectrum());
    return o;
  }

  Outcome mu_cmd() {
    const SympMatrix w = one_symp();
    Outcome o;
    o.result["mu"] = mu_elliptic(w, s_.spectrum());
    o.diagnostics["angles"] = elliptic_angles(w, s_.spectrum());
    return o;
  }

  Outcome nu_cmd() {
    const SympMatrix w = one_symp();
    const Complex v = nu(w, s_.spectrum());
    Outcome o;
    o.result["nu"] = complex_value(v);
    o.diagnostics["arg"] = std::arg(v);
    o.diagnostics["modulus_error"] = std::abs(std::abs(v) - 1.0);
    return o;
  }

  Outcome dist() {
    const SympMatrix w = one_symp();
    Outcome o;
    o.result["dist"] = dist_formula(w, s_.spectrum());
    o.diagnostics["angles"] = elliptic_closure_angles(w, s_.spectrum());
    return o;
  }

  Outcome connect_cmd() {
    const auto docs = matrices(2, 2);
    const ConnectResult c = connect(symp(docs[0]), symp(docs[1]), s_.spectrum());
    Outcome o;
    o.result["x"] = matrix_document(c.x.matrix(), "connect");
    o.result["cone_status"] = std::string(to_string(c.status));
    o.result["length"] = finsler_G(c.x, s_.tolerances());
    o.diagnostics["endpoint_residual"] = c.endpoint_residual;
    o.diagnostics["samples"] = c.samples;
    o.diagnostics["samples_elliptic"] = c.samples_elliptic;
    return o;
  }

  Outcome exit_cmd() {
    const auto docs = matrices(2, 2);
    const ExitTimes et = exit_times(symp(docs[0]), ham(docs[1]), s_.t_max, s_.tolerances());
    auto reason = [](const ExitBound& b) -> Json {
      return b.reason ? Json(std::string(to_string(*b.reason))) : Json(nullptr);
    };
    Outcome o;
    o.result["c1"] = et.c1();
    o.result["c2"] = et.c2();
    o.result["backward_finite"] = et.backward.finite;
    o.result["forward_finite"] = et.forward.finite;
    o.result["backward_reason"] = reason(et.backward);
    o.result["forward_reason"] = reason(et.forward);
    o.diagnostics["t_max"] = s_.t_max;
    o.diagnostics["bracket_tolerance"] = kExitTolerance;
    if (!et.warning.empty()) o.diagnostics["warning"] = et.warning;
    return o;
  }

  Outcome geodesic_cmd() {
    const auto docs = matrices(1, 2);
    const HamElement x = ham(docs[0]);
    const SympMatrix w0 = docs.size() == 2 ? symp(docs[1]) : SympMatrix::identity(x.n());
    const SympMatrix w = geodesic(x, w0, s_.t);
    Outcome o;
    o.result["w"] = matrix_document(w.matrix(), "geodesic");
    o.diagnostics["t"] = s_.t;
    o.diagnostics["relative_symplectic_residual"] = is_symplectic(w.matrix()).relative_residual;
    o.diagnostics["direction_cone_status"] = std::string(to_string(cone_status(x, s_.tolerances())));
    return o;
  }

  CausalPath read_path() {
    const auto docs = load(s_.inputs, in_);
    if (docs.size() != 1) throw malformed("path-verify reads exactly one path document");
    const Json& d = docs.front();
    const int n = parse_n(d);
    if (!d.contains("start") || !d.contains("times") || !d.contains("tangents")) {
      throw malformed("path document needs \"start\", \"times\" and \"tangents\"");
    }
    const Matrix start = parse_rows(d["start"], n, "\"start\"");
    const Json& times = d["times"];
    const Json& tangents = d["tangents"];
    if (!times.is_array() || !tangents.is_array() || tangents.empty() ||
        times.size() != tangents.size() + 1) {
      throw malformed("path document needs N >= 1 tangents and N + 1 times");
    }
    std::vector<double> t;
    for (const auto& v : times) {
      if (!v.is_number() || !std::isfinite(v.get<double>())) {
        throw malformed("\"times\" entries must be finite numbers");
      }
      t.push_back(v.get<double>());
    }
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
      if (!(t[i + 1] > t[i])) throw malformed("\"times\" must be strictly increasing");
    }
    std::vector<HamElement> xs;
    for (std::size_t i = 0; i < tangents.size(); ++i) {
      xs.push_back(HamElement(parse_rows(tangents[i], n, "tangent " + std::to_string(i)),
                              s_.tolerances().hamiltonian));
    }
    return CausalPath::integrate(SympMatrix(start, s_.tolerances().symplectic), std::move(t),
                                 std::move(xs));
  }

  Outcome path_verify() {
    CausalPath path;
    bool generated = false;
    if (s_.inputs.empty() && s_.seed) {
      if (s_.steps < 1) throw Error(ErrorKind::InvalidArgument, "--steps must be >= 1");
      PathOptions opts;
      opts.steps = s_.steps;
      opts.step_size = 0.005;
      opts.confine = true;
      path = random_causal_path(*s_.seed, s_.n, SympMatrix::identity(s_.n), opts);
      generated = true;
    } else {
      path = read_path();
    }
    path.validate(s_.tolerances());

    Outcome o;
    o.result["steps"] = path.steps();
    o.result["length"] = path_length(path, s_.tolerances());
    Json taus = Json::array();
    std::optional<double> prev;
    bool monotone = true;
    for (const auto& w : path.matrices) {
      if (is_positively_elliptic(w, s_.spectrum()).elliptic) {
        const double t = tau(w, s_.spectrum());
        if (prev && !(t > *prev)) monotone = false;
        prev = t;
        taus.push_back(t);
      } else {
        prev.reset();
        taus.push_back(nullptr);
      }
    }
    o.result["tau"] = taus;
    o.result["tau_monotone"] = monotone;
    try {
      const double mu0 = is_positively_elliptic(path.matrices.front(), s_.spectrum()).elliptic
                             ? mu_elliptic(path.matrices.front(), s_.spectrum())
                             : 0.0;
      o.result["mu"] = mu_along_path(path, mu0);
    } catch (const Error& e) {
      o.result["mu"] = nullptr;
      o.diagnostics["mu_error"] = e.what();
    }
    try {
      const PhaseTrack track = track_phases(path);
      o.diagnostics["phase_refinements"] = track.refinements;
      o.diagnostics["crossings"] = track.crossings.size();
    } catch (const Error& e) {
      o.diagnostics["phase_error"] = e.what();
    }
    o.result["end"] = matrix_document(path.matrices.back().matrix(), "end");
    double drift = 0.0;
    for (const auto& w : path.matrices) {
      drift = std::max(drift, is_symplectic(w.matrix()).relative_residual);
    }
    o.diagnostics["max_relative_drift"] = drift;
    o.diagnostics["generated"] = generated;
    return o;
  }

  Outcome suite() {
    const SuiteReport r = verify_suite(*s_.seed, s_.n, s_.trials);
    Outcome o;
    Json props = Json::array();
    for (const auto& p : r.properties) {
      props.push_back(Json{{"name", p.name},
                           {"passed", p.passed},
                           {"informational", p.informational},
                           {"checked", p.checked},
                           {"worst", p.worst},
                           {"threshold", p.threshold},
                           {"detail", p.detail}});
    }
    o.result["all_passed"] = r.all_passed();
    o.result["properties"] = props;
    o.diagnostics["n"] = r.n;
    o.diagnostics["trials"] = r.trials;
    o.code = r.all_passed() ? kSuccess : kDomainError;
    return o;
  }

 private:
  const Settings& s_;
  std::istream& in_;
};

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::MalformedInput:
    case ErrorKind::InvalidArgument:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::OddDimension:
      return kMalformedInput;
    default:
      return kDomainError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Settings s;
  CLI::App app{"Causal geometry of the linear symplectic group", "sympcausal"};
  app.require_subcommand(1);
  app.set_version_flag("--version", SYMPCAUSAL_VERSION);

  double tol = 0.0;
  std::uint64_t seed = 0;
  auto* tol_opt = app.add_option("--tol", tol, "Override every default tolerance with this value");
  auto* seed_opt = app.add_option("--seed", seed, "Random seed");
  app.add_option("--trials", s.trials, "Trials per property (suite)");
  app.add_option("--t-max", s.t_max, "Search limit for exit-times");
  app.add_option("--steps", s.steps, "Steps for generated paths (path-verify)");
  app.add_option("--n", s.n, "Half-dimension for generated data (suite, path-verify)");
  app.fallthrough();

  struct Sub {
    const char* name;
    const char* help;
  };
  const std::vector<Sub> subs{
      {"check", "Membership tests: --symplectic, --hamiltonian, --cone or --elliptic"},
      {"spectrum", "Eigenvalue clusters with Krein signatures"},
      {"splitting", "Symplectic normal form of an elliptic matrix"},
      {"log", "Logarithm of an elliptic matrix"},
      {"tau", "Time function"},
      {"mu", "Maslov quasimorphism on the elliptic region"},
      {"nu", "Unit-circle invariant nu"},
      {"dist", "Distance from the identity"},
      {"connect", "Causal geodesic between two matrices"},
      {"exit-times", "Exit times of a geodesic from the elliptic region"},
      {"geodesic", "exp(tX) W0 (W0 defaults to the identity)"},
      {"path-verify", "Verify a causal path document, or generate one with --seed"},
      {"suite", "Run the property suite"},
  };
  for (const auto& sub : subs) {
    auto* c = app.add_subcommand(sub.name, sub.help);
    c->add_option("inputs", s.inputs, "Input JSON files (default: standard input)");
    if (std::string(sub.name) == "check") {
      c->add_flag("--symplectic", s.symplectic);
      c->add_flag("--hamiltonian", s.hamiltonian);
      c->add_flag("--cone", s.cone);
      c->add_flag("--elliptic", s.elliptic);
    }
    if (std::string(sub.name) == "geodesic") c->add_option("--t", s.t, "Geodesic parameter");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kMalformedInput;
  }
  if (tol_opt->count()) s.tol = tol;
  if (seed_opt->count()) s.seed = seed;

  const std::string name = app.get_subcommands().front()->get_name();
  if (name == "suite" && !s.seed) s.seed = 42;
  Json doc;
  doc["subcommand"] = name;
  int code = kSuccess;
  try {
    if (s.tol && !(*s.tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "--tol must be > 0");
    if (!(s.t_max > 0.0)) throw Error(ErrorKind::InvalidArgument, "--t-max must be > 0");
    if (s.trials < 1) throw Error(ErrorKind::InvalidArgument, "--trials must be >= 1");
    if (s.n < 1) throw Error(ErrorKind::InvalidArgument, "--n must be >= 1");
    if (!std::isfinite(s.t)) throw Error(ErrorKind::InvalidArgument, "--t must be finite");
    Runner r(s, in);
    Outcome o;
    if (name == "check") o = r.check();
    else if (name == "spectrum") o = r.spectrum();
    else if (name == "splitting") o = r.splitting();
    else if (name == "log") o = r.log();
    else if (name == "tau") o = r.tau_cmd();
    else if (name == "mu") o = r.mu_cmd();
    else if (name == "nu") o = r.nu_cmd();
    else if (name == "dist") o = r.dist();
    else if (name == "connect") o = r.connect_cmd();
    else if (name == "exit-times") o = r.exit_cmd();
    else if (name == "geodesic") o = r.geodesic_cmd();
    else if (name == "path-verify") o = r.path_verify();
    else o = r.suite();
    doc["result"] = std::move(o.result);
    doc["diagnostics"] = std::move(o.diagnostics);
    code = o.code;
  } catch (const Error& e) {
    code = exit_code_for(e.kind());
    doc["error"] = Json{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
  }
  doc["tolerances"] = tolerance_report(s);
  doc["provenance"] = Json{{"subcommand", name},
                           {"seed", s.seed ? Json(*s.seed) : Json(nullptr)},
                           {"version", SYMPCAUSAL_VERSION}};
  emit(doc, out, 0);
  out << '\n';
  return code;
}

}  // namespace sympcausal::cli
