// Command-line front end: every library pipeline behind a subcommand, with a
// machine-readable JSON run report on stdout.  Exit codes: 0 ok, 1 warning,
// 2 usage/parse error, 3 mathematical validation failure.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <Eigen/Eigenvalues>
#include <json.hpp>

#include "framekz/cholesky.hpp"
#include "framekz/hilbert.hpp"
#include "framekz/io.hpp"
#include "framekz/kaczmarz.hpp"
#include "framekz/synthesis.hpp"
#include "framekz/triangular.hpp"
#include "framekz/types.hpp"

namespace {

using nlohmann::json;
using namespace framekz;

json violations_json(const std::vector<Violation>& vs) {
  json arr = json::array();
  for (const auto& v : vs) {
    arr.push_back({{"name", v.name}, {"margin", v.margin}});
  }
  return arr;
}

json tolerances_json(const Tolerances& t) {
  return {{"eps_unit", t.eps_unit},
          {"eps_herm", t.eps_herm},
          {"eps_rank", t.eps_rank},
          {"eps_eig", t.eps_eig},
          {"eps_id", t.eps_id}};
}

json real_array(const std::vector<double>& xs) {
  return json(xs);
}

void emit(json report, const char* status) {
  report["status"] = status;
  std::cout << report.dump(2) << std::endl;
}

int fail_validation(json report, const ValidationError& e) {
  std::cerr << e.what() << '\n';
  for (const auto& v : e.violations()) {
    std::cerr << v.name << " = " << v.margin << '\n';
  }
  report["errors"] = violations_json(e.violations());
  emit(std::move(report), "error");
  return 3;
}

// out.json -> out.gram.json
std::string default_gram_path(std::string out) {
  const std::string suffix = ".json";
  if (out.size() > suffix.size() &&
      out.compare(out.size() - suffix.size(), suffix.size(), suffix) == 0) {
    out.resize(out.size() - suffix.size());
  }
  return out + ".gram.json";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int run_forward(const std::string& input, const std::string& out,
                std::string gram_out, const Tolerances& tol) {
  if (gram_out.empty()) gram_out = default_gram_path(out);
  json report{{"command", "forward"},
              {"inputs",
               {{"input", input}, {"out", out}, {"gram", gram_out},
                {"tolerances", tolerances_json(tol)}}}};
  const SequenceDoc doc = read_sequence(input);
  try {
    const VecList gs = auxiliary_sequence(doc.vectors, tol);
    const Mat g = gram(gs);
    write_sequence(out, gs, {{"kind", "bessel"}});
    write_matrix(gram_out, g);

    double max_norm_error = 0.0;
    for (const Vec& e : doc.vectors) {
      max_norm_error = std::max(max_norm_error, std::abs(e.norm() - 1.0));
    }
    report["diagnostics"] = {
        {"max_unit_norm_error", max_norm_error},
        {"gram_operator_norm", operator_norm(g)},
        {"g0_norm_error", std::abs(gs[0].norm() - 1.0)},
    };
    report["outputs"] = {{"sequence", out}, {"gram", gram_out}};
    emit(std::move(report), "ok");
    return 0;
  } catch (const ValidationError& e) {
    return fail_validation(std::move(report), e);
  }
}

int run_synthesize(const std::string& input, const std::string& method,
                   const std::string& out, const Tolerances& tol) {
  json report{{"command", "synthesize"},
              {"inputs",
               {{"input", input}, {"method", method}, {"out", out},
                {"tolerances", tolerances_json(tol)}}}};
  const SequenceDoc doc = read_sequence(input);
  try {
    const SynthesisResult r = (method == "triangular")
                                  ? synthesize_triangular(doc.vectors, tol)
                                  : synthesize_admissible(doc.vectors, tol);
    write_sequence(out, r.units, {{"kind", "units"}});

    json events = json::array();
    for (const KernelEvent& ev : r.kernel_events) {
      events.push_back({{"step", ev.step},
                        {"kernel_dim", ev.kernel_dim},
                        {"containment_residual", ev.containment_residual},
                        {"y_norm", ev.y_norm},
                        {"lambda", ev.lambda}});
    }
    report["diagnostics"] = {
        {"max_unit_norm_error", r.max_unit_norm_error},
        {"max_recurrence_error", r.max_recurrence_error},
        {"kernel_events", std::move(events)},
    };
    report["verdicts"] = {{"unique", yes_no(r.unique)}};
    report["outputs"] = {{"sequence", out}};
    if (!r.unique) {
      report["warnings"] = json::array({"non_unique_completion"});
      emit(std::move(report), "warning");
      return 1;
    }
    emit(std::move(report), "ok");
    return 0;
  } catch (const ValidationError& e) {
    return fail_validation(std::move(report), e);
  }
}

int run_analyze(const std::string& input, const std::string& kind,
                const Tolerances& tol) {
  json report{{"command", "analyze"},
              {"inputs",
               {{"input", input}, {"kind", kind},
                {"tolerances", tolerances_json(tol)}}}};
  const SequenceDoc doc = read_sequence(input);
  try {
    json diagnostics;
    json verdicts;

    // Everything spectral refers to the Bessel-side Gram; a unit-vector
    // input is first pushed through the recurrence.
    VecList gs;
    if (kind == "units") {
      const StabilityReport rep = stability_report(doc.vectors, SequenceKind::units, tol);
      gs = auxiliary_sequence(doc.vectors, tol);
      const TriangularPair pair = triangular_pair(doc.vectors, tol);
      diagnostics["trace_dimension"] = trace_dimension(pair);
      diagnostics["gram_identity_residual"] = identity13_residual(pair);
      diagnostics["stable_through"] = rep.stable_through;
      diagnostics["max_tested"] = rep.max_tested;
      diagnostics["consecutive_overlaps"] = real_array(rep.consecutive_overlaps);
      verdicts["stable"] = yes_no(rep.stable());
      verdicts["bessel"] = "yes";  // the recurrence output is one by construction
    } else {
      gs = doc.vectors;
      const BesselValidation v = validate_bessel(gs, tol);
      const StabilityReport rep = stability_report(gs, SequenceKind::bessel, tol);
      diagnostics["g0_norm_error"] = v.g0_norm_error;
      diagnostics["g0_orthogonality_error"] = v.g0_orth_error;
      diagnostics["contraction_excess"] = v.contraction_excess;
      diagnostics["trace_dimension"] = gram(gs).trace().real();
      diagnostics["stable_through"] = rep.stable_through;
      diagnostics["max_tested"] = rep.max_tested;
      diagnostics["consecutive_overlaps"] = real_array(rep.consecutive_overlaps);
      diagnostics["violations"] = violations_json(v.violations);
      verdicts["stable"] = yes_no(rep.stable());
      verdicts["bessel"] = yes_no(v.ok);
    }

    const Mat g = gram(gs);
    Eigen::SelfAdjointEigenSolver<Mat> eig((g + g.adjoint()) / 2.0,
                                           Eigen::EigenvaluesOnly);
    std::vector<double> spectrum(eig.eigenvalues().data(),
                                 eig.eigenvalues().data() + eig.eigenvalues().size());
    diagnostics["gram_eigenvalues"] = real_array(spectrum);
    diagnostics["contraction_excess"] =
        std::max(0.0, operator_norm(g) - 1.0);
    diagnostics["projection_residual"] = operator_norm(g * g - g);

    const bool bessel_ok = verdicts["bessel"] == "yes";
    const bool tight =
        bessel_ok && spans_space(gs, tol) && is_projection(g, tol);
    verdicts["tight_frame"] = yes_no(tight);

    report["diagnostics"] = std::move(diagnostics);
    report["verdicts"] = std::move(verdicts);
    emit(std::move(report), "ok");
    return 0;
  } catch (const ValidationError& e) {
    return fail_validation(std::move(report), e);
  }
}

int run_kaczmarz(const std::string& input, const std::vector<double>& x_values,
                 const std::string& x_file, const std::string& trace_out,
                 const Tolerances& tol) {
  json report{{"command", "kaczmarz"},
              {"inputs",
               {{"input", input}, {"trace", trace_out},
                {"tolerances", tolerances_json(tol)}}}};
  const SequenceDoc doc = read_sequence(input);

  Vec x;
  if (!x_file.empty()) {
    const SequenceDoc xdoc = read_sequence(x_file);
    x = xdoc.vectors[0];
    report["inputs"]["x_file"] = x_file;
  } else {
    if (x_values.size() % 2 != 0) {
      throw std::invalid_argument(
          "--x expects interleaved re/im pairs (even count of numbers)");
    }
    x.resize(static_cast<Eigen::Index>(x_values.size() / 2));
    for (Eigen::Index k = 0; k < x.size(); ++k) {
      x(k) = Complex(x_values[2 * static_cast<std::size_t>(k)],
                     x_values[2 * static_cast<std::size_t>(k) + 1]);
    }
    report["inputs"]["x"] = real_array(x_values);
  }

  try {
    const KaczmarzTrace trace = framekz::run_kaczmarz(x, doc.vectors, tol);
    if (!trace_out.empty()) {
      write_trace_csv(trace_out, trace, x);
    }

    std::vector<double> coef_abs;
    coef_abs.reserve(trace.coefficients.size());
    for (const Complex& c : trace.coefficients) coef_abs.push_back(std::abs(c));

    report["diagnostics"] = {
        {"steps", trace.residual_norms.size()},
        {"final_residual", trace.residual_norms.back()},
        {"defect", trace.defect},
        {"max_energy_residual", energy_identity_residual(x, trace)},
        {"residuals", real_array(trace.residual_norms)},
        {"coef_abs", real_array(coef_abs)},
    };
    if (!trace_out.empty()) {
      report["outputs"] = {{"trace", trace_out}};
    }
    emit(std::move(report), "ok");
    return 0;
  } catch (const ValidationError& e) {
    return fail_validation(std::move(report), e);
  }
}

int run_chol(const std::string& input, const std::string& out,
             const Tolerances& tol) {
  json report{{"command", "chol"},
              {"inputs",
               {{"input", input}, {"out", out},
                {"tolerances", tolerances_json(tol)}}}};
  const Mat b = read_matrix(input);
  try {
    const CholeskyFactor f = cholesky_psd(b, tol);
    write_matrix(out, f.v);
    report["diagnostics"] = {
        {"factor_residual", max_abs(f.v * f.v.adjoint() - b)},
        {"rank", f.rank},
    };
    report["outputs"] = {{"factor", out},
                         {"pivots", json(f.pivots.indices)},
                         {"deltas", real_array(f.pivots.deltas)}};
    emit(std::move(report), "ok");
    return 0;
  } catch (const ValidationError& e) {
    return fail_validation(std::move(report), e);
  }
}

int run_equiv(const std::string& a, const std::string& b,
              const Tolerances& tol) {
  json report{{"command", "equiv"},
              {"inputs",
               {{"a", a}, {"b", b}, {"tolerances", tolerances_json(tol)}}}};
  const SequenceDoc da = read_sequence(a);
  const SequenceDoc db = read_sequence(b);
  try {
    const double margin = equivalence_margin(da.vectors, db.vectors, tol);
    report["diagnostics"] = {{"margin", margin}};
    report["verdicts"] = {{"equivalent", yes_no(margin <= tol.eps_id)}};
    emit(std::move(report), "ok");
    return 0;
  } catch (const ValidationError& e) {
    return fail_validation(std::move(report), e);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kaczmarz auxiliary sequences, Bessel/tight-frame analysis and synthesis"};
  app.require_subcommand(1);

  framekz::Tolerances tol;
  app.add_option("--eps-unit", tol.eps_unit, "unit-norm slack")
      ->capture_default_str();
  app.add_option("--eps-herm", tol.eps_herm, "Hermitian symmetry slack")
      ->capture_default_str();
  app.add_option("--eps-rank", tol.eps_rank, "relative pivot/rank threshold")
      ->envname("FRAMEKZ_EPS_RANK")
      ->capture_default_str();
  app.add_option("--eps-eig", tol.eps_eig, "eigenvalue floor for PSD/contraction tests")
      ->envname("FRAMEKZ_EPS_EIG")
      ->capture_default_str();
  app.add_option("--eps-id", tol.eps_id, "matrix-identity residual slack")
      ->envname("FRAMEKZ_EPS_ID")
      ->capture_default_str();

  std::string input, out, gram_out, method, kind, x_file, trace_out, path_a, path_b;
  std::vector<double> x_values;

  CLI::App* forward = app.add_subcommand(
      "forward", "unit vectors -> auxiliary sequence and its Gram");
  forward->fallthrough();
  forward->add_option("input", input, "unit-vector sequence file")->required();
  forward->add_option("-o,--out", out, "auxiliary sequence output file")->required();
  forward->add_option("--gram", gram_out, "Gram matrix output file (default: <out>.gram.json)");

  CLI::App* synthesize = app.add_subcommand(
      "synthesize", "auxiliary sequence -> unit vectors");
  synthesize->fallthrough();
  synthesize->add_option("input", input, "Bessel sequence file")->required();
  synthesize->add_option("--method", method, "synthesis path")
      ->required()
      ->check(CLI::IsMember({"triangular", "admissible"}));
  synthesize->add_option("-o,--out", out, "unit-vector output file")->required();

  CLI::App* analyze = app.add_subcommand("analyze", "sequence diagnostics");
  analyze->fallthrough();
  analyze->add_option("input", input, "sequence file")->required();
  analyze->add_option("--kind", kind, "how to interpret the input")
      ->required()
      ->check(CLI::IsMember({"units", "bessel"}));

  CLI::App* kaczmarz = app.add_subcommand(
      "kaczmarz", "run the algorithm against a unit-vector sequence");
  kaczmarz->fallthrough();
  kaczmarz->add_option("input", input, "unit-vector sequence file")->required();
  CLI::Option* opt_x = kaczmarz->add_option(
      "--x", x_values, "target vector, interleaved re/im values");
  kaczmarz->add_option("--x-file", x_file, "target vector from a sequence file")
      ->excludes(opt_x);
  kaczmarz->add_option("--trace", trace_out, "write per-step trace CSV here");

  CLI::App* chol = app.add_subcommand(
      "chol", "pivoted semidefinite Cholesky factorization B = VV*");
  chol->fallthrough();
  chol->add_option("input", input, "Hermitian PSD matrix file")->required();
  chol->add_option("-o,--out", out, "factor output file")->required();

  CLI::App* equiv = app.add_subcommand(
      "equiv", "compare two unit-vector sequences up to unitary equivalence");
  equiv->fallthrough();
  equiv->add_option("a", path_a, "first sequence file")->required();
  equiv->add_option("b", path_b, "second sequence file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    tol.require_valid();
    if (*forward) return run_forward(input, out, gram_out, tol);
    if (*synthesize) return run_synthesize(input, method, out, tol);
    if (*analyze) return run_analyze(input, kind, tol);
    if (*kaczmarz) {
      if (x_values.empty() && x_file.empty()) {
        throw std::invalid_argument("kaczmarz requires --x or --x-file");
      }
      return run_kaczmarz(input, x_values, x_file, trace_out, tol);
    }
    if (*chol) return run_chol(input, out, tol);
    if (*equiv) return run_equiv(path_a, path_b, tol);
  } catch (const framekz::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  return 2;  // unreachable: require_subcommand guarantees a branch
}
