#include "singquad/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "singquad/accel.hpp"
#include "singquad/analysis.hpp"
#include "singquad/errors.hpp"
#include "singquad/oracle.hpp"
#include "singquad/proofcheck.hpp"
#include "singquad/serialize.hpp"

namespace singquad {

namespace {

constexpr const char* kSchemaTag = "singquad/1";

std::vector<long> build_grid(const RunConfig& cfg) {
  if (cfg.n_min < 1 || cfg.n_max < cfg.n_min) {
    throw PreconditionError("grid range must satisfy 1 <= MIN <= MAX");
  }
  if (!(cfg.grid_factor > 1.0)) {
    throw PreconditionError("grid factor must exceed 1");
  }
  std::vector<long> grid;
  double v = static_cast<double>(cfg.n_min);
  long last = 0;
  while (true) {
    const long n = static_cast<long>(v + 0.5);
    if (n > cfg.n_max) break;
    if (n > last) {
      grid.push_back(n);
      last = n;
    }
    v *= cfg.grid_factor;
  }
  return grid;
}

Integrand load_integrand(const RunConfig& cfg) {
  if (cfg.fixture && cfg.integrand_file) {
    throw PreconditionError("give either a fixture name or a file, not both");
  }
  if (cfg.fixture) return corpus_fixture(*cfg.fixture);
  if (cfg.integrand_file) {
    std::ifstream in(*cfg.integrand_file);
    if (!in) {
      throw UnknownFixtureError("cannot open " + *cfg.integrand_file);
    }
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw PreconditionError(std::string("bad integrand file: ") + e.what());
    }
    return integrand_from_json(j);
  }
  throw PreconditionError("an integrand is required (--fixture or --integrand)");
}

std::string csv_row(std::initializer_list<std::string> cells) {
  std::string row;
  for (const auto& c : cells) {
    if (!row.empty()) row += ',';
    row += c;
  }
  row += '\n';
  return row;
}

std::string render_bound_text(const BoundReport& r) {
  std::ostringstream os;
  os << "claim " << r.proposition << " on " << r.integrand << ": "
     << (r.holds ? "holds" : "FAILS") << " for n >= " << r.threshold_n << "\n";
  for (const auto& [key, value] : r.constants) {
    os << "  " << key << " = " << format_g17(value) << "\n";
  }
  double worst = 0.0;
  if (!r.margins.empty()) {
    worst = r.margins.front();
    for (double m : r.margins) worst = std::min(worst, m);
  }
  os << "  worst margin = " << format_g17(worst) << " over " << r.grid.size()
     << " resolutions\n";
  if (!r.note.empty()) os << "  note: " << r.note << "\n";
  return os.str();
}

std::string render_bounds_csv(const std::vector<BoundReport>& reports) {
  std::string out = csv_row({"proposition", "integrand", "n", "margin", "holds"});
  for (const auto& r : reports) {
    for (std::size_t i = 0; i < r.grid.size(); ++i) {
      out += csv_row({r.proposition, r.integrand, std::to_string(r.grid[i]),
                      format_g17(r.margins[i]), r.holds ? "true" : "false"});
    }
  }
  return out;
}

struct CommandOutput {
  int exit_code = 0;
  std::string text;
  std::string csv;
  json body;  // command-specific payload merged into the envelope
};

CommandOutput run_verify(const RunConfig& cfg) {
  const Integrand f = load_integrand(cfg);
  const std::vector<long> grid = build_grid(cfg);

  std::vector<BoundReport> reports;
  switch (f.cls()) {
    case IntegrandClass::kP1:
      reports.push_back(verify_prop1(f, grid, cfg.N));
      break;
    case IntegrandClass::kP1Item2:
      reports.push_back(verify_prop1(f, grid, cfg.N));
      reports.push_back(verify_prop1_item2(f, grid, cfg.N));
      break;
    case IntegrandClass::kP2:
      reports.push_back(verify_prop2(f, grid, cfg.N));
      break;
    case IntegrandClass::kP3Raw:
      reports.push_back(verify_prop3(f, grid, cfg.N));
      break;
  }

  CommandOutput out;
  json arr = json::array();
  for (const auto& r : reports) {
    arr.push_back(to_json(r));
    out.text += render_bound_text(r);
    if (!r.holds) out.exit_code = 1;
  }
  out.body["integrand"] = f.name();
  out.body["N"] = cfg.N;
  out.body["reports"] = arr;
  out.csv = render_bounds_csv(reports);
  return out;
}

CommandOutput run_rates(const RunConfig& cfg) {
  const Integrand f = load_integrand(cfg);
  const std::vector<long> grid = build_grid(cfg);
  const SumScheme scheme = scheme_for(f);
  const ErrorSequence seq = compute_error_sequence(f, scheme, grid);
  const double p = cfg.p.value_or(
      scheme == SumScheme::kTrapezoidEndpoint
          ? 1.5
          : (scheme == SumScheme::kLeft ? 0.5 : -0.5));
  const RateFit fit = fit_rate(seq);
  const double envelope = envelope_constant(seq, p, cfg.N);

  CommandOutput out;
  out.body["integrand"] = f.name();
  out.body["scheme"] = to_string(scheme);
  out.body["p"] = p;
  out.body["fit"] = to_json(fit);
  out.body["L"] = envelope;
  json entries = json::array();
  for (const auto& e : seq.entries) {
    entries.push_back({{"n", e.n}, {"value", e.value}});
  }
  out.body["sequence"] = entries;

  std::ostringstream os;
  os << f.name() << " under the " << to_string(scheme) << " scheme\n"
     << "  fitted decay exponent = " << format_g17(fit.exponent) << "\n"
     << "  fitted constant       = " << format_g17(fit.constant) << "\n"
     << "  envelope L at p = " << format_g17(p) << ": " << format_g17(envelope)
     << " (n >= " << cfg.N << ")\n";
  for (const auto& e : seq.entries) {
    os << "  n = " << e.n << ": " << format_g17(e.value) << "\n";
  }
  out.text = os.str();

  out.csv = csv_row({"n", "value"});
  for (const auto& e : seq.entries) {
    out.csv += csv_row({std::to_string(e.n), format_g17(e.value)});
  }
  return out;
}

CommandOutput run_proofcheck(const RunConfig& cfg) {
  const Integrand f = load_integrand(cfg);
  CommandOutput out;
  out.body["integrand"] = f.name();

  if (f.cls() == IntegrandClass::kP1Item2) {
    const IdentityReport report = check_item2_identities(f, cfg.n, cfg.tol);
    const ProofConstants constants = compute_proof_constants(f, cfg.N);
    out.body["identities"] = to_json(report);
    out.body["constants"] = to_json(constants);
    out.exit_code = report.all_ok ? 0 : 1;

    std::ostringstream os;
    os << "identity checks for " << f.name() << " at n = " << report.n
       << " (tol " << format_g17(report.tol) << ")\n";
    for (const auto& c : report.checks) {
      os << "  " << (c.ok ? "ok  " : "FAIL") << " " << c.name
         << "  error = " << format_g17(c.error) << "\n";
    }
    os << "  assembled constant Lbar = " << format_g17(constants.lbar)
       << " (N = " << cfg.N << ")\n";
    out.text = os.str();

    out.csv = csv_row({"check", "lhs", "rhs", "error", "ok"});
    for (const auto& c : report.checks) {
      out.csv += csv_row({c.name, format_g17(c.lhs), format_g17(c.rhs),
                          format_g17(c.error), c.ok ? "true" : "false"});
    }
    return out;
  }

  if (f.cls() == IntegrandClass::kP2) {
    const Prop2Certificate cert =
        prop2_certificate(f, cfg.N, cfg.cmax_factor, cfg.cmin_frac);
    const long n = std::max(cfg.n, cert.min_admissible_n());
    const Prop2Decomposition dec = prop2_decomposition(f, n, cert);
    out.body["certificate"] = to_json(cert);
    out.body["n"] = n;
    out.body["decomposition"] = to_json(dec);
    const bool ok = dec.sigma2_bound_ok && dec.sigma3_bound_ok &&
                    dec.split_residual <= cfg.tol;
    out.exit_code = ok ? 0 : 1;

    std::ostringstream os;
    os << "certificate for " << f.name() << ": delta = "
       << format_g17(cert.delta) << ", C = " << format_g17(cert.C)
       << ", L2 = " << format_g17(cert.L2)
       << ", L2* = " << format_g17(cert.L2star)
       << ", l2 = " << format_g17(cert.l2) << "\n"
       << "split at n = " << n << ": sigma1 = " << format_g17(dec.sigma1)
       << ", sigma2 = " << format_g17(dec.sigma2)
       << ", sigma3 = " << format_g17(dec.sigma3) << "\n"
       << "  independent tail route agrees to "
       << format_g17(dec.split_residual) << " (relative)\n"
       << "  bounds " << (ok ? "hold" : "FAIL") << "\n";
    out.text = os.str();

    out.csv = csv_row({"quantity", "value"});
    out.csv += csv_row({"sigma1", format_g17(dec.sigma1)});
    out.csv += csv_row({"sigma2", format_g17(dec.sigma2)});
    out.csv += csv_row({"sigma3", format_g17(dec.sigma3)});
    out.csv += csv_row({"sigma3_direct", format_g17(dec.sigma3_direct)});
    out.csv += csv_row({"split_residual", format_g17(dec.split_residual)});
    return out;
  }

  throw HypothesisError("no proof machinery for class " + to_string(f.cls()));
}

CommandOutput run_extrapolate(const RunConfig& cfg) {
  const Integrand f = load_integrand(cfg);
  const AcceleratedEstimate est = extrapolate(f, cfg.n);

  CommandOutput out;
  out.body["integrand"] = f.name();
  json e = to_json(est);
  const ReferenceValue ref = exact_integral(f, 1e-12);
  e["exact_integral"] = ref.value;
  e["raw_error"] = std::abs(est.raw_sum - ref.value);
  e["corrected_error"] = std::abs(est.corrected_value - ref.value);
  out.body["estimate"] = e;

  std::ostringstream os;
  os << f.name() << " accelerated from n = " << est.seed_n << "\n"
     << "  raw sum at " << est.base_n << "       = " << format_g17(est.raw_sum)
     << "\n"
     << "  leading constant     = " << format_g17(est.leading_constant) << "\n"
     << "  corrected value      = " << format_g17(est.corrected_value) << "\n"
     << "  holdout residual     = " << format_g17(est.holdout_residual) << "\n"
     << "  error vs reference   = "
     << format_g17(std::abs(est.corrected_value - ref.value)) << " (raw "
     << format_g17(std::abs(est.raw_sum - ref.value)) << ")\n";
  out.text = os.str();

  out.csv = csv_row({"quantity", "value"});
  for (const auto& [key, value] : e.items()) {
    if (value.is_number_float()) {
      out.csv += csv_row({key, format_g17(value.get<double>())});
    } else {
      out.csv += csv_row({key, value.dump()});
    }
  }
  return out;
}

CommandOutput run_corpus(const RunConfig&) {
  CommandOutput out;
  json arr = json::array();
  std::string text;
  std::string csv = csv_row({"name", "class", "z0", "exact_integral"});
  for (const auto& f : corpus()) {
    arr.push_back(to_json(f));
    text += f.name() + " (" + to_string(f.cls()) +
            ", z0 = " + (f.z0() == -1.0 ? "-1" : "0") + ")\n";
    csv += csv_row({f.name(), to_string(f.cls()), f.z0() == -1.0 ? "-1" : "0",
                    f.exact_integral_hint()
                        ? format_g17(*f.exact_integral_hint())
                        : std::string()});
  }
  out.body["fixtures"] = arr;
  out.text = text;
  out.csv = csv;
  return out;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"endpoint-singular quadrature error analysis"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string grid_spec;

  const auto add_common = [&](CLI::App* cmd, bool wants_grid) {
    cmd->add_option("--fixture", cfg.fixture, "named fixture from the corpus");
    cmd->add_option("--integrand", cfg.integrand_file,
                    "integrand description file (json)");
    if (wants_grid) {
      cmd->add_option("--grid", grid_spec,
                      "resolution grid as MIN:MAX:FACTOR (default 64:65536:2)");
    }
    cmd->add_option("--N", cfg.N, "threshold resolution for the constants");
    cmd->add_option("--format", cfg.format, "output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--out", cfg.out_path, "write the output to this file");
  };

  CLI::App* verify = app.add_subcommand("verify", "check the error bounds");
  add_common(verify, true);

  CLI::App* rates = app.add_subcommand("rates", "fit empirical decay rates");
  add_common(rates, true);
  rates->add_option("--p", cfg.p,
                    "envelope decay exponent (default: the scheme's rate)");

  CLI::App* proofcheck =
      app.add_subcommand("proofcheck", "machine-check the bound derivations");
  add_common(proofcheck, false);
  proofcheck->add_option("--n", cfg.n, "resolution for the identity checks");
  proofcheck->add_option("--tol", cfg.tol, "identity tolerance");
  proofcheck->add_option("--cmax-factor", cfg.cmax_factor,
                         "upper bracket as a multiple of c1");
  proofcheck->add_option("--cmin-frac", cfg.cmin_frac,
                         "lower bracket position inside its legal interval");

  CLI::App* extrapolate =
      app.add_subcommand("extrapolate", "remove the leading error term");
  add_common(extrapolate, false);
  extrapolate->add_option("--n", cfg.n, "seed resolution");

  CLI::App* corpus_cmd =
      app.add_subcommand("corpus", "list the built-in fixtures");
  add_common(corpus_cmd, false);

  CliResult result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream os;
    std::ostringstream es;
    // CLI11 prints help to the first stream, errors to the second
    result.exit_code = app.exit(e, os, es);
    result.out = os.str();
    result.err = es.str();
    if (result.exit_code != 0) result.exit_code = 2;
    return result;
  }

  try {
    if (verify->parsed()) cfg.command = "verify";
    if (rates->parsed()) cfg.command = "rates";
    if (proofcheck->parsed()) cfg.command = "proofcheck";
    if (extrapolate->parsed()) cfg.command = "extrapolate";
    if (corpus_cmd->parsed()) cfg.command = "corpus";

    if (!grid_spec.empty()) {
      const auto first = grid_spec.find(':');
      const auto second = grid_spec.find(':', first + 1);
      if (first == std::string::npos || second == std::string::npos) {
        throw PreconditionError("grid spec must look like MIN:MAX:FACTOR");
      }
      try {
        cfg.n_min = std::stol(grid_spec.substr(0, first));
        cfg.n_max = std::stol(grid_spec.substr(first + 1, second - first - 1));
        cfg.grid_factor = std::stod(grid_spec.substr(second + 1));
      } catch (const std::exception&) {
        throw PreconditionError("grid spec must look like MIN:MAX:FACTOR");
      }
    }

    CommandOutput out;
    if (cfg.command == "verify") {
      out = run_verify(cfg);
    } else if (cfg.command == "rates") {
      out = run_rates(cfg);
    } else if (cfg.command == "proofcheck") {
      out = run_proofcheck(cfg);
    } else if (cfg.command == "extrapolate") {
      out = run_extrapolate(cfg);
    } else {
      out = run_corpus(cfg);
    }

    std::string rendered;
    if (cfg.format == "json") {
      json envelope;
      envelope["schema"] = kSchemaTag;
      envelope["command"] = cfg.command;
      for (const auto& [key, value] : out.body.items()) envelope[key] = value;
      rendered = envelope.dump(2) + "\n";
    } else if (cfg.format == "csv") {
      rendered = out.csv;
    } else {
      rendered = out.text;
    }

    if (cfg.out_path) {
      std::ofstream file(*cfg.out_path, std::ios::binary);
      if (!file) {
        throw PreconditionError("cannot write " + *cfg.out_path);
      }
      file << rendered;
    } else {
      result.out = rendered;
    }
    result.exit_code = out.exit_code;
  } catch (const UnknownFixtureError& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.exit_code = 2;
  } catch (const PreconditionError& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.exit_code = 2;
  } catch (const HypothesisError& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.exit_code = 3;
  } catch (const SchemeMismatchError& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.exit_code = 3;
  } catch (const Error& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.exit_code = 4;
  }
  return result;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  const CliResult result = run_cli(args);
  if (!result.out.empty()) std::fputs(result.out.c_str(), stdout);
  if (!result.err.empty()) std::fputs(result.err.c_str(), stderr);
  return result.exit_code;
}

}  // namespace singquad
