#include <cilef/cli/commands.hpp>
#include <cilef/cli/instance.hpp>
#include <cilef/cli/report.hpp>
#include <cilef/cli/sweep.hpp>
#include <cilef/error.hpp>
#include <cilef/inverse_systems.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iomanip>

namespace cilef::cli {

namespace {

struct Flags {
  std::string path;
  std::string order = "grevlex";
  std::string format = "text";
  std::string mode = "symbolic";
  bool exact = false;
  int trials = 5;
  int bound = 100;
  std::uint64_t seed = 0;
  CLI::Option* order_option = nullptr;
  CLI::Option* seed_option = nullptr;
};

struct Context {
  Instance instance;
  OrderKind order;
  ProbabilisticOptions probabilistic;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

void add_format(CLI::App* cmd, Flags& f) {
  cmd->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

void add_order(CLI::App* cmd, Flags& f) {
  f.order_option =
      cmd->add_option("--order", f.order, "Monomial order")->check(CLI::IsMember({"grevlex", "lex"}));
}

void add_probabilistic(CLI::App* cmd, Flags& f) {
  cmd->add_option("--trials", f.trials, "Random trials")->check(CLI::PositiveNumber);
  cmd->add_option("--bound", f.bound, "Sample coordinates from [-bound, bound]")
      ->check(CLI::Range(2, 1 << 30));
  f.seed_option = cmd->add_option("--seed", f.seed, "Random seed");
}

CLI::App* add_file_command(CLI::App& app, const std::string& name, const std::string& help,
                           Flags& f) {
  CLI::App* cmd = app.add_subcommand(name, help);
  cmd->add_option("instance", f.path, "Instance JSON file")->required();
  add_order(cmd, f);
  add_format(cmd, f);
  return cmd;
}

Context load(const Flags& f) {
  Context c{load_instance(f.path), OrderKind::Grevlex, {}};
  if (f.order_option && f.order_option->count()) {
    c.order = parse_order_kind(f.order);
  } else if (c.instance.order) {
    c.order = *c.instance.order;
  }
  c.probabilistic.trials = f.trials;
  c.probabilistic.bound = f.bound;
  if (f.seed_option && f.seed_option->count()) {
    c.probabilistic.seed = f.seed;
  } else if (c.instance.seed) {
    c.probabilistic.seed = *c.instance.seed;
  }
  return c;
}

double elapsed(const Context& c) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - c.start).count();
}

Json header(const Context& c) {
  Json out;
  out["instance"] = to_json(c.instance);
  out["order"] = std::string(to_string(c.order));
  out["seed"] = c.probabilistic.seed;
  out["field"] = "rationals";  // verdicts are exact over Q
  return out;
}

void emit(std::ostream& out, Json j, const Context& c) {
  j["timings"] = {{"seconds", elapsed(c)}};
  out << j.dump(2) << '\n';
}

void print_algebra(std::ostream& out, const ArtinianCI& alg) {
  out << "T: " << alg.socle_degree() << '\n';
  out << "hilbert: " << format_hilbert(alg.hilbert_function()) << '\n';
}

int cmd_analyze(const Flags& f, std::ostream& out, std::ostream& err) {
  Context c = load(f);
  const ArtinianCI alg = build(c.instance, c.order);
  const Polynomial A = associated_form(alg);
  const bool duality = verify_macaulay_duality(alg);
  const bool partials = verify_partials_span(alg);
  const EquivalenceReport report = theorem_equivalence_check(alg, A, c.probabilistic);

  if (f.format == "json") {
    Json j = header(c);
    j["hilbert"] = alg.hilbert_function();
    j["T"] = alg.socle_degree();
    j["associated_form"] = to_json(A);
    j["macaulay_duality"] = duality;
    j["partials_span"] = partials;
    j["slp"] = to_json(report.slp);
    j["hessian"] = to_json(report.hessian);
    j["agree"] = std::string(to_string(report.agree));
    j["hypothesis_satisfied"] = report.hypothesis_satisfied;
    emit(out, std::move(j), c);
  } else {
    out << "instance: " << c.instance.source << '\n';
    out << "order: " << to_string(c.order) << ", field: rationals\n";
    print_algebra(out, alg);
    out << "associated form: " << A << '\n';
    out << "macaulay duality: " << std::boolalpha << duality << '\n';
    out << "partials span: " << partials << '\n';
    out << describe(report.slp) << '\n';
    out << describe(report.hessian) << '\n';
    out << "agree: " << to_string(report.agree) << '\n';
    out << "time: " << std::fixed << std::setprecision(3) << elapsed(c) << " s\n";
  }
  if (!report.hypothesis_satisfied) {
    err << "warning: fewer than 3 variables, the equivalence is not guaranteed\n";
  }
  if (!duality || !partials) return kExitAnomaly;
  if (report.agree == Truth::No && report.hypothesis_satisfied) return kExitAnomaly;
  if (report.agree == Truth::Unknown) err << "warning: inconclusive probabilistic verdict\n";
  return kExitOk;
}

int cmd_associated_form(const Flags& f, std::ostream& out) {
  Context c = load(f);
  const ArtinianCI alg = build(c.instance, c.order);
  const Polynomial A = associated_form(alg);
  if (f.format == "json") {
    Json j = header(c);
    j["T"] = alg.socle_degree();
    j["associated_form"] = to_json(A);
    emit(out, std::move(j), c);
  } else {
    out << "T: " << alg.socle_degree() << '\n';
    out << "associated form: " << A << '\n';
  }
  return kExitOk;
}

int cmd_hessian(const Flags& f, std::ostream& out) {
  Context c = load(f);
  const ArtinianCI alg = build(c.instance, c.order);
  const Polynomial A = associated_form(alg);
  const HessianVerdict v = hessian_nonzero(A, parse_hessian_mode(f.mode), c.probabilistic);
  if (f.format == "json") {
    Json j = header(c);
    j["associated_form"] = to_json(A);
    j["hessian"] = to_json(v);
    emit(out, std::move(j), c);
  } else {
    out << describe(v) << '\n';
  }
  return kExitOk;
}

int cmd_slp(const Flags& f, std::ostream& out) {
  Context c = load(f);
  const ArtinianCI alg = build(c.instance, c.order);
  const SlpVerdict v =
      f.exact ? slp_degree1_exact(alg) : slp_degree1_probabilistic(alg, c.probabilistic);
  if (f.format == "json") {
    Json j = header(c);
    j["slp"] = to_json(v);
    emit(out, std::move(j), c);
  } else {
    out << describe(v) << '\n';
  }
  return kExitOk;
}

int cmd_duality(const Flags& f, std::ostream& out) {
  Context c = load(f);
  const ArtinianCI alg = build(c.instance, c.order);
  const bool duality = verify_macaulay_duality(alg);
  const bool partials = verify_partials_span(alg);
  const bool colon = verify_colon_identity(alg);
  if (f.format == "json") {
    Json j = header(c);
    j["associated_form"] = to_json(associated_form(alg));
    j["macaulay_duality"] = duality;
    j["partials_span"] = partials;
    j["colon_identity"] = colon;
    emit(out, std::move(j), c);
  } else {
    out << std::boolalpha;
    out << "macaulay duality: " << duality << '\n';
    out << "partials span: " << partials << '\n';
    out << "colon identity: " << colon << '\n';
  }
  return duality && partials && colon ? kExitOk : kExitAnomaly;
}

int cmd_milnor(const Flags& f, std::ostream& out) {
  Context c = load(f);
  if (!c.instance.is_milnor()) {
    throw Error(ErrorKind::InvalidArgument, "milnor needs an instance with 'f'");
  }
  const ArtinianCI alg = build(c.instance, c.order);
  const int d = c.instance.f->total_degree();
  if (f.format == "json") {
    Json j = header(c);
    j["degree"] = d;
    j["hilbert"] = alg.hilbert_function();
    j["T"] = alg.socle_degree();
    emit(out, std::move(j), c);
  } else {
    out << "f: " << *c.instance.f << '\n';
    out << "n: " << alg.num_vars() << ", d: " << d << ", n(d-2): " << alg.num_vars() * (d - 2)
        << '\n';
    print_algebra(out, alg);
  }
  return kExitOk;
}

int cmd_sweep(const SweepOptions& options, const std::string& format, std::ostream& out) {
  const SweepSummary s = run_sweep(options);
  if (format == "json") {
    out << to_json(options, s).dump(2) << '\n';
  } else {
    std::vector<std::string> degrees;
    for (unsigned d : options.degrees) degrees.push_back(std::to_string(d));
    out << "sweep degrees (" << join(degrees, ", ") << "), " << options.count
        << " instances, seed " << options.seed << ", order " << to_string(options.order) << '\n';
    for (const auto& e : s.entries) {
      out << "#" << e.index << " seed " << e.seed << " regenerations " << e.regenerations;
      if (e.report) {
        out << " T " << e.socle_degree << " slp " << to_string(e.report->slp.holds) << " hessian "
            << to_string(e.report->hessian.nonzero) << " agree " << to_string(e.report->agree);
      } else {
        out << " error " << e.error;
      }
      out << '\n';
    }
    out << "agree " << s.agree << "/" << s.entries.size() << ", anomalies " << s.anomalies
        << ", unknown " << s.unknown << ", hessian-zero " << s.hessian_zero << '\n';
    out << "time: " << std::fixed << std::setprecision(3) << s.seconds << " s\n";
  }
  return s.anomalies ? kExitAnomaly : kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact complete intersection and Lefschetz toolkit", "cilef"};
  app.require_subcommand(1);
  Flags flags;
  std::function<int()> action;

  CLI::App* analyze = add_file_command(app, "analyze", "Run the full pipeline", flags);
  add_probabilistic(analyze, flags);
  analyze->callback([&] { action = [&] { return cmd_analyze(flags, out, err); }; });

  CLI::App* af = add_file_command(app, "associated-form", "Print the associated form", flags);
  af->callback([&] { action = [&] { return cmd_associated_form(flags, out); }; });

  CLI::App* hess = add_file_command(app, "hessian", "Hessian of the associated form", flags);
  add_probabilistic(hess, flags);
  hess->add_option("--mode", flags.mode, "symbolic or probabilistic")
      ->check(CLI::IsMember({"symbolic", "probabilistic"}));
  hess->callback([&] { action = [&] { return cmd_hessian(flags, out); }; });

  CLI::App* slp = add_file_command(app, "slp", "Degree-1 strong Lefschetz check", flags);
  add_probabilistic(slp, flags);
  slp->add_flag("--exact", flags.exact, "Symbolic determinant instead of random trials");
  slp->callback([&] { action = [&] { return cmd_slp(flags, out); }; });

  CLI::App* dual = add_file_command(app, "duality", "Inverse system checks", flags);
  dual->callback([&] { action = [&] { return cmd_duality(flags, out); }; });

  CLI::App* milnor = add_file_command(app, "milnor", "Milnor algebra of a form", flags);
  milnor->callback([&] { action = [&] { return cmd_milnor(flags, out); }; });

  SweepOptions sweep_options;
  sweep_options.count = 10;
  CLI::App* sweep = app.add_subcommand("sweep", "Equivalence check on random instances");
  sweep->add_option("--degrees", sweep_options.degrees, "Generator degrees, e.g. 2,2,3")
      ->required()
      ->delimiter(',');
  sweep->add_option("--count", sweep_options.count, "Number of instances");
  sweep->add_option("--seed", sweep_options.seed, "Base seed")->required();
  sweep->add_option("--jobs", sweep_options.jobs, "Worker threads (default: all cores)");
  sweep->add_option("--trials", sweep_options.probabilistic.trials, "Random trials when n > 4")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--bound", sweep_options.probabilistic.bound, "Sample bound when n > 4")
      ->check(CLI::Range(2, 1 << 30));
  add_order(sweep, flags);
  add_format(sweep, flags);
  sweep->callback([&] {
    action = [&] {
      sweep_options.order = parse_order_kind(flags.order);
      return cmd_sweep(sweep_options, flags.format, out);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInputError;
  }
  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    const bool anomaly =
        e.kind() == ErrorKind::InternalError || e.kind() == ErrorKind::JacobianInSocleFailure;
    return anomaly ? kExitAnomaly : kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace cilef::cli
