#include "enclose/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "enclose/error.hpp"
#include "enclose/io.hpp"
#include "enclose/oracle.hpp"
#include "enclose/pipeline.hpp"

namespace enclose::cli {

namespace {

struct Options {
  std::string instance;
  std::string enclosing;
  std::string out_path;
  std::string trace_path;
  std::string out_dir;
  int m = 0;
  int mu = 0;
  int r = 0;
  int n = 0;
  int lambda = 1;
  int k = 0;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  bool exhaustive = false;
};

std::uint64_t default_budget(std::uint64_t fallback) {
  if (const char* env = std::getenv("ENCLOSE_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw PreconditionError(std::string("ENCLOSE_BUDGET is not a number: ") + env);
    }
  }
  return fallback;
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
  } else {
    io::write_file(path, content);
  }
}

int cmd_check(const Options& o, std::ostream& out) {
  const Decomposition g = io::read_instance_file(o.instance);
  const int lambda = g.base().multiplicity(0, g.vertex_count() > 1 ? 1 : 0);
  const auto params = make_params(g.vertex_count(), o.m, lambda, o.mu, o.r, g.k());
  out << params.to_string() << "\n";
  out << "p = " << params.p.str() << "\n";
  const auto adm_r = is_admissible(g, params.r);
  out << params.r << "-admissible: " << (adm_r ? "yes" : "no (" + adm_r.violation->describe() + ")") << "\n";
  if (params.r >= 3) {
    const auto adm_r1 = is_admissible(g, params.r - 1);
    out << params.r - 1 << "-admissible: " << (adm_r1 ? "yes" : "no (" + adm_r1.violation->describe() + ")") << "\n";
  }
  const Regime regime = regime_for(params);
  out << "regime: " << regime_name(regime) << "\n";
  if (regime == Regime::kOutOfRegime) {
    out << "no condition battery applies to these parameters\n";
    return kOutOfRegime;
  }
  const auto report = check_regime(g, params, regime);
  out << report.to_string();
  // The padding battery is informative wherever its hypotheses make sense.
  if (regime != Regime::kPadding && params.r >= 3 && params.mu > params.lambda &&
      2 * params.mu > params.r * (params.mu - params.lambda)) {
    out << check_padding(g, params).to_string();
  }
  return report.overall() ? kOk : kConditionFailure;
}

int cmd_enclose(const Options& o, std::ostream& out, std::ostream& err) {
  const Decomposition g = io::read_instance_file(o.instance);
  const int lambda = g.base().multiplicity(0, g.vertex_count() > 1 ? 1 : 0);
  const auto params = make_params(g.vertex_count(), o.m, lambda, o.mu, o.r, g.k());
  const Regime regime = regime_for(params);
  if (regime == Regime::kOutOfRegime) {
    err << "no construction covers " << params.to_string() << "\n";
    return kOutOfRegime;
  }
  const auto report = check_regime(g, params, regime);
  if (const auto* f = report.first_failure()) {
    err << "condition " << f->name << " fails: " << f->reason << "\n";
    return kConditionFailure;
  }
  const std::uint64_t budget = o.budget > 0 ? o.budget : default_budget(kDefaultDetachBudget);
  PipelineResult res;
  try {
    res = enclose_decomposition(g, params, o.seed, budget);
  } catch (const BudgetExhausted& e) {
    err << e.what() << "\n";
    return kBudget;
  }
  const auto check = verify_enclosing(g, res.enclosing, params);
  if (!check) {
    err << "self-check failed: " << check.diagnostics.front() << "\n";
    return kConditionFailure;
  }
  emit(o.out_path, io::serialize_instance(res.enclosing.outer, params.mu), out);
  if (!o.trace_path.empty()) {
    io::write_file(o.trace_path,
                   io::serialize_trace(res.extension.trace, res.detach_stats, res.extension.recolor_steps));
  }
  err << "regime " << regime_name(regime) << ", " << res.extension.trace.actions.size() << " extension actions, "
      << res.detach_stats.nodes << " detachment nodes\n";
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Decomposition inner = io::read_instance_file(o.instance);
  const Decomposition outer = io::read_instance_file(o.enclosing);
  if (inner.k() != outer.k()) {
    out << "class count mismatch: " << inner.k() << " inner, " << outer.k() << " outer\n";
    return kInputError;
  }
  const int lambda = inner.base().multiplicity(0, inner.vertex_count() > 1 ? 1 : 0);
  const int mu = outer.base().multiplicity(0, outer.vertex_count() > 1 ? 1 : 0);
  const auto params = make_params(inner.vertex_count(), outer.vertex_count(), lambda, mu, o.r, inner.k());
  const auto report = verify_enclosing(inner, Enclosing{outer, inner.vertex_count()}, params);
  if (report) {
    out << "valid: 2-edge-connected " << o.r << "-factorization of " << mu << "K_" << outer.vertex_count()
        << " enclosing the instance\n";
    return kOk;
  }
  for (const auto& d : report.diagnostics) out << "invalid: " << d << "\n";
  return kConditionFailure;
}

int cmd_oracle(const Options& o, std::ostream& out, std::ostream& err) {
  const Decomposition g = io::read_instance_file(o.instance);
  const int lambda = g.base().multiplicity(0, g.vertex_count() > 1 ? 1 : 0);
  const auto params = make_params(g.vertex_count(), o.m, lambda, o.mu, o.r, g.k());
  const std::uint64_t budget = o.budget > 0 ? o.budget : default_budget(oracle::kDefaultOracleBudget);
  oracle::EncloseOutcome res;
  try {
    res = oracle::brute_force_enclose(g, params, budget);
  } catch (const CapExceeded& e) {
    err << e.what() << "\n";
    return kOutOfRegime;
  }
  err << oracle::search_status_name(res.status) << " after " << res.stats.nodes << " nodes, " << std::fixed
      << std::setprecision(3) << res.stats.wall_seconds << " s\n";
  switch (res.status) {
    case oracle::SearchStatus::kFound: {
      const auto check = verify_enclosing(g, *res.witness, params);
      if (!check) throw InternalInconsistency("oracle witness fails verification: " + check.diagnostics.front());
      emit(o.out_path, io::serialize_instance(res.witness->outer, params.mu), out);
      return kOk;
    }
    case oracle::SearchStatus::kNone:
      out << "NONE\n";
      return kConditionFailure;
    case oracle::SearchStatus::kBudget:
      out << "BUDGET\n";
      return kBudget;
  }
  return kConditionFailure;
}

int cmd_gen(const Options& o, std::ostream& out) {
  if (!o.exhaustive) {
    emit(o.out_path, io::serialize_instance(oracle::random_admissible(o.n, o.lambda, o.k, o.r, o.seed), o.lambda),
         out);
    return kOk;
  }
  oracle::EnumerationOptions opts;
  if (o.r > 0) {
    const int r = o.r;
    opts.filter = [r](const Decomposition& d) { return oracle::brute_force_admissible(d, r); };
  }
  if (!o.out_dir.empty()) std::filesystem::create_directories(o.out_dir);
  std::uint64_t index = 0;
  oracle::enumerate_decompositions(o.n, o.lambda, o.k, opts, [&](const Decomposition& d) {
    const std::string text = io::serialize_instance(d, o.lambda);
    if (o.out_dir.empty()) {
      out << text;
    } else {
      std::ostringstream name;
      name << "instance_" << std::setw(5) << std::setfill('0') << index << ".json";
      io::write_file((std::filesystem::path(o.out_dir) / name.str()).string(), text);
    }
    ++index;
  });
  if (!o.out_dir.empty()) out << index << " instances written to " << o.out_dir << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enclose decompositions of lambda K_n in 2-edge-connected r-factorizations of mu K_m"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "Evaluate the condition battery for an instance");
  check->add_option("instance", o.instance, "Instance file")->required();
  check->add_option("--m", o.m, "Target vertex count")->required();
  check->add_option("--mu", o.mu, "Target multiplicity")->required();
  check->add_option("--r", o.r, "Target regularity")->required();

  auto* enclose = app.add_subcommand("enclose", "Construct an enclosing");
  enclose->add_option("instance", o.instance, "Instance file")->required();
  enclose->add_option("--m", o.m, "Target vertex count")->required();
  enclose->add_option("--mu", o.mu, "Target multiplicity")->required();
  enclose->add_option("--r", o.r, "Target regularity")->required();
  enclose->add_option("--seed", o.seed, "0 keeps the canonical order");
  enclose->add_option("--budget", o.budget, "Detachment node budget");
  enclose->add_option("--out", o.out_path, "Output file for the enclosing (default stdout)");
  enclose->add_option("--trace", o.trace_path, "Output file for the extension trace and detachment stats");

  auto* verify = app.add_subcommand("verify", "Check an enclosing against an instance");
  verify->add_option("instance", o.instance, "Inner instance file")->required();
  verify->add_option("enclosing", o.enclosing, "Enclosing file")->required();
  verify->add_option("--r", o.r, "Target regularity")->required();

  auto* orc = app.add_subcommand("oracle", "Exhaustive enclosure search");
  orc->add_option("instance", o.instance, "Instance file")->required();
  orc->add_option("--m", o.m, "Target vertex count")->required();
  orc->add_option("--mu", o.mu, "Target multiplicity")->required();
  orc->add_option("--r", o.r, "Target regularity")->required();
  orc->add_option("--budget", o.budget, "Node budget");
  orc->add_option("--out", o.out_path, "Output file for the witness (default stdout)");

  auto* gen = app.add_subcommand("gen", "Generate instances");
  gen->add_option("--n", o.n, "Vertex count")->required();
  gen->add_option("--lambda", o.lambda, "Multiplicity");
  gen->add_option("--k", o.k, "Class count")->required();
  gen->add_option("--r", o.r, "Admissibility parameter (required unless --exhaustive)");
  gen->add_option("--seed", o.seed, "Random seed");
  gen->add_flag("--exhaustive", o.exhaustive, "Enumerate all instances up to color renaming");
  gen->add_option("--out", o.out_path, "Output file (default stdout)");
  gen->add_option("--out-dir", o.out_dir, "Directory for one file per enumerated instance");

  std::vector<std::string> argv_store{"enclose"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*check) return cmd_check(o, out);
    if (*enclose) return cmd_enclose(o, out, err);
    if (*verify) return cmd_verify(o, out);
    if (*orc) return cmd_oracle(o, out, err);
    if (*gen) {
      if (!o.exhaustive && o.r < 1) {
        err << "--r is required without --exhaustive\n";
        return kInputError;
      }
      return cmd_gen(o, out);
    }
  } catch (const PreconditionError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const CapExceeded& e) {
    err << e.what() << "\n";
    return kOutOfRegime;
  } catch (const BudgetExhausted& e) {
    err << e.what() << "\n";
    return kBudget;
  } catch (const InternalInconsistency& e) {
    err << "internal error: " << e.what() << "\n";
    return kConditionFailure;
  }
  return kInputError;
}

}  // namespace enclose::cli
