// lrclab: command-line front end. Exit codes: 0 ok, 1 domain error, 2 usage error.

#include <charconv>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "acceptance.hpp"
#include "lrclab/error.hpp"
#include "lrclab/io.hpp"
#include "lrclab/report.hpp"

namespace fs = std::filesystem;
using namespace lrclab;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "auto" or a positive integer.
std::optional<std::size_t> parse_r(const std::string& s) {
  if (s == "auto") return std::nullopt;
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v == 0)
    throw UsageError("--r expects 'auto' or a positive integer, got '" + s + "'");
  return v;
}

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    std::size_t used = 0;
    const std::int64_t num = std::stoll(s.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? s.size() : slash)) throw std::invalid_argument(s);
    std::int64_t den = 1;
    if (slash != std::string::npos) {
      den = std::stoll(s.substr(slash + 1), &used);
      if (used != s.size() - slash - 1 || den == 0) throw std::invalid_argument(s);
    }
    return Rational(num, den);
  } catch (const std::logic_error&) {
    throw UsageError("expected a rational like 1/2, got '" + s + "'");
  }
}

std::vector<std::size_t> parse_rows(const std::string& s) {
  std::vector<std::size_t> out;
  if (s.empty()) return out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size() || v == 0)
      throw UsageError("--rows expects 1-based indices like 1,3; got '" + s + "'");
    out.push_back(v - 1);
  }
  return out;
}

std::size_t resolve_r(const LinearCode& c, const std::string& r) {
  if (auto v = parse_r(r)) return *v;
  return locality(c).r;
}

void save(const std::string& dir, const std::string& name, const std::optional<LinearCode>& c) {
  if (dir.empty() || !c) return;
  fs::create_directories(dir);
  write_text_file(fs::path(dir) / name, write_code(*c));
}

std::string analyze_text(const AnalyzeReport& rep) {
  const auto& o = rep.optimality;
  std::ostringstream out;
  out << "n " << o.n << "\nk " << o.k << "\nd " << o.d << "\nr " << o.true_r << "\n";
  if (o.claimed_r != o.true_r) out << "claimed_r " << o.claimed_r << " (slack " << o.slack_claimed << ")\n";
  out << "slack " << o.slack_true << "\noptimal " << (o.optimal ? "yes" : "no") << "\n";
  if (rep.normal_form)
    out << "normal form: ell " << rep.normal_form->ell() << ", h " << rep.normal_form->h() << ", |A| "
        << rep.normal_form->a.size() << ", |B| " << rep.normal_form->b.size() << "\n";
  out << "disjoint recovery sets:";
  if (rep.disjoint_partition) {
    for (const auto& s : *rep.disjoint_partition) {
      out << " {";
      const auto idx = s.one_based();
      for (std::size_t i = 0; i < idx.size(); ++i) out << (i ? "," : "") << idx[i];
      out << "}";
    }
  } else {
    out << " none";
  }
  out << "\n";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for Singleton-optimal locally repairable codes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "0.1.0");

  std::string file, r_opt = "auto", out_dir, rows_opt, kind;
  bool json = false;

  auto* an = app.add_subcommand("analyze", "parameters, locality and optimality of a code file");
  an->add_option("file", file, "code file")->required();
  an->add_option("--r", r_opt, "auto, or a claimed locality to cross-check");
  an->add_flag("--json", json, "JSON output");

  BoundQuery bq;
  std::string lambda;
  auto* bd = app.add_subcommand("bound", "evaluate every applicable bound");
  bd->add_option("--q", bq.q);
  bd->add_option("--n", bq.n);
  bd->add_option("--k", bq.k);
  bd->add_option("--d", bq.d);
  bd->add_option("--r", bq.r);
  bd->add_option("--lambda", lambda, "d = lambda n, as p/q");
  bd->add_flag("--assume-mds-conjecture", bq.flags.assume_mds_conjecture);
  bd->add_flag("--divisible", bq.flags.divisible, "(r+1) divides n");
  bd->add_flag("--disjoint", bq.flags.disjoint_recovery, "disjoint recovery sets");
  bd->add_flag("--json", json, "JSON output");

  std::int64_t sn = 0, sd = 0, sr = 0;
  auto* sk = app.add_subcommand("solve-k", "dimension of a Singleton-optimal [n,k,d;r] code");
  sk->add_option("--n", sn)->required();
  sk->add_option("--d", sd)->required();
  sk->add_option("--r", sr)->required();

  auto* nf = app.add_subcommand("normal-form", "parity-check normal form");
  nf->add_option("file", file)->required();
  nf->add_option("--r", r_opt);
  nf->add_option("--out", out_dir, "write h1.mat and h2.mat here");

  auto* tr = app.add_subcommand("transform", "derived codes");
  tr->add_option("file", file)->required();
  tr->add_option("--kind", kind, "ci, residual or mds")->required()->check(CLI::IsMember({"ci", "residual", "mds"}));
  tr->add_option("--rows", rows_opt, "1-based normal-form rows to delete (ci)");
  tr->add_option("--r", r_opt);
  tr->add_option("--out", out_dir, "write the derived code here");

  auto* pl = app.add_subcommand("pipeline", "A/B/L1/L3/K construction");
  pl->add_option("file", file)->required();
  pl->add_option("--r", r_opt);
  pl->add_option("--out", out_dir, "write ck.code here");

  std::size_t a_steps = 0;
  auto* pr = app.add_subcommand("propagate", "shorten by a and puncture one recovery set");
  pr->add_option("file", file)->required();
  pr->add_option("--a", a_steps)->required();
  pr->add_option("--r", r_opt);
  pr->add_option("--out", out_dir);

  auto* rd = app.add_subcommand("reduce", "reduce d to d mod (r+1)");
  rd->add_option("file", file)->required();
  rd->add_option("--r", r_opt);
  rd->add_option("--out", out_dir);

  SearchTask task;
  std::uint64_t random_n = 0, cap = 0;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  bool exhaustive = false;
  auto* se = app.add_subcommand("search", "find Singleton-optimal codes");
  se->add_option("--q", task.q)->required();
  se->add_option("--n", task.n)->required();
  se->add_option("--k", task.k)->required();
  se->add_option("--d", task.d_target)->required();
  se->add_option("--r", task.r_target)->required();
  auto* ex = se->add_flag("--exhaustive", exhaustive);
  auto* rn = se->add_option("--random", random_n, "number of random samples");
  ex->excludes(rn);
  se->add_option("--seed", task.seed);
  se->add_flag("--require-disjoint", task.require_disjoint);
  se->add_flag("--require-divisible", task.require_divisible);
  se->add_option("--jobs", jobs)->check(CLI::Range(1u, 256u));
  se->add_option("--cap", cap, "subspace-count cap (default LRC_LAB_CAP or 1e8)");
  se->add_option("--budget", task.node_budget, "candidates examined in full; 0 = unlimited");
  se->add_option("--max-witnesses", task.max_witnesses);
  se->add_option("--out", out_dir, "write witness codes here");

  std::string suite;
  std::optional<int> only;
  unsigned workers = 4;
  auto* vf = app.add_subcommand("verify", "run the acceptance suite");
  vf->add_option("suite", suite)->required()->check(CLI::IsMember({"quick", "full"}));
  vf->add_option("--only", only)->check(CLI::Range(1, acceptance::kCriteria));
  vf->add_option("--workers", workers)->check(CLI::Range(1u, 64u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*an) {
      const auto c = read_code_file(file);
      const auto rep = analyze(c, parse_r(r_opt));
      std::cout << (json ? json_analyze(rep) : analyze_text(rep));
    } else if (*bd) {
      if (!lambda.empty()) bq.lambda = parse_rational(lambda);
      const auto rows = evaluate_bounds(bq);
      if (rows.empty()) fail(Errc::OutOfTable, "no bound applies to the given parameters");
      std::cout << (json ? json_bounds(rows) : bound_table(rows));
    } else if (*sk) {
      const auto k = solve_k(sn, sd, sr);
      if (!k) fail(Errc::EmptyResult, "no k satisfies the Singleton-type bound with equality");
      std::cout << *k << "\n";
    } else if (*nf) {
      const auto c = read_code_file(file);
      const auto form = build_normal_form(c, resolve_r(c, r_opt));
      if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        write_text_file(fs::path(out_dir) / "h1.mat", write_matrix(form.h1));
        if (form.h() > 0) write_text_file(fs::path(out_dir) / "h2.mat", write_matrix(form.h2));
      }
      std::cout << json_normal_form(form);
    } else if (*tr) {
      const auto c = read_code_file(file);
      const std::size_t r = resolve_r(c, r_opt);
      DerivationReport rep;
      if (kind == "ci") rep = derive_ci(build_normal_form(c, r), parse_rows(rows_opt));
      else if (kind == "residual") rep = derive_residual(c, r);
      else rep = derive_mds(c, r);
      save(out_dir, kind + ".code", rep.result);
      std::cout << json_derivation(rep);
    } else if (*pl) {
      const auto c = read_code_file(file);
      const auto rep = run_pipeline(build_normal_form(c, resolve_r(c, r_opt)));
      save(out_dir, "ck.code", rep.ck);
      std::cout << json_pipeline(rep);
    } else if (*pr) {
      const auto c = read_code_file(file);
      const auto rep = propagate_optimal(c, resolve_r(c, r_opt), a_steps);
      save(out_dir, "propagated.code", rep.result);
      std::cout << json_propagation(rep);
    } else if (*rd) {
      const auto c = read_code_file(file);
      const auto rep = reduce_distance(c, resolve_r(c, r_opt));
      save(out_dir, "reduced.code", rep.result);
      std::cout << json_reduction(rep);
    } else if (*se) {
      if (random_n > 0) {
        task.mode = SearchMode::Random;
        task.random_count = random_n;
      }
      if (cap > 0) task.cap = cap;
      task.workers = jobs;
      const auto out = search_singleton_optimal(task);
      for (std::size_t i = 0; i < out.witnesses.size(); ++i)
        save(out_dir, "witness_" + std::to_string(i + 1) + ".code", out.witnesses[i].code);
      std::cout << json_search(out);
    } else if (*vf) {
      acceptance::Options opt;
      opt.suite = suite == "quick" ? acceptance::Suite::Quick : acceptance::Suite::Full;
      opt.workers = workers;
      opt.only = only;
      bool ok = true;
      for (const auto& r : acceptance::run(opt, std::cerr)) {
        std::cout << acceptance::format(r) << std::endl;
        ok = ok && r.pass;
      }
      return ok ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
