// Command-line front end. Every subcommand is deterministic given its inputs;
// files it writes carry the producing command line as a comment.

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kreweras/cli/pipeline.hpp"
#include "kreweras/closedform/certificate.hpp"
#include "kreweras/core/textio.hpp"
#include "kreweras/extraction/theta.hpp"
#include "kreweras/guess/guess.hpp"
#include "kreweras/ore/local.hpp"
#include "kreweras/ore/oreop.hpp"
#include "kreweras/walks/walks.hpp"

using namespace kreweras;

namespace {

std::string g_command;

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    write_text_file(out, text);
    std::cerr << "wrote " << out << "\n";
  }
}

std::optional<Rat> opt_rat(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return Rat::parse(s);
}

TextDoc with_command(TextDoc doc) {
  doc.comments.push_back("command: " + g_command);
  return doc;
}

OreOp read_op(const std::string& path) { return parse_operator(read_text_file(path)); }

bool has_x(const TextDoc& doc) {
  for (const auto& v : doc.vars)
    if (v == "x") return true;
  return false;
}

struct Options {
  std::string out;
  std::string config;
  int n = 0;
  std::string x_value;
  std::uint32_t prime = 45007;
  int reserve = 10;
};

int cmd_enumerate(const Options& o, const std::string& steps, const std::string& a, const std::string& b,
                  const std::string& c) {
  const StepSet s = StepSet::from_name(steps);
  const WeightSpec w{opt_rat(a), opt_rat(b), opt_rat(c)};
  const WalkGF gf = enumerate(s, w, o.n);
  emit(o.out, write_doc(with_command(to_doc(series_Q(gf, Coord::symbolic(), Coord::symbolic()),
                                            {Var::a, Var::b, Var::c, Var::x, Var::y}))));
  return 0;
}

int cmd_kernel_check(const Options& o, const std::string& steps) {
  const StepSet s = StepSet::from_name(steps);
  const WalkGF gf = enumerate(s, WeightSpec::symbolic(), o.n);
  const auto res = kernel_residual(gf, s, WeightSpec::symbolic());
  if (res.is_zero_mod()) {
    std::cout << "kernel residual for " << steps << " vanishes mod t^" << res.order() << "\n";
    return 0;
  }
  std::cout << "kernel residual for " << steps << " is nonzero at t^" << res.valuation() << "\n";
  return 1;
}

int cmd_theta(const Options& o, bool check_oracle) {
  const auto th = theta_series(o.n);
  if (check_oracle) {
    const auto oracle = residue_oracle(o.n);
    const bool ok = th == oracle;
    std::cout << "theta vs residue oracle mod t^" << o.n << ": " << (ok ? "equal" : "MISMATCH") << "\n";
    if (!ok) return 1;
    if (o.out.empty()) return 0;
  }
  emit(o.out, write_doc(with_command(to_doc(th))));
  return 0;
}

int cmd_guess_ode(const Options& o, const std::string& series, int max_order, int max_degree) {
  const TextDoc doc = parse_doc(read_text_file(series));
  GuessConfig cfg;
  cfg.max_order = max_order;
  cfg.max_degree = max_degree;
  cfg.reserve = o.reserve;
  GuessResult res;
  if (has_x(doc)) {
    auto f = lpoly_series_from_doc(doc);
    if (o.n > 0) f = f.truncated(o.n);
    if (!o.x_value.empty()) {
      res = guess_min_ode(specialize_x(f, Rat::parse(o.x_value)), cfg);
    } else {
      res = guess_min_ode_symbolic(f, cfg);
    }
  } else {
    auto f = rat_series_from_doc(doc);
    if (o.n > 0) f = f.truncated(o.n);
    res = guess_min_ode(f, cfg);
  }
  std::cerr << res.summary() << "\n";
  if (!res.op) {
    std::cout << "no operator found\n";
    return 3;
  }
  std::ostringstream rep;
  rep << "reserve: fit " << res.reserve.fit_coefficients << ", checked " << res.reserve.checked << ", passed "
      << res.reserve.passed;
  emit(o.out, write_operator(*res.op, {"command: " + g_command, rep.str(),
                                       "cell: order " + std::to_string(res.cell.order) + ", degree " +
                                           std::to_string(res.cell.degree)}));
  return 0;
}

int cmd_guess_alg(const Options& o, const std::string& series, const std::string& walk, long a, long b, long c,
                  int deg_t, int deg_u, int max_total) {
  std::vector<std::uint32_t> f;
  if (!series.empty()) {
    const auto s = rat_series_from_doc(parse_doc(read_text_file(series)));
    const int n = o.n > 0 ? std::min(o.n, s.order()) : s.order();
    for (int i = 0; i < n; ++i) {
      f.push_back(s.coeff(i).mod(o.prime));
    }
  } else {
    if (o.n <= 0) throw std::invalid_argument("guess-alg: --n is required with --walk");
    const auto m = [&](long v) { return static_cast<std::uint32_t>(((v % static_cast<long>(o.prime)) + o.prime) % o.prime); };
    const ModpCounts counts = enumerate_mod_p(StepSet::kreweras(), m(a), m(b), m(c), o.n, o.prime);
    if (walk == "q00") f = counts.q00;
    else if (walk == "q11") f = counts.q11;
    else throw std::invalid_argument("guess-alg: --walk expects q00 or q11");
  }
  std::optional<AlgGuess> g;
  if (deg_t >= 0 && deg_u >= 1) {
    g = guess_algebraic_mod_p(f, o.prime, deg_t, deg_u, o.reserve);
  } else {
    const AlgSearch s = guess_algebraic_staircase(f, o.prime, max_total, o.reserve);
    std::cerr << "visited " << s.visited.size() << " (deg_t, deg_u) pairs\n";
    g = s.found;
  }
  if (!g) {
    std::cout << "no algebraic equation found mod " << o.prime << " with " << f.size()
              << " coefficients (inconclusive)\n";
    return 3;
  }
  emit(o.out, "# command: " + g_command + "\n" + g->to_string() + "\n");
  return 0;
}

int cmd_ore(const Options& o, const std::vector<std::string>& lclm, const std::vector<std::string>& rr,
            const std::string& solve, const std::string& loga) {
  if (!lclm.empty()) {
    emit(o.out, write_operator(kreweras::lclm(read_op(lclm[0]), read_op(lclm[1])), {"command: " + g_command}));
    return 0;
  }
  if (!rr.empty()) {
    emit(o.out, write_operator(rrem(read_op(rr[0]), read_op(rr[1])), {"command: " + g_command}));
    return 0;
  }
  if (!solve.empty()) {
    const SolBasis sb = power_series_solutions(read_op(solve), o.n > 0 ? o.n : 8);
    std::ostringstream os;
    os << "dimension " << sb.dimension << "\nr " << sb.r << "\n";
    for (const auto& s : sb.basis) {
      os << "solution:";
      for (int i = s.valuation(); i < s.order(); ++i) {
        const QFrac c = s.coeff(i);
        if (c.is_zero()) continue;
        os << " + (" << to_string(c, "x") << ")*t^" << i;
      }
      os << " + O(t^" << s.order() << ")\n";
    }
    emit(o.out, os.str());
    return 0;
  }
  if (!loga.empty()) {
    const LocalData ld = detect_log_at_0(read_op(loga));
    std::ostringstream os;
    os << "indicial " << to_string(ld.indicial, "m") << "\nroots";
    for (const auto& [r, m] : ld.rational_roots) os << " " << r.to_string() << "^" << m;
    os << "\nnonrational_degree " << ld.nonrational_root_degree << "\nregular_singular "
       << (ld.regular_singular ? "yes" : "no") << "\nlog " << to_string(ld.log) << "\n";
    if (!ld.reason.empty()) os << "reason " << ld.reason << "\n";
    emit(o.out, os.str());
    return 0;
  }
  throw std::invalid_argument("ore: one of --lclm, --rrem, --solve, --loganalysis is required");
}

int cmd_verify(const Options& o, const std::string& theta_file, const std::string& guessed) {
  TruncSeries<LPoly> th;
  TheoremOptions opt;
  if (!theta_file.empty()) {
    th = lpoly_series_from_doc(parse_doc(read_text_file(theta_file)));
    opt.theta_file = theta_file;
  } else {
    th = theta_series(o.n > 0 ? o.n : 60);
  }
  std::optional<OreOp> lg;
  if (!guessed.empty()) lg = read_op(guessed);
  const Certificate c = certify_theta_equals_c(th, opt, lg);
  emit(o.out, c.to_json());
  std::cerr << (c.holds() ? "verdict holds" : "verdict NOT established") << "\n";
  return c.holds() ? 0 : 1;
}

int cmd_certify(const Options& o, bool full, const std::string& out_dir) {
  if (!full) throw std::invalid_argument("certify: only --full is supported");
  PipelineConfig cfg;
  if (!o.config.empty()) cfg = parse_config(read_text_file(o.config));
  if (o.n > 0) cfg.theta_n = cfg.guess_n = o.n;
  if (o.reserve != 10) cfg.guess_reserve = o.reserve;
  cfg.prime = o.prime;
  if (!out_dir.empty()) cfg.out_dir = out_dir;
  else if (!o.out.empty() && o.out != "-") {
    const auto parent = std::filesystem::path(o.out).parent_path();
    if (!parent.empty()) cfg.out_dir = parent.string();
  }
  const Certificate c = run_pipeline(cfg, std::cerr);
  if (!o.out.empty()) emit(o.out, c.to_json());
  return c.holds() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 0; i < argc; ++i) g_command += (i ? " " : "") + std::string(i ? argv[i] : "kreweras");

  CLI::App app{"Kreweras walks with interacting boundaries: enumeration, extraction, guessing, closed form"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--config", o.config, "key=value file (used by certify)");

  const auto common = [&](CLI::App* s) {
    s->add_option("--n", o.n, "truncation order");
    s->add_option("--out", o.out, "output file (default stdout)");
    s->add_option("--x-value", o.x_value, "specialize x");
    s->add_option("--prime", o.prime, "prime for modular work")->capture_default_str();
    s->add_option("--reserve", o.reserve, "coefficients withheld for verification")->capture_default_str();
  };

  std::string steps = "kreweras", wa, wb, wc;
  auto* en = app.add_subcommand("enumerate", "weighted walk counts Q(a,b,c;x,y;t)");
  common(en);
  en->add_option("--steps", steps, "kreweras or reverse-kreweras");
  en->add_option("--a", wa);
  en->add_option("--b", wb);
  en->add_option("--c", wc);

  auto* kc = app.add_subcommand("kernel-check", "kernel equation residual");
  common(kc);
  kc->add_option("--steps", steps);

  bool check_oracle = false;
  auto* th = app.add_subcommand("theta", "positive-part extraction of Theta");
  common(th);
  th->add_flag("--check-oracle", check_oracle, "compare with the residue oracle");

  std::string series;
  int max_order = 4, max_degree = 16;
  auto* go = app.add_subcommand("guess-ode", "minimal differential equation from series data");
  common(go);
  go->add_option("--series", series)->required();
  go->add_option("--max-order", max_order)->capture_default_str();
  go->add_option("--max-degree", max_degree)->capture_default_str();

  std::string walk = "q00";
  long ia = 1, ib = 1, ic = 1;
  int deg_t = -1, deg_u = -1, max_total = 12;
  auto* ga = app.add_subcommand("guess-alg", "algebraic equation mod p");
  common(ga);
  ga->add_option("--series", series);
  ga->add_option("--walk", walk, "q00 or q11 from modular enumeration");
  ga->add_option("--a", ia);
  ga->add_option("--b", ib);
  ga->add_option("--c", ic);
  ga->add_option("--deg-t", deg_t);
  ga->add_option("--deg-u", deg_u);
  ga->add_option("--max-total", max_total)->capture_default_str();

  std::vector<std::string> lclm_files, rrem_files;
  std::string solve_file, log_file;
  auto* ore = app.add_subcommand("ore", "operator arithmetic and local analysis");
  common(ore);
  ore->add_option("--lclm", lclm_files)->expected(2);
  ore->add_option("--rrem", rrem_files)->expected(2);
  ore->add_option("--solve", solve_file);
  ore->add_option("--loganalysis", log_file);

  std::string theta_file, guessed;
  auto* vc = app.add_subcommand("verify-closedform", "certificate for Theta = C");
  common(vc);
  vc->add_option("--theta", theta_file, "Theta series file (default: extract)");
  vc->add_option("--guessed", guessed, "guessed operator file");

  bool full = false;
  std::string out_dir;
  auto* ce = app.add_subcommand("certify", "whole chain with certificate");
  common(ce);
  ce->add_flag("--full", full);
  ce->add_option("--dir", out_dir, "artifact directory");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*en) {
      if (o.n <= 0) throw std::invalid_argument("enumerate: --n is required");
      return cmd_enumerate(o, steps, wa, wb, wc);
    }
    if (*kc) {
      if (o.n <= 0) throw std::invalid_argument("kernel-check: --n is required");
      return cmd_kernel_check(o, steps);
    }
    if (*th) {
      if (o.n <= 0) throw std::invalid_argument("theta: --n is required");
      return cmd_theta(o, check_oracle);
    }
    if (*go) return cmd_guess_ode(o, series, max_order, max_degree);
    if (*ga) return cmd_guess_alg(o, series, walk, ia, ib, ic, deg_t, deg_u, max_total);
    if (*ore) return cmd_ore(o, lclm_files, rrem_files, solve_file, log_file);
    if (*vc) return cmd_verify(o, theta_file, guessed);
    if (*ce) return cmd_certify(o, full, out_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
