#include "kreweras/cli/pipeline.hpp"

#include <filesystem>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "kreweras/core/textio.hpp"
#include "kreweras/extraction/theta.hpp"
#include "kreweras/guess/guess.hpp"
#include "kreweras/walks/walks.hpp"

namespace kreweras {

namespace {

int to_int(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const long r = std::stol(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return static_cast<int>(r);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: " + key + " expects an integer, got '" + v + "'");
  }
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Runs one pipeline stage; failures carry the stage name and its replay command.
template <class F>
void stage(const std::string& name, const std::string& replay, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    throw std::runtime_error("stage " + name + " failed: " + e.what() + " (replay: " + replay + ")");
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("config: " + what);
}

}  // namespace

void PipelineConfig::validate() const {
  require(enumerate_n >= 4, "enumerate_n >= 4 (Q(0,0) relations need t^3)");
  require(enumerate_n <= 14, "enumerate_n <= 14 (brute-force oracle limit)");
  require(kernel_n >= 1, "kernel_n >= 1");
  require(oracle_n >= 1 && oracle_n <= 24, "1 <= oracle_n <= 24 (residue oracle limit)");
  require(oracle_n <= theta_n, "oracle_n <= theta_n");
  require(guess_n <= theta_n, "guess_n <= theta_n (guessing cannot use more coefficients than extracted)");
  require(guess_reserve >= 10, "guess_reserve >= 10");
  require(guess_max_order >= 1 && guess_max_degree >= 0, "guess_max_order >= 1 and guess_max_degree >= 0");
  require(margin >= 0, "margin >= 0");
  // order(L_C) = 6 and r >= 1
  require(theta_n >= margin + 7, "theta_n >= margin + 7 (r + order(L_C) + margin with r >= 1)");
  require(compare_order >= 1, "compare_order >= 1");
  require(h_order >= 40, "h_order >= 40");
  require(prime > 2, "prime > 2");
  require(!out_dir.empty(), "out_dir must be set");
}

void PipelineConfig::set(const std::string& key, const std::string& value) {
  if (key == "enumerate_n") enumerate_n = to_int(key, value);
  else if (key == "kernel_n") kernel_n = to_int(key, value);
  else if (key == "theta_n") theta_n = to_int(key, value);
  else if (key == "oracle_n") oracle_n = to_int(key, value);
  else if (key == "guess_n") guess_n = to_int(key, value);
  else if (key == "guess_reserve") guess_reserve = to_int(key, value);
  else if (key == "guess_max_order") guess_max_order = to_int(key, value);
  else if (key == "guess_max_degree") guess_max_degree = to_int(key, value);
  else if (key == "margin") margin = to_int(key, value);
  else if (key == "compare_order") compare_order = to_int(key, value);
  else if (key == "h_order") h_order = to_int(key, value);
  else if (key == "prime") prime = static_cast<std::uint32_t>(to_int(key, value));
  else if (key == "out_dir") out_dir = value;
  else throw std::invalid_argument("config: unknown key '" + key + "'");
}

std::map<std::string, std::string> PipelineConfig::to_map() const {
  return {{"enumerate_n", std::to_string(enumerate_n)},
          {"kernel_n", std::to_string(kernel_n)},
          {"theta_n", std::to_string(theta_n)},
          {"oracle_n", std::to_string(oracle_n)},
          {"guess_n", std::to_string(guess_n)},
          {"guess_reserve", std::to_string(guess_reserve)},
          {"guess_max_order", std::to_string(guess_max_order)},
          {"guess_max_degree", std::to_string(guess_max_degree)},
          {"margin", std::to_string(margin)},
          {"compare_order", std::to_string(compare_order)},
          {"h_order", std::to_string(h_order)},
          {"prime", std::to_string(prime)},
          {"out_dir", out_dir}};
}

PipelineConfig parse_config(const std::string& text, PipelineConfig base) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
    base.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return base;
}

TruncSeries<Rat> specialize_x(const TruncSeries<LPoly>& f, const Rat& x0) {
  return f.map_coeffs([&](const LPoly& c) { return c.eval(x0); });
}

Certificate run_pipeline(const PipelineConfig& cfg, std::ostream& log) {
  cfg.validate();
  namespace fs = std::filesystem;
  fs::create_directories(cfg.out_dir);
  const auto path = [&](const std::string& name) { return (fs::path(cfg.out_dir) / name).string(); };
  const std::string prog = "kreweras";
  Certificate cert;

  // enumerate
  const std::string q_file = path("Q.txt");
  const std::string enum_cmd =
      prog + " enumerate --steps kreweras --n " + std::to_string(cfg.enumerate_n) + " --out " + q_file;
  stage("enumerate", enum_cmd, [&] {
    log << "[enumerate] n = " << cfg.enumerate_n << "\n";
    const StepSet k = StepSet::kreweras();
    const WeightSpec w = WeightSpec::symbolic();
    const WalkGF gf = enumerate(k, w, cfg.enumerate_n);
    TextDoc doc = to_doc(series_Q(gf, Coord::symbolic(), Coord::symbolic()), {Var::a, Var::b, Var::c, Var::x, Var::y});
    doc.comments.push_back("command: " + enum_cmd);
    write_text_file(q_file, write_doc(doc));
    bool ok = true;
    for (int n = 0; n < cfg.enumerate_n && ok; ++n) {
      const auto table = brute_force_count(k, w, n);
      for (int i = 0; i <= n && ok; ++i)
        for (int j = 0; j <= n && ok; ++j)
          ok = table[static_cast<std::size_t>(i * (n + 1) + j)] == gf.at(n, i, j);
    }
    Check c;
    c.name = "enumeration_oracle";
    c.statement = "dynamic-programming counts equal exhaustive enumeration for every length below n, a, b, c symbolic";
    c.status = CheckStatus::Proven;
    c.passed = ok;
    c.inputs["Q"] = content_hash(write_doc(to_doc(series_Q(gf, Coord::symbolic(), Coord::symbolic()),
                                                 {Var::a, Var::b, Var::c, Var::x, Var::y})));
    c.orders["n"] = cfg.enumerate_n;
    c.replay = enum_cmd;
    cert.checks.push_back(std::move(c));
  });

  // kernel-check
  stage("kernel-check", prog + " kernel-check --steps kreweras --n " + std::to_string(cfg.kernel_n), [&] {
    log << "[kernel-check] mod t^" << cfg.kernel_n << "\n";
    bool ok = true;
    std::string detail;
    for (const char* name : {"kreweras", "reverse-kreweras"}) {
      const StepSet s = StepSet::from_name(name);
      const WalkGF gf = enumerate(s, WeightSpec::symbolic(), cfg.kernel_n);
      const bool z = kernel_residual(gf, s, WeightSpec::symbolic()).is_zero_mod();
      ok = ok && z;
      detail += std::string(detail.empty() ? "" : ",") + name + "=" + (z ? "0" : "nonzero");
    }
    Check c;
    c.name = "kernel_equation";
    c.statement = "the kernel equation residual, cleared of denominators, vanishes with a, b, c, x, y symbolic";
    c.status = CheckStatus::Proven;
    c.passed = ok;
    c.orders["mod_t"] = cfg.kernel_n;
    c.details["residuals"] = detail;
    c.replay = prog + " kernel-check --steps kreweras --n " + std::to_string(cfg.kernel_n);
    cert.checks.push_back(std::move(c));
  });

  // theta
  const std::string theta_file = path("theta.txt");
  const std::string theta_cmd = prog + " theta --n " + std::to_string(cfg.theta_n) + " --out " + theta_file;
  stage("theta", theta_cmd, [&] {
    log << "[theta] n = " << cfg.theta_n << "\n";
    TextDoc doc = to_doc(theta_series(cfg.theta_n));
    doc.comments.push_back("command: " + theta_cmd);
    write_text_file(theta_file, write_doc(doc));
  });
  const TruncSeries<LPoly> theta = lpoly_series_from_doc(parse_doc(read_text_file(theta_file)));
  stage("theta-oracle", prog + " theta --check-oracle --n " + std::to_string(cfg.oracle_n), [&] {
    log << "[theta] residue oracle mod t^" << cfg.oracle_n << "\n";
    const auto oracle = residue_oracle(cfg.oracle_n);
    Check c;
    c.name = "theta_oracle";
    c.statement = "direct extraction of Theta equals the residue-integral oracle";
    c.status = CheckStatus::Proven;
    c.passed = theta.truncated(cfg.oracle_n) == oracle;
    c.inputs["theta"] = hash_of(theta);
    c.inputs["oracle"] = hash_of(oracle);
    c.orders["mod_t"] = cfg.oracle_n;
    c.replay = prog + " theta --check-oracle --n " + std::to_string(cfg.oracle_n);
    cert.checks.push_back(std::move(c));
  });

  // guess-ode
  const std::string lg_file = path("L_g.txt");
  stage("guess-ode", prog + " guess-ode --series " + theta_file, [&] {
    log << "[guess-ode] symbolic x, " << cfg.guess_n << " coefficients, reserve " << cfg.guess_reserve << "\n";
    GuessConfig g;
    g.max_order = cfg.guess_max_order;
    g.max_degree = cfg.guess_max_degree;
    g.reserve = cfg.guess_reserve;
    const std::string cmd = prog + " guess-ode --series " + theta_file + " --n " + std::to_string(cfg.guess_n) +
                            " --max-order " + std::to_string(g.max_order) + " --max-degree " +
                            std::to_string(g.max_degree) + " --reserve " + std::to_string(g.reserve) + " --out " +
                            lg_file;
    const GuessResult res = guess_min_ode_symbolic(theta.truncated(cfg.guess_n), g);
    log << res.summary() << "\n";
    if (res.op) {
      write_text_file(lg_file, write_operator(*res.op, {"command: " + cmd}));
    } else if (fs::exists(lg_file)) {
      fs::remove(lg_file);
    }
  });

  // verify-closedform
  stage("verify-closedform", prog + " verify-closedform --n " + std::to_string(cfg.theta_n), [&] {
    log << "[verify-closedform]\n";
    std::optional<OreOp> lg;
    if (fs::exists(lg_file)) lg = parse_operator(read_text_file(lg_file));
    TheoremOptions opt;
    opt.margin = cfg.margin;
    opt.compare_order = cfg.compare_order;
    opt.replay_prefix = prog;
    opt.theta_file = theta_file;
    cert.append(certify_theta_equals_c(theta, opt, lg));
  });

  // transcendence
  stage("certify-transcendence", prog + " certify --full", [&] {
    log << "[certify] transcendence chain\n";
    TranscendenceOptions opt;
    opt.h_order = cfg.h_order;
    opt.replay_prefix = prog;
    cert.append(certify_transcendence(opt));
  });
  cert.conclusion =
      "Theta transcendental, hence Q(x,y), Q(x,0), Q(0,y) transcendental for a != b, c != 0 "
      "(conditional on the listed EMPIRICAL checks)";
  write_text_file(path("cert.json"), cert.to_json());
  log << (cert.holds() ? "[certify] verdict holds" : "[certify] verdict NOT established") << "\n";
  return cert;
}

}  // namespace kreweras
