#include "kreweras/closedform/certificate.hpp"

#include <cstdio>
#include <stdexcept>

#include "json.hpp"
#include "kreweras/closedform/closedform.hpp"
#include "kreweras/closedform/formulas.hpp"
#include "kreweras/closedform/hypergeom.hpp"
#include "kreweras/core/textio.hpp"
#include "kreweras/guess/guess.hpp"
#include "kreweras/ore/local.hpp"
#include "kreweras/walks/walks.hpp"

namespace kreweras {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Proven: return "PROVEN";
    case CheckStatus::Empirical: return "EMPIRICAL";
    case CheckStatus::Unproven: return "UNPROVEN";
  }
  return "?";
}

const Check* Certificate::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool Certificate::holds() const { return failed().empty() && !checks.empty(); }

std::vector<std::string> Certificate::empirical() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (c.status == CheckStatus::Empirical) out.push_back(c.name);
  return out;
}

std::vector<std::string> Certificate::failed() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (c.status != CheckStatus::Unproven && !c.passed) out.push_back(c.name);
  return out;
}

void Certificate::append(const Certificate& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::string Certificate::to_json() const {
  using json = nlohmann::ordered_json;
  json doc;
  doc["schema"] = 1;
  json arr = json::array();
  for (const auto& c : checks) {
    json j;
    j["name"] = c.name;
    j["statement"] = c.statement;
    j["status"] = to_string(c.status);
    j["passed"] = c.passed;
    j["inputs"] = c.inputs;
    j["orders"] = c.orders;
    j["replay"] = c.replay;
    j["details"] = c.details;
    arr.push_back(std::move(j));
  }
  doc["checks"] = std::move(arr);
  json verdict;
  verdict["holds"] = holds();
  verdict["conclusion"] = holds() ? conclusion : "not established";
  verdict["empirical_checks"] = empirical();
  verdict["failed_checks"] = failed();
  std::vector<std::string> unproven;
  for (const auto& c : checks)
    if (c.status == CheckStatus::Unproven) unproven.push_back(c.name);
  verdict["informational_checks"] = unproven;
  doc["verdict"] = std::move(verdict);
  return doc.dump(2) + "\n";
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char ch : data) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string content_hash(std::string_view data) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(data)));
  return std::string("fnv1a64:") + buf;
}

std::string hash_of(const TruncSeries<LPoly>& f) { return content_hash(write_doc(to_doc(f))); }
std::string hash_of(const OreOp& l) { return content_hash(write_operator(l)); }

namespace {

BiPoly t_var() { return BiPoly::var(); }
BiPoly x_var() { return lift_x(QX::var()); }

LPoly lp(std::vector<long> c) {
  std::vector<Rat> v;
  for (long e : c) v.emplace_back(e);
  return LPoly(0, std::move(v));
}

// Substitute x = q(t) into p(t, x).
QX subst_x(const BiPoly& p, const QX& q) {
  QX out;
  QX tp(1);
  for (const auto& c : p.coeffs()) {
    out += c.compose(q) * tp;
    tp *= QX::var();
  }
  return out;
}

std::string yes(bool b) { return b ? "true" : "false"; }

Check make_check(std::string name, std::string statement, CheckStatus status) {
  Check c;
  c.name = std::move(name);
  c.statement = std::move(statement);
  c.status = status;
  return c;
}

}  // namespace

Certificate certify_theta_equals_c(const TruncSeries<LPoly>& theta, const TheoremOptions& opt,
                                   const std::optional<OreOp>& guessed) {
  const int n = theta.order();
  if (theta.start() != 0 || theta.valuation() < 0) throw std::invalid_argument("certify: Theta must be a power series");
  const std::string theta_hash = hash_of(theta);
  const std::string replay = opt.replay_prefix + " verify-closedform --n " + std::to_string(n);
  const ClosedFormC cf = build_closed_form(n, true);
  const ClosedFormOps& ops = *cf.ops;
  const OreOp& lc = ops.c_op;
  const int ord = lc.order();
  Certificate cert;
  cert.conclusion = "Theta = C (conditional on the listed EMPIRICAL checks)";

  {
    Check c = make_check("pole_cancellation", "[t^-3], [t^-2], [t^-1] of A1 + A2 * int_0^t A3 T vanish", CheckStatus::Proven);
    c.passed = cf.pole_free;
    c.inputs["formulas"] = content_hash(formulas::fingerprint());
    c.orders["n"] = n;
    c.replay = replay;
    cert.checks.push_back(std::move(c));
  }
  {
    using namespace formulas;
    const BiPoly l = t_var() * x_var().pow(3) + BiPoly(2) * t_var() - x_var();
    const BiPoly q = BiPoly(4) * t_var().pow(2) * x_var().pow(3) - (x_var() - t_var()).pow(2);
    const QXTFrac lhs = a2_root_factor() / QXTFrac(a3_denominator());
    const QXTFrac rhs(-x_var().pow(2), BiPoly(3) * t_var().pow(3) * l * q);
    const bool id = lhs == rhs;
    const bool a0 = cf.A0.coeff(2) == LPoly::monomial(Rat(-2), 1);
    const bool t0 = cf.T.coeff(0) == LPoly::monomial(Rat(-1), 2);
    const bool t1 = cf.T.coeff(1) == LPoly::monomial(Rat(-1), 1);
    const bool t2 = cf.T.coeff(2) == lp({4, 0, 0, 8});
    Check c = make_check("transcription_identity",
            "A2 A3 = -x^2 / (3 t^3 (t x^3 + 2t - x)(4 t^2 x^3 - (x - t)^2)); hand values [t^2]A0 = -2x, "
            "[t^0]T = -x^2, [t^1]T = -x, [t^2]T = 8x^3 + 4",
            CheckStatus::Proven);
    c.passed = id && a0 && t0 && t1 && t2;
    c.inputs["formulas"] = content_hash(fingerprint());
    c.details = {{"a2_a3_identity", yes(id)}, {"A0_t2", yes(a0)}, {"T_t0", yes(t0)}, {"T_t1", yes(t1)}, {"T_t2", yes(t2)}};
    c.replay = replay;
    cert.checks.push_back(std::move(c));
  }
  const SolBasis sb = power_series_solutions(lc, 2 * ord + 2);
  const int r = sb.r;
  if (n < r + ord + opt.margin)
    throw std::invalid_argument("certify: need n >= r + order(L_C) + margin = " + std::to_string(r + ord + opt.margin));
  {
    const auto res = apply(lc, cf.C);
    Check c = make_check("lc_annihilates_c", "L_C (closure-built) annihilates C to the known precision", CheckStatus::Proven);
    c.passed = res.is_zero_mod();
    c.inputs["L_C"] = hash_of(lc);
    c.inputs["C"] = hash_of(cf.C);
    c.orders["checked_mod_t"] = res.order();
    c.orders["order_L_C"] = ord;
    c.details["construction"] = "closure: 2F1 along 27t^3, prefactor products, lclm, sqrt, product, integral, product, lclm";
    c.replay = replay;
    cert.checks.push_back(std::move(c));
  }
  {
    const auto res = apply(lc, theta);
    const int checked = res.order();
    const int margin = checked - r;
    Check c = make_check("lc_annihilates_theta",
            "L_C applied to the Theta truncation vanishes; stands in for a creative-telescoping proof",
            CheckStatus::Empirical);
    c.passed = res.is_zero_mod() && margin >= opt.margin;
    c.inputs["L_C"] = hash_of(lc);
    c.inputs["theta"] = theta_hash;
    c.orders["checked_mod_t"] = checked;
    c.orders["margin"] = margin;
    c.orders["required_margin"] = opt.margin;
    if (!res.is_zero_mod()) c.details["first_nonzero"] = std::to_string(res.valuation());
    c.replay = replay;
    cert.checks.push_back(std::move(c));
  }
  {
    Check c = make_check("solution_space", "power-series solutions of L_C: dimension d and determination index r",
            CheckStatus::Proven);
    c.passed = sb.dimension >= 1 && r <= n;
    c.inputs["L_C"] = hash_of(lc);
    c.orders["dimension"] = sb.dimension;
    c.orders["r"] = r;
    std::string fi;
    for (int i : sb.free_indices) fi += (fi.empty() ? "" : ",") + std::to_string(i);
    c.details["free_indices"] = fi;
    c.replay = opt.replay_prefix + " ore --solve L_C.txt --n " + std::to_string(2 * ord + 2);
    cert.checks.push_back(std::move(c));
  }
  {
    Check c = make_check("theta_equals_c_mod_r", "Theta = C mod t^r, exact comparison", CheckStatus::Proven);
    c.passed = theta.truncated(r) == cf.C.truncated(r);
    c.inputs["theta"] = theta_hash;
    c.inputs["C"] = hash_of(cf.C);
    c.orders["r"] = r;
    c.replay = replay;
    cert.checks.push_back(std::move(c));
  }
  {
    const int m = std::min({opt.compare_order, n, cf.C.order()});
    Check c = make_check("theta_equals_c_mod_" + std::to_string(m), "Theta = C coefficientwise, exact comparison of truncations",
            CheckStatus::Proven);
    c.passed = theta.truncated(m) == cf.C.truncated(m);
    c.inputs["theta"] = theta_hash;
    c.inputs["C"] = hash_of(cf.C);
    c.orders["compared_mod_t"] = m;
    c.replay = replay;
    cert.checks.push_back(std::move(c));
  }
  if (guessed) {
    Check c = make_check("guessed_operator", "L_g guessed from Theta data; a candidate only", CheckStatus::Unproven);
    const auto rt = apply(*guessed, theta);
    c.passed = rt.is_zero_mod();
    c.inputs["L_g"] = hash_of(*guessed);
    c.inputs["theta"] = theta_hash;
    c.orders["order_L_g"] = guessed->order();
    c.orders["checked_mod_t"] = rt.order();
    c.replay = opt.replay_prefix + " guess-ode --series " + opt.theta_file;
    cert.checks.push_back(std::move(c));

    Check g = make_check("guessed_annihilates_c", "L_g annihilates the closed form C to the known precision",
            CheckStatus::Unproven);
    const auto res = apply(*guessed, cf.C);
    g.passed = res.is_zero_mod();
    g.inputs["L_g"] = hash_of(*guessed);
    g.inputs["C"] = hash_of(cf.C);
    g.orders["checked_mod_t"] = res.order();
    g.details["right_remainder_L_C_by_L_g_zero"] = yes(rrem(lc, *guessed).is_zero());
    g.replay = replay;
    cert.checks.push_back(std::move(g));
  }
  return cert;
}

Certificate certify_transcendence(const TranscendenceOptions& opt) {
  Certificate cert;
  cert.conclusion =
      "Theta transcendental, hence Q(x,y), Q(x,0), Q(0,y) transcendental for a != b, c != 0 "
      "(conditional on the listed EMPIRICAL checks)";
  const std::string replay = opt.replay_prefix + " certify --full";
  const QX three_t = QX::var() * QX(3);
  {
    const QX k1 = subst_x(formulas::t_prefactor_1(), three_t);
    const QX k2 = subst_x(formulas::t_prefactor_2(), three_t);
    Check c = make_check("substitution_x_3t", "x -> 3t kills the (3t - x) x term of T and keeps the other", CheckStatus::Proven);
    c.passed = k1.is_zero() && !k2.is_zero();
    c.inputs["formulas"] = content_hash(formulas::fingerprint());
    c.details["first_prefactor_at_3t"] = to_string(k1, "t");
    c.details["second_prefactor_at_3t"] = to_string(k2, "t");
    c.replay = replay;
    cert.checks.push_back(std::move(c));
  }
  const OreOp h_op = f21_ode(formulas::t_hyp_2());
  {
    const LocalData ld = detect_log_at_0(h_op);
    Check c = make_check("log_in_h", "(9t^2 - 9t) H'' + (9t - 18) H' - H has a logarithmic solution at 0", CheckStatus::Proven);
    c.passed = ld.log == LocalData::Log::Present;
    c.inputs["H_op"] = hash_of(h_op);
    c.details["indicial"] = to_string(ld.indicial, "m");
    c.details["log"] = to_string(ld.log);
    c.replay = opt.replay_prefix + " ore --loganalysis H.txt";
    cert.checks.push_back(std::move(c));
  }
  {
    GuessConfig cfg;
    cfg.max_order = 1;
    cfg.reserve = opt.h_reserve;
    cfg.max_degree = (opt.h_order - opt.h_reserve - 1) / 2 - 1;
    const auto h = f21_series(formulas::t_hyp_2(), opt.h_order);
    const GuessResult g = guess_min_ode(h, cfg);
    bool complete = true;
    for (const auto& v : g.visited)
      if (v.outcome == CellVisit::Outcome::Insufficient) complete = false;
    Check c = make_check("h_order_minimal", "no order-1 operator annihilates H (staircase exhausted)", CheckStatus::Empirical);
    c.passed = !g.op && g.exhausted && complete;
    c.orders["series_order"] = opt.h_order;
    c.orders["reserve"] = opt.h_reserve;
    c.orders["max_degree"] = cfg.max_degree;
    c.orders["cells_visited"] = static_cast<int>(g.visited.size());
    c.replay = opt.replay_prefix + " guess-ode --series H.txt --max-order 1 --max-degree " +
               std::to_string(cfg.max_degree) + " --reserve " + std::to_string(opt.h_reserve);
    cert.checks.push_back(std::move(c));
  }
  {
    Check c = make_check("closure_deduction",
            "H has a log at 0 and is not annihilated by an order-1 operator, so H is transcendental; "
            "T(t;3t) is a nonzero polynomial times H(27t^3), so T is transcendental; algebraic Theta would "
            "make int_0^t A3 T and then T algebraic",
            CheckStatus::Proven);
    bool ok = true;
    for (const auto& ch : cert.checks) ok = ok && ch.passed;
    c.passed = ok;
    c.details["kind"] = "deduction from the checks above";
    c.details["premises"] = "substitution_x_3t,log_in_h,h_order_minimal";
    c.replay = replay;
    cert.checks.push_back(std::move(c));
  }
  {
    const WalkGF gf = enumerate(StepSet::kreweras(), WeightSpec::symbolic(), 4);
    const SecondFactorRelations rel = second_factor_coeffs(gf, WeightSpec::symbolic());
    const MPoly a = MPoly::var(Var::a), b = MPoly::var(Var::b), c = MPoly::var(Var::c);
    const MPoly q3 = coeff_at(gf, 0, 0).coeff(3);
    const MPoly& t0 = rel.t0;
    const MPoly& t3 = rel.t3;
    const bool q00 = q3 == (a + b) * c;
    const bool r0 = t0 == a * c + b * c - a * b * c;
    const bool r3 = (t3 + a * b * (a + b) * c - t0 * (a + b) * c).is_zero();
    // c^2 (a+b)^2 lies in (t0, t3): a + b = 0 when c != 0
    const bool sum = (c * c * (a + b) * (a + b) - (c * (a + b) + c * c * (a + b)) * t0 + c * t3).is_zero();
    // c a^2 lies in (t0, c (a+b)): then a = 0, and b = 0 by symmetry
    const bool each = (c * a * a - c * (a + b) * (a - MPoly(1)) - t0).is_zero();
    Check ck = make_check("q00_relations",
             "[t^3]Q(0,0) = (a+b)c; the t^0 and t^3 coefficients of ab - (ab - ac - bc + abc)Q(0,0) force a = b = 0 "
             "when c != 0",
             CheckStatus::Proven);
    ck.passed = q00 && r0 && r3 && sum && each;
    ck.orders["enumerated_mod_t"] = 4;
    ck.details["t0"] = t0.to_string();
    ck.details["t3"] = t3.to_string();
    ck.details["q00_t3"] = yes(q00);
    ck.details["t3_reduces_to_ab(a+b)c"] = yes(r3);
    ck.details["c^2(a+b)^2_in_ideal"] = yes(sum);
    ck.details["ca^2_in_ideal"] = yes(each);
    ck.replay = opt.replay_prefix + " enumerate --steps kreweras --n 4";
    cert.checks.push_back(std::move(ck));
  }
  return cert;
}

}  // namespace kreweras
