#include "zd/pipeline.hpp"

#include <algorithm>

#include "zd/errors.hpp"

namespace zd {

namespace {

const Rational kHalf(1, 2);

RatFunc rf(std::initializer_list<Rational> num, std::initializer_list<Rational> den = {Rational(1)}) {
  return RatFunc(Poly(num), Poly(den));
}

// Leftover-window top for one moment couple on the 2(1-sigma) target:
//   (4B sigma - 2B) / ((4q + 4B - 4) sigma - (3q + 4B - 4)).
ExponentForm ivic_window_exponent(const Rational& q, const Rational& B) {
  Rational four(4), three(3);
  Poly num({Rational(-2) * B, four * B});
  Poly den({-(three * q + four * B - four), four * q + four * B - four});
  return ExponentForm::constant(RatFunc(num, den));
}

// T^B * N^{(3-4sigma) q / 2}, the moment summand without its delta factors.
ExponentForm moment_base(const Rational& q, const Rational& B) {
  return ExponentForm(RatFunc(B), rf({Rational(3) * q / Rational(2), Rational(-2) * q}));
}

}  // namespace

std::string scenario_name(Scenario s) {
  switch (s) {
    case Scenario::Thm1CuspForm: return "thm1";
    case Scenario::Thm2Zeta: return "thm2";
    case Scenario::IvicRemark: return "remark";
  }
  return "?";
}

Scenario scenario_from_name(const std::string& name) {
  if (name == "thm1") return Scenario::Thm1CuspForm;
  if (name == "thm2") return Scenario::Thm2Zeta;
  if (name == "remark" || name == "ivic") return Scenario::IvicRemark;
  throw Error("unknown scenario '" + name + "'");
}

ScenarioConfig make_scenario(Scenario s) {
  ScenarioConfig cfg;
  cfg.id = s;
  cfg.solve_domain = SigmaRange::closed(Rational(4, 5), Rational(1));

  switch (s) {
    case Scenario::Thm1CuspForm: {
      cfg.nu = 1;
      cfg.target = ExponentForm::constant(rf({Rational(2), Rational(-2)}), 1);
      cfg.n_lower = ExponentForm::constant(RatFunc(kHalf));
      cfg.n_upper_cap = ExponentForm::constant(RatFunc(Rational(1)));
      cfg.y_exp = RatFunc(Rational(1));
      cfg.couples = {{Rational(6), Rational(1), "q0"}, {Rational(1048, 55), Rational(3), "q1"}};
      cfg.tuned = -1;
      cfg.has_cross_terms = true;
      // 1 + (1 - 2 sigma) * y_exp
      cfg.class2_terms = {{"class2", ExponentForm::constant(
          RatFunc(Rational(1)) + rf({Rational(1), Rational(-2)}) * cfg.y_exp, 1)}};
      cfg.annotations = {
          "count hypothesis |R| <= N enforced by contradiction: a subset of size "
          "floor(T^(1/2)) would violate the bound, so |R| <= N from the start",
          "above N = T the same parameters are kept as for N = T; the overshoot is "
          "absorbed into the eps slack (window top clamped to 1)"};
      break;
    }
    case Scenario::Thm2Zeta: {
      cfg.nu = 2;
      cfg.target = ExponentForm::constant(RatFunc(Poly({Rational(24), Rational(-24)}),
                                                  Poly({Rational(-11), Rational(30)})), 1);
      cfg.n_lower = ExponentForm::constant(RatFunc(Poly({Rational(8)}), Poly({Rational(-11), Rational(30)})));
      cfg.n_upper_cap = ExponentForm::constant(RatFunc(Poly({Rational(12)}), Poly({Rational(-11), Rational(30)})), 1);
      cfg.y_exp = RatFunc(Poly({Rational(6)}), Poly({Rational(-11), Rational(30)}));
      cfg.couples = {{Rational(6), Rational(1), "q0"}, {Rational(19), Rational(3), "q1"}};
      cfg.tuned = 1;
      cfg.has_cross_terms = true;
      // (6/(65-84s)) * ((35-54s)/(30s-11))
      cfg.n_upper_candidates = {{"moment-route",
          ExponentForm::constant(RatFunc(Poly({Rational(6)}), Poly({Rational(65), Rational(-84)})) *
                                 RatFunc(Poly({Rational(35), Rational(-54)}), Poly({Rational(-11), Rational(30)})))}};
      cfg.class2_terms = {
          {"class2-a", ExponentForm::constant(
              RatFunc(Rational(1)) + rf({Rational(3), Rational(-6)}) * cfg.y_exp, 1)},
          {"class2-b", ExponentForm::constant(
              RatFunc(Rational(3)) + rf({Rational(19, 2), Rational(-19)}) * cfg.y_exp, 1)}};
      cfg.annotations = {
          "count hypothesis T^{target - eps} <= |R| <= N recorded; smaller |R| needs "
          "no bound and larger |R| is excluded by the subset contradiction"};
      break;
    }
    case Scenario::IvicRemark: {
      cfg.nu = 1;
      cfg.target = ExponentForm::constant(rf({Rational(2), Rational(-2)}), 1);
      cfg.n_lower = ExponentForm::constant(RatFunc(kHalf));
      cfg.n_upper_cap = ExponentForm::constant(RatFunc(Rational(1)));
      cfg.y_exp = RatFunc(Rational(1));
      cfg.couples = {{Rational(6), Rational(1), "q0"}, {Rational(19), Rational(3), "q1"}};
      cfg.tuned = -1;
      cfg.has_cross_terms = false;
      cfg.class2_terms = {{"class2", ExponentForm::constant(
          RatFunc(Rational(1)) + rf({Rational(1), Rational(-2)}) * cfg.y_exp, 1)}};
      cfg.annotations = {"moment-only route: valid exactly where the leftover window closes"};
      break;
    }
  }

  if (cfg.n_upper_candidates.empty()) {
    for (const auto& c : cfg.couples)
      cfg.n_upper_candidates.emplace_back(c.tag, ivic_window_exponent(c.q, c.B));
  }
  return cfg;
}

std::vector<LvehTerm> lveh_terms(const ScenarioConfig& cfg) {
  const bool zeta = cfg.id == Scenario::Thm2Zeta;
  const Rational d1_on_moments = cfg.has_cross_terms ? Rational(2) : Rational(0);
  const MomentCouple& c0 = cfg.couples.at(0);
  const MomentCouple& c1 = cfg.couples.at(1);

  std::vector<LvehTerm> terms;
  terms.push_back({"diagonal", Rational(0), Rational(-1),
                   ExponentForm::of_n(rf({Rational(2), Rational(-2)}))});
  terms.push_back({"moment-0", d1_on_moments, c0.B - Rational(1), moment_base(c0.q, c0.B),
                   /*drop_d1_in_table=*/zeta});
  terms.push_back({"moment-1", d1_on_moments, c1.B - Rational(1), moment_base(c1.q, c1.B)});
  if (!cfg.has_cross_terms) return terms;

  // Extra T factors carried by the zeta variant of the cross terms.
  RatFunc e4(Rational(0)), e5(Rational(0)), e6(Rational(0));
  if (zeta) {
    Poly den({Rational(-11), Rational(30)});
    e4 = RatFunc(Poly({Rational(-54), Rational(60)}), den.scaled(Rational(7)));
    e5 = RatFunc(Poly({Rational(-18), Rational(20)}), den);
    e6 = RatFunc(Poly({Rational(-9), Rational(10)}), den);
  }
  terms.push_back({"cross-a", Rational(-8, 7), Rational(-4, 7),
                   ExponentForm(e4, rf({Rational(16, 7), Rational(-16, 7)}))});
  terms.push_back({"cross-b", Rational(-16, 3), Rational(0),
                   ExponentForm(e5, rf({Rational(4), Rational(-16, 3)}))});
  terms.push_back({"cross-c", Rational(-5, 3), Rational(-1, 6),
                   ExponentForm(RatFunc(Rational(1, 3)) + e6, rf({Rational(2), Rational(-8, 3)}))});
  return terms;
}

PipelineParams make_params(const ScenarioConfig& cfg, int tuned_couple) {
  PipelineParams p;
  p.scenario = cfg.id;
  p.c0 = cfg.couples.at(0);
  p.c1 = cfg.couples.at(1);
  p.tuned = tuned_couple;

  // delta2 makes the diagonal term equal the target:
  //   -d2 + (2 - 2 sigma) n = target  =>  d2 = (2 - 2 sigma) n - target.
  p.delta2_exp = ExponentForm::of_n(rf({Rational(2), Rational(-2)})) - cfg.target;
  p.delta2_exp.eps_slack = 0;

  if (!cfg.has_cross_terms) {
    p.delta1_exp = ExponentForm::zero();
    return p;
  }

  // delta1 makes the tuned moment term equal the target:
  //   2 d1 + (B-1) d2 + moment_base = target.
  const MomentCouple& c = cfg.couples.at(static_cast<size_t>(tuned_couple));
  ExponentForm rest = p.delta2_exp.scaled(c.B - Rational(1)) + moment_base(c.q, c.B);
  p.delta1_exp = (cfg.target - rest).scaled(kHalf);
  p.delta1_exp.eps_slack = 0;
  return p;
}

std::vector<ExponentForm> substitute_deltas(const std::vector<LvehTerm>& terms,
                                            const PipelineParams& params) {
  std::vector<ExponentForm> out;
  out.reserve(terms.size());
  for (const auto& t : terms)
    out.push_back(t.base + params.delta1_exp.scaled(t.d1_pow) + params.delta2_exp.scaled(t.d2_pow));
  return out;
}

std::vector<Threshold> thm1_constraints(const Rational& q, const Rational& B) {
  if (!(q > B + Rational(8, 5)))
    throw Infeasible("q = " + q.str() + " <= B + 8/5 with B = " + B.str() +
                     ": constraint denominators collapse, no sigma range");
  Rational q3 = Rational(3) * q, q4 = Rational(4) * q, B4 = Rational(4) * B;
  std::vector<Threshold> cs;
  cs.push_back({"cross-a", SigmaRange::at_least((q3 - 6) / (q4 - B4 - 6))});
  cs.push_back({"cross-b", SigmaRange::at_least((q3 - 4) / (q4 - B4 - 3))});
  cs.push_back({"cross-c", SigmaRange::at_least((Rational(15) * q - 32) / (Rational(20) * (q - B) - 32))});
  cs.push_back({"cross-a-n-sign", SigmaRange::at_least((q3 + B4) / (q4 + B4))});
  cs.push_back({"moment-slope", SigmaRange::at_least(Rational(1) - q / (B4 + q4 - 4))});
  cs.push_back({"n-sign", SigmaRange::at_least(Rational(1) - q / (B4 + q4))});
  return cs;
}

NWindow n_window(const Rational& sigma, const ScenarioConfig& cfg) {
  NWindow w;
  w.lo = eval_exact(cfg.n_lower, sigma, Rational(0));
  bool first = true;
  Rational top(0);
  for (const auto& [name, form] : cfg.n_upper_candidates) {
    Rational v = eval_exact(form, sigma, Rational(0));
    if (first || v > top) top = v;
    first = false;
  }
  Rational cap = eval_exact(cfg.n_upper_cap, sigma, Rational(0));
  w.capped = cap < top;
  w.hi = w.capped ? cap : top;
  w.closed = w.lo >= w.hi;
  return w;
}

std::vector<Class2Eval> class2_exponent(const Rational& sigma, const ScenarioConfig& cfg) {
  std::vector<Class2Eval> out;
  for (const auto& [name, form] : cfg.class2_terms) {
    Class2Eval e;
    e.name = name;
    e.exponent = eval_exact(form, sigma, Rational(0));
    e.identical_to_target = form.same_function(cfg.target);
    e.ok_range = e.identical_to_target
                     ? cfg.solve_domain
                     : solve_threshold(form, cfg.target, Rational(0), cfg.solve_domain);
    out.push_back(std::move(e));
  }
  return out;
}

namespace {

struct Segment {
  Rational lo, hi;
  int couple;
};

// Affine-in-n T-exponent of the moment summand (delta2 already substituted,
// the shared delta1^2 factor excluded): used to pick the pointwise dominant
// couple, which is exactly the one whose tuned delta1 stays <= 1.
std::pair<Rational, Rational> moment_affine(const ScenarioConfig& cfg, const PipelineParams& p,
                                            int couple, const Rational& sigma) {
  const MomentCouple& c = cfg.couples.at(static_cast<size_t>(couple));
  ExponentForm f = moment_base(c.q, c.B) + p.delta2_exp.scaled(c.B - Rational(1));
  return {f.const_part.eval(sigma), f.n_coeff.eval(sigma)};
}

std::vector<Segment> dominance_segments(const ScenarioConfig& cfg, const Rational& sigma,
                                        const Rational& lo, const Rational& hi) {
  if (cfg.tuned >= 0) return {{lo, hi, cfg.tuned}};
  PipelineParams p0 = make_params(cfg, 0);
  auto [a0, b0] = moment_affine(cfg, p0, 0, sigma);
  auto [a1, b1] = moment_affine(cfg, p0, 1, sigma);
  auto dominant_at = [&](const Rational& n) { return (a0 + b0 * n) >= (a1 + b1 * n) ? 0 : 1; };
  if (b0 == b1) return {{lo, hi, dominant_at(lo)}};
  Rational nx = (a1 - a0) / (b0 - b1);
  if (nx <= lo || nx >= hi) return {{lo, hi, dominant_at(lo) == dominant_at(hi) ? dominant_at(lo)
                                                                                : dominant_at((lo + hi) / Rational(2))}};
  return {{lo, nx, dominant_at(lo)}, {nx, hi, dominant_at(hi)}};
}

void merge_term(std::vector<TermCheck>& acc, size_t i, const std::string& name,
                const Rational& v, const Rational& n, const Rational& target) {
  if (acc.size() <= i) {
    acc.push_back({name, v, target, n, v <= target, v == target});
    return;
  }
  TermCheck& t = acc[i];
  if (v > t.sup) {
    t.sup = v;
    t.witness_n = n;
  }
  t.pass = t.sup <= target;
  t.tight = t.tight || v == target;
}

}  // namespace

DensityCheck verify_density(const Rational& sigma, const ScenarioConfig& cfg) {
  DensityCheck out;
  out.scenario = cfg.id;
  out.sigma = sigma;
  out.target = eval_exact(cfg.target, sigma, Rational(0));
  out.window = n_window(sigma, cfg);

  bool all_pass = true;

  if (out.window.closed) {
    out.notes.push_back("leftover n-window is empty: large-value terms hold vacuously");
    out.delta1 = {Rational(0), Rational(0), true};
    out.delta2 = {Rational(0), Rational(0), true};
  } else {
    auto terms = lveh_terms(cfg);
    auto segments = dominance_segments(cfg, sigma, out.window.lo, out.window.hi);
    bool have_delta = false;
    for (const auto& seg : segments) {
      PipelineParams params = make_params(cfg, seg.couple);
      auto reduced = substitute_deltas(terms, params);
      for (size_t i = 0; i < reduced.size(); ++i) {
        for (const Rational& n : {seg.lo, seg.hi}) {
          merge_term(out.terms, i, terms[i].name, eval_exact(reduced[i], sigma, n), n, out.target);
        }
      }
      for (const Rational& n : {seg.lo, seg.hi}) {
        Rational d1 = eval_exact(params.delta1_exp, sigma, n);
        Rational d2 = eval_exact(params.delta2_exp, sigma, n);
        if (!have_delta) {
          out.delta1 = {d1, d1, false};
          out.delta2 = {d2, d2, false};
          have_delta = true;
        } else {
          out.delta1.lo = min(out.delta1.lo, d1);
          out.delta1.hi = max(out.delta1.hi, d1);
          out.delta2.lo = min(out.delta2.lo, d2);
          out.delta2.hi = max(out.delta2.hi, d2);
        }
      }
    }
    // delta1 in (T^-13, 1], delta2 in [T^-1, 1] as T-exponents.
    out.delta1.ok = out.delta1.hi <= Rational(0) && out.delta1.lo > Rational(-13);
    out.delta2.ok = out.delta2.hi <= Rational(0) && out.delta2.lo >= Rational(-1);
    if (!cfg.has_cross_terms) out.delta1.ok = true;  // no delta1 in this route
    for (const auto& t : out.terms) all_pass = all_pass && t.pass;
    all_pass = all_pass && out.delta1.ok && out.delta2.ok;
    if (segments.size() > 1) out.notes.push_back("dominant moment couple switches inside the window");
  }

  for (const auto& c2 : class2_exponent(sigma, cfg)) {
    TermCheck t{c2.name, c2.exponent, out.target, Rational(0),
                c2.exponent <= out.target, c2.exponent == out.target};
    all_pass = all_pass && t.pass;
    out.class2.push_back(std::move(t));
  }

  out.pass = all_pass;
  return out;
}

namespace {

// sigma range on which `form` (n-free) stays <= bound (n-free).
SigmaRange range_leq(const ExponentForm& form, const ExponentForm& bound, const SigmaRange& domain) {
  if (form.same_function(bound)) return domain;
  return solve_threshold(form, bound, Rational(0), domain);
}

}  // namespace

ValidityReport theorem_report(const ScenarioConfig& cfg) {
  ValidityReport r;
  r.scenario = cfg.id;
  r.annotations = cfg.annotations;

  if (cfg.id == Scenario::Thm1CuspForm) {
    for (const auto& c : cfg.couples) {
      bool feasible = c.q > c.B + Rational(8, 5);
      r.feasibility_flags.push_back("couple " + c.tag + " (q=" + c.q.str() + ", B=" + c.B.str() +
                                    "): q > B + 8/5 " + (feasible ? "holds" : "fails"));
      for (auto& th : thm1_constraints(c.q, c.B))
        r.per_term.push_back({th.name + "(" + c.tag + ")", th.range});
    }
    r.annotations.push_back("moment term of the tuned couple reduces to the target identically");
  } else if (cfg.id == Scenario::Thm2Zeta) {
    PipelineParams params = make_params(cfg, cfg.tuned);
    auto terms = lveh_terms(cfg);
    auto reduced = substitute_deltas(terms, params);
    RatFunc n_lo = cfg.n_lower.const_part;
    for (size_t i = 0; i < terms.size(); ++i) {
      ExponentForm form = terms[i].drop_d1_in_table
                              ? terms[i].base + params.delta2_exp.scaled(terms[i].d2_pow)
                              : reduced[i];
      ExponentForm at_bottom = ExponentForm::constant(form.at_n(n_lo));
      if (at_bottom.same_function(cfg.target)) {
        r.tight_terms.push_back(terms[i].name + " (identity)");
        continue;
      }
      r.per_term.push_back({terms[i].name, range_leq(at_bottom, cfg.target, cfg.solve_domain)});
    }
  } else {  // IvicRemark: slope conditions + per-couple window closure
    for (const auto& c : cfg.couples) {
      Rational slope = Rational(1) - c.q / (Rational(4) * c.B + Rational(4) * c.q - Rational(4));
      r.per_term.push_back({"moment-slope(" + c.tag + ")", SigmaRange::at_least(slope)});
    }
    for (const auto& [name, form] : cfg.n_upper_candidates) {
      r.per_term.push_back({"window-closure(" + name + ")",
                            range_leq(form, cfg.n_lower, cfg.solve_domain)});
    }
  }

  for (const auto& [name, form] : cfg.class2_terms) {
    SigmaRange rng = range_leq(form, cfg.target, cfg.solve_domain);
    if (form.same_function(cfg.target)) r.tight_terms.push_back(name + " (identity)");
    r.per_term.push_back({name, rng});
  }

  r.overall = cfg.solve_domain;
  for (const auto& th : r.per_term) r.overall = r.overall.intersect(th.range);

  // Range on which the leftover window closes: every candidate top <= lower end
  // (the cap never falls below the lower end for these scenarios).
  SigmaRange closed = cfg.solve_domain;
  for (const auto& [name, form] : cfg.n_upper_candidates)
    closed = closed.intersect(range_leq(form, cfg.n_lower, cfg.solve_domain));
  r.n_window_closed = closed;

  if (r.overall.lo) {
    for (const auto& th : r.per_term)
      if (th.range.lo && *th.range.lo == *r.overall.lo) r.tight_terms.push_back(th.name);
  }
  return r;
}

}  // namespace zd
