#include "mordell/quad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "mordell/errors.hpp"

namespace mordell::quad {

void QuadConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
    throw DomainError("QuadConfig: tolerances must be positive");
  if (max_refinements < 1)
    throw DomainError("QuadConfig: max_refinements must be >= 1");
}

namespace {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1].
constexpr double kNodes[8] = {
    0.000000000000000000000000000000000e+00,
    2.077849550078984676006894037732449e-01,
    4.058451513773971669066064120769615e-01,
    5.860872354676911302941448382587296e-01,
    7.415311855993944398638647732807884e-01,
    8.648644233597690727897127886409262e-01,
    9.491079123427585245261896840478513e-01,
    9.914553711208126392068546975263285e-01};
constexpr double kWeightK[8] = {
    2.094821410847278280129991748917143e-01,
    2.044329400752988924141619992346491e-01,
    1.903505780647854099132564024210137e-01,
    1.690047266392679028265834265985503e-01,
    1.406532597155259187451895905102379e-01,
    1.047900103222501838398763225415180e-01,
    6.309209262997855329070066318920429e-02,
    2.293532201052922496373200805896959e-02};
constexpr double kWeightG[4] = {
    4.179591836734693877551020408163265e-01,
    3.818300505051189449503697754889751e-01,
    2.797053914892766679014677714237796e-01,
    1.294849661688696932706114326790820e-01};

struct Panel {
  double a, b;
  Complex value;
  double err;
  double noise_floor;  // rounding level of this panel; splitting below it is futile
};

// cfg-independent G7/K15 pair on [a, b]; err = |K15 - G7| (a deliberate
// overestimate of the K15 error, so reported estimates bound the truth)
Panel gk15(const Integrand& f, double a, double b) {
  double mid = 0.5 * (a + b);
  double half = 0.5 * (b - a);
  Complex fc = f(mid);
  if (!is_finite(fc))
    throw SingularityError("integrand returned a non-finite value");
  Complex k15 = kWeightK[0] * fc;
  Complex g7 = kWeightG[0] * fc;
  double kabs = kWeightK[0] * std::abs(fc);
  for (int i = 1; i < 8; ++i) {
    double dx = half * kNodes[i];
    Complex fp = f(mid + dx);
    Complex fm = f(mid - dx);
    if (!is_finite(fp) || !is_finite(fm))
      throw SingularityError("integrand returned a non-finite value");
    Complex pair = fp + fm;
    k15 += kWeightK[i] * pair;
    kabs += kWeightK[i] * (std::abs(fp) + std::abs(fm));
    if (i % 2 == 0) g7 += kWeightG[i / 2] * pair;
  }
  k15 *= half;
  g7 *= half;
  kabs *= half;
  constexpr double kEps = 2.220446049250313e-16;
  return Panel{a, b, k15, std::abs(k15 - g7), 15.0 * kEps * kabs};
}

QuadResult adaptive(const Integrand& f, std::vector<Panel> panels,
                    const QuadConfig& cfg, double truncation) {
  auto total = [&panels] {
    CompensatedSum<Complex> v;
    double e = 0.0;
    for (const Panel& p : panels) {
      v.add(p.value);
      e += p.err;
    }
    return std::pair<Complex, double>(v.value(), e);
  };

  constexpr std::size_t kPanelBudget = 200000;
  double span = 0.0;
  for (const Panel& p : panels) span += p.b - p.a;

  double prev_err = std::numeric_limits<double>::infinity();
  int stalled = 0;
  for (int round = 0; round <= cfg.max_refinements; ++round) {
    auto [value, err] = total();
    double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value));
    if (err <= tol) {
      QuadResult r;
      r.value = value;
      r.err_estimate = err;
      r.panels = static_cast<int>(panels.size());
      r.truncation_point = truncation;
      return r;
    }
    // a flat estimate over several rounds means the refinement is burning
    // panels on the integrand's own rounding noise
    stalled = err > 0.95 * prev_err ? stalled + 1 : 0;
    prev_err = err;
    if (stalled >= 3) break;
    if (round == cfg.max_refinements) break;
    // split every panel holding more than its width-proportional share,
    // unless it already sits at its own rounding floor
    std::vector<Panel> next;
    next.reserve(panels.size() * 2);
    bool split_any = false;
    for (const Panel& p : panels) {
      double share = 0.45 * tol * (p.b - p.a) / span;
      if (p.err > share && p.err > p.noise_floor &&
          next.size() + panels.size() < kPanelBudget) {
        double mid = 0.5 * (p.a + p.b);
        next.push_back(gk15(f, p.a, mid));
        next.push_back(gk15(f, mid, p.b));
        split_any = true;
      } else {
        next.push_back(p);
      }
    }
    if (!split_any) break;
    panels = std::move(next);
  }
  throw ConvergenceError("quadrature failed to reach tolerance within the refinement budget");
}

std::vector<Panel> initial_panels(const Integrand& f, double lo, double hi,
                                  double first_width) {
  std::vector<Panel> panels;
  double a = lo;
  double w = first_width;
  while (a < hi) {
    double b = std::min(a + w, hi);
    panels.push_back(gk15(f, a, b));
    a = b;
    w *= 2.0;
  }
  return panels;
}

// smallest T with decay*T^2 + linear*T - poly*log(max(T,1)) >= budget
double solve_truncation(double decay, double linear, double poly, double budget) {
  double t = 1.0;
  for (int iter = 0; iter < 8; ++iter) {
    double rhs = budget + poly * std::log(std::max(t, 1.0));
    double disc = linear * linear + 4.0 * decay * std::max(rhs, 0.0);
    double next = decay > 0.0 ? (-linear + std::sqrt(disc)) / (2.0 * decay)
                              : rhs / std::max(linear, 1e-300);
    t = std::max(next, 1e-3);
  }
  return t;
}

}  // namespace

QuadResult integrate_finite(const Integrand& f, double a, double b,
                            const QuadConfig& cfg) {
  cfg.validate();
  std::vector<Panel> panels;
  panels.push_back(gk15(f, a, b));
  return adaptive(f, std::move(panels), cfg, b);
}

QuadResult integrate_gaussian(const Integrand& f, double decay_rate,
                              Domain domain, const QuadConfig& cfg,
                              double linear_rate, double poly_degree) {
  cfg.validate();
  if (!(decay_rate > 0.0))
    throw DomainError("integrate_gaussian: decay_rate must be positive");

  // envelope e^{-decay x^2 - linear x}; its running maximum contributes
  // linear^2/(4 decay) e-foldings when the linear part grows
  double peak_log = linear_rate < 0.0
                        ? linear_rate * linear_rate / (4.0 * decay_rate)
                        : 0.0;
  double budget = cfg.truncation_safety + peak_log;
  double t = solve_truncation(decay_rate, linear_rate, poly_degree, budget);

  Integrand g;
  switch (domain) {
    case Domain::positive_axis:
      g = f;
      break;
    case Domain::negative_axis:
      g = [&f](double x) { return f(-x); };
      break;
    case Domain::full_line:
      g = [&f](double x) { return f(x) + f(-x); };
      break;
  }
  return adaptive(g, initial_panels(g, 0.0, t, std::min(1.0, t)), cfg, t);
}

QuadResult integrate_xi_axis(const Integrand& g, const QuadConfig& cfg) {
  cfg.validate();
  // the Gamma pair at height t/4 forces at least e^{-pi t/4} decay
  double t = std::max(60.0, 4.0 * (cfg.truncation_safety + 8.0) / kPi);
  std::vector<Panel> panels;
  double a = 0.0;
  while (a < t) {
    double b = std::min(a + 4.0, t);
    panels.push_back(gk15(g, a, b));
    a = b;
  }
  return adaptive(g, std::move(panels), cfg, t);
}

}  // namespace mordell::quad
