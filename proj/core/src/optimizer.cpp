#include "loghankel/optimizer.hpp"

#include <algorithm>
#include <cmath>

#include "loghankel/functionals.hpp"

namespace loghankel {

namespace {

const double kTwoPi = 2.0 * std::acos(-1.0);

// Search coordinates: c1 real, x and w in polar form.
struct Point {
  double c = 0.0, rx = 0.0, tx = 0.0, rw = 0.0, tw = 0.0;
};

LZParams to_params(const Point& p) {
  return {p.c, std::polar(p.rx, p.tx), std::polar(p.rw, p.tw)};
}

// |H_{2,1}|^2 at a search point. Comparisons run on the squared modulus; the
// square root is monotone, so the argmax is unchanged and cheaper.
double h21_norm(const AlphaClassSpec& spec, const Point& p,
                std::uint64_t& evals) {
  ++evals;
  const CoeffTriple t = lz_coefficients(to_params(p));
  const A234 a = a234_closed_form(spec, t.c1, t.c2, t.c3);
  return std::norm(h21_from_a234(a.a2, a.a3, a.a4));
}

// Golden-section maximization over [lo, hi]; returns best probe seen.
template <typename F>
std::pair<double, double> golden_max(F&& f, double lo, double hi, int iters) {
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  double best_x = f1 >= f2 ? x1 : x2;
  double best_f = std::max(f1, f2);
  for (int i = 0; i < iters; ++i) {
    if (f1 >= f2) {
      hi = x2; x2 = x1; f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1; x1 = x2; f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = f(x2);
    }
    if (f1 > best_f) { best_f = f1; best_x = x1; }
    if (f2 > best_f) { best_f = f2; best_x = x2; }
  }
  return {best_f, best_x};
}

struct Candidate {
  double norm = -1.0;
  Point point;
};

double& point_coord(Point& p, int j) {
  switch (j) {
    case 0: return p.c;
    case 1: return p.rx;
    case 2: return p.tx;
    case 3: return p.rw;
    default: return p.tw;
  }
}

// Coordinate-descent polish. Each sweep runs one golden section per
// coordinate; windows halve after a sweep with no improvement. The schedule
// depends only on the evolving state, never on the remaining budget, so a
// longer run extends a shorter one probe-for-probe (monotone refinement).
void polish(const AlphaClassSpec& spec, Candidate& cand, double wc, double wr,
            double wt, int sweeps, std::uint64_t& evals) {
  constexpr int kGoldenIters = 48;
  double win[5] = {wc, wr, wt, wr, wt};
  const double lo_lim[5] = {0.0, 0.0, -1e30, 0.0, -1e30};
  const double hi_lim[5] = {2.0, 1.0, 1e30, 1.0, 1e30};
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    bool improved = false;
    for (int j = 0; j < 5; ++j) {
      const double center = point_coord(cand.point, j);
      const double lo = std::max(lo_lim[j], center - win[j]);
      const double hi = std::min(hi_lim[j], center + win[j]);
      auto [fv, xv] = golden_max(
          [&](double v) {
            Point q = cand.point;
            point_coord(q, j) = v;
            return h21_norm(spec, q, evals);
          },
          lo, hi, kGoldenIters);
      if (fv > cand.norm) {
        cand.norm = fv;
        point_coord(cand.point, j) = xv;
        improved = true;
      }
    }
    if (!improved) {
      bool all_tiny = true;
      for (double& w : win) {
        w *= 0.5;
        if (w > 1e-13) all_tiny = false;
      }
      if (all_tiny) break;
    }
  }
}

}  // namespace

MaxResult maximize_h21(const AlphaClassSpec& spec, const SearchConfig& cfg) {
  spec.validate();
  cfg.validate();

  const double dc = 2.0 / static_cast<double>(cfg.grid_c - 1);
  const double dr = 1.0 / static_cast<double>(cfg.grid_ring - 1);
  const double dt = kTwoPi / static_cast<double>(cfg.grid_angle);

  std::uint64_t evals = 0;
  // Best point per c-slice; slices are scanned in lexicographic order with a
  // strict improvement test, so the first of any exact tie (the smallest
  // point) wins.
  std::vector<Candidate> slice(static_cast<size_t>(cfg.grid_c));
  for (int ic = 0; ic < cfg.grid_c; ++ic) {
    Candidate& best = slice[static_cast<size_t>(ic)];
    const double c = static_cast<double>(ic) * dc;
    for (int ir = 0; ir < cfg.grid_ring; ++ir) {
      const double rx = static_cast<double>(ir) * dr;
      for (int it = 0; it < cfg.grid_angle; ++it) {
        const double tx = static_cast<double>(it) * dt;
        for (int jr = 0; jr < cfg.grid_ring; ++jr) {
          const double rw = static_cast<double>(jr) * dr;
          for (int jt = 0; jt < cfg.grid_angle; ++jt) {
            const Point p{c, rx, tx, rw, static_cast<double>(jt) * dt};
            const double v = h21_norm(spec, p, evals);
            if (v > best.norm) best = {v, p};
          }
        }
      }
    }
  }

  // Polish the strongest slices; order candidates by value (descending),
  // breaking ties toward smaller c.
  std::vector<int> order(static_cast<size_t>(cfg.grid_c));
  for (int i = 0; i < cfg.grid_c; ++i) order[static_cast<size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return slice[static_cast<size_t>(a)].norm > slice[static_cast<size_t>(b)].norm;
  });

  Candidate best = slice[static_cast<size_t>(order[0])];
  const int n_polish = std::min(cfg.top_k, cfg.grid_c);
  for (int k = 0; k < n_polish; ++k) {
    Candidate cand = slice[static_cast<size_t>(order[static_cast<size_t>(k)])];
    polish(spec, cand, dc, dr, dt, cfg.polish_iters, evals);
    if (cand.norm > best.norm) best = cand;
  }

  MaxResult result;
  result.best_params = to_params(best.point);
  result.value = std::sqrt(best.norm);
  result.evaluations = evals;
  result.bound = bound_for(spec).value;
  result.margin = result.bound - result.value;
  return result;
}

std::vector<BoundReport> scan_alpha(ClassKind kind,
                                    const std::vector<double>& alphas,
                                    const SearchConfig& cfg) {
  cfg.validate();
  for (double a : alphas) {
    if (!(a > 0.0 && a <= 1.0)) {
      throw std::domain_error("scan_alpha: alpha out of (0,1]");
    }
  }
  std::vector<BoundReport> reports;
  reports.reserve(alphas.size());
  for (double a : alphas) {
    const AlphaClassSpec spec{kind, a};
    BoundReport report = verify_sharpness(spec, 1e-9);
    const MaxResult m = maximize_h21(spec, cfg);
    report.numeric_max = m.value;
    report.margin = m.margin;
    report.evaluations = m.evaluations;
    reports.push_back(std::move(report));
  }
  return reports;
}

}  // namespace loghankel
