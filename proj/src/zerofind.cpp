#include "zerofind.hpp"

#include <cmath>
#include <numbers>

namespace hypres {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct BoundaryZero : std::runtime_error {
  BoundaryZero() : std::runtime_error("zero grazes the contour") {}
};

// Winding of f along a closed path given by map: [0,1) -> C.  Adaptive
// phase tracking; throws BoundaryZero when refinement cannot resolve a
// phase jump or a sample collapses.
int winding_closed(const std::function<cplx(cplx)>& f,
                   const std::function<cplx(double)>& map, int initial) {
  auto eval = [&](double t) {
    cplx v = f(map(t));
    double m = std::abs(v);
    if (!(m > 1e-280) || !std::isfinite(m)) throw BoundaryZero();
    return v;
  };

  double total = 0.0;
  std::function<void(double, cplx, double, cplx, int)> seg =
      [&](double t0, cplx f0, double t1, cplx f1, int depth) {
        double d = std::arg(f1 / f0);
        if (std::fabs(d) <= 1.4) {
          // guard against a symmetric dip straddling a zero
          if (depth < 40 && std::fabs(d) > 0.7) {
            double tm = 0.5 * (t0 + t1);
            cplx fm = eval(tm);
            seg(t0, f0, tm, fm, depth + 1);
            seg(tm, fm, t1, f1, depth + 1);
            return;
          }
          total += d;
          return;
        }
        if (depth >= 46) throw BoundaryZero();
        double tm = 0.5 * (t0 + t1);
        cplx fm = eval(tm);
        if (std::abs(fm) < 1e-11 * std::max(std::abs(f0), std::abs(f1)))
          throw BoundaryZero();
        seg(t0, f0, tm, fm, depth + 1);
        seg(tm, fm, t1, f1, depth + 1);
      };

  std::vector<double> ts(initial);
  std::vector<cplx> fs(initial);
  for (int i = 0; i < initial; ++i) {
    ts[i] = static_cast<double>(i) / initial;
    fs[i] = eval(ts[i]);
  }
  for (int i = 0; i < initial; ++i) {
    int j = (i + 1) % initial;
    double t1 = (j == 0) ? 1.0 : ts[j];
    seg(ts[i], fs[i], t1, fs[j], 0);
  }
  double w = total / kTwoPi;
  long r = std::lround(w);
  if (std::fabs(w - r) > 0.25) throw BoundaryZero();
  return static_cast<int>(r);
}

std::function<cplx(double)> box_path(const ComplexBox& b) {
  return [b](double t) -> cplx {
    double u = t * 4.0;
    if (u < 1.0) return {b.re_min + u * (b.re_max - b.re_min), b.im_min};
    if (u < 2.0) return {b.re_max, b.im_min + (u - 1.0) * (b.im_max - b.im_min)};
    if (u < 3.0) return {b.re_max - (u - 2.0) * (b.re_max - b.re_min), b.im_max};
    return {b.re_min, b.im_max - (u - 3.0) * (b.im_max - b.im_min)};
  };
}

}  // namespace

int winding_number_box(const std::function<cplx(cplx)>& f,
                       const ComplexBox& box) {
  return winding_closed(f, box_path(box), 64);
}

int winding_number_circle(const std::function<cplx(cplx)>& f, cplx center,
                          double radius) {
  auto map = [center, radius](double t) {
    return center + radius * std::polar(1.0, kTwoPi * t);
  };
  return winding_closed(f, map, 32);
}

namespace {

struct Searcher {
  const std::function<cplx(cplx)>& f;
  const ZeroSearchOptions& opts;
  ZeroSearchResult& out;

  cplx deriv(cplx z) const {
    double h = 1e-7 * (1.0 + std::abs(z));
    return (f(z + h) - f(z - h)) / (2.0 * h);
  }

  void newton_finish(const ComplexBox& box, int w) {
    cplx z = box.center();
    double scale_z = 1.0 + std::abs(z);
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      cplx fp = deriv(z);
      if (std::abs(fp) == 0.0) break;
      cplx step = static_cast<double>(w) * f(z) / fp;
      z -= step;
      if (std::abs(z - box.center()) > box.diameter() + 1e-6) break;
      if (std::abs(step) < 1e-12 * scale_z) {
        converged = true;
        break;
      }
    }
    // the argument principle certifies the zeros are inside the box; an
    // iterate that left it is chasing decay, not a zero
    const double slack = 0.05 * box.diameter() + opts.min_diameter;
    if (z.real() < box.re_min - slack || z.real() > box.re_max + slack ||
        z.imag() < box.im_min - slack || z.imag() > box.im_max + slack) {
      out.warnings.push_back("newton left the search box near " +
                             std::to_string(z.real()) + "," +
                             std::to_string(z.imag()));
      out.complete = false;
      z = box.center();
      converged = false;
    }
    if (!converged && box.diameter() > 10.0 * opts.min_diameter) {
      // hopeless Newton far from the bottom; keep the center estimate
      out.warnings.push_back("newton did not converge near " +
                             std::to_string(z.real()) + "," +
                             std::to_string(z.imag()));
      out.complete = false;
    }
    cplx fv = f(z);
    double scale = std::max(1.0, std::abs(deriv(z)) * (1.0 + std::abs(z)));
    double res = std::abs(fv) / scale;
    if (res > opts.residual_tol) {
      out.warnings.push_back("residual " + std::to_string(res) +
                             " above tolerance at " + std::to_string(z.real()) +
                             "," + std::to_string(z.imag()));
      out.complete = false;
    }
    out.zeros.push_back({z, w, res});
  }

  void recurse(const ComplexBox& box, int w, int depth) {
    if (w == 0) return;
    if (box.diameter() < opts.min_diameter || depth >= opts.max_depth) {
      newton_finish(box, w);
      return;
    }
    const bool wide = (box.re_max - box.re_min) >= (box.im_max - box.im_min);
    static constexpr double kFractions[] = {0.5, 0.46, 0.54, 0.42, 0.58, 0.38};
    // a zero sitting on one pair of edges can poison every cut in the
    // preferred direction, so fall back to the other one before giving up
    for (int pass = 0; pass < 2; ++pass) {
      const bool vertical_cut = (pass == 0) ? wide : !wide;
      for (double frac : kFractions) {
        ComplexBox a = box, b = box;
        if (vertical_cut) {
          double cut = box.re_min + frac * (box.re_max - box.re_min);
          a.re_max = cut;
          b.re_min = cut;
        } else {
          double cut = box.im_min + frac * (box.im_max - box.im_min);
          a.im_max = cut;
          b.im_min = cut;
        }
        int wa, wb;
        try {
          wa = winding_number_box(f, a);
          wb = winding_number_box(f, b);
        } catch (const BoundaryZero&) {
          continue;
        }
        if (wa + wb != w) continue;
        recurse(a, wa, depth + 1);
        recurse(b, wb, depth + 1);
        return;
      }
    }
    // no clean cut found; a direct finish cannot certify multiplicities
    out.warnings.push_back("subdivision failed at depth " +
                           std::to_string(depth));
    out.complete = false;
    newton_finish(box, w);
  }
};

}  // namespace

ZeroSearchResult locate_zeros(const std::function<cplx(cplx)>& f,
                              const ComplexBox& box,
                              const ZeroSearchOptions& opts) {
  ZeroSearchResult result;
  ComplexBox work = box;
  int w = 0;
  bool have_winding = false;
  for (int attempt = 0; attempt < 8 && !have_winding; ++attempt) {
    try {
      w = winding_number_box(f, work);
      have_winding = true;
    } catch (const BoundaryZero&) {
      double gw = 0.005 * (work.re_max - work.re_min);
      double gh = 0.005 * (work.im_max - work.im_min);
      double jr = 1e-3 * (attempt + 1) * (work.re_max - work.re_min);
      work.re_min -= gw + jr;
      work.re_max += gw;
      work.im_min -= gh;
      work.im_max += gh + 0.3 * jr;
    }
  }
  if (!have_winding) {
    result.complete = false;
    result.warnings.push_back("boundary winding unresolved after dilation");
    return result;
  }
  result.total_winding = w;
  Searcher s{f, opts, result};
  s.recurse(work, w, 0);

  int orders = 0;
  for (const auto& z : result.zeros) orders += z.order;
  if (orders != w) {
    result.complete = false;
    result.warnings.push_back("located orders do not sum to the winding");
  }
  return result;
}

}  // namespace hypres
