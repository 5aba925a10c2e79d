// Batch front end: experiments, figure artifacts (JSON/CSV/SVG), and
// bound-verification reports, all through the shared-library C interface.
#include <algorithm>
#include <array>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hypres.h"
#include "json.hpp"

using ordered_json = nlohmann::ordered_json;

namespace {

[[noreturn]] void die(const std::string& msg) {
  std::fprintf(stderr, "error: %s\n", msg.c_str());
  std::exit(2);
}

void check(hypres_status st, const char* what) {
  if (st != HYPRES_OK)
    die(std::string(what) + ": " + hypres_last_error());
}

std::string fmt(const char* f, ...) {
  char buf[256];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

unsigned long long fnv1a(const std::string& s) {
  unsigned long long h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h ? h : 1ull;
}

struct Res {
  double re = 0.0, im = 0.0;
  int ell = 0;
  long long mult = 1;
  double residual = 0.0;
};

struct ResSet {
  std::vector<Res> list;
  std::vector<std::array<double, 2>> rejected;
  std::vector<std::string> warnings;
  bool complete = true;
};

// Take ownership of a C-API list and convert it.
void drain(hypres_resonances* h, ResSet& out) {
  const int n = hypres_resonances_count(h);
  for (int i = 0; i < n; i++) {
    Res r;
    check(hypres_resonances_get(h, i, &r.re, &r.im, &r.ell, &r.mult, &r.residual),
          "resonance access");
    out.list.push_back(r);
  }
  const int nr = hypres_resonances_rejected_count(h);
  for (int i = 0; i < nr; i++) {
    double re, im;
    check(hypres_resonances_rejected_get(h, i, &re, &im), "rejected access");
    out.rejected.push_back({re, im});
  }
  const int nw = hypres_resonances_warning_count(h);
  for (int i = 0; i < nw; i++) out.warnings.push_back(hypres_resonances_warning(h, i));
  out.complete = out.complete && hypres_resonances_complete(h) != 0;
  hypres_resonances_destroy(h);
}

void sort_set(ResSet& s) {
  std::sort(s.list.begin(), s.list.end(), [](const Res& a, const Res& b) {
    if (a.im != b.im) return a.im > b.im;
    if (a.re != b.re) return a.re < b.re;
    return a.ell < b.ell;
  });
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) die("cannot write " + path);
  out << content;
}

// ---------------- SVG ----------------

const char* kPalette[10] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd",
                            "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
                            "#bcbd22", "#7f7f7f"};

double nice_step(double range) {
  if (!(range > 0.0)) return 1.0;
  const double raw = range / 6.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double n = raw / mag;
  const double step = n < 1.5 ? 1.0 : n < 3.0 ? 2.0 : n < 7.0 ? 5.0 : 10.0;
  return step * mag;
}

struct Frame {
  double xmin, xmax, ymin, ymax;
  static constexpr double x0 = 70.0, x1 = 770.0, y0 = 545.0, y1 = 25.0;
  double mx(double x) const { return x0 + (x - xmin) / (xmax - xmin) * (x1 - x0); }
  double my(double y) const { return y0 + (y - ymin) / (ymax - ymin) * (y1 - y0); }
};

void pad_range(double& lo, double& hi) {
  if (hi - lo < 1e-12) {
    lo -= 1.0;
    hi += 1.0;
  } else {
    const double p = 0.08 * (hi - lo);
    lo -= p;
    hi += p;
  }
}

std::string svg_open() {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\">\n"
         "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
}

std::string svg_axes(const Frame& f, const std::string& xlabel,
                     const std::string& ylabel, const std::string& title) {
  std::string s;
  s += fmt("<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" "
           "fill=\"none\" stroke=\"#222\" stroke-width=\"1\"/>\n",
           Frame::x0, Frame::y1, Frame::x1 - Frame::x0, Frame::y0 - Frame::y1);
  const double sx = nice_step(f.xmax - f.xmin);
  for (double t = std::ceil(f.xmin / sx) * sx; t <= f.xmax + 1e-12 * sx; t += sx) {
    const double px = f.mx(t);
    s += fmt("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
             "stroke=\"#ddd\" stroke-width=\"0.5\"/>\n",
             px, Frame::y1, px, Frame::y0);
    s += fmt("<text x=\"%.2f\" y=\"%.2f\" font-size=\"12\" text-anchor=\"middle\" "
             "fill=\"#222\">%.4g</text>\n",
             px, Frame::y0 + 16.0, t + 0.0);
  }
  const double sy = nice_step(f.ymax - f.ymin);
  for (double t = std::ceil(f.ymin / sy) * sy; t <= f.ymax + 1e-12 * sy; t += sy) {
    const double py = f.my(t);
    s += fmt("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
             "stroke=\"#ddd\" stroke-width=\"0.5\"/>\n",
             Frame::x0, py, Frame::x1, py);
    s += fmt("<text x=\"%.2f\" y=\"%.2f\" font-size=\"12\" text-anchor=\"end\" "
             "fill=\"#222\">%.4g</text>\n",
             Frame::x0 - 6.0, py + 4.0, t + 0.0);
  }
  s += fmt("<text x=\"420\" y=\"585\" font-size=\"14\" text-anchor=\"middle\" "
           "fill=\"#222\">%s</text>\n",
           xlabel.c_str());
  s += fmt("<text x=\"16\" y=\"285\" font-size=\"14\" text-anchor=\"middle\" "
           "fill=\"#222\" transform=\"rotate(-90 16 285)\">%s</text>\n",
           ylabel.c_str());
  s += fmt("<text x=\"420\" y=\"16\" font-size=\"14\" text-anchor=\"middle\" "
           "fill=\"#222\">%s</text>\n",
           title.c_str());
  return s;
}

// Scatter of resonances colored by angular momentum.
std::string svg_scatter(const std::vector<Res>& pts, const std::string& title) {
  double xlo = -1.0, xhi = 1.0, ylo = -1.0, yhi = 0.0;
  if (!pts.empty()) {
    xlo = xhi = pts[0].re;
    ylo = yhi = pts[0].im;
    for (const auto& p : pts) {
      xlo = std::min(xlo, p.re);
      xhi = std::max(xhi, p.re);
      ylo = std::min(ylo, p.im);
      yhi = std::max(yhi, p.im);
    }
  }
  pad_range(xlo, xhi);
  pad_range(ylo, yhi);
  yhi = std::max(yhi, 0.0);  // show the real axis
  Frame f{xlo, xhi, ylo, yhi};
  std::string s = svg_open();
  s += svg_axes(f, "Re", "Im", title);
  if (ylo < 0.0 && yhi > 0.0)
    s += fmt("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
             "stroke=\"#888\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n",
             Frame::x0, f.my(0.0), Frame::x1, f.my(0.0));
  std::set<int> ells;
  for (const auto& p : pts) {
    const char* color = p.ell >= 0 ? kPalette[p.ell % 10] : "#444444";
    if (p.ell >= 0) ells.insert(p.ell);
    s += fmt("<circle cx=\"%.2f\" cy=\"%.2f\" r=\"4\" fill=\"%s\" "
             "fill-opacity=\"0.8\" stroke=\"#222\" stroke-width=\"0.5\"/>\n",
             f.mx(p.re), f.my(p.im), color);
  }
  double ly = 40.0;
  for (int ell : ells) {
    s += fmt("<circle cx=\"%.2f\" cy=\"%.2f\" r=\"4\" fill=\"%s\"/>\n", 700.0,
             ly, kPalette[ell % 10]);
    s += fmt("<text x=\"%.2f\" y=\"%.2f\" font-size=\"12\" fill=\"#222\">l = %d</text>\n",
             710.0, ly + 4.0, ell);
    ly += 16.0;
    if (ly > 520.0) break;
  }
  s += "</svg>\n";
  return s;
}

std::string svg_polyline(const Frame& f, const std::vector<double>& xs,
                         const std::vector<double>& ys, const char* color,
                         const char* dash) {
  std::string s = fmt("<polyline fill=\"none\" stroke=\"%s\" stroke-width=\"1.5\"%s points=\"", color,
                      dash ? fmt(" stroke-dasharray=\"%s\"", dash).c_str() : "");
  for (size_t i = 0; i < xs.size(); i++)
    s += fmt("%.2f,%.2f ", f.mx(xs[i]), f.my(ys[i]));
  s += "\"/>\n";
  return s;
}

// ---------------- artifacts ----------------

ordered_json res_json(const ResSet& s) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : s.list) {
    ordered_json o;
    o["re"] = r.re;
    o["im"] = r.im;
    o["ell"] = r.ell;
    o["mult"] = r.mult;
    o["residual"] = r.residual;
    arr.push_back(o);
  }
  return arr;
}

std::string res_csv(const ResSet& s) {
  std::string out = "re,im,ell,mult,residual\n";
  for (const auto& r : s.list)
    out += fmt("%.12g,%.12g,%d,%lld,%.12g\n", r.re, r.im, r.ell, r.mult, r.residual);
  return out;
}

void finish_artifacts(const std::string& prefix, const ordered_json& j,
                      const std::string& csv, const std::string& svg) {
  write_file(prefix + ".json", j.dump(2) + "\n");
  write_file(prefix + ".csv", csv);
  write_file(prefix + ".svg", svg);
  std::printf("wrote %s.{json,csv,svg}\n", prefix.c_str());
}

void print_summary(const char* name, const ResSet& s) {
  std::printf("%s: %zu resonances", name, s.list.size());
  if (!s.list.empty())
    std::printf("; topmost %.10g%+.10gi (l=%d, mult %lld)", s.list[0].re,
                s.list[0].im, s.list[0].ell, s.list[0].mult);
  std::printf("\n");
  for (const auto& w : s.warnings) std::printf("  warning: %s\n", w.c_str());
  for (const auto& z : s.rejected)
    std::printf("  lattice candidate rejected at %.6g%+.6gi\n", z[0], z[1]);
}

// ---------------- commands ----------------

int cmd_ball(double kappa, int n, double R, int lmax, const std::string& out) {
  hypres_model* m = nullptr;
  check(hypres_model_create(kappa, n, &m), "model");
  ResSet set;
  for (int ell = 0; ell <= lmax; ell++) {
    hypres_resonances* h = nullptr;
    check(hypres_ball_resonances_odd(m, ell, R, &h), "ball resonances");
    drain(h, set);
  }
  hypres_model_destroy(m);
  sort_set(set);
  ordered_json j;
  j["model"] = {{"kappa", kappa}, {"n", n}};
  j["obstacle"] = {{"type", "ball"}, {"radius", R}, {"Lmax", lmax}};
  j["resonances"] = res_json(set);
  j["complete"] = set.complete;
  finish_artifacts(out, j, res_csv(set),
                   svg_scatter(set.list, fmt("ball resonances (n=%d, kappa=%g, R=%g)", n, kappa, R)));
  print_summary("ball", set);
  return 0;
}

int cmd_disk(double kappa, double R, int lmax, double re_min, double re_max,
             double im_min, double im_max, const std::string& out) {
  hypres_model* m = nullptr;
  check(hypres_model_create(kappa, 2, &m), "model");
  ResSet set;
  for (int ell = 0; ell <= lmax; ell++) {
    hypres_resonances* h = nullptr;
    check(hypres_ball_resonances_general(m, ell, R, re_min, re_max, im_min,
                                         im_max, &h),
          "disk resonances");
    drain(h, set);
  }
  hypres_model_destroy(m);
  sort_set(set);
  ordered_json j;
  j["model"] = {{"kappa", kappa}, {"n", 2}};
  j["obstacle"] = {{"type", "disk"}, {"radius", R}, {"Lmax", lmax}};
  j["box"] = {{"re_min", re_min}, {"re_max", re_max}, {"im_min", im_min}, {"im_max", im_max}};
  j["resonances"] = res_json(set);
  if (!set.rejected.empty()) {
    ordered_json arr = ordered_json::array();
    for (const auto& z : set.rejected) arr.push_back({{"re", z[0]}, {"im", z[1]}});
    j["lattice_rejected"] = arr;
  }
  j["complete"] = set.complete;
  finish_artifacts(out, j, res_csv(set),
                   svg_scatter(set.list, fmt("disk resonances (kappa=%g, R=%g)", kappa, R)));
  print_summary("disk", set);
  return 0;
}

int cmd_euclid(int n, double R, int lmax, const std::string& out) {
  ResSet set;
  bool ok_all = true;
  double min_im = 1e300;
  for (int ell = 0; ell <= lmax; ell++) {
    hypres_resonances* h = nullptr;
    check(hypres_euclid_ball_resonances(n, ell, R, &h), "euclid resonances");
    int ok = 1;
    double mi = 0.0, bound = 0.0;
    check(hypres_check_ralston(h, R, &ok, &mi, &bound), "ralston check");
    ok_all = ok_all && ok != 0;
    min_im = std::min(min_im, mi);
    drain(h, set);
  }
  sort_set(set);
  ordered_json j;
  j["model"] = {{"kappa", 0.0}, {"n", n}};
  j["obstacle"] = {{"type", "ball"}, {"radius", R}, {"Lmax", lmax}};
  j["resonances"] = res_json(set);
  j["ralston"] = {{"ok", ok_all}, {"min_abs_im", min_im}, {"bound", 1.0 / R}};
  j["complete"] = true;
  finish_artifacts(out, j, res_csv(set),
                   svg_scatter(set.list, fmt("euclidean ball resonances (n=%d, R=%g)", n, R)));
  print_summary("euclid", set);
  std::printf("ralston: min |Im| = %.12g against bound %.12g -> %s\n", min_im,
              1.0 / R, ok_all ? "ok" : "VIOLATED");
  return ok_all ? 0 : 1;
}

int cmd_bem(double kappa, double R, const std::string& surface_file, int ntheta,
            int nphi, double re_min, double re_max, double im_min, double im_max,
            int probes, unsigned long long seed, bool winding,
            const std::string& out) {
  std::string spec_text;
  if (!surface_file.empty()) {
    std::ifstream in(surface_file, std::ios::binary);
    if (!in) die("cannot read " + surface_file);
    std::ostringstream ss;
    ss << in.rdbuf();
    spec_text = ss.str();
  } else {
    spec_text = fmt("%.17g\n", R);
  }
  if (seed == 0) {
    seed = fnv1a(fmt("bem|%.17g|%s|%d|%d|%.17g|%.17g|%.17g|%.17g|%d", kappa,
                     spec_text.c_str(), ntheta, nphi, re_min, re_max, im_min,
                     im_max, probes));
  }
  hypres_model* m = nullptr;
  check(hypres_model_create(kappa, 3, &m), "model");
  hypres_surface* s = nullptr;
  check(hypres_surface_create(m, spec_text.c_str(), ntheta, nphi, &s), "surface");
  int nodes = 0;
  check(hypres_surface_node_count(s, &nodes), "node count");
  std::printf("bem: %d nodes, seed %llu\n", nodes, seed);
  hypres_resonances* h = nullptr;
  check(hypres_bem_resonances(s, re_min, re_max, im_min, im_max, probes, seed, &h),
        "contour search");
  ResSet set;
  drain(h, set);
  sort_set(set);
  ordered_json j;
  j["model"] = {{"kappa", kappa}, {"n", 3}};
  if (!surface_file.empty())
    j["obstacle"] = {{"type", "surface"}, {"file", surface_file},
                     {"ntheta", ntheta}, {"nphi", nphi}};
  else
    j["obstacle"] = {{"type", "sphere"}, {"radius", R}, {"ntheta", ntheta}, {"nphi", nphi}};
  j["box"] = {{"re_min", re_min}, {"re_max", re_max}, {"im_min", im_min}, {"im_max", im_max}};
  j["seed"] = seed;
  j["resonances"] = res_json(set);
  j["complete"] = set.complete;
  if (winding) {
    double w = 0.0;
    check(hypres_multiplicity_winding(s, re_min, re_max, im_min, im_max, 64, &w),
          "winding");
    j["winding"] = w;
    std::printf("winding multiplicity over the contour: %.6f\n", w);
  }
  hypres_surface_destroy(s);
  hypres_model_destroy(m);
  finish_artifacts(out, j, res_csv(set),
                   svg_scatter(set.list, fmt("boundary-integral resonances (kappa=%g)", kappa)));
  print_summary("bem", set);
  return 0;
}

int cmd_bounds(double kappa, double rho, bool profile, const std::string& out) {
  double mu = 0.0, threshold = 0.0;
  int mu_inf = 0;
  check(hypres_a_profile(0.0, &mu, &mu_inf), "flat profile value");
  check(hypres_improvement_threshold(&threshold), "threshold");
  double alpha = 0.0;
  int at_inf = 0;
  check(hypres_alpha_generic(kappa, rho, &alpha, &at_inf), "alpha");
  hypres_model* m = nullptr;
  check(hypres_model_create(kappa, 3, &m), "model");
  double marklof = 0.0;
  check(hypres_marklof_ratio(m, rho, &marklof), "isoperimetric ratio");
  hypres_model_destroy(m);
  std::printf("mu = %.12g\n", mu);
  std::printf("improvement threshold = %.12g\n", threshold);
  std::printf("alpha(kappa=%g, rho=%g) = %.12g%s\n", kappa, rho, alpha,
              at_inf ? " (supremum at infinity: kappa/2)" : "");
  ordered_json j;
  j["mu"] = mu;
  j["threshold"] = threshold;
  j["alpha"] = {{"kappa", kappa}, {"rho", rho}, {"value", alpha},
                {"at_infinity", at_inf != 0}};
  j["marklof_ratio"] = {{"kappa", kappa}, {"rho", rho}, {"n", 3}, {"value", marklof}};
  std::string csv = "rho_tilde,A,half\n";
  std::string svg;
  if (profile) {
    std::vector<double> rt, aa, hh;
    for (int i = 0; i <= 60; i++) {
      const double x = 0.01 * std::pow(10.0, i / 30.0);
      double v = 0.0;
      int vi = 0;
      check(hypres_a_profile(x, &v, &vi), "profile value");
      rt.push_back(x);
      aa.push_back(v);
      hh.push_back(0.5 * x);
      csv += fmt("%.12g,%.12g,%.12g\n", x, v, 0.5 * x);
    }
    ordered_json arr = ordered_json::array();
    for (size_t i = 0; i < rt.size(); i++)
      arr.push_back({{"rho_tilde", rt[i]}, {"A", aa[i]}, {"half", hh[i]}});
    j["profile"] = arr;
    // width profile on a log axis in rho_tilde
    std::vector<double> lx(rt.size());
    for (size_t i = 0; i < rt.size(); i++) lx[i] = std::log10(rt[i]);
    double ylo = 0.0, yhi = *std::max_element(aa.begin(), aa.end());
    pad_range(ylo, yhi);
    Frame f{-2.08, 0.08, ylo, yhi};
    svg = svg_open();
    svg += fmt("<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" "
               "fill=\"none\" stroke=\"#222\" stroke-width=\"1\"/>\n",
               Frame::x0, Frame::y1, Frame::x1 - Frame::x0, Frame::y0 - Frame::y1);
    for (int dec = -2; dec <= 0; dec++) {
      const double px = f.mx(dec);
      svg += fmt("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
                 "stroke=\"#ddd\" stroke-width=\"0.5\"/>\n",
                 px, Frame::y1, px, Frame::y0);
      svg += fmt("<text x=\"%.2f\" y=\"%.2f\" font-size=\"12\" "
                 "text-anchor=\"middle\" fill=\"#222\">%.4g</text>\n",
                 px, Frame::y0 + 16.0, std::pow(10.0, dec));
    }
    const double sy = nice_step(yhi - ylo);
    for (double t = std::ceil(ylo / sy) * sy; t <= yhi + 1e-12 * sy; t += sy) {
      const double py = f.my(t);
      svg += fmt("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
                 "stroke=\"#ddd\" stroke-width=\"0.5\"/>\n",
                 Frame::x0, py, Frame::x1, py);
      svg += fmt("<text x=\"%.2f\" y=\"%.2f\" font-size=\"12\" text-anchor=\"end\" "
                 "fill=\"#222\">%.4g</text>\n",
                 Frame::x0 - 6.0, py + 4.0, t + 0.0);
    }
    svg += svg_polyline(f, lx, aa, kPalette[0], nullptr);
    svg += svg_polyline(f, lx, hh, kPalette[1], "5 3");
    std::vector<double> mx = {lx.front(), lx.back()}, my = {mu, mu};
    svg += svg_polyline(f, mx, my, "#444444", "2 3");
    const double tpx = f.mx(std::log10(threshold));
    svg += fmt("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
               "stroke=\"#999\" stroke-width=\"1\" stroke-dasharray=\"2 2\"/>\n",
               tpx, Frame::y1, tpx, Frame::y0);
    svg += fmt("<text x=\"420\" y=\"585\" font-size=\"14\" text-anchor=\"middle\" "
               "fill=\"#222\">rho_tilde (log scale)</text>\n");
    svg += "<text x=\"16\" y=\"285\" font-size=\"14\" text-anchor=\"middle\" "
           "fill=\"#222\" transform=\"rotate(-90 16 285)\">width</text>\n";
    svg += "<text x=\"420\" y=\"16\" font-size=\"14\" text-anchor=\"middle\" "
           "fill=\"#222\">resonance-free width profile</text>\n";
    svg += fmt("<text x=\"120\" y=\"40\" font-size=\"12\" fill=\"%s\">A(rho_tilde)</text>\n", kPalette[0]);
    svg += fmt("<text x=\"120\" y=\"56\" font-size=\"12\" fill=\"%s\">rho_tilde/2</text>\n", kPalette[1]);
    svg += "<text x=\"120\" y=\"72\" font-size=\"12\" fill=\"#444\">mu</text>\n";
    svg += "</svg>\n";
  } else {
    svg = svg_open() + "</svg>\n";
  }
  finish_artifacts(out, j, csv, svg);
  return 0;
}

int cmd_converge(int n, double R, int ell, const std::vector<double>& kappas,
                 const std::string& out) {
  struct Row {
    double kappa, re, im, dev, model;
  };
  std::vector<Row> rows;
  for (double kappa : kappas) {
    Row row{kappa, 0.0, 0.0, 0.0, kappa * kappa * R / 3.0};
    hypres_resonances* h = nullptr;
    if (kappa > 0.0) {
      hypres_model* m = nullptr;
      check(hypres_model_create(kappa, n, &m), "model");
      check(hypres_ball_resonances_odd(m, ell, R, &h), "resonances");
      hypres_model_destroy(m);
    } else {
      check(hypres_euclid_ball_resonances(n, ell, R, &h), "euclid resonances");
    }
    const int cnt = hypres_resonances_count(h);
    if (cnt == 0) die(fmt("no resonance for kappa=%g", kappa));
    double best_im = -1e300;
    for (int i = 0; i < cnt; i++) {
      double re, im;
      check(hypres_resonances_get(h, i, &re, &im, nullptr, nullptr, nullptr), "get");
      if (im > best_im) {
        best_im = im;
        row.re = re;
        row.im = im;
      }
    }
    hypres_resonances_destroy(h);
    row.dev = std::hypot(row.re, row.im + 1.0 / R);
    rows.push_back(row);
  }
  ordered_json j;
  j["model"] = {{"kappa", nullptr}, {"n", n}};
  j["obstacle"] = {{"type", "ball"}, {"radius", R}, {"ell", ell}};
  ordered_json arr = ordered_json::array();
  std::string csv = "kappa,re,im,deviation,quadratic_model\n";
  for (const auto& r : rows) {
    arr.push_back({{"kappa", r.kappa}, {"re", r.re}, {"im", r.im},
                   {"deviation", r.dev}, {"quadratic_model", r.model}});
    csv += fmt("%.12g,%.12g,%.12g,%.12g,%.12g\n", r.kappa, r.re, r.im, r.dev, r.model);
    std::printf("kappa=%-8g sigma = %.10g%+.10gi   |sigma + i/R| = %.6g   (model %.6g)\n",
                r.kappa, r.re, r.im, r.dev, r.model);
  }
  j["rows"] = arr;
  // deviation against the quadratic model
  std::vector<double> xs, ds, ms;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    xs.push_back(it->kappa);
    ds.push_back(it->dev);
    ms.push_back(it->model);
  }
  double xlo = xs.front(), xhi = xs.back(), ylo = 0.0, yhi = 1e-300;
  for (double d : ds) yhi = std::max(yhi, d);
  for (double d : ms) yhi = std::max(yhi, d);
  pad_range(xlo, xhi);
  pad_range(ylo, yhi);
  Frame f{xlo, xhi, ylo, yhi};
  std::string svg = svg_open();
  svg += svg_axes(f, "kappa", "|sigma + i/R|", fmt("flat-limit convergence (R=%g, l=%d)", R, ell));
  svg += svg_polyline(f, xs, ms, kPalette[1], "5 3");
  for (size_t i = 0; i < xs.size(); i++)
    svg += fmt("<circle cx=\"%.2f\" cy=\"%.2f\" r=\"4\" fill=\"%s\"/>\n",
               f.mx(xs[i]), f.my(ds[i]), kPalette[0]);
  svg += "</svg>\n";
  finish_artifacts(out, j, csv, svg);
  return 0;
}

int cmd_verify() {
  int failures = 0;
  auto report = [&](bool ok, const std::string& name, const std::string& detail) {
    std::printf("[%s] %s: %s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
    if (!ok) failures++;
  };

  {  // odd-dimensional ball: width bound with the odd-n improvement
    hypres_model* m = nullptr;
    check(hypres_model_create(1.0, 3, &m), "model");
    bool ok_all = true;
    double min_im = 1e300;
    for (int ell = 0; ell <= 10; ell++) {
      hypres_resonances* h = nullptr;
      check(hypres_ball_resonances_odd(m, ell, 0.25, &h), "ball resonances");
      int ok = 1;
      double mi = 0.0, margin = 0.0;
      check(hypres_verify_width_bounds(h, m, 0.25, 1, &ok, &mi, &margin), "width check");
      if (hypres_resonances_count(h) > 0) {
        ok_all = ok_all && ok != 0;
        min_im = std::min(min_im, mi);
      }
      hypres_resonances_destroy(h);
    }
    hypres_model_destroy(m);
    report(ok_all, "ball width bound (n=3, kappa=1, R=0.25, l<=10)",
           fmt("min |Im sigma| = %.6g", min_im));
  }
  {  // planar disk: kappa/2 strip
    hypres_model* m = nullptr;
    check(hypres_model_create(1.0, 2, &m), "model");
    bool ok_all = true;
    double min_im = 1e300;
    int count = 0;
    for (int ell = 0; ell <= 8; ell++) {
      hypres_resonances* h = nullptr;
      check(hypres_ball_resonances_general(m, ell, 1.0, -4.0, 4.0, -4.0, -0.05, &h),
            "disk resonances");
      int ok = 1;
      double mi = 0.0, margin = 0.0;
      check(hypres_verify_width_bounds(h, m, 1.0, 0, &ok, &mi, &margin), "width check");
      if (hypres_resonances_count(h) > 0) {
        ok_all = ok_all && ok != 0;
        min_im = std::min(min_im, mi);
        count += hypres_resonances_count(h);
      }
      hypres_resonances_destroy(h);
    }
    hypres_model_destroy(m);
    report(ok_all && count > 0, "disk half-strip (kappa=1, R=1, l<=8)",
           fmt("%d resonances, min |Im sigma| = %.6g >= 1/2", count, min_im));
  }
  {  // Euclidean optimality
    bool ok_all = true;
    double min_im = 1e300;
    for (int ell = 0; ell <= 12; ell++) {
      hypres_resonances* h = nullptr;
      check(hypres_euclid_ball_resonances(3, ell, 1.0, &h), "euclid resonances");
      int ok = 1;
      double mi = 1e300, bound = 0.0;
      check(hypres_check_ralston(h, 1.0, &ok, &mi, &bound), "ralston");
      if (hypres_resonances_count(h) > 0) {
        ok_all = ok_all && ok != 0;
        min_im = std::min(min_im, mi);
      }
      hypres_resonances_destroy(h);
    }
    const bool sharp = std::fabs(min_im - 1.0) < 1e-10;
    report(ok_all && sharp, "euclidean lower bound (unit ball, l<=12)",
           fmt("min |Im lambda| = %.12g, bound 1", min_im));
  }
  {  // width-profile structure
    double mu = 0.0, th = 0.0, a1 = 0.0;
    int inf0 = 0, inf1 = 0;
    check(hypres_a_profile(0.0, &mu, &inf0), "mu");
    check(hypres_improvement_threshold(&th), "threshold");
    check(hypres_a_profile(1.0, &a1, &inf1), "A(1)");
    double prev = 0.0;
    bool mono = true;
    for (int i = 0; i <= 20; i++) {
      const double x = 0.01 + (1.0 - 0.01) * i / 20.0;
      double v = 0.0;
      int vi = 0;
      check(hypres_a_profile(x, &v, &vi), "profile");
      if (v + 1e-12 < prev) mono = false;
      prev = v;
    }
    const bool ok = std::fabs(mu - 0.0482) < 5e-4 && std::fabs(th - 0.1221) < 1e-3 &&
                    std::fabs(a1 - 0.5) < 1e-6 && inf1 != 0 && mono;
    report(ok, "width profile structure",
           fmt("mu = %.6g, threshold = %.6g, A(1) = %.6g, monotone = %s", mu, th,
               a1, mono ? "yes" : "no"));
  }
  std::printf("%s\n", failures == 0 ? "all verification reports passed"
                                    : "verification FAILURES present");
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"scattering resonances of obstacles in hyperbolic space"};
  app.set_version_flag("--version", std::string(hypres_version()));
  app.require_subcommand(1);

  double kappa = 1.0, R = 0.25, rho = 0.25;
  int n = 3, lmax = 12, ell = 1, ntheta = 20, nphi = 30, probes = 8;
  double re_min = -6.0, re_max = 6.0, im_min = -6.0, im_max = -0.01;
  std::string out, surface_file;
  std::string kappas_arg = "0.8,0.4,0.2,0.1,0.05";
  unsigned long long seed = 0;
  bool profile = false, winding = false;

  auto* ball = app.add_subcommand("ball", "exact resonances of a ball in odd-dimensional hyperbolic space");
  ball->add_option("--kappa", kappa, "curvature scale")->check(CLI::PositiveNumber);
  ball->add_option("--n", n, "dimension (odd, >= 3)");
  ball->add_option("--R", R, "ball radius")->check(CLI::PositiveNumber);
  ball->add_option("--Lmax", lmax, "largest angular momentum");
  ball->add_option("--out", out, "artifact path prefix");

  auto* disk = app.add_subcommand("disk", "resonances of a hyperbolic disk via the radial series");
  disk->add_option("--kappa", kappa, "curvature scale")->check(CLI::PositiveNumber);
  disk->add_option("--R", R, "disk radius")->check(CLI::PositiveNumber);
  disk->add_option("--Lmax", lmax, "largest angular momentum");
  disk->add_option("--re-min", re_min, "search box");
  disk->add_option("--re-max", re_max, "search box");
  disk->add_option("--im-min", im_min, "search box");
  disk->add_option("--im-max", im_max, "search box");
  disk->add_option("--out", out, "artifact path prefix");

  auto* euclid = app.add_subcommand("euclid", "resonances of a Euclidean ball (flat reference)");
  euclid->add_option("--n", n, "dimension (odd, >= 3)");
  euclid->add_option("--R", R, "ball radius")->check(CLI::PositiveNumber);
  euclid->add_option("--Lmax", lmax, "largest angular momentum");
  euclid->add_option("--out", out, "artifact path prefix");

  auto* bem = app.add_subcommand("bem", "boundary-integral resonance search in dimension 3");
  bem->add_option("--kappa", kappa, "curvature scale")->check(CLI::PositiveNumber);
  bem->add_option("--R", R, "sphere radius (ignored with --surface)");
  bem->add_option("--surface", surface_file, "surface spec file");
  bem->add_option("--ntheta", ntheta, "polar quadrature size");
  bem->add_option("--nphi", nphi, "azimuthal grid size");
  bem->add_option("--re-min", re_min, "contour box");
  bem->add_option("--re-max", re_max, "contour box");
  bem->add_option("--im-min", im_min, "contour box");
  bem->add_option("--im-max", im_max, "contour box");
  bem->add_option("--probes", probes, "contour probe columns");
  bem->add_option("--seed", seed, "probe seed (default: config hash)");
  bem->add_flag("--winding", winding, "also compute the trace winding over the contour");
  bem->add_option("--out", out, "artifact path prefix");

  auto* bounds = app.add_subcommand("bounds", "resonance-free width bounds and profile");
  bounds->add_option("--kappa", kappa, "curvature scale");
  bounds->add_option("--rho", rho, "enclosing-ball radius")->check(CLI::PositiveNumber);
  bounds->add_flag("--profile", profile, "tabulate the scale-invariant width profile");
  bounds->add_option("--out", out, "artifact path prefix");

  auto* converge = app.add_subcommand("converge", "flat-limit convergence of the topmost ball resonance");
  converge->add_option("--n", n, "dimension (odd, >= 3)");
  converge->add_option("--R", R, "ball radius")->check(CLI::PositiveNumber);
  converge->add_option("--ell", ell, "angular momentum");
  converge->add_option("--kappas", kappas_arg, "comma-separated curvature list");
  converge->add_option("--out", out, "artifact path prefix");

  auto* verify = app.add_subcommand("verify", "run the default bound-verification reports");

  CLI11_PARSE(app, argc, argv);

  if (ball->parsed()) return cmd_ball(kappa, n, R, lmax, out.empty() ? "ball" : out);
  if (disk->parsed()) {
    if (!disk->count("--R")) R = 1.0;
    return cmd_disk(kappa, R, lmax, re_min, re_max, im_min, im_max,
                    out.empty() ? "disk" : out);
  }
  if (euclid->parsed()) {
    if (!euclid->count("--R")) R = 1.0;
    return cmd_euclid(n, R, lmax, out.empty() ? "euclid" : out);
  }
  if (bem->parsed()) {
    if (!bem->count("--re-min")) re_min = -0.6;
    if (!bem->count("--re-max")) re_max = 0.6;
    if (!bem->count("--im-min")) im_min = -4.6;
    if (!bem->count("--im-max")) im_max = -3.6;
    return cmd_bem(kappa, R, surface_file, ntheta, nphi, re_min, re_max, im_min,
                   im_max, probes, seed, winding, out.empty() ? "bem" : out);
  }
  if (bounds->parsed()) return cmd_bounds(kappa, rho, profile, out.empty() ? "bounds" : out);
  if (converge->parsed()) {
    std::vector<double> ks;
    std::stringstream ss(kappas_arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (!tok.empty()) ks.push_back(std::stod(tok));
    }
    if (ks.empty()) die("empty kappa list");
    return cmd_converge(n, R, ell, ks, out.empty() ? "converge" : out);
  }
  if (verify->parsed()) return cmd_verify();
  return 0;
}
