#include "dp6/numsolve.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

namespace dp6 {

Tolerances Tolerances::strict() {
  Tolerances t;
  for (double* v : {&t.dedup, &t.newton, &t.accept, &t.census, &t.match, &t.odp_gap, &t.snap}) *v *= 0.1;
  return t;
}

namespace {

double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1p-53 * 2 - 1; }

struct Evaluated {
  CVector f;
  CMatrix j;
};

Evaluated evaluate_system(const std::vector<NumPoly>& f, const std::vector<Complex>& x) {
  const auto m = static_cast<Eigen::Index>(f.size()), n = static_cast<Eigen::Index>(x.size());
  Evaluated e{CVector(m), CMatrix(m, n)};
  std::vector<Complex> g(x.size());
  for (Eigen::Index i = 0; i < m; ++i) {
    e.f(i) = f[static_cast<std::size_t>(i)].eval_grad(x, g);
    for (Eigen::Index k = 0; k < n; ++k) e.j(i, k) = g[static_cast<std::size_t>(k)];
  }
  return e;
}

double max_abs(const CVector& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

// Newton on the square subsystem picked by column-pivoted QR of J^T at the
// starting point.  Returns the iterate with the smallest residual seen.
std::vector<Complex> newton_refine(const std::vector<NumPoly>& f, std::vector<Complex> x, const Tolerances& tol) {
  const auto n = static_cast<Eigen::Index>(x.size());
  if (n == 0 || static_cast<Eigen::Index>(f.size()) < n) return x;
  Evaluated e = evaluate_system(f, x);
  Eigen::ColPivHouseholderQR<CMatrix> qr(e.j.transpose());
  std::vector<Eigen::Index> rows(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) rows[static_cast<std::size_t>(k)] = qr.colsPermutation().indices()(k);

  std::vector<Complex> best = x;
  double best_res = max_abs(e.f);
  for (int it = 0; it < 50; ++it) {
    CMatrix js(n, n);
    CVector fs(n);
    for (Eigen::Index k = 0; k < n; ++k) {
      js.row(k) = e.j.row(rows[static_cast<std::size_t>(k)]);
      fs(k) = e.f(rows[static_cast<std::size_t>(k)]);
    }
    CVector step = js.colPivHouseholderQr().solve(-fs);
    if (!step.allFinite()) break;
    double xn = 0;
    for (Eigen::Index k = 0; k < n; ++k) {
      x[static_cast<std::size_t>(k)] += step(k);
      xn = std::max(xn, std::abs(x[static_cast<std::size_t>(k)]));
    }
    e = evaluate_system(f, x);
    double res = max_abs(e.f);
    if (res < best_res) {
      best_res = res;
      best = x;
    }
    if (step.norm() <= tol.newton * std::max(1.0, xn)) break;
  }
  return best;
}

std::vector<Complex> lift(const std::vector<Complex>& y, int chart) {
  std::vector<Complex> p(y.begin(), y.end());
  p.insert(p.begin() + chart, Complex(1));
  return p;
}

// Largest generator value at the normalized lift, i.e. in the chart of the
// point's largest coordinate.
double projective_residual(const std::vector<NumPoly>& f, const std::vector<Complex>& y, int chart) {
  std::vector<Complex> p = lift(y, chart);
  double mx = 1;
  for (const auto& c : p) mx = std::max(mx, std::abs(c));
  double r = 0;
  for (const auto& g : f) r = std::max(r, std::abs(g(y)) / std::pow(mx, g.degree()));
  return r;
}

long long grid(double v) { return std::llround(v * 1e6); }

bool coord_less(const CPoint& a, const CPoint& b) {
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    auto ar = grid(a.coords[i].real()), br = grid(b.coords[i].real());
    if (ar != br) return ar < br;
    auto ai = grid(a.coords[i].imag()), bi = grid(b.coords[i].imag());
    if (ai != bi) return ai < bi;
  }
  return false;
}

}  // namespace

ChartSolution solve_chart(const ChartSystem& sys, int ambient, const SolveOptions& opt) {
  ChartSolution out;
  out.data.chart = sys.chart;
  RingPtr ring;
  for (const auto& g : sys.gens)
    if (!g.is_zero()) ring = g.ring();
  if (!ring) throw NotZeroDimensional(sys.chart);
  if (ring->nvars() + 1 != ambient) throw std::invalid_argument("solve_chart: chart ring does not match ambient space");

  GroebnerBasis g = opt.cache.compute(sys.gens, ring);
  if (g.is_unit()) return out;
  QuotientBasis b = quotient_basis(g);
  if (!b.finite) throw NotZeroDimensional(sys.chart);
  out.data.quotient_dim = b.size();

  const int n = ring->nvars();
  std::vector<CMatrix> mt;
  std::mt19937_64 rng(opt.seed);
  const auto d = static_cast<Eigen::Index>(b.size());
  CMatrix l = CMatrix::Zero(d, d);
  for (int k = 0; k < n; ++k) {
    mt.push_back(to_eigen(embed(multiplication_matrix(g, b, k))).transpose());
    l += unit_uniform(rng) * mt.back();
  }
  // Left eigenvectors of the combination are evaluation functionals at the
  // solutions, so each one yields all coordinates by Rayleigh quotients.
  Eigen::ComplexEigenSolver<CMatrix> es(l);
  std::vector<NumPoly> f;
  for (const auto& p : sys.gens)
    if (!p.is_zero()) f.emplace_back(p);
  for (Eigen::Index e = 0; e < d; ++e) {
    CVector u = es.eigenvectors().col(e);
    std::vector<Complex> y(static_cast<std::size_t>(n));
    Complex uu = u.squaredNorm();
    for (int k = 0; k < n; ++k) y[static_cast<std::size_t>(k)] = u.dot(mt[static_cast<std::size_t>(k)] * u) / uu;
    y = newton_refine(f, y, opt.tol);
    double res = projective_residual(f, y, sys.chart);
    if (!(res <= opt.tol.accept)) {
      ++out.data.rejected;
      continue;
    }
    ++out.data.accepted;
    out.points.push_back({normalize_projective(lift(y, sys.chart)), res, {sys.chart}});
  }
  return out;
}

SolutionSet merge_solutions(std::vector<ChartSolution> parts, const Tolerances& tol) {
  SolutionSet s;
  for (auto& part : parts) {
    s.charts.push_back(part.data);
    for (auto& p : part.points) {
      bool merged = false;
      for (auto& q : s.points) {
        if (fs_distance(p.coords, q.coords) >= tol.dedup) continue;
        for (int c : p.charts)
          if (std::find(q.charts.begin(), q.charts.end(), c) == q.charts.end()) q.charts.push_back(c);
        if (p.residual < q.residual) {
          q.coords = p.coords;
          q.residual = p.residual;
        }
        merged = true;
        break;
      }
      if (!merged) s.points.push_back(std::move(p));
    }
  }
  for (auto& p : s.points) std::sort(p.charts.begin(), p.charts.end());
  std::stable_sort(s.points.begin(), s.points.end(), coord_less);
  return s;
}

SolutionSet solve_zero_dim(std::span<const ChartSystem> systems, int ambient, const SolveOptions& opt) {
  std::vector<ChartSolution> parts(systems.size());
  std::vector<std::exception_ptr> errors(systems.size());
  const auto count = static_cast<long>(systems.size());
#pragma omp parallel for schedule(dynamic) if (opt.parallel)
  for (long i = 0; i < count; ++i) {
    try {
      parts[static_cast<std::size_t>(i)] = solve_chart(systems[static_cast<std::size_t>(i)], ambient, opt);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return merge_solutions(std::move(parts), opt.tol);
}

SolutionSet singular_points(const CIThreefold& x, const SolveOptions& opt) {
  std::vector<ChartSystem> sys;
  for (int c = 0; c < 6; ++c) sys.push_back({c, singular_scheme_ideal(x, c)});
  return solve_zero_dim(sys, 6, opt);
}

SmoothnessResult smoothness_check(std::span<const Poly> gens, int codim, const SolveOptions& opt) {
  if (gens.empty()) throw std::invalid_argument("smoothness_check: no generators");
  const int n = gens[0].ring()->nvars();
  std::vector<Poly> all(gens.begin(), gens.end());
  for (auto& m : minors(jacobian_matrix(gens), codim)) all.push_back(std::move(m));
  std::vector<ChartSystem> sys;
  for (int c = 0; c < n; ++c) {
    ChartSystem s{c, {}};
    RingPtr chart = rings::chart_of(gens[0].ring(), c);
    for (const auto& f : all) s.gens.push_back(f.is_zero() ? Poly(chart) : dehomogenize(f, c));
    sys.push_back(std::move(s));
  }
  SmoothnessResult r;
  try {
    SolutionSet s = solve_zero_dim(sys, n, opt);
    r.singular_points = static_cast<long>(s.size());
    r.charts = s.charts;
  } catch (const NotZeroDimensional&) {
    r.singular_points = -1;
  }
  r.smooth = r.singular_points == 0;
  return r;
}

std::string to_string(OdpVerdict v) {
  switch (v) {
    case OdpVerdict::ODP:
      return "ODP";
    case OdpVerdict::Degenerate:
      return "degenerate";
    case OdpVerdict::NotIsolatedSuspect:
      return "not-isolated-suspect";
  }
  return "?";
}

namespace {

class OdpCertifier {
 public:
  OdpCertifier(const Poly& a, const Poly& b, const Tolerances& tol)
      : n_(a.ring()->nvars()), tol_(tol), scale_(std::max(a.norm1(), b.norm1())) {
    for (const Poly* f : {&a, &b}) {
      std::vector<NumPoly> d;
      for (int j = 0; j < n_; ++j) d.emplace_back(f->derivative(j));
      grads_.push_back(std::move(d));
    }
  }

  ODPCertificate operator()(const CPoint& p) const {
    if (static_cast<int>(p.coords.size()) != n_) throw std::invalid_argument("certify_odp: point has wrong length");
    ODPCertificate cert;
    cert.point = p;
    int c = 0;
    for (int i = 1; i < n_; ++i)
      if (std::abs(p.coords[static_cast<std::size_t>(i)]) > std::abs(p.coords[static_cast<std::size_t>(c)])) c = i;
    cert.chart = c;

    // Gradients and Hessians of the dehomogenized forms: drop index c.
    const int m = n_ - 1;
    CMatrix jac(2, m);
    std::array<CMatrix, 2> hess{CMatrix(m, m), CMatrix(m, m)};
    std::vector<Complex> g(static_cast<std::size_t>(n_));
    for (int f = 0; f < 2; ++f) {
      for (int j = 0, jj = 0; j < n_; ++j) {
        if (j == c) continue;
        jac(f, jj) = grads_[static_cast<std::size_t>(f)][static_cast<std::size_t>(j)].eval_grad(p.coords, g);
        for (int k = 0, kk = 0; k < n_; ++k) {
          if (k == c) continue;
          hess[static_cast<std::size_t>(f)](jj, kk++) = g[static_cast<std::size_t>(k)];
        }
        ++jj;
      }
    }
    Eigen::JacobiSVD<CMatrix> js(jac, Eigen::ComputeFullU | Eigen::ComputeFullV);
    cert.jacobian_sv = {js.singularValues()(0), js.singularValues()(1)};
    if (cert.jacobian_sv[0] <= tol_.snap * scale_) return cert;
    if (cert.jacobian_sv[1] > tol_.snap * cert.jacobian_sv[0])
      throw std::invalid_argument("certify_odp: the Jacobian has rank 2, the point is smooth");

    CVector u2 = js.matrixU().col(1), u1 = js.matrixU().col(0);
    cert.lambda = {std::conj(u2(0)), std::conj(u2(1))};
    CMatrix h = cert.lambda[0] * hess[0] + cert.lambda[1] * hess[1];
    // Tangent space of the combination whose gradient does not vanish.
    CMatrix smooth = u1.adjoint() * jac;
    Eigen::JacobiSVD<CMatrix> ts(smooth, Eigen::ComputeFullV);
    CMatrix t = ts.matrixV().rightCols(m - 1);
    CMatrix restricted = t.transpose() * h * t;
    Eigen::JacobiSVD<CMatrix> hs(restricted);
    for (Eigen::Index i = 0; i < hs.singularValues().size(); ++i) cert.hessian_sv.push_back(hs.singularValues()(i));
    bool full = !cert.hessian_sv.empty() && cert.hessian_sv.back() >= tol_.odp_gap * cert.hessian_sv.front();
    cert.verdict = full ? OdpVerdict::ODP : OdpVerdict::NotIsolatedSuspect;
    return cert;
  }

 private:
  int n_;
  Tolerances tol_;
  double scale_;
  std::vector<std::vector<NumPoly>> grads_;
};

}  // namespace

ODPCertificate certify_odp(const Poly& a, const Poly& b, const CPoint& p, const Tolerances& tol) {
  if (a.ring() != b.ring()) throw RingMismatch("certify_odp: forms live in different rings");
  return OdpCertifier(a, b, tol)(p);
}

ODPCertificate certify_odp(const CIThreefold& x, const CPoint& p, const Tolerances& tol) {
  return certify_odp(x.a, x.b, p, tol);
}

std::vector<ODPCertificate> certify_all_serial(const CIThreefold& x, std::span<const CPoint> pts,
                                               const Tolerances& tol) {
  OdpCertifier cert(x.a, x.b, tol);
  std::vector<ODPCertificate> out;
  for (const auto& p : pts) out.push_back(cert(p));
  return out;
}

std::vector<ODPCertificate> certify_all(const CIThreefold& x, std::span<const CPoint> pts, const Tolerances& tol) {
  OdpCertifier cert(x.a, x.b, tol);
  std::vector<ODPCertificate> out(pts.size());
  std::vector<std::exception_ptr> errors(pts.size());
  const auto count = static_cast<long>(pts.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = cert(pts[static_cast<std::size_t>(i)]);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

MatchReport match_points(std::span<const CPoint> found, std::span<const std::vector<CycElem>> expected,
                         const Tolerances& tol) {
  MatchReport first;
  if (found.size() != expected.size()) {
    first.error = "cardinality mismatch: " + std::to_string(found.size()) + " found, " +
                  std::to_string(expected.size()) + " expected";
    return first;
  }
  for (int k : {1, 5, 7, 11}) {
    MatchReport r;
    r.galois = k;
    std::vector<bool> used(found.size(), false);
    for (std::size_t e = 0; e < expected.size(); ++e) {
      std::vector<Complex> q;
      for (const auto& c : expected[e]) q.push_back(c.galois(k).embed());
      std::size_t best = found.size();
      double bd = 0;
      for (std::size_t f = 0; f < found.size(); ++f) {
        if (found[f].coords.size() != q.size()) continue;
        double dd = fs_distance(found[f].coords, q);
        if (best == found.size() || dd < bd) {
          best = f;
          bd = dd;
        }
      }
      if (best == found.size() || bd > tol.match || used[best]) {
        r.unmatched_expected.push_back(e);
        continue;
      }
      used[best] = true;
      r.pairs.emplace_back(best, e);
      r.max_distance = std::max(r.max_distance, bd);
    }
    for (std::size_t f = 0; f < found.size(); ++f)
      if (!used[f]) r.unmatched_found.push_back(f);
    r.ok = r.unmatched_expected.empty() && r.unmatched_found.empty();
    if (r.ok) return r;
    if (k == 1) first = r;
  }
  return first;
}

bool vanishes_at(const NumPoly& f, std::span<const Complex> p, double tol) {
  return std::abs(f(p)) <= tol * std::max(f.norm1(), 1e-300);
}

std::vector<std::string> Census::pattern(std::size_t point) const {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < names.size(); ++k)
    if (vanishes[point][k]) out.push_back(names[k]);
  return out;
}

std::size_t Census::count(const std::string& name) const {
  for (std::size_t k = 0; k < names.size(); ++k)
    if (names[k] == name) return counts[k];
  throw std::out_of_range("census has no column " + name);
}

Census membership_census(std::span<const CPoint> pts, std::span<const NamedForms> sets, const Tolerances& tol) {
  Census c;
  std::vector<std::vector<NumPoly>> compiled;
  for (const auto& s : sets) {
    c.names.push_back(s.name);
    compiled.push_back(compile(s.forms));
  }
  c.counts.assign(sets.size(), 0);
  for (const auto& p : pts) {
    std::vector<bool> row;
    for (std::size_t k = 0; k < sets.size(); ++k) {
      bool all = true;
      for (const auto& f : compiled[k]) all = all && vanishes_at(f, p.coords, tol.census);
      row.push_back(all);
      if (all) ++c.counts[k];
    }
    c.vanishes.push_back(std::move(row));
  }
  return c;
}

}  // namespace dp6
