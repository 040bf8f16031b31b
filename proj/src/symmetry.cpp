#include "dp6/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "dp6/parse.hpp"

namespace dp6 {

extern const char* const kPointsText;

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  return out;
}

int parse_index(const std::string& s, int n) {
  std::size_t used = 0;
  int v = -1;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || v < 0 || v >= n) throw std::invalid_argument("bad coordinate index '" + s + "'");
  return v;
}

std::vector<Complex> embed_vec(std::span<const CycElem> p) {
  std::vector<Complex> out;
  for (const auto& c : p) out.push_back(c.embed());
  return out;
}

/// Linear forms sum_j e(i, j) t_j in the ring of t.
std::vector<Poly> column_forms(const CycMatrix& e, const RingPtr& t) {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < e.rows(); ++i) {
    Poly f(t);
    for (std::size_t j = 0; j < e.cols(); ++j)
      if (!e(i, j).is_zero()) f += e(i, j) * Poly::variable(t, static_cast<int>(j));
    out.push_back(std::move(f));
  }
  return out;
}

int perm_sign(const std::vector<int>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

}  // namespace

// ---------------------------------------------------------------- LinearAut

LinearAut LinearAut::from_matrix(std::string name, CycMatrix m) {
  if (m.rows() != m.cols() || m.rows() == 0) throw std::invalid_argument("automorphism matrix must be square");
  if (determinant(m).is_zero()) throw std::invalid_argument("automorphism matrix is singular");
  LinearAut g;
  g.name_ = std::move(name);
  CycMatrix p = m;
  for (int n = 1; n <= 60; ++n) {
    if (is_scalar(p)) {
      g.order_ = n;
      g.m_ = std::move(m);
      return g;
    }
    p = p * m;
  }
  throw std::invalid_argument("matrix of " + g.name_ + " has no scalar power up to 60");
}

LinearAut LinearAut::from_spec(std::string_view spec, int n) {
  std::string name;
  auto colon = spec.find(':');
  if (colon != std::string_view::npos && spec.find("->") > colon) {
    name = trim(spec.substr(0, colon));
    spec = spec.substr(colon + 1);
  }
  CycMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  std::vector<bool> row_seen(static_cast<std::size_t>(n)), col_seen(static_cast<std::size_t>(n));
  for (const auto& item : split(spec, ',')) {
    auto arrow = item.find("->");
    if (arrow == std::string::npos) throw std::invalid_argument("expected i->j in '" + item + "'");
    int i = parse_index(trim(item.substr(0, arrow)), n);
    std::string rhs = trim(item.substr(arrow + 2));
    CycElem c(1);
    if (auto star = rhs.find('*'); star != std::string::npos) {
      c = parse_coeff(trim(rhs.substr(star + 1)));
      rhs = trim(rhs.substr(0, star));
    }
    int j = parse_index(rhs, n);
    if (row_seen[static_cast<std::size_t>(i)] || col_seen[static_cast<std::size_t>(j)])
      throw std::invalid_argument("index repeated in '" + std::string(spec) + "'");
    row_seen[static_cast<std::size_t>(i)] = col_seen[static_cast<std::size_t>(j)] = true;
    m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = c;
  }
  if (std::find(row_seen.begin(), row_seen.end(), false) != row_seen.end())
    throw std::invalid_argument("every coordinate needs an image");
  return from_matrix(name, std::move(m));
}

LinearAut LinearAut::identity(int n) { return from_matrix("id", CycMatrix::identity(static_cast<std::size_t>(n))); }

LinearAut LinearAut::compose(const LinearAut& h) const { return from_matrix(name_ + "*" + h.name_, m_ * h.m_); }

LinearAut LinearAut::power(long k) const {
  long e = ((k % order_) + order_) % order_;
  return from_matrix(name_ + "^" + std::to_string(k), matpow(m_, e));
}

LinearAut LinearAut::inverse() const { return from_matrix(name_ + "^-1", dp6::inverse(m_)); }

std::vector<CycElem> LinearAut::apply(std::span<const CycElem> p) const {
  std::vector<CycElem> out(m_.rows());
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = 0; j < m_.cols(); ++j)
      if (!m_(i, j).is_zero()) out[i] += m_(i, j) * p[j];
  return out;
}

std::vector<Complex> LinearAut::apply(std::span<const Complex> p) const {
  std::vector<Complex> out(m_.rows());
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = 0; j < m_.cols(); ++j)
      if (!m_(i, j).is_zero()) out[i] += m_(i, j).embed() * p[j];
  return out;
}

Poly LinearAut::push(const Poly& f) const { return substitute_linear(f, dp6::inverse(m_)); }
Poly LinearAut::pull(const Poly& f) const { return substitute_linear(f, m_); }

LinearAut sigma() { return LinearAut::from_spec("sigma: 0->3,1->4,2->0,3->5,4->2,5->1"); }
LinearAut rho() { return LinearAut::from_matrix("rho", sigma().power(2).matrix()); }
LinearAut tau() { return LinearAut::from_matrix("tau", sigma().power(3).matrix()); }

// ---------------------------------------------------------- linear algebra

std::optional<std::vector<CycElem>> express_in_span(const Poly& f, std::span<const Poly> basis) {
  std::map<std::array<std::uint8_t, kMaxVars>, std::size_t> rows;
  auto index = [&](const Monomial& m) {
    auto [it, fresh] = rows.emplace(m.exp, rows.size());
    return it->second;
  };
  for (const auto& b : basis)
    for (const auto& t : b.terms()) index(t.mon);
  for (const auto& t : f.terms()) index(t.mon);
  const std::size_t k = basis.size();
  CycMatrix m(rows.size(), k + 1);
  for (std::size_t j = 0; j < k; ++j)
    for (const auto& t : basis[j].terms()) m(rows.at(t.mon.exp), j) = t.coeff;
  for (const auto& t : f.terms()) m(rows.at(t.mon.exp), k) = t.coeff;
  Echelon e = row_echelon(std::move(m));
  std::vector<CycElem> coeffs(k);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == k) return std::nullopt;
    coeffs[e.pivots[r]] = e.rref(r, k);
  }
  return coeffs;
}

Invariance verify_invariance(const LinearAut& g, const CIThreefold& x) {
  Invariance out;
  std::vector<Poly> ab{x.a, x.b};
  CycMatrix c(2, 2);
  for (std::size_t i = 0; i < 2; ++i) {
    auto coeffs = express_in_span(g.pull(ab[i]), ab);
    if (!coeffs) return out;
    c(i, 0) = (*coeffs)[0];
    c(i, 1) = (*coeffs)[1];
  }
  out.invariant = true;
  out.c = std::move(c);
  return out;
}

// --------------------------------------------------------- form action

const FormImage& FormActionTable::row(const std::string& name) const {
  for (const auto& r : rows)
    if (r.name == name) return r;
  throw std::out_of_range("no row " + name);
}

FormActionTable form_action_table(const LinearAut& g, const std::vector<std::pair<std::string, Poly>>& forms,
                                  const std::vector<std::string>& basis) {
  FormActionTable t;
  t.basis = basis;
  std::vector<Poly> bpolys;
  for (const auto& b : basis) {
    auto it = std::find_if(forms.begin(), forms.end(), [&](const auto& e) { return e.first == b; });
    if (it == forms.end()) throw std::invalid_argument("basis form " + b + " not among the forms");
    bpolys.push_back(it->second);
  }
  for (const auto& [name, f] : forms) {
    FormImage r;
    r.name = name;
    r.image = g.push(f);
    for (const auto& [other, h] : forms) {
      if (h.is_zero() || r.image.is_zero() || !(h.lm() == r.image.lm())) continue;
      CycElem c = r.image.lc() / h.lc();
      if (r.image == c * h) {
        r.target = other;
        r.scalar = c;
        break;
      }
    }
    auto coords = express_in_span(r.image, bpolys);
    if (!coords) throw NotInSpan("image of " + name + " under " + g.name() + " is not in the span");
    r.coords = std::move(*coords);
    t.rows.push_back(std::move(r));
  }
  return t;
}

FormActionTable form_action_table(const LinearAut& g, const NamedFormRegistry& reg) {
  std::vector<std::pair<std::string, Poly>> forms;
  for (const char* n : {"Q1", "Q2", "Q3", "F1", "F2", "F3", "F4", "F5", "F6", "F7"}) forms.emplace_back(n, reg.get(n));
  return form_action_table(g, forms, {"Q1", "Q2", "F1", "F2", "F3", "F4", "F5", "F6", "F7"});
}

// ------------------------------------------------------------ fixed loci

std::vector<Eigenspace> eigenspaces(const LinearAut& g) {
  const std::size_t n = static_cast<std::size_t>(g.dim());
  std::vector<Eigenspace> out;
  std::size_t total = 0;
  for (int k = 0; k < 12; ++k) {
    CycMatrix m = g.matrix();
    CycElem z = CycElem::zeta(k);
    for (std::size_t i = 0; i < n; ++i) m(i, i) -= z;
    CycMatrix ns = nullspace(m);
    if (ns.cols() == 0) continue;
    total += ns.cols();
    out.push_back({k, std::move(ns)});
  }
  if (total != n) throw std::invalid_argument("eigenvalues of " + g.name() + " are not all 12th roots of unity");
  return out;
}

std::vector<CPoint> FixedLocus::cpoints() const {
  std::vector<CPoint> out;
  for (const auto& p : points) out.push_back(p.point);
  return out;
}

FixedLocus fixed_locus(const LinearAut& g, const CIThreefold& x, const SolveOptions& opt) {
  if (!verify_invariance(g, x).invariant) throw NotInvariant(x.name + " is not invariant under " + g.name());
  FixedLocus out;
  for (auto& e : eigenspaces(g)) {
    const int d = static_cast<int>(e.basis.cols());
    RingPtr t = rings::numbered("t", d);
    auto lin = column_forms(e.basis, t);
    Poly a = compose(x.a, lin, t), b = compose(x.b, lin, t);
    if (a.is_zero() && b.is_zero()) {
      if (d == 1) {
        std::vector<CycElem> p;
        for (std::size_t i = 0; i < e.basis.rows(); ++i) p.push_back(e.basis(i, 0));
        out.points.push_back({{normalize_projective(embed_vec(p)), 0, {}}, e.exponent, p});
      } else {
        FixedComponent c{e, {}};
        CycMatrix ann = nullspace(e.basis.transpose());
        for (std::size_t j = 0; j < ann.cols(); ++j) {
          Poly f(x.a.ring());
          for (std::size_t i = 0; i < ann.rows(); ++i)
            if (!ann(i, j).is_zero()) f += ann(i, j) * Poly::variable(x.a.ring(), static_cast<int>(i));
          c.ideal.push_back(std::move(f));
        }
        out.components.push_back(std::move(c));
      }
      continue;
    }
    if (d == 1) continue;
    std::vector<ChartSystem> sys;
    for (int c = 0; c < d; ++c) {
      ChartSystem s{c, {}};
      for (const auto& f : {a, b})
        if (!f.is_zero()) s.gens.push_back(dehomogenize(f, c));
      sys.push_back(std::move(s));
    }
    SolutionSet sol;
    try {
      sol = solve_zero_dim(sys, d, opt);
    } catch (const NotZeroDimensional&) {
      throw std::runtime_error("fixed locus of " + g.name() + " meets " + x.name +
                               " in a non-linear positive-dimensional set");
    }
    Matrix<Complex> eb = embed(e.basis);
    for (const auto& s : sol.points) {
      std::vector<Complex> p(eb.rows());
      for (std::size_t i = 0; i < eb.rows(); ++i)
        for (std::size_t j = 0; j < eb.cols(); ++j) p[i] += eb(i, j) * s.coords[j];
      out.points.push_back({{normalize_projective(p), s.residual, s.charts}, e.exponent, std::nullopt});
    }
  }
  return out;
}

Orbits orbit_partition(const LinearAut& g, std::span<const CPoint> s, const Tolerances& tol) {
  Orbits o;
  const std::size_t n = s.size();
  o.perm.assign(n, n);
  std::vector<bool> hit(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto q = g.apply(std::span<const Complex>(s[i].coords));
    std::size_t best = n;
    double bd = tol.dedup;
    for (std::size_t j = 0; j < n; ++j) {
      double d = fs_distance(q, s[j].coords);
      if (d < bd) {
        bd = d;
        best = j;
      }
    }
    if (best == n || hit[best]) throw std::runtime_error("point set is not stable under " + g.name());
    hit[best] = true;
    o.perm[i] = best;
  }
  std::vector<bool> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> orbit;
    for (std::size_t j = i; !seen[j]; j = o.perm[j]) {
      seen[j] = true;
      orbit.push_back(j);
    }
    if (orbit.size() == 1) o.fixed.push_back(i);
    o.orbits.push_back(std::move(orbit));
  }
  return o;
}

// ------------------------------------------------------------------ twist

TwistFactor canonical_twist(const LinearAut& g, const CIThreefold& x, const SolveOptions& opt) {
  if (!verify_invariance(g, x).invariant) throw NotInvariant(x.name + " is not invariant under " + g.name());
  LinearAut h = g.inverse();
  TwistFactor out;
  out.det_ratio = determinant(h.matrix()) / determinant(verify_invariance(h, x).c);

  const int c = 0;
  out.chart = c;
  RingPtr r = rings::chart(c);
  auto var_of = [&](int coord) { return coord < c ? coord : coord - 1; };
  std::vector<Poly> yhat;
  for (int i = 0; i < 6; ++i)
    yhat.push_back(i == c ? Poly::constant(r, CycElem(1)) : Poly::variable(r, var_of(i)));
  std::vector<Poly> ell;
  for (std::size_t i = 0; i < 6; ++i) {
    Poly f(r);
    for (std::size_t j = 0; j < 6; ++j)
      if (!h.matrix()(i, j).is_zero()) f += h.matrix()(i, j) * yhat[j];
    ell.push_back(std::move(f));
  }
  auto grad = [&](const Poly& f) {
    std::vector<Poly> gr;
    for (int k = 0; k < 5; ++k) gr.push_back(f.derivative(k));
    return gr;
  };

  Poly a = dehomogenize(x.a, c), b = dehomogenize(x.b, c);
  std::vector<Poly> ab{a, b};
  GroebnerBasis gb = opt.cache.compute(ab, r);
  auto ga = grad(a), gb_ = grad(b);
  const auto& lc_ = ell[static_cast<std::size_t>(c)];

  std::vector<int> coords;
  for (int i = 0; i < 6; ++i)
    if (i != c) coords.push_back(i);
  for (std::size_t p = 0; p < 5; ++p)
    for (std::size_t q = p + 1; q < 5; ++q) {
      Poly dj = ga[p] * gb_[q] - ga[q] * gb_[p];
      if (normal_form(dj, gb).is_zero()) continue;
      std::vector<int> kset, order;
      for (int k = 0; k < 5; ++k)
        if (k != static_cast<int>(p) && k != static_cast<int>(q)) kset.push_back(k);
      order = kset;
      order.push_back(static_cast<int>(p));
      order.push_back(static_cast<int>(q));
      const int eps = perm_sign(order);

      std::vector<std::vector<Poly>> m;
      for (int k : kset) {
        const auto& lk = ell[static_cast<std::size_t>(coords[static_cast<std::size_t>(k)])];
        auto gk = grad(lk), gc = grad(lc_);
        std::vector<Poly> row;
        for (std::size_t j = 0; j < 5; ++j) row.push_back(lc_ * gk[j] - lk * gc[j]);
        m.push_back(std::move(row));
      }
      m.push_back(ga);
      m.push_back(gb_);
      Poly ntil = poly_determinant(m);

      int vp = coords[p], vq = coords[q];
      auto at_ell = [&](const Poly& f) { return compose(f, ell, r); };
      Poly minor = at_ell(x.a.derivative(vp)) * at_ell(x.b.derivative(vq)) -
                   at_ell(x.a.derivative(vq)) * at_ell(x.b.derivative(vp));
      Poly dprime = CycElem(eps) * (lc_ * lc_ * minor);

      Poly nn = normal_form(ntil, gb), nd = normal_form(dprime, gb);
      if (nd.is_zero()) continue;
      if (nn.is_zero() || !(nn.lm() == nd.lm()))
        throw TwistNotConstant("pulled-back residue form is not a constant multiple");
      CycElem k = nn.lc() / nd.lc();
      if (!normal_form(ntil - k * dprime, gb).is_zero())
        throw TwistNotConstant("pulled-back residue form is not a constant multiple");
      out.scalar = k;
      out.split = {vp, vq};
      return out;
    }
  throw std::runtime_error("no usable Jacobian minor in chart " + std::to_string(c));
}

// ---------------------------------------------------------- tangent action

std::vector<CycElem> TangentAction::exact() const {
  if (12 % order) throw std::invalid_argument("order does not divide 12");
  std::vector<CycElem> out;
  for (int a : weights) out.push_back(CycElem::zeta(12 / order * a));
  return out;
}

CycElem TangentAction::determinant() const {
  CycElem d(1);
  for (const auto& e : exact()) d *= e;
  return d;
}

TangentAction local_tangent_action(const LinearAut& g, const CIThreefold& x, const CPoint& p,
                                   const Tolerances& tol) {
  std::vector<Complex> pt = normalize_projective(p.coords);
  auto gp = g.apply(std::span<const Complex>(pt));
  if (fs_distance(gp, pt) > tol.dedup) throw std::invalid_argument("point is not fixed by " + g.name());
  const int n = g.dim();
  int c = 0;
  for (int i = 0; i < n; ++i)
    if (pt[static_cast<std::size_t>(i)] == Complex(1)) {
      c = i;
      break;
    }
  std::vector<int> idx;
  for (int i = 0; i < n; ++i)
    if (i != c) idx.push_back(i);
  const Complex mu = gp[static_cast<std::size_t>(c)];
  Matrix<Complex> m = embed(g.matrix());
  const auto sc = static_cast<std::size_t>(c);
  CMatrix d(n - 1, n - 1);
  for (int a = 0; a < n - 1; ++a)
    for (int b = 0; b < n - 1; ++b) {
      auto i = static_cast<std::size_t>(idx[static_cast<std::size_t>(a)]);
      auto j = static_cast<std::size_t>(idx[static_cast<std::size_t>(b)]);
      d(a, b) = (m(i, j) - pt[i] * m(sc, j)) / mu;
    }

  NumPoly na(x.a), nb(x.b);
  std::vector<Complex> ga(static_cast<std::size_t>(n)), gb(static_cast<std::size_t>(n));
  na.eval_grad(pt, ga);
  nb.eval_grad(pt, gb);
  CMatrix jac(2, n - 1);
  for (int b = 0; b < n - 1; ++b) {
    jac(0, b) = ga[static_cast<std::size_t>(idx[static_cast<std::size_t>(b)])];
    jac(1, b) = gb[static_cast<std::size_t>(idx[static_cast<std::size_t>(b)])];
  }
  Eigen::JacobiSVD<CMatrix> svd(jac, Eigen::ComputeFullV);
  auto s = svd.singularValues();
  if (s(0) <= tol.snap || s(1) <= tol.snap * s(0)) throw SingularFixedPoint("fixed point is singular on " + x.name);
  CMatrix t = svd.matrixV().rightCols(n - 3);
  CMatrix r = t.adjoint() * d * t;

  TangentAction out;
  out.order = g.order();
  Eigen::ComplexEigenSolver<CMatrix> es(r);
  const double two_pi = 2 * std::numbers::pi;
  for (int i = 0; i < r.rows(); ++i) {
    Complex lam = es.eigenvalues()(i);
    out.raw.push_back(lam);
    long a = std::lround(std::arg(lam) / two_pi * out.order);
    a = ((a % out.order) + out.order) % out.order;
    double dist = std::abs(lam - std::polar(1.0, two_pi * static_cast<double>(a) / out.order));
    out.snap_distance = std::max(out.snap_distance, dist);
    out.weights.push_back(static_cast<int>(a));
  }
  if (out.snap_distance >= tol.snap)
    throw SnapFailure("tangent eigenvalue is " + std::to_string(out.snap_distance) + " away from a root of unity");
  std::sort(out.weights.begin(), out.weights.end());
  return out;
}

// ---------------------------------------------------------- elliptic curves

namespace {
RingPtr xy_ring() {
  static const RingPtr r = Ring::make({"x", "y"});
  return r;
}
}  // namespace

EllipticCurveModel EllipticCurveModel::order2(CycElem lambda) {
  EllipticCurveModel e;
  e.kind_ = Kind::Order2;
  RingPtr r = xy_ring();
  Poly x = Poly::variable(r, 0), y = Poly::variable(r, 1), one = Poly::constant(r, CycElem(1));
  e.eq_ = y * y - x * (x - one) * (x - Poly::constant(r, lambda));
  e.alpha_ = CycElem(1);
  e.beta_ = CycElem(-1);
  return e;
}

EllipticCurveModel EllipticCurveModel::order3() {
  EllipticCurveModel e;
  e.kind_ = Kind::Order3;
  e.eq_ = parse_poly("y^2 - x^3 + 1", xy_ring());
  e.alpha_ = CycElem::zeta3().pow(2);
  e.beta_ = CycElem(1);
  return e;
}

bool EllipticCurveModel::preserves_equation() const {
  RingPtr r = xy_ring();
  std::vector<Poly> img{alpha_ * Poly::variable(r, 0), beta_ * Poly::variable(r, 1)};
  return compose(eq_, img, r) == eq_;
}

namespace {

/// Distinct roots of a univariate polynomial in variable `var` of `f`,
/// from the companion matrix.
std::vector<Complex> distinct_roots(const Poly& f, int var, double tol) {
  int deg = 0;
  for (const auto& t : f.terms()) deg = std::max(deg, static_cast<int>(t.mon.exp[static_cast<std::size_t>(var)]));
  std::vector<Complex> c(static_cast<std::size_t>(deg) + 1);
  for (const auto& t : f.terms()) c[t.mon.exp[static_cast<std::size_t>(var)]] += t.coeff.embed();
  if (deg == 0) return {};
  CMatrix comp = CMatrix::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1;
  for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -c[static_cast<std::size_t>(i)] / c[static_cast<std::size_t>(deg)];
  Eigen::ComplexEigenSolver<CMatrix> es(comp);
  std::vector<Complex> out;
  for (int i = 0; i < deg; ++i) {
    Complex z = es.eigenvalues()(i);
    if (std::none_of(out.begin(), out.end(), [&](Complex w) { return std::abs(w - z) < tol; })) out.push_back(z);
  }
  return out;
}

}  // namespace

CurveFixedData curve_fixed_data(const EllipticCurveModel& curve) {
  const bool fx = curve.alpha().is_one(), fy = curve.beta().is_one();
  if (fx && fy) throw std::invalid_argument("identity has no isolated fixed points");
  RingPtr r = xy_ring();
  const Poly& f = curve.equation();
  CurveFixedData out;
  auto zero = Poly::constant(r, CycElem(0));
  if (!fx && !fy) {
    if (f.evaluate(std::vector<CycElem>{0, 0}).is_zero()) out.affine_points.push_back({0, 0});
  } else if (!fx) {
    // x = 0, y free.
    Poly g = compose(f, std::vector<Poly>{zero, Poly::variable(r, 1)}, r);
    for (Complex y : distinct_roots(g, 1, 1e-8)) out.affine_points.push_back({0, y});
  } else {
    Poly g = compose(f, std::vector<Poly>{Poly::variable(r, 0), zero}, r);
    for (Complex x : distinct_roots(g, 0, 1e-8)) out.affine_points.push_back({x, 0});
  }
  // A Weierstrass cubic has one point at infinity, fixed by any diagonal map.
  out.fixed_points = static_cast<int>(out.affine_points.size()) + 1;

  if (!out.affine_points.empty()) {
    const auto& p = out.affine_points.front();
    Complex fy_at = f.derivative(1).evaluate(std::span<const Complex>(p));
    // x is a local parameter where df/dy does not vanish, otherwise y is.
    out.tangent = std::abs(fy_at) > 1e-9 ? curve.alpha() : curve.beta();
  }
  // f(alpha x, beta y) = f gives g^*(dx / f_y) = alpha beta dx / f_y.
  out.form = (curve.alpha() * curve.beta()).inverse();
  return out;
}

// --------------------------------------------------------- quotient types

QuotientSingType QuotientSingType::inverse() const {
  QuotientSingType q;
  q.order = order;
  for (int w : weights) q.weights.push_back((order - w) % order);
  std::sort(q.weights.begin(), q.weights.end());
  for (int w : q.weights) q.age_numerator += w;
  return q;
}

int QuotientSingType::nonzero_weights() const {
  return static_cast<int>(std::count_if(weights.begin(), weights.end(), [](int w) { return w != 0; }));
}

std::string QuotientSingType::str() const {
  std::ostringstream os;
  os << "1/" << order << "(";
  for (std::size_t i = 0; i < weights.size(); ++i) os << (i ? "," : "") << weights[i];
  os << ")";
  return os.str();
}

QuotientSingType quotient_sing_type(const TangentAction& threefold, const EllipticCurveModel& curve) {
  const int n = curve.order();
  if (threefold.order != n)
    throw std::invalid_argument("automorphism orders differ: " + std::to_string(threefold.order) + " and " +
                                std::to_string(n));
  CycElem t = curve_fixed_data(curve).tangent;
  int b = -1;
  for (int a = 0; a < n; ++a)
    if (CycElem::zeta(12 / n * a) == t) b = a;
  if (b < 0) throw std::invalid_argument("curve tangent eigenvalue has the wrong order");
  QuotientSingType q;
  q.order = n;
  q.weights = threefold.weights;
  q.weights.push_back(b);
  std::sort(q.weights.begin(), q.weights.end());
  for (int w : q.weights) q.age_numerator += w;
  return q;
}

// -------------------------------------------------------- reference points

std::vector<ReferencePoint> reference_points(const std::string& list) {
  std::istringstream in{std::string(kPointsText)};
  std::string line, section;
  std::vector<ReferencePoint> out;
  bool found = false;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      section = trim(std::string_view(line).substr(1, line.size() - 2));
      found = found || section == list;
      continue;
    }
    if (section != list) continue;
    ReferencePoint p;
    std::string body = line;
    if (auto eq = line.find('='); eq != std::string::npos) {
      p.label = trim(line.substr(0, eq));
      body = trim(line.substr(eq + 1));
    } else {
      p.label = "#" + std::to_string(out.size() + 1);
    }
    if (body.size() < 2 || body.front() != '(' || body.back() != ')')
      throw std::invalid_argument("malformed point '" + line + "'");
    for (const auto& c : split(std::string_view(body).substr(1, body.size() - 2), ':'))
      p.coords.push_back(parse_coeff(c));
    out.push_back(std::move(p));
  }
  if (!found) throw std::out_of_range("no point list " + list);
  return out;
}

std::vector<std::vector<CycElem>> coords_of(std::span<const ReferencePoint> pts) {
  std::vector<std::vector<CycElem>> out;
  for (const auto& p : pts) out.push_back(p.coords);
  return out;
}

}  // namespace dp6
