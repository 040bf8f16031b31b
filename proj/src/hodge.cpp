#include "dp6/hodge.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace dp6 {

namespace {

std::vector<Monomial> cubic_monomials(const RingPtr& ring) {
  std::vector<Monomial> out;
  const int n = ring->nvars();
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      for (int c = b; c < n; ++c) out.push_back(Monomial::var(a) * Monomial::var(b) * Monomial::var(c));
  std::sort(out.begin(), out.end(), [&](const Monomial& x, const Monomial& y) { return ring->compare(x, y) > 0; });
  return out;
}

std::vector<CycElem> coefficients(const Poly& f, const std::vector<Monomial>& mons) {
  std::vector<CycElem> c(mons.size());
  for (const auto& t : f.terms()) {
    auto it = std::find(mons.begin(), mons.end(), t.mon);
    if (it == mons.end()) throw std::invalid_argument("expected a cubic form");
    c[static_cast<std::size_t>(it - mons.begin())] = t.coeff;
  }
  return c;
}

Complex eval_monomial(const Monomial& m, std::span<const Complex> p) {
  Complex v(1);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int e = 0; e < m.exp[i]; ++e) v *= p[i];
  return v;
}

std::vector<std::size_t> ranks_at(const Eigen::VectorXd& sv, const std::vector<double>& tols) {
  std::vector<std::size_t> out;
  const double top = sv.size() ? sv(0) : 0.0;
  for (double t : tols) {
    std::size_t r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (top > 0 && sv(i) > t * top) ++r;
    out.push_back(r);
  }
  return out;
}

Eigen::VectorXd singular_values(const CMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return Eigen::VectorXd();
  return Eigen::BDCSVD<CMatrix>(m).singularValues();
}

}  // namespace

std::vector<CycElem> GradedMap::reduce(const Poly& cubic) const {
  auto c = coefficients(cubic, cubics);
  for (std::size_t r = 0; r < reducer.rows(); ++r) {
    std::size_t pc = 0;
    while (reducer(r, pc).is_zero()) ++pc;
    if (c[pc].is_zero()) continue;
    CycElem f = c[pc];
    for (std::size_t j = 0; j < cubics.size(); ++j)
      if (!reducer(r, j).is_zero()) c[j] -= f * reducer(r, j);
  }
  std::vector<CycElem> out;
  for (std::size_t k : kept) out.push_back(c[k]);
  return out;
}

std::vector<CycElem> GradedMap::apply(std::span<const Poly> g) const {
  const std::size_t k = kept.size();
  // Linear coordinates of g, then the matrix product.
  std::vector<CycElem> x(36);
  for (std::size_t j = 0; j < 6; ++j)
    for (const auto& t : g[j].terms()) {
      if (t.mon.deg != 1) throw std::invalid_argument("expected linear forms");
      std::size_t var = 0;
      while (t.mon.exp[var] == 0) ++var;
      x[6 * j + var] = t.coeff;
    }
  std::vector<CycElem> y(2 * k);
  for (std::size_t r = 0; r < 2 * k; ++r)
    for (std::size_t c = 0; c < 36; ++c)
      if (!x[c].is_zero() && !matrix(r, c).is_zero()) y[r] += matrix(r, c) * x[c];
  return y;
}

GradedMap graded_jacobian_map(const CIThreefold& x, bool parallel) {
  const RingPtr& ring = x.a.ring();
  if (ring->nvars() != 6) throw std::invalid_argument("expected forms on P^5");
  GradedMap m;
  m.ring = ring;
  m.cubics = cubic_monomials(ring);
  const std::size_t nm = m.cubics.size();
  CycMatrix ab(2, nm);
  auto ca = coefficients(x.a, m.cubics), cb = coefficients(x.b, m.cubics);
  for (std::size_t j = 0; j < nm; ++j) {
    ab(0, j) = ca[j];
    ab(1, j) = cb[j];
  }
  Echelon e = row_echelon(ab);
  if (e.rank() != 2) throw std::invalid_argument("A and B are not independent cubics");
  m.reducer = CycMatrix(2, nm);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t j = 0; j < nm; ++j) m.reducer(r, j) = e.rref(r, j);
  for (std::size_t j = 0; j < nm; ++j)
    if (std::find(e.pivots.begin(), e.pivots.end(), j) == e.pivots.end()) m.kept.push_back(j);

  const std::size_t k = m.kept.size();
  m.matrix = CycMatrix(2 * k, 36);
  std::vector<Poly> da, db;
  for (int j = 0; j < 6; ++j) {
    da.push_back(x.a.derivative(j));
    db.push_back(x.b.derivative(j));
  }
  auto column = [&](int col) {
    const int j = col / 6, var = col % 6;
    Poly v = Poly::variable(ring, var);
    auto ra = m.reduce(v * da[static_cast<std::size_t>(j)]);
    auto rb = m.reduce(v * db[static_cast<std::size_t>(j)]);
    for (std::size_t r = 0; r < k; ++r) {
      m.matrix(r, static_cast<std::size_t>(col)) = ra[r];
      m.matrix(k + r, static_cast<std::size_t>(col)) = rb[r];
    }
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int col = 0; col < 36; ++col) column(col);
  } else {
    for (int col = 0; col < 36; ++col) column(col);
  }
  m.rank = rank(m.matrix);
  return m;
}

CokernelBasis cokernel_basis(const GradedMap& m) {
  Echelon e = row_echelon(m.matrix.transpose());
  CokernelBasis out;
  const RingPtr& ring = m.ring;
  const std::size_t k = m.kept.size();
  for (std::size_t r = 0; r < m.codomain_dim(); ++r) {
    if (std::binary_search(e.pivots.begin(), e.pivots.end(), r)) continue;
    out.coordinates.push_back(r);
    Poly mon = Poly::monomial(ring, m.cubics[m.kept[r % k]]);
    if (r < k) out.reps.emplace_back(mon, Poly(ring));
    else out.reps.emplace_back(Poly(ring), mon);
  }
  return out;
}

std::string to_string(H11Source s) {
  switch (s) {
    case H11Source::ComputedEquality: return "computed-equality";
    case H11Source::ExternalPaperValue: return "external-paper-value";
    case H11Source::None: break;
  }
  return "none";
}

CMatrix psi_conditions(const CIThreefold& x, const CokernelBasis& c, std::span<const CPoint> pts, bool parallel) {
  const auto n = static_cast<Eigen::Index>(pts.size());
  const auto cols = static_cast<Eigen::Index>(c.size());
  CMatrix out = CMatrix::Zero(6 * n, cols);
  NumPoly na(x.a), nb(x.b);
  auto block = [&](Eigen::Index i) {
    const auto& p = pts[static_cast<std::size_t>(i)].coords;
    std::vector<Complex> ga(6), gb(6);
    na.eval_grad(p, ga);
    nb.eval_grad(p, gb);
    double scale = 0;
    for (int j = 0; j < 6; ++j) scale = std::max({scale, std::abs(ga[static_cast<std::size_t>(j)]), std::abs(gb[static_cast<std::size_t>(j)])});
    if (scale == 0) scale = 1;
    for (Eigen::Index col = 0; col < cols; ++col) {
      const auto& [g1, g2] = c.reps[static_cast<std::size_t>(col)];
      const bool first = !g1.is_zero();
      const Monomial& mon = first ? g1.lm() : g2.lm();
      Complex mv = eval_monomial(mon, p) / scale;
      for (int j = 0; j < 6; ++j)
        out(6 * i + j, col) = first ? mv * gb[static_cast<std::size_t>(j)] : -mv * ga[static_cast<std::size_t>(j)];
    }
  };
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (Eigen::Index i = 0; i < n; ++i) block(i);
  } else {
    for (Eigen::Index i = 0; i < n; ++i) block(i);
  }
  return out;
}

HodgeReport psi_kernel(const CIThreefold& x, const CokernelBasis& c, std::span<const CPoint> pts,
                       const PsiOptions& opt) {
  HodgeReport r;
  r.cokernel_dim = c.size();
  CMatrix m = psi_conditions(x, c, pts, opt.parallel);
  r.conditions = static_cast<std::size_t>(m.rows());

  NumPoly na(x.a), nb(x.b);
  for (const auto& p : pts) {
    std::vector<Complex> ga(6), gb(6);
    na.eval_grad(p.coords, ga);
    nb.eval_grad(p.coords, gb);
    double norm = 0, nb2 = 0;
    for (int j = 0; j < 6; ++j) {
      norm += std::norm(ga[static_cast<std::size_t>(j)]);
      nb2 += std::norm(gb[static_cast<std::size_t>(j)]);
    }
    // One gradient may vanish at a node, so scale by the larger one.
    norm = std::max(norm, nb2);
    if (norm == 0) continue;
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = i + 1; j < 6; ++j)
        r.max_jacobian_minor = std::max(r.max_jacobian_minor, std::abs(ga[i] * gb[j] - ga[j] * gb[i]) / norm);
  }

  Eigen::VectorXd sv = singular_values(m);
  r.singular_values.assign(sv.data(), sv.data() + sv.size());
  r.ranks.push_back(ranks_at(sv, opt.rank_tols));
  for (std::uint64_t seed : opt.shuffle_seeds) {
    std::vector<Eigen::Index> order(static_cast<std::size_t>(m.rows()));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    CMatrix shuffled(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i) shuffled.row(i) = m.row(order[static_cast<std::size_t>(i)]);
    r.ranks.push_back(ranks_at(singular_values(shuffled), opt.rank_tols));
  }
  const std::size_t rk = r.ranks.front().empty() ? 0 : r.ranks.front().front();
  for (const auto& row : r.ranks)
    for (std::size_t v : row)
      if (v != rk) throw RankPlateauError("numeric rank of the node conditions is not stable");
  r.psi_kernel_dim = c.size() - rk;
  return r;
}

void h11_report(HodgeReport& r, KnownThreefold which) {
  switch (which) {
    case KnownThreefold::YPrime:
      r.h11 = r.psi_kernel_dim;
      r.h11_source = H11Source::ComputedEquality;
      break;
    case KnownThreefold::YDoublePrime:
      r.h11 = 2;
      r.h11_source = H11Source::ExternalPaperValue;
      break;
    case KnownThreefold::Other:
      r.h11.reset();
      r.h11_source = H11Source::None;
      break;
  }
}

}  // namespace dp6
