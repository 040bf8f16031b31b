#include "dp6/numeric.hpp"

#include <algorithm>
#include <stdexcept>

namespace dp6 {

NumPoly::NumPoly(const Poly& p) : nvars_(p.ring() ? p.ring()->nvars() : 0) {
  for (const auto& t : p.terms()) {
    std::vector<int> e(static_cast<std::size_t>(nvars_));
    for (int i = 0; i < nvars_; ++i) e[static_cast<std::size_t>(i)] = t.mon.exp[static_cast<std::size_t>(i)];
    exps_.push_back(std::move(e));
    coeffs_.push_back(t.coeff.embed());
    norm1_ += std::abs(coeffs_.back());
    degree_ = std::max(degree_, static_cast<int>(t.mon.deg));
  }
}

namespace {

// powers[i][k] = x_i^k
std::vector<std::vector<Complex>> power_table(std::span<const Complex> x, int degree) {
  std::vector<std::vector<Complex>> pw(x.size(), std::vector<Complex>(static_cast<std::size_t>(degree) + 1, 1.0));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (int k = 1; k <= degree; ++k) pw[i][static_cast<std::size_t>(k)] = pw[i][static_cast<std::size_t>(k) - 1] * x[i];
  return pw;
}

}  // namespace

Complex NumPoly::operator()(std::span<const Complex> x) const {
  if (static_cast<int>(x.size()) != nvars_) throw std::invalid_argument("NumPoly: point has wrong length");
  auto pw = power_table(x, degree_);
  Complex s = 0;
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    Complex v = coeffs_[t];
    for (int i = 0; i < nvars_; ++i) v *= pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(exps_[t][static_cast<std::size_t>(i)])];
    s += v;
  }
  return s;
}

Complex NumPoly::eval_grad(std::span<const Complex> x, std::span<Complex> grad) const {
  if (static_cast<int>(x.size()) != nvars_ || grad.size() != x.size())
    throw std::invalid_argument("NumPoly: point has wrong length");
  auto pw = power_table(x, degree_);
  std::fill(grad.begin(), grad.end(), Complex(0));
  Complex s = 0;
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    const auto& e = exps_[t];
    Complex v = coeffs_[t];
    for (int i = 0; i < nvars_; ++i) v *= pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(e[static_cast<std::size_t>(i)])];
    s += v;
    for (int j = 0; j < nvars_; ++j) {
      int ej = e[static_cast<std::size_t>(j)];
      if (ej == 0) continue;
      Complex d = coeffs_[t] * static_cast<double>(ej);
      for (int i = 0; i < nvars_; ++i) {
        int ei = e[static_cast<std::size_t>(i)] - (i == j ? 1 : 0);
        d *= pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(ei)];
      }
      grad[static_cast<std::size_t>(j)] += d;
    }
  }
  return s;
}

std::vector<NumPoly> compile(std::span<const Poly> polys) {
  std::vector<NumPoly> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.emplace_back(p);
  return out;
}

double fs_distance(std::span<const Complex> p, std::span<const Complex> q) {
  if (p.size() != q.size()) throw std::invalid_argument("fs_distance: dimension mismatch");
  double np = 0, nq = 0, wedge = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    np += std::norm(p[i]);
    nq += std::norm(q[i]);
    for (std::size_t j = i + 1; j < p.size(); ++j) wedge += std::norm(p[i] * q[j] - p[j] * q[i]);
  }
  if (np == 0 || nq == 0) throw std::invalid_argument("fs_distance: zero vector");
  return std::sqrt(wedge / (np * nq));
}

std::vector<Complex> normalize_projective(std::span<const Complex> p, double rel) {
  double mx = 0;
  for (const auto& c : p) mx = std::max(mx, std::abs(c));
  if (mx == 0) throw std::invalid_argument("normalize_projective: zero vector");
  std::size_t k = 0;
  while (std::abs(p[k]) < mx * (1 - rel)) ++k;
  Complex s = p[k];
  std::vector<Complex> out(p.begin(), p.end());
  for (auto& c : out) c /= s;
  out[k] = 1.0;
  return out;
}

Matrix<Complex> to_dense(const CMatrix& m) {
  Matrix<Complex> r(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
  return r;
}

CMatrix to_eigen(const Matrix<Complex>& m) {
  CMatrix r(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
  return r;
}

}  // namespace dp6
