#include "baf/weyl.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "baf/errors.hpp"

namespace baf {

namespace {

std::vector<long long> identity_matrix(int n) {
  std::vector<long long> m(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] = 1;
  return m;
}

// matrix of s_i on fundamental coordinates: column i - 1 of the Cartan
// matrix subtracted from the i-th unit column
std::vector<long long> simple_matrix(const RootSystem& rs, int i) {
  const int n = rs.rank();
  std::vector<long long> m = identity_matrix(n);
  for (int k = 0; k < n; ++k) m[static_cast<std::size_t>(k) * n + (i - 1)] -= rs.cartan(k, i - 1);
  return m;
}

std::vector<long long> mul(const std::vector<long long>& a, const std::vector<long long>& b,
                           int n) {
  std::vector<long long> out(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      long long aik = a[static_cast<std::size_t>(i) * n + k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j)
        out[static_cast<std::size_t>(i) * n + j] += aik * b[static_cast<std::size_t>(k) * n + j];
    }
  return out;
}

Weight apply_matrix(const std::vector<long long>& m, const Weight& lam, int n) {
  Weight out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += m[static_cast<std::size_t>(i) * n + j] * lam[j];
  return out;
}

}  // namespace

WeylElement WeylElement::identity(const RootSystem& rs) {
  auto id = identity_matrix(rs.rank());
  return WeylElement(rs, id, id, {});
}

WeylElement WeylElement::simple(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank()) throw std::invalid_argument("simple reflection index out of range");
  auto m = simple_matrix(rs, i);
  return WeylElement(rs, m, m, {i});
}

WeylElement WeylElement::from_word(const RootSystem& rs, const std::vector<int>& word) {
  WeylElement w = identity(rs);
  for (int i : word) w = compose(w, simple(rs, i));
  return w;
}

Weight WeylElement::apply(const Weight& lam) const {
  if (static_cast<int>(lam.size()) != rank_)
    throw std::invalid_argument("WeylElement::apply: rank mismatch");
  return apply_matrix(mat_, lam, rank_);
}

Weight WeylElement::apply_inverse(const Weight& lam) const {
  if (static_cast<int>(lam.size()) != rank_)
    throw std::invalid_argument("WeylElement::apply_inverse: rank mismatch");
  return apply_matrix(inv_, lam, rank_);
}

CorootVector WeylElement::apply_coroot(const CorootVector& h) const {
  if (static_cast<int>(h.size()) != rank_)
    throw std::invalid_argument("WeylElement::apply_coroot: rank mismatch");
  // contragredient action: the transpose of the inverse matrix
  CorootVector out(rank_, Rat(0));
  for (int i = 0; i < rank_; ++i)
    for (int k = 0; k < rank_; ++k)
      out[i] += to_rat(inv_[static_cast<std::size_t>(k) * rank_ + i]) * h[k];
  return out;
}

WeylElement WeylElement::inverse() const {
  std::vector<int> rw(word_.rbegin(), word_.rend());
  return WeylElement(*rs_, inv_, mat_, std::move(rw));
}

WeylElement compose(const WeylElement& v, const WeylElement& w) {
  if (v.rank_ != w.rank_) throw std::invalid_argument("compose: rank mismatch");
  const RootSystem& rs = *v.rs_;
  const int n = v.rank_;
  auto mat = mul(v.mat_, w.mat_, n);
  auto inv = mul(w.inv_, v.inv_, n);
  // canonical reduced word: straighten (vw)^{-1}(rho) back to rho
  Weight xi = apply_matrix(inv, rs.rho(), n);
  StraightenResult sr = straighten(rs, xi);
  if (sr.w.mat_ != mat) throw std::logic_error("compose: canonical word disagrees with matrix");
  return WeylElement(rs, std::move(mat), std::move(inv), sr.w.word_);
}

Weight reflect(const RootSystem& rs, int i, const Weight& lam) {
  return rs.apply_simple_reflection(i, lam);
}

std::size_t length(const RootSystem& rs, const WeylElement& w) {
  std::size_t count = 0;
  for (const auto& r : rs.positive_roots()) {
    Weight image = w.apply(r.fund_coords);
    if (rs.pairing_int(image, rs.two_rho_check()) < 0) ++count;
  }
  return count;
}

WeylElement longest_element(const RootSystem& rs) {
  Weight neg_rho(rs.rank(), -1);
  StraightenResult sr = straighten(rs, neg_rho);
  Weight check = sr.w.apply(rs.rho());
  if (check != neg_rho) throw std::logic_error("longest element does not send rho to -rho");
  return sr.w;
}

Weight dot(const RootSystem& rs, const WeylElement& w, const Weight& xi) {
  if (static_cast<int>(xi.size()) != rs.rank()) throw std::invalid_argument("dot: rank mismatch");
  Weight shifted = xi;
  for (auto& v : shifted) v += 1;
  Weight out = w.apply(shifted);
  for (auto& v : out) v -= 1;
  return out;
}

StraightenResult straighten(const RootSystem& rs, const Weight& xi) {
  const int n = rs.rank();
  if (static_cast<int>(xi.size()) != n) throw std::invalid_argument("straighten: rank mismatch");

  Weight cur = xi;
  std::vector<int> applied;  // in application order
  auto mat = identity_matrix(n);
  auto inv = identity_matrix(n);
  while (true) {
    int i = 0;
    while (i < n && cur[i] >= 0) ++i;
    if (i == n) break;
    cur = rs.apply_simple_reflection(i + 1, cur);
    applied.push_back(i + 1);
    auto s = simple_matrix(rs, i + 1);
    mat = mul(s, mat, n);
    inv = mul(inv, s, n);
  }

  StraightenResult out{
      /*singular=*/std::any_of(cur.begin(), cur.end(), [](long long v) { return v == 0; }),
      /*dominant=*/cur,
      /*w=*/WeylElement(rs, std::move(mat), std::move(inv),
                        std::vector<int>(applied.rbegin(), applied.rend())),
      /*steps=*/applied.size()};
  return out;
}

std::vector<Int> poincare_coefficients(const RootSystem& rs) {
  std::vector<Int> coeffs{Int(1)};
  for (long long d : rs.degrees()) {
    std::vector<Int> next(coeffs.size() + static_cast<std::size_t>(d) - 1, Int(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      for (long long k = 0; k < d; ++k) next[i + static_cast<std::size_t>(k)] += coeffs[i];
    coeffs = std::move(next);
  }
  return coeffs;
}

std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, std::size_t cap) {
  Int order = rs.weyl_order();
  if (order > static_cast<unsigned long>(cap))
    throw CapExceeded("Weyl group enumeration refused: |W| = " + order.get_str() +
                          " exceeds cap " + std::to_string(cap),
                      order.get_str());

  const int n = rs.rank();
  std::vector<WeylElement> all;
  all.push_back(WeylElement::identity(rs));

  std::vector<std::size_t> current{0};
  while (!current.empty()) {
    std::map<std::vector<long long>, WeylElement> next;
    for (std::size_t idx : current) {
      const WeylElement w = all[idx];
      for (int i = 1; i <= n; ++i) {
        // length increases iff w(alpha_i) stays positive
        Weight image = w.apply(rs.simple_root(i));
        if (rs.pairing_int(image, rs.two_rho_check()) <= 0) continue;
        auto mat = mul(w.matrix(), simple_matrix(rs, i), n);
        if (next.count(mat)) continue;
        auto inv = mul(simple_matrix(rs, i), w.inv_, n);
        std::vector<int> word = w.word();
        word.push_back(i);
        next.emplace(mat, WeylElement(rs, mat, std::move(inv), std::move(word)));
      }
    }
    std::vector<std::pair<std::vector<int>, std::vector<long long>>> level;
    level.reserve(next.size());
    for (auto& [mat, el] : next) level.emplace_back(el.word(), mat);
    std::sort(level.begin(), level.end());
    current.clear();
    for (auto& [word, mat] : level) {
      current.push_back(all.size());
      all.push_back(next.at(mat));
    }
  }
  if (Int(static_cast<unsigned long>(all.size())) != order)
    throw std::logic_error("enumeration produced wrong group order");
  return all;
}

}  // namespace baf
