#include "baf/opcalc.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "baf/errors.hpp"
#include "baf/intmatrix.hpp"

namespace baf {

UhPolynomial UhPolynomial::constant(int rank, Rat c) {
  UhPolynomial p(rank);
  if (c != 0) p.terms_.emplace(ExponentVec(static_cast<std::size_t>(rank), 0), std::move(c));
  return p;
}

UhPolynomial UhPolynomial::variable(int rank, int j) {
  if (j < 1 || j > rank) throw std::invalid_argument("variable index out of range");
  UhPolynomial p(rank);
  ExponentVec e(static_cast<std::size_t>(rank), 0);
  e[static_cast<std::size_t>(j - 1)] = 1;
  p.terms_.emplace(std::move(e), Rat(1));
  return p;
}

UhPolynomial UhPolynomial::linear(int rank, const CorootVector& coeffs, Rat constant) {
  if (static_cast<int>(coeffs.size()) != rank)
    throw std::invalid_argument("linear: coefficient count != rank");
  UhPolynomial p(rank);
  for (int j = 0; j < rank; ++j) {
    if (coeffs[static_cast<std::size_t>(j)] == 0) continue;
    ExponentVec e(static_cast<std::size_t>(rank), 0);
    e[static_cast<std::size_t>(j)] = 1;
    p.terms_.emplace(std::move(e), coeffs[static_cast<std::size_t>(j)]);
  }
  if (constant != 0)
    p.terms_.emplace(ExponentVec(static_cast<std::size_t>(rank), 0), std::move(constant));
  return p;
}

long long UhPolynomial::degree() const {
  long long deg = -1;
  for (const auto& [e, c] : terms_) {
    long long d = 0;
    for (unsigned x : e) d += x;
    deg = std::max(deg, d);
  }
  return deg;
}

Rat UhPolynomial::constant_term() const {
  return coefficient(ExponentVec(static_cast<std::size_t>(rank_), 0));
}

Rat UhPolynomial::coefficient(const ExponentVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void UhPolynomial::add_term(ExponentVec e, Rat c) {
  if (static_cast<int>(e.size()) != rank_) throw std::invalid_argument("add_term: bad exponent");
  auto [it, inserted] = terms_.emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else if (it->second == 0) {
    terms_.erase(it);
  }
}

UhPolynomial UhPolynomial::operator-() const {
  UhPolynomial out(rank_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

UhPolynomial& UhPolynomial::operator+=(const UhPolynomial& o) {
  if (rank_ != o.rank_) throw std::invalid_argument("polynomial rank mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

UhPolynomial UhPolynomial::operator+(const UhPolynomial& o) const {
  UhPolynomial out = *this;
  out += o;
  return out;
}

UhPolynomial UhPolynomial::operator-(const UhPolynomial& o) const {
  UhPolynomial out = *this;
  out += -o;
  return out;
}

UhPolynomial UhPolynomial::operator*(const UhPolynomial& o) const {
  if (rank_ != o.rank_) throw std::invalid_argument("polynomial rank mismatch");
  UhPolynomial out(rank_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      ExponentVec e = e1;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += e2[k];
      out.add_term(std::move(e), c1 * c2);
    }
  return out;
}

UhPolynomial& UhPolynomial::operator*=(const UhPolynomial& o) {
  *this = *this * o;
  return *this;
}

UhPolynomial UhPolynomial::substitute(const std::vector<UhPolynomial>& images) const {
  if (static_cast<int>(images.size()) != rank_)
    throw std::invalid_argument("substitute: need one image per variable");
  int target_rank = images.empty() ? 0 : images[0].rank_;
  for (const auto& img : images)
    if (img.rank_ != target_rank) throw std::invalid_argument("substitute: mixed image ranks");

  // powers of each image, computed on demand
  std::vector<std::vector<UhPolynomial>> powers(images.size());
  for (std::size_t j = 0; j < images.size(); ++j)
    powers[j].push_back(UhPolynomial::constant(target_rank, Rat(1)));
  auto power = [&](std::size_t j, unsigned k) -> const UhPolynomial& {
    while (powers[j].size() <= k) powers[j].push_back(powers[j].back() * images[j]);
    return powers[j][k];
  };

  UhPolynomial out(target_rank);
  for (const auto& [e, c] : terms_) {
    UhPolynomial term = UhPolynomial::constant(target_rank, c);
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[j] > 0) term *= power(j, e[j]);
    out += term;
  }
  return out;
}

std::string UhPolynomial::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";

  std::vector<std::pair<ExponentVec, Rat>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    long long da = 0, db = 0;
    for (unsigned x : a.first) da += x;
    for (unsigned x : b.first) db += x;
    if (da != db) return da > db;
    return a.first > b.first;
  });

  std::string out;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    Rat mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var + std::to_string(j + 1);
      if (e[j] > 1) mono += "^" + std::to_string(e[j]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

Int k_value(const RootSystem& rs, const Weight& lam) {
  Int k = to_int(rs.pairing_int(lam, rs.two_rho_check()));
  if (rs.is_dominant(lam)) {
    // cross-check against twice the sum of the simple-root coordinates
    Rat twice_sum(0);
    for (const Rat& m : rs.simple_root_coords(lam)) twice_sum += m;
    twice_sum *= 2;
    if (twice_sum != Rat(k)) throw std::logic_error("k_value: evaluations disagree");
  }
  return k;
}

std::vector<UhPolynomial> p_eta_factors(const RootSystem& rs, const Weight& eta) {
  if (!rs.is_dominant(eta)) throw std::domain_error("p_eta: weight not dominant");
  const int n = rs.rank();
  std::vector<UhPolynomial> factors;
  for (const auto& root : rs.positive_roots()) {
    long long m = rs.pairing_int(eta, root.coroot_coords);
    if (m < 0) throw std::logic_error("negative pairing with a positive coroot");
    long long height = rs.pairing_int(rs.rho(), root.coroot_coords);  // <alpha^vee, rho>
    for (long long i = 1; i <= m; ++i)
      factors.push_back(UhPolynomial::linear(n, root.coroot(), to_rat(height - i)));
  }
  return factors;
}

UhPolynomial p_eta(const RootSystem& rs, const Weight& eta) {
  UhPolynomial p = UhPolynomial::constant(rs.rank(), Rat(1));
  for (const auto& f : p_eta_factors(rs, eta)) p *= f;
  if (to_int(p.degree() < 0 ? 0 : p.degree()) != k_value(rs, eta))
    throw std::logic_error("p_eta: degree differs from k");
  return p;
}

UhPolynomial fw_on_h(const RootSystem& rs, const WeylElement& w, const CorootVector& h) {
  CorootVector image = w.apply_coroot(h);
  // <w(h) - h, rho> is the coordinate sum difference
  Rat shift(0);
  for (int j = 0; j < rs.rank(); ++j)
    shift += image[static_cast<std::size_t>(j)] - h[static_cast<std::size_t>(j)];
  return UhPolynomial::linear(rs.rank(), image, shift);
}

UhPolynomial fw_on_poly(const RootSystem& rs, const WeylElement& w, const UhPolynomial& p) {
  if (p.rank() != rs.rank()) throw std::invalid_argument("fw_on_poly: rank mismatch");
  std::vector<UhPolynomial> images;
  images.reserve(static_cast<std::size_t>(rs.rank()));
  for (int j = 1; j <= rs.rank(); ++j) {
    CorootVector e(static_cast<std::size_t>(rs.rank()), Rat(0));
    e[static_cast<std::size_t>(j - 1)] = Rat(1);
    images.push_back(fw_on_h(rs, w, e));
  }
  return p.substitute(images);
}

Rat fw0_p_constant(const RootSystem& rs, const Weight& gamma) {
  if (!rs.is_dominant(gamma)) throw std::domain_error("fw0_p_constant: weight not dominant");

  // (a) expand the twisted operator and read off its constant term
  WeylElement w0 = longest_element(rs);
  Rat expanded = fw_on_poly(rs, w0, p_eta(rs, gamma)).constant_term();

  // (b) closed form: per positive coroot, (-1)^m * prod_{i=1..m} (<alpha^vee, rho> + i)
  Rat closed(1);
  for (const auto& root : rs.positive_roots()) {
    long long m = rs.pairing_int(gamma, root.coroot_coords);
    long long height = rs.pairing_int(rs.rho(), root.coroot_coords);
    Rat factor(m % 2 == 0 ? 1 : -1);
    for (long long i = 1; i <= m; ++i) factor *= to_rat(height + i);
    closed *= factor;
  }

  if (expanded != closed) throw std::logic_error("fw0_p_constant: evaluations disagree");
  if (expanded == 0) throw std::logic_error("fw0_p_constant: vanishing constant");
  return expanded;
}

Int order_twist(const RootSystem& rs, const Weight& mu, const Int& order, const WeylElement& w) {
  Weight moved = w.apply(mu);
  Weight diff(mu.size());
  for (std::size_t k = 0; k < mu.size(); ++k) diff[k] = mu[k] - moved[k];
  long long twice = rs.pairing_int(diff, rs.two_rho_check());
  if (twice % 2 != 0) throw std::logic_error("order_twist: pairing with rho^vee not integral");
  return order + to_int(twice / 2);
}

UhPolynomial psi_gamma(const RootSystem& rs, const UhPolynomial& p, const GammaMonoid& monoid) {
  if (p.rank() != rs.rank()) throw std::invalid_argument("psi_gamma: rank mismatch");
  DualBasis db = dual_basis(rs, monoid.generators);
  const int r = static_cast<int>(db.generator_order.size());

  std::vector<Weight> starred;
  for (std::size_t idx : db.generator_order) starred.push_back(rs.star(monoid.generators[idx]));

  // h_k -> sum_j <gamma_j*, h_k> y_j; the j-th coefficient is the k-th
  // fundamental coordinate of gamma_j*
  std::vector<UhPolynomial> images;
  for (int k = 0; k < rs.rank(); ++k) {
    UhPolynomial img(r);
    for (int j = 0; j < r; ++j) {
      long long c = starred[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
      if (c == 0) continue;
      UhPolynomial::ExponentVec e(static_cast<std::size_t>(r), 0);
      e[static_cast<std::size_t>(j)] = 1;
      img.add_term(std::move(e), to_rat(c));
    }
    images.push_back(std::move(img));
  }
  return p.substitute(images);
}

ExoticOrderReport exotic_order_report(const RootSystem& rs, const Weight& gamma,
                                      const GammaMonoid& monoid) {
  if (!monoid_membership(rs, monoid.generators, gamma).member)
    throw std::domain_error("exotic_order_report: gamma is not in the generator monoid");
  ExoticOrderReport out;
  out.k = k_value(rs, gamma);
  out.module_dim = rs.weyl_dimension(gamma);
  return out;
}

std::string to_string(Surjectivity s) {
  switch (s) {
    case Surjectivity::Surjective: return "Surjective";
    case Surjectivity::NotSurjective: return "NotSurjective";
    case Surjectivity::CriterionNotApplicable: return "CriterionNotApplicable";
  }
  throw std::logic_error("unreachable surjectivity value");
}

MinOrbitReport min_orbit_report(const ComponentSpec& component) {
  RootSystem rs = RootSystem::build(std::vector<ComponentSpec>{component});

  MinOrbitReport out;
  out.component = component;
  out.highest_root = rs.highest_roots()[0];
  out.k = k_value(rs, out.highest_root);
  out.coxeter_h = rs.coxeter_number(0);
  out.two_h_minus_2 = 2 * (out.coxeter_h - 1);
  if (out.k != to_int(out.two_h_minus_2))
    throw std::logic_error("min_orbit_report: k(highest root) != 2(h-1)");

  bool classical = component.family == Family::A || component.family == Family::B ||
                   component.family == Family::C || component.family == Family::D;
  if (!classical)
    out.surjectivity = Surjectivity::CriterionNotApplicable;
  else
    out.surjectivity = out.k <= 4 ? Surjectivity::Surjective : Surjectivity::NotSurjective;
  return out;
}

bool nullstellensatz_check(const RootSystem& rs, const Weight& eta, const Int& cap,
                           std::size_t weyl_cap) {
  if (!rs.is_dominant(eta)) throw std::domain_error("nullstellensatz_check: eta not dominant");
  if (std::all_of(eta.begin(), eta.end(), [](long long v) { return v == 0; }))
    throw std::domain_error("nullstellensatz_check: eta must be nonzero");

  std::vector<UhPolynomial> factors = p_eta_factors(rs, eta);
  std::vector<WeylElement> group = enumerate_weyl(rs, weyl_cap);

  Int combos;
  mpz_ui_pow_ui(combos.get_mpz_t(), static_cast<unsigned long>(factors.size()),
                static_cast<unsigned long>(group.size()));
  if (combos > cap)
    throw CapExceeded("nullstellensatz_check refused: " + combos.get_str() +
                          " factor combinations exceed cap " + cap.get_str(),
                      combos.get_str());

  const int n = rs.rank();
  // per element, the twisted factors as linear rows (coeffs | rhs)
  std::vector<std::vector<std::pair<std::vector<Rat>, Rat>>> rows;
  for (const auto& w : group) {
    std::vector<std::pair<std::vector<Rat>, Rat>> list;
    for (const auto& f : factors) {
      UhPolynomial tf = fw_on_poly(rs, w, f);
      std::vector<Rat> coeffs(static_cast<std::size_t>(n), Rat(0));
      for (int j = 1; j <= n; ++j) {
        UhPolynomial::ExponentVec e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(j - 1)] = 1;
        coeffs[static_cast<std::size_t>(j - 1)] = tf.coefficient(e);
      }
      list.emplace_back(std::move(coeffs), -tf.constant_term());
    }
    rows.push_back(std::move(list));
  }

  // a common zero is a consistent choice of one vanishing factor per element
  std::vector<std::vector<Rat>> system;
  std::vector<Rat> rhs;
  std::function<bool(std::size_t)> has_common_zero = [&](std::size_t depth) -> bool {
    if (depth == rows.size()) return true;
    for (const auto& [coeffs, b] : rows[depth]) {
      system.push_back(coeffs);
      rhs.push_back(b);
      bool consistent = solve_rational(system, rhs).has_value();
      if (consistent && has_common_zero(depth + 1)) return true;
      system.pop_back();
      rhs.pop_back();
    }
    return false;
  };
  return !has_common_zero(0);
}

}  // namespace baf
