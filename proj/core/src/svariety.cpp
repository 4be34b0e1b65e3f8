#include "baf/svariety.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "baf/errors.hpp"

namespace baf {

namespace {

void validate_generators(const RootSystem& rs, const std::vector<Weight>& gens) {
  if (gens.empty()) throw std::domain_error("generator list is empty");
  std::set<Weight> seen;
  for (const auto& g : gens) {
    if (!rs.is_dominant(g)) throw std::domain_error("generator is not dominant");
    if (std::all_of(g.begin(), g.end(), [](long long v) { return v == 0; }))
      throw std::domain_error("generator is zero");
    if (!seen.insert(g).second) throw std::domain_error("generators are not distinct");
  }
}

IntMatrix generator_matrix(const std::vector<Weight>& gens, int rank) {
  IntMatrix g(gens.size(), static_cast<std::size_t>(rank));
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (int j = 0; j < rank; ++j) g.at(i, j) = to_int(gens[i][j]);
  return g;
}

// HNF basis rows of the lattice spanned by the rows of g
IntMatrix lattice_basis_of(const IntMatrix& g) {
  HnfResult hnf = hermite_normal_form(g);
  std::size_t r = 0;
  for (std::size_t i = 0; i < hnf.h.rows(); ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < hnf.h.cols(); ++j)
      if (hnf.h.at(i, j) != 0) nonzero = true;
    if (nonzero) r = i + 1;
  }
  IntMatrix basis(r, hnf.h.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < hnf.h.cols(); ++j) basis.at(i, j) = hnf.h.at(i, j);
  return basis;
}

// greedy reduction against HNF rows; member iff the remainder vanishes
bool in_lattice(const IntMatrix& basis, const Weight& mu) {
  std::vector<Int> v;
  v.reserve(mu.size());
  for (long long c : mu) v.push_back(to_int(c));
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    std::size_t p = 0;
    while (p < basis.cols() && basis.at(i, p) == 0) ++p;
    if (p == basis.cols()) continue;
    if (v[p] % basis.at(i, p) != 0) return false;
    Int q = v[p] / basis.at(i, p);
    if (q != 0)
      for (std::size_t j = 0; j < basis.cols(); ++j) v[j] -= q * basis.at(i, j);
  }
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

long long checked_ll(const Int& n, const char* where) {
  if (!n.fits_slong_p()) throw std::overflow_error(std::string(where) + ": value too large");
  return n.get_si();
}

// extreme rays of { c in Q^r : A c >= 0 } for a pointed cone (rank(A) = r),
// returned as primitive integer vectors
std::vector<std::vector<Int>> extreme_rays(const std::vector<std::vector<Rat>>& a, std::size_t r) {
  const std::size_t m = a.size();

  auto feasible = [&](const std::vector<Rat>& d) {
    for (const auto& row : a) {
      Rat s(0);
      for (std::size_t j = 0; j < r; ++j) s += row[j] * d[j];
      if (s < 0) return false;
    }
    return true;
  };
  auto primitive = [&](const std::vector<Rat>& d) {
    Int denom(1);
    for (const auto& q : d) denom = denom / gcd(denom, q.get_den()) * q.get_den();
    std::vector<Int> v(r);
    Int g(0);
    for (std::size_t j = 0; j < r; ++j) {
      v[j] = d[j].get_num() * (denom / d[j].get_den());
      g = gcd(g, v[j]);
    }
    if (g > 1)
      for (auto& x : v) x /= g;
    return v;
  };

  std::set<std::vector<Int>> rays;

  if (r == 1) {
    for (int sign : {1, -1}) {
      std::vector<Rat> d{Rat(sign)};
      if (feasible(d)) rays.insert(primitive(d));
    }
  } else {
    // a kernel direction of r-1 independent active constraints, oriented into
    // the cone, is an extreme ray; all extreme rays arise this way
    std::vector<std::size_t> subset(r - 1);
    std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t start, std::size_t depth) {
      if (depth == r - 1) {
        std::vector<std::vector<Rat>> rows;
        for (std::size_t k : subset) rows.push_back(a[k]);
        // kernel via row reduction
        std::vector<std::vector<Rat>> w = rows;
        std::vector<std::size_t> pivot_cols;
        std::size_t rr = 0;
        for (std::size_t c = 0; c < r && rr < w.size(); ++c) {
          std::size_t p = rr;
          while (p < w.size() && w[p][c] == 0) ++p;
          if (p == w.size()) continue;
          std::swap(w[rr], w[p]);
          Rat inv = w[rr][c];
          for (std::size_t j = c; j < r; ++j) w[rr][j] /= inv;
          for (std::size_t i = 0; i < w.size(); ++i) {
            if (i == rr || w[i][c] == 0) continue;
            Rat f = w[i][c];
            for (std::size_t j = c; j < r; ++j) w[i][j] -= f * w[rr][j];
          }
          pivot_cols.push_back(c);
          ++rr;
        }
        if (rr == r - 1) {
          std::size_t free_col = 0;
          while (std::find(pivot_cols.begin(), pivot_cols.end(), free_col) != pivot_cols.end())
            ++free_col;
          std::vector<Rat> d(r, Rat(0));
          d[free_col] = Rat(1);
          for (std::size_t i = 0; i < rr; ++i) d[pivot_cols[i]] = -w[i][free_col];
          if (feasible(d)) {
            rays.insert(primitive(d));
          } else {
            for (auto& q : d) q = -q;
            if (feasible(d)) rays.insert(primitive(d));
          }
        }
        return;
      }
      for (std::size_t k = start; k < m; ++k) {
        subset[depth] = k;
        walk(k + 1, depth + 1);
      }
    };
    walk(0, 0);
  }
  return {rays.begin(), rays.end()};
}

}  // namespace

std::string QGammaDescription::to_string() const {
  if (trivial()) return "trivial";
  std::string s;
  if (torus_rank > 0) {
    s = "(C*)";
    if (torus_rank > 1) s += "^" + std::to_string(torus_rank);
  }
  for (const auto& d : cyclic_orders) {
    if (!s.empty()) s += " x ";
    s += "Z/" + d.get_str();
  }
  return s;
}

GammaMonoid gamma_lattice(const RootSystem& rs, const std::vector<Weight>& gens) {
  validate_generators(rs, gens);

  GammaMonoid out;
  out.generators = gens;
  IntMatrix g = generator_matrix(gens, rs.rank());
  out.lattice_basis = lattice_basis_of(g);
  out.lattice_rank = out.lattice_basis.rows();

  SnfResult snf = smith_normal_form(g);
  if (snf.rank != out.lattice_rank) throw std::logic_error("HNF and SNF ranks disagree");
  out.invariant_factors = snf.invariant_factors;

  out.q_gamma.torus_rank = static_cast<std::size_t>(rs.rank()) - out.lattice_rank;
  for (const auto& d : snf.invariant_factors)
    if (d > 1) out.q_gamma.cyclic_orders.push_back(d);
  return out;
}

MembershipCertificate monoid_membership(const RootSystem& rs, const std::vector<Weight>& gens,
                                        const Weight& mu) {
  validate_generators(rs, gens);
  if (static_cast<int>(mu.size()) != rs.rank())
    throw std::invalid_argument("monoid_membership: rank mismatch");

  const std::size_t s = gens.size();
  std::vector<long long> budget(s);
  for (std::size_t j = 0; j < s; ++j) {
    budget[j] = rs.pairing_int(gens[j], rs.two_rho_check());
    if (budget[j] <= 0) throw std::logic_error("dominant nonzero generator with nonpositive level");
  }
  long long target = rs.pairing_int(mu, rs.two_rho_check());
  if (target < 0) return {false, {}};

  // search generators in decreasing level order
  std::vector<std::size_t> order(s);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return budget[a] > budget[b]; });

  std::vector<long long> coeffs(s, 0);
  std::vector<long long> rem(mu);
  std::function<bool(std::size_t, long long)> rec = [&](std::size_t pos, long long left) {
    if (pos == s) {
      return left == 0 &&
             std::all_of(rem.begin(), rem.end(), [](long long v) { return v == 0; });
    }
    std::size_t j = order[pos];
    long long max_a = left / budget[j];
    for (long long a = max_a; a >= 0; --a) {
      for (int k = 0; k < rs.rank(); ++k) rem[k] -= a * gens[j][k];
      coeffs[j] = a;
      if (rec(pos + 1, left - a * budget[j])) return true;
      for (int k = 0; k < rs.rank(); ++k) rem[k] += a * gens[j][k];
      coeffs[j] = 0;
    }
    return false;
  };
  if (rec(0, target)) return {true, coeffs};
  return {false, {}};
}

SaturationVerdict check_saturation(const RootSystem& rs, const std::vector<Weight>& gens, long long level_cap,
                       long long point_cap) {
  GammaMonoid mono = gamma_lattice(rs, gens);
  const int n = rs.rank();
  const std::size_t r = mono.lattice_rank;

  // inequalities cutting the dominant cone out of the lattice span, in basis
  // coordinates: row i is the i-th fundamental coordinate of the basis combo
  std::vector<std::vector<Rat>> ineq(static_cast<std::size_t>(n), std::vector<Rat>(r));
  for (int i = 0; i < n; ++i)
    for (std::size_t j = 0; j < r; ++j) ineq[static_cast<std::size_t>(i)][j] =
        Rat(mono.lattice_basis.at(j, static_cast<std::size_t>(i)));

  SaturationVerdict verdict;

  // certified level bound: every minimal generator of lattice-cap-dominant
  // lies under the sum of the primitive extreme ray points
  Int bound(0);
  std::vector<Weight> ray_points;
  for (const auto& d : extreme_rays(ineq, r)) {
    std::vector<Int> v(static_cast<std::size_t>(n), Int(0));
    for (std::size_t j = 0; j < r; ++j)
      for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] += d[j] * mono.lattice_basis.at(j, static_cast<std::size_t>(k));
    Weight w(n);
    for (int k = 0; k < n; ++k) w[k] = checked_ll(v[static_cast<std::size_t>(k)], "check_saturation ray");
    if (!rs.is_dominant(w)) throw std::logic_error("extreme ray point is not dominant");
    bound += to_int(rs.pairing_int(w, rs.two_rho_check()));
    ray_points.push_back(std::move(w));
  }
  verdict.level_bound = checked_ll(bound, "check_saturation bound");

  if (verdict.level_bound > level_cap) {
    verdict.status = SaturationStatus::Inconclusive;
    return verdict;
  }

  // enumerate dominant lattice points level by level; a point is a minimal
  // generator iff it is not the sum of two smaller ones
  std::vector<long long> fw_level(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) fw_level[static_cast<std::size_t>(i)] = rs.two_rho_check()[static_cast<std::size_t>(i)];

  std::vector<std::pair<Weight, long long>> elements;  // (point, level)
  long long points_examined = 0;
  bool truncated = false;

  for (long long level = 1; level <= verdict.level_bound && !truncated; ++level) {
    std::vector<Weight> at_level;
    Weight cur(n, 0);
    std::function<void(int, long long)> gen = [&](int pos, long long left) {
      if (truncated) return;
      if (pos == n) {
        if (left != 0) return;
        if (++points_examined > point_cap) {
          truncated = true;
          return;
        }
        if (in_lattice(mono.lattice_basis, cur)) at_level.push_back(cur);
        return;
      }
      long long k = fw_level[static_cast<std::size_t>(pos)];
      for (long long c = 0; c * k <= left; ++c) {
        cur[pos] = c;
        gen(pos + 1, left - c * k);
      }
      cur[pos] = 0;
    };
    gen(0, level);
    if (truncated) break;

    for (const auto& mu : at_level) {
      bool decomposable = false;
      for (const auto& [nu, lv] : elements) {
        if (2 * lv > level) break;  // elements kept sorted by level
        bool ok = true;
        for (int k = 0; k < n; ++k)
          if (mu[k] - nu[k] < 0) {
            ok = false;
            break;
          }
        if (ok) {
          decomposable = true;
          break;
        }
      }
      if (!decomposable) verdict.hilbert_basis.push_back(mu);
      elements.emplace_back(mu, level);
    }
    verdict.levels_examined = level;
  }

  if (truncated) {
    verdict.status = SaturationStatus::Inconclusive;
    verdict.hilbert_basis.clear();
    return verdict;
  }

  for (const auto& rp : ray_points)
    if (std::find(verdict.hilbert_basis.begin(), verdict.hilbert_basis.end(), rp) ==
        verdict.hilbert_basis.end())
      throw std::logic_error("extreme ray point missing from the minimal generator set");

  for (const auto& h : verdict.hilbert_basis) {
    if (monoid_membership(rs, gens, h).member) continue;
    // certify the witness independently
    if (!in_lattice(mono.lattice_basis, h) || !rs.is_dominant(h))
      throw std::logic_error("witness certification failed");
    verdict.status = SaturationStatus::Fails;
    verdict.witness = h;
    return verdict;
  }
  verdict.status = SaturationStatus::Holds;
  return verdict;
}

bool grading_lattice_membership(const RootSystem& rs, const std::vector<Weight>& gens,
                                const Weight& mu) {
  validate_generators(rs, gens);
  if (static_cast<int>(mu.size()) != rs.rank())
    throw std::invalid_argument("grading_lattice_membership: rank mismatch");
  std::vector<Weight> starred;
  starred.reserve(gens.size());
  for (const auto& g : gens) starred.push_back(rs.star(g));
  IntMatrix basis = lattice_basis_of(generator_matrix(starred, rs.rank()));
  return in_lattice(basis, mu);
}

DualBasis dual_basis(const RootSystem& rs, const std::vector<Weight>& gens) {
  validate_generators(rs, gens);
  const int n = rs.rank();

  std::vector<Weight> starred;
  for (const auto& g : gens) starred.push_back(rs.star(g));

  // greedily pick a spanning subset of the starred generators
  DualBasis out;
  std::vector<std::vector<Rat>> echelon;
  for (std::size_t i = 0; i < starred.size(); ++i) {
    std::vector<Rat> v;
    v.reserve(starred[i].size());
    for (long long c : starred[i]) v.push_back(to_rat(c));
    for (const auto& row : echelon) {
      std::size_t p = 0;
      while (p < row.size() && row[p] == 0) ++p;
      if (p < row.size() && v[p] != 0) {
        Rat f = v[p] / row[p];
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * row[j];
      }
    }
    if (std::any_of(v.begin(), v.end(), [](const Rat& q) { return q != 0; })) {
      echelon.push_back(std::move(v));
      out.generator_order.push_back(i);
    }
  }
  const std::size_t r = out.generator_order.size();
  {
    IntMatrix g = generator_matrix(gens, n);
    if (lattice_basis_of(g).rows() != r)
      throw std::logic_error("dual_basis: spanning subset has wrong rank");
  }

  std::vector<std::vector<Rat>> a(r, std::vector<Rat>(static_cast<std::size_t>(n)));
  for (std::size_t i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j)
      a[i][static_cast<std::size_t>(j)] = to_rat(starred[out.generator_order[i]][j]);

  for (std::size_t j = 0; j < r; ++j) {
    std::vector<Rat> rhs(r, Rat(0));
    rhs[j] = Rat(1);
    auto x = solve_rational(a, rhs);
    if (!x) throw std::logic_error("dual_basis: system inconsistent");
    out.x.push_back(*x);
  }

  // re-check the defining property exactly
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Rat want = i == j ? Rat(1) : Rat(0);
      if (rs.pairing(starred[out.generator_order[i]], out.x[j]) != want)
        throw std::logic_error("dual_basis: pairing check failed");
    }
  return out;
}

}  // namespace baf
