#include "baf/rootsystem.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace baf {

namespace {

struct CartanBlock {
  int rank;
  std::vector<long long> entries;  // rank x rank, entry (i,j) = <alpha_j, alpha_i^vee>
  std::vector<long long> norms;    // half square lengths of the simple roots
};

void set_edge(CartanBlock& b, int i, int j, long long eij, long long eji) {
  b.entries[static_cast<std::size_t>(i) * b.rank + j] = eij;
  b.entries[static_cast<std::size_t>(j) * b.rank + i] = eji;
}

CartanBlock make_block(Family f, int rank) {
  CartanBlock b;
  b.rank = rank;
  b.entries.assign(static_cast<std::size_t>(rank) * rank, 0);
  for (int i = 0; i < rank; ++i) b.entries[static_cast<std::size_t>(i) * rank + i] = 2;
  b.norms.assign(rank, 1);

  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) set_edge(b, i, i + 1, -1, -1);
  };

  switch (f) {
    case Family::A:
      if (rank < 1) throw std::invalid_argument("type A requires rank >= 1");
      chain(rank);
      break;
    case Family::B:
      // alpha_rank is the short root
      if (rank < 2) throw std::invalid_argument("type B requires rank >= 2");
      chain(rank - 1);
      set_edge(b, rank - 2, rank - 1, -1, -2);
      for (int i = 0; i + 1 < rank; ++i) b.norms[i] = 2;
      break;
    case Family::C:
      // alpha_rank is the long root
      if (rank < 2) throw std::invalid_argument("type C requires rank >= 2");
      chain(rank - 1);
      set_edge(b, rank - 2, rank - 1, -2, -1);
      b.norms[rank - 1] = 2;
      break;
    case Family::D:
      if (rank < 3) throw std::invalid_argument("type D requires rank >= 3");
      chain(rank - 1);
      set_edge(b, rank - 3, rank - 1, -1, -1);
      break;
    case Family::E: {
      if (rank < 6 || rank > 8) throw std::invalid_argument("type E requires rank 6, 7 or 8");
      // Bourbaki numbering: chain 1-3-4-5-...-rank, with node 2 on node 4
      set_edge(b, 0, 2, -1, -1);
      for (int i = 2; i + 1 < rank; ++i) set_edge(b, i, i + 1, -1, -1);
      set_edge(b, 1, 3, -1, -1);
      break;
    }
    case Family::F:
      if (rank != 4) throw std::invalid_argument("type F requires rank 4");
      set_edge(b, 0, 1, -1, -1);
      set_edge(b, 1, 2, -1, -2);  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      set_edge(b, 2, 3, -1, -1);
      b.norms = {2, 2, 1, 1};
      break;
    case Family::G:
      if (rank != 2) throw std::invalid_argument("type G requires rank 2");
      set_edge(b, 0, 1, -3, -1);  // alpha_1 short, alpha_2 long
      b.norms = {1, 3};
      break;
  }
  return b;
}

long long classical_positive_root_count(Family f, int rank) {
  switch (f) {
    case Family::A: return static_cast<long long>(rank) * (rank + 1) / 2;
    case Family::B:
    case Family::C: return static_cast<long long>(rank) * rank;
    case Family::D: return static_cast<long long>(rank) * (rank - 1);
    case Family::E: return rank == 6 ? 36 : rank == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  throw std::logic_error("unreachable family");
}

}  // namespace

std::string to_string(const ComponentSpec& c) {
  return std::string(1, static_cast<char>(c.family)) + std::to_string(c.rank);
}

std::vector<ComponentSpec> parse_type_spec(std::string_view spec) {
  std::vector<ComponentSpec> out;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(spec[pos])));
    if (fam < 'A' || fam > 'G')
      throw std::invalid_argument("bad type spec '" + std::string(spec) +
                                  "': expected a family letter A-G");
    ++pos;
    std::size_t start = pos;
    while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) ++pos;
    if (start == pos)
      throw std::invalid_argument("bad type spec '" + std::string(spec) + "': missing rank");
    int rank = std::stoi(std::string(spec.substr(start, pos - start)));
    out.push_back({static_cast<Family>(fam), rank});
    if (pos < spec.size()) {
      char sep = static_cast<char>(std::tolower(static_cast<unsigned char>(spec[pos])));
      if (sep != 'x')
        throw std::invalid_argument("bad type spec '" + std::string(spec) +
                                    "': expected 'x' between factors");
      ++pos;
      if (pos == spec.size())
        throw std::invalid_argument("bad type spec '" + std::string(spec) +
                                    "': trailing separator");
    }
  }
  if (out.empty()) throw std::invalid_argument("empty type spec");
  return out;
}

RootSystem RootSystem::build(std::string_view type_spec) { return build(parse_type_spec(type_spec)); }

RootSystem RootSystem::build(const std::vector<ComponentSpec>& components) {
  if (components.empty()) throw std::invalid_argument("no components given");

  RootSystem rs;
  rs.components_ = components;

  std::vector<CartanBlock> blocks;
  blocks.reserve(components.size());
  int total = 0;
  for (const auto& c : components) {
    blocks.push_back(make_block(c.family, c.rank));
    total += c.rank;
  }
  rs.rank_ = total;
  rs.cartan_.assign(static_cast<std::size_t>(total) * total, 0);
  rs.component_of_node_.assign(total, 0);

  std::vector<long long> norms(total, 1);
  int offset = 0;
  for (std::size_t c = 0; c < blocks.size(); ++c) {
    const CartanBlock& b = blocks[c];
    for (int i = 0; i < b.rank; ++i) {
      rs.component_of_node_[offset + i] = static_cast<int>(c);
      norms[offset + i] = b.norms[i];
      for (int j = 0; j < b.rank; ++j)
        rs.cartan_[static_cast<std::size_t>(offset + i) * total + (offset + j)] =
            b.entries[static_cast<std::size_t>(i) * b.rank + j];
    }
    offset += b.rank;
  }

  rs.generate_positive_roots(norms);
  rs.compute_exponents();
  rs.compute_star_permutation();
  return rs;
}

void RootSystem::generate_positive_roots(const std::vector<long long>& norms) {
  const int n = rank_;

  // (alpha_i, alpha_j) = norms[i] * cartan(i, j); must be symmetric
  auto form = [&](int i, int j) { return norms[i] * cartan(i, j); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (form(i, j) != form(j, i)) throw std::logic_error("asymmetric invariant form");

  std::map<std::vector<long long>, std::size_t> index;
  std::vector<std::vector<long long>> by_height_prev;

  auto add_root = [&](std::vector<long long> sc) {
    PositiveRoot r;
    r.simple_coords = std::move(sc);
    r.height = std::accumulate(r.simple_coords.begin(), r.simple_coords.end(), 0LL);
    r.fund_coords.assign(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r.fund_coords[i] += cartan(i, j) * r.simple_coords[j];
    // half square length of the root
    long long d2 = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d2 += r.simple_coords[i] * r.simple_coords[j] * form(i, j);
    if (d2 % 2 != 0) throw std::logic_error("odd square length");
    long long d = d2 / 2;
    r.coroot_coords.assign(n, 0);
    int comp = -1;
    for (int j = 0; j < n; ++j) {
      if (r.simple_coords[j] != 0) comp = component_of_node_[j];
      long long num = r.simple_coords[j] * norms[j];
      if (num % d != 0) throw std::logic_error("non-integral coroot");
      r.coroot_coords[j] = num / d;
    }
    r.component = comp;
    index.emplace(r.simple_coords, positive_roots_.size());
    positive_roots_.push_back(std::move(r));
  };

  for (int i = 0; i < n; ++i) {
    std::vector<long long> e(n, 0);
    e[i] = 1;
    add_root(std::move(e));
  }
  for (std::size_t i = 0; i < positive_roots_.size(); ++i)
    by_height_prev.push_back(positive_roots_[i].simple_coords);

  // closure by root strings: beta + alpha_i is a root iff the string
  // through beta in direction alpha_i extends, i.e. p - <beta, alpha_i^vee> > 0
  while (!by_height_prev.empty()) {
    std::vector<std::vector<long long>> next;
    for (const auto& sc : by_height_prev) {
      const Weight beta_fund = positive_roots_[index.at(sc)].fund_coords;
      for (int i = 0; i < n; ++i) {
        std::vector<long long> cand = sc;
        cand[i] += 1;
        if (index.count(cand)) continue;
        long long p = 0;
        std::vector<long long> down = sc;
        while (true) {
          down[i] -= 1;
          if (down[i] < 0) break;
          bool zero = std::all_of(down.begin(), down.end(), [](long long v) { return v == 0; });
          if (zero || index.count(down)) {
            if (zero) break;
            ++p;
          } else {
            break;
          }
        }
        if (p - beta_fund[i] > 0) {
          add_root(cand);
          next.push_back(std::move(cand));
        }
      }
    }
    by_height_prev = std::move(next);
  }

  std::sort(positive_roots_.begin(), positive_roots_.end(),
            [](const PositiveRoot& a, const PositiveRoot& b) {
              if (a.height != b.height) return a.height < b.height;
              return a.simple_coords < b.simple_coords;
            });

  // cross-check against the classical counts
  std::vector<long long> per_component(components_.size(), 0);
  for (const auto& r : positive_roots_) per_component[r.component] += 1;
  for (std::size_t c = 0; c < components_.size(); ++c)
    if (per_component[c] != classical_positive_root_count(components_[c].family, components_[c].rank))
      throw std::logic_error("positive root count mismatch for " + to_string(components_[c]));

  two_rho_check_.assign(n, 0);
  for (const auto& r : positive_roots_)
    for (int j = 0; j < n; ++j) two_rho_check_[j] += r.coroot_coords[j];

  // highest root per component = unique root of maximal height there
  highest_roots_.assign(components_.size(), Weight());
  std::vector<long long> best_height(components_.size(), -1);
  for (const auto& r : positive_roots_) {
    if (r.height > best_height[r.component]) {
      best_height[r.component] = r.height;
      highest_roots_[r.component] = r.fund_coords;
    }
  }
}

void RootSystem::compute_exponents() {
  coxeter_numbers_.assign(components_.size(), 0);
  std::map<long long, long long> height_count;
  for (const auto& r : positive_roots_) {
    height_count[r.height] += 1;
    coxeter_numbers_[r.component] = std::max(coxeter_numbers_[r.component], r.height + 1);
  }
  // the exponent multiset is the dual partition of the height distribution
  exponents_.clear();
  long long max_h = height_count.empty() ? 0 : height_count.rbegin()->first;
  for (long long m = 1; m <= max_h; ++m) {
    long long mult = height_count[m] - (height_count.count(m + 1) ? height_count[m + 1] : 0);
    if (mult < 0) throw std::logic_error("height distribution is not a partition");
    for (long long k = 0; k < mult; ++k) exponents_.push_back(m);
  }
  std::sort(exponents_.begin(), exponents_.end());
  if (static_cast<int>(exponents_.size()) != rank_)
    throw std::logic_error("exponent count != rank");
}

void RootSystem::compute_star_permutation() {
  star_perm_.assign(rank_, -1);
  for (int i = 0; i < rank_; ++i) {
    Weight w(rank_, 0);
    w[i] = -1;
    // straighten to the dominant chamber; -w0 permutes fundamental weights
    bool changed = true;
    while (changed) {
      changed = false;
      for (int j = 0; j < rank_; ++j) {
        if (w[j] < 0) {
          w = apply_simple_reflection(j + 1, w);
          changed = true;
          break;
        }
      }
    }
    int target = -1;
    for (int j = 0; j < rank_; ++j) {
      if (w[j] == 1 && target == -1)
        target = j;
      else if (w[j] != 0)
        throw std::logic_error("star image of a fundamental weight is not fundamental");
    }
    if (target == -1) throw std::logic_error("star image vanished");
    star_perm_[i] = target;
  }
}

CorootVector RootSystem::rho_check() const {
  CorootVector out(rank_);
  for (int j = 0; j < rank_; ++j) out[j] = make_rat(to_int(two_rho_check_[j]), Int(2));
  return out;
}

long long RootSystem::coxeter_number(int component) const {
  if (component < 0 || component >= static_cast<int>(components_.size()))
    throw std::invalid_argument("component index out of range");
  return coxeter_numbers_[component];
}

std::vector<long long> RootSystem::degrees() const {
  std::vector<long long> d = exponents_;
  for (auto& v : d) v += 1;
  return d;
}

Int RootSystem::weyl_order() const {
  Int n(1);
  for (long long d : degrees()) n *= to_int(d);
  return n;
}

Weight RootSystem::simple_root(int i) const {
  if (i < 1 || i > rank_) throw std::invalid_argument("simple root index out of range");
  Weight w(rank_);
  for (int k = 0; k < rank_; ++k) w[k] = cartan(k, i - 1);
  return w;
}

bool RootSystem::is_dominant(const Weight& lam) const {
  check_rank(lam, "is_dominant");
  return std::all_of(lam.begin(), lam.end(), [](long long v) { return v >= 0; });
}

void RootSystem::check_rank(const Weight& lam, const char* where) const {
  if (static_cast<int>(lam.size()) != rank_)
    throw std::invalid_argument(std::string(where) + ": weight rank mismatch");
}

Rat RootSystem::pairing(const Weight& lam, const CorootVector& cv) const {
  check_rank(lam, "pairing");
  if (static_cast<int>(cv.size()) != rank_)
    throw std::invalid_argument("pairing: coroot rank mismatch");
  Rat sum(0);
  for (int j = 0; j < rank_; ++j) sum += to_rat(lam[j]) * cv[j];
  return sum;
}

long long RootSystem::pairing_int(const Weight& lam, const std::vector<long long>& coroot) const {
  long long sum = 0;
  for (int j = 0; j < rank_; ++j) sum += lam[j] * coroot[j];
  return sum;
}

Weight RootSystem::apply_simple_reflection(int i, const Weight& lam) const {
  if (i < 1 || i > rank_) throw std::invalid_argument("simple reflection index out of range");
  check_rank(lam, "apply_simple_reflection");
  Weight out = lam;
  long long c = lam[i - 1];
  if (c == 0) return out;
  for (int k = 0; k < rank_; ++k) out[k] -= c * cartan(k, i - 1);
  return out;
}

Weight RootSystem::star(const Weight& lam) const {
  check_rank(lam, "star");
  Weight out(rank_, 0);
  for (int i = 0; i < rank_; ++i) out[star_perm_[i]] = lam[i];
  return out;
}

Int RootSystem::weyl_dimension(const Weight& lam) const {
  if (!is_dominant(lam)) throw std::domain_error("weyl_dimension: weight not dominant");
  Int num(1), den(1);
  for (const auto& r : positive_roots_) {
    long long a = pairing_int(lam, r.coroot_coords) + pairing_int(rho(), r.coroot_coords);
    num *= to_int(a);
    den *= to_int(pairing_int(rho(), r.coroot_coords));
  }
  Int out;
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw std::logic_error("weyl_dimension: non-integral quotient");
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

std::vector<Rat> RootSystem::simple_root_coords(const Weight& lam) const {
  check_rank(lam, "simple_root_coords");
  std::vector<std::vector<Rat>> a(rank_, std::vector<Rat>(rank_));
  std::vector<Rat> b(rank_);
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) a[i][j] = to_rat(cartan(i, j));
    b[i] = to_rat(lam[i]);
  }
  auto x = solve_rational(a, b);
  if (!x) throw std::logic_error("Cartan matrix is singular");
  return *x;
}

std::string RootSystem::type_string() const {
  std::string s;
  for (std::size_t c = 0; c < components_.size(); ++c) {
    if (c) s += "x";
    s += to_string(components_[c]);
  }
  return s;
}

}  // namespace baf
