#include "grk/root_data.h"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace grk {

std::vector<std::vector<int>> cartan_matrix(char type, int n) {
  auto bad = [&] {
    return ConfigError("unsupported Dynkin type " + std::string(1, type) + std::to_string(n));
  };
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (type) {
    case 'A':
      if (n < 1 || n > 8) throw bad();
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      if (n < 2 || n > 8) throw bad();
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case 'C':
      if (n < 2 || n > 8) throw bad();
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case 'D':
      if (n < 4 || n > 8) throw bad();
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'G':
      if (n != 2) throw bad();
      a[0][1] = -3;  // alpha_1 short
      a[1][0] = -1;
      break;
    default:
      throw bad();
  }
  return a;
}

RootDatum RootDatum::parse(std::string_view family, int central_rank) {
  std::vector<SimpleFactor> fs;
  std::string s(family);
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find_first_of("xX*", pos);
    std::string part = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (part.size() < 2) throw ConfigError("malformed Dynkin family '" + s + "'");
    char t = static_cast<char>(std::toupper(static_cast<unsigned char>(part[0])));
    int r = 0;
    try {
      std::size_t used = 0;
      r = std::stoi(part.substr(1), &used);
      if (used != part.size() - 1) throw ConfigError("");
    } catch (const std::exception&) {
      throw ConfigError("malformed Dynkin factor '" + part + "'");
    }
    fs.push_back({t, r});
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (fs.empty()) throw ConfigError("empty Dynkin family");
  return build(std::move(fs), central_rank);
}

RootDatum RootDatum::build(std::vector<SimpleFactor> family, int central_rank) {
  if (family.empty()) throw ConfigError("root datum needs at least one simple factor");
  if (central_rank < 0) throw ConfigError("negative central rank");
  RootDatum d;
  d.family_ = family;
  d.central_rank_ = central_rank;
  for (const auto& f : family) d.rank_ += f.rank;
  const int r = d.rank_;
  const int n = d.total_rank();
  d.cartan_.assign(r, std::vector<int>(r, 0));
  int off = 0;
  for (std::size_t fi = 0; fi < family.size(); ++fi) {
    auto a = cartan_matrix(family[fi].type, family[fi].rank);
    for (int i = 0; i < family[fi].rank; ++i) {
      d.factor_of_.push_back(static_cast<int>(fi));
      for (int j = 0; j < family[fi].rank; ++j) d.cartan_[off + i][off + j] = a[i][j];
    }
    off += family[fi].rank;
  }
  // alpha_j in weight coordinates is column j of the Cartan matrix.
  for (int j = 0; j < r; ++j) {
    Weight a(n);
    for (int i = 0; i < r; ++i) a[i] = d.cartan_[i][j];
    d.simple_roots_.push_back(a);
  }

  // Positive roots by closure under simple reflections from the simple roots.
  std::map<std::vector<int>, int> seen;
  std::deque<int> queue;
  for (int i = 0; i < r; ++i) {
    Root root;
    root.weight = d.simple_roots_[i];
    root.coroot = Coweight::unit(n, i);
    root.simple.assign(r, 0);
    root.simple[i] = 1;
    root.height = 1;
    seen[root.simple] = static_cast<int>(d.positive_.size());
    queue.push_back(static_cast<int>(d.positive_.size()));
    d.positive_.push_back(root);
  }
  while (!queue.empty()) {
    Root cur = d.positive_[queue.front()];
    queue.pop_front();
    for (int i = 0; i < r; ++i) {
      int c = cur.weight[i];  // <alpha_i^vee, beta>
      if (c == 0) continue;
      Root next = cur;
      next.simple[i] -= c;
      if (std::any_of(next.simple.begin(), next.simple.end(), [](int x) { return x < 0; })) continue;
      if (std::all_of(next.simple.begin(), next.simple.end(), [](int x) { return x == 0; })) continue;
      if (seen.count(next.simple)) continue;
      next.weight = cur.weight - c * d.simple_roots_[i];
      next.coroot = d.reflect(i + 1, cur.coroot);
      next.height = 0;
      for (int x : next.simple) next.height += x;
      seen[next.simple] = static_cast<int>(d.positive_.size());
      queue.push_back(static_cast<int>(d.positive_.size()));
      d.positive_.push_back(std::move(next));
    }
  }
  std::stable_sort(d.positive_.begin(), d.positive_.end(), [](const Root& a, const Root& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.simple > b.simple;
  });
  for (std::size_t k = 0; k < d.positive_.size(); ++k) {
    d.root_lookup_[d.positive_[k].weight] = static_cast<int>(k) + 1;
    d.root_lookup_[-d.positive_[k].weight] = -(static_cast<int>(k) + 1);
  }
  // Highest root of each factor: the unique root of maximal height there.
  d.highest_.assign(family.size(), -1);
  for (std::size_t k = 0; k < d.positive_.size(); ++k) {
    const Root& a = d.positive_[k];
    int f = -1;
    for (int i = 0; i < r; ++i)
      if (a.simple[i] != 0) f = d.factor_of_[i];
    int& h = d.highest_[f];
    if (h < 0 || d.positive_[h].height < a.height) h = static_cast<int>(k);
  }
  d.rho_ = Weight(n);
  for (int i = 0; i < r; ++i) d.rho_[i] = 1;
  return d;
}

std::string RootDatum::label() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < family_.size(); ++k) {
    if (k) os << "x";
    os << family_[k].type << family_[k].rank;
  }
  if (central_rank_ > 0) os << "+T" << central_rank_;
  return os.str();
}

Coweight RootDatum::simple_coroot(int i) const { return Coweight::unit(total_rank(), i - 1); }
Weight RootDatum::fundamental_weight(int i) const { return Weight::unit(total_rank(), i - 1); }
Weight RootDatum::central_weight(int k) const { return Weight::unit(total_rank(), rank_ + k); }
Coweight RootDatum::central_coweight(int k) const {
  return Coweight::unit(total_rank(), rank_ + k);
}

Weight RootDatum::half_sum_positive_roots() const {
  Weight two_rho(total_rank());
  for (const auto& a : positive_) two_rho += a.weight;
  Weight half(total_rank());
  for (int k = 0; k < total_rank(); ++k) {
    if (two_rho[k] % 2 != 0) throw std::logic_error("sum of positive roots not divisible by 2");
    half[k] = two_rho[k] / 2;
  }
  return half;
}

int RootDatum::root_sign(const Weight& w) const {
  auto it = root_lookup_.find(w);
  if (it == root_lookup_.end()) return 0;
  return it->second > 0 ? 1 : -1;
}

int RootDatum::root_index(const Weight& w) const {
  auto it = root_lookup_.find(w);
  if (it == root_lookup_.end()) return -1;
  return (it->second > 0 ? it->second : -it->second) - 1;
}

Weight RootDatum::reflect(int i, Weight lambda) const {
  int c = lambda[i - 1];
  if (c != 0) lambda -= c * simple_roots_[i - 1];
  return lambda;
}

Coweight RootDatum::reflect(int i, Coweight beta) const {
  long c = 0;  // <beta, alpha_i>
  for (int k = 0; k < rank_; ++k) c += static_cast<long>(beta[k]) * cartan_[k][i - 1];
  beta[i - 1] -= static_cast<int>(c);
  return beta;
}

Weight RootDatum::reflect(const Root& a, Weight lambda) const {
  long c = pairing(a.coroot, lambda);
  if (c != 0) lambda -= static_cast<int>(c) * a.weight;
  return lambda;
}

Coweight RootDatum::reflect(const Root& a, Coweight beta) const {
  long c = pairing(beta, a.weight);
  if (c != 0) beta -= static_cast<int>(c) * a.coroot;
  return beta;
}

bool RootDatum::is_dominant(const Weight& lambda) const {
  for (int i = 0; i < rank_; ++i)
    if (lambda[i] < 0) return false;
  return true;
}

bool RootDatum::is_dominant(const Weight& lambda, const std::vector<int>& J) const {
  for (int j : J)
    if (lambda[j - 1] < 0) return false;
  return true;
}

bool RootDatum::is_central(const Weight& lambda) const {
  for (int i = 0; i < rank_; ++i)
    if (lambda[i] != 0) return false;
  return true;
}

bool RootDatum::is_central(const Coweight& beta) const {
  for (int i = 0; i < rank_; ++i)
    if (beta[i] != 0) return false;
  return true;
}

bool RootDatum::is_central_zero(const Coweight& beta) const {
  for (int k = rank_; k < total_rank(); ++k)
    if (beta[k] != 0) return false;
  return true;
}

std::vector<int> RootDatum::nodes() const {
  std::vector<int> v(rank_);
  for (int i = 0; i < rank_; ++i) v[i] = i + 1;
  return v;
}

bool LeviSpec::contains(int i) const { return std::binary_search(J.begin(), J.end(), i); }

bool LeviSpec::in_positive_coroot_cone(const RootDatum& d, const Coweight& beta) const {
  for (int k = 0; k < d.total_rank(); ++k) {
    if (beta[k] < 0) return false;
    if (beta[k] > 0 && (k >= d.rank() || !contains(k + 1))) return false;
  }
  return true;
}

std::vector<Weight> LeviSpec::complementary_fundamental_weights(const RootDatum& d) const {
  std::vector<Weight> out;
  for (int i : d.nodes())
    if (!contains(i)) out.push_back(d.fundamental_weight(i));
  return out;
}

bool LeviSpec::strictly_antidominant_on(const RootDatum& d, const Coweight& beta) const {
  for (int j : J)
    if (pairing(beta, d.simple_root(j)) >= 0) return false;
  return true;
}

bool LeviSpec::antidominant_on(const RootDatum& d, const Coweight& beta) const {
  for (int j : J)
    if (pairing(beta, d.simple_root(j)) > 0) return false;
  return true;
}

LeviSpec make_levi(const RootDatum& d, std::vector<int> J) {
  std::sort(J.begin(), J.end());
  J.erase(std::unique(J.begin(), J.end()), J.end());
  for (int j : J)
    if (j < 1 || j > d.rank()) throw ConfigError("Levi node " + std::to_string(j) + " not in I");
  return LeviSpec{std::move(J)};
}

RationalWeight to_rational(const Weight& w) {
  RationalWeight r(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) r[k] = w[k];
  return r;
}

std::vector<Weight> weyl_orbit(const RootDatum& d, const Weight& lambda) {
  std::set<Weight> seen{lambda};
  std::deque<Weight> queue{lambda};
  while (!queue.empty()) {
    Weight cur = queue.front();
    queue.pop_front();
    for (int i : d.nodes()) {
      Weight next = d.reflect(i, cur);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<RationalWeight> weyl_orbit(const RootDatum& d, const RationalWeight& lambda) {
  if (static_cast<int>(lambda.size()) != d.total_rank()) throw DatumMismatch("weight rank mismatch");
  auto reflect = [&](int i, RationalWeight v) {
    Rational c = v[i - 1];
    if (c != 0) {
      const Weight& a = d.simple_root(i);
      for (int k = 0; k < d.total_rank(); ++k) v[k] -= c * a[k];
    }
    return v;
  };
  std::set<RationalWeight> seen{lambda};
  std::deque<RationalWeight> queue{lambda};
  while (!queue.empty()) {
    RationalWeight cur = queue.front();
    queue.pop_front();
    for (int i : d.nodes()) {
      RationalWeight next = reflect(i, cur);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

namespace {

// Phase-one simplex with Bland's rule: is there x >= 0 with A x = b?
bool linear_feasible(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i] < 0) {
      b[i] = -b[i];
      for (auto& x : a[i]) x = -x;
    }
  }
  // Tableau columns: n structural, m artificial, then rhs.
  const std::size_t cols = n + m;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1;
    t[i][cols] = b[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;
  // Reduced costs of "minimize sum of artificials".
  std::vector<Rational> cost(cols + 1);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) cost[j] -= t[i][j];
  for (std::size_t i = 0; i < m; ++i) cost[cols] -= t[i][cols];

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][cols] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot happen in phase one
    Rational piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
    }
    Rational f = cost[enter];
    for (std::size_t j = 0; j <= cols; ++j) cost[j] -= f * t[leave][j];
    basis[leave] = enter;
  }
  return cost[cols] == 0;
}

}  // namespace

HullMembership hull_membership(const RootDatum& d, const RationalWeight& lambda,
                               const RationalWeight& mu) {
  if (static_cast<int>(mu.size()) != d.total_rank()) throw DatumMismatch("weight rank mismatch");
  auto orbit = weyl_orbit(d, lambda);
  const std::size_t n = orbit.size();
  const std::size_t rows = static_cast<std::size_t>(d.total_rank()) + 1;
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(n));
  std::vector<Rational> b(rows);
  for (std::size_t j = 0; j < n; ++j) {
    for (int k = 0; k < d.total_rank(); ++k) a[k][j] = orbit[j][k];
    a[rows - 1][j] = 1;
  }
  for (int k = 0; k < d.total_rank(); ++k) b[k] = mu[k];
  b[rows - 1] = 1;
  HullMembership out;
  out.in_hull = linear_feasible(std::move(a), std::move(b));
  out.in_hull_minus_orbit =
      out.in_hull && std::find(orbit.begin(), orbit.end(), mu) == orbit.end();
  return out;
}

HullMembership hull_membership(const RootDatum& d, const Weight& lambda, const Weight& mu) {
  return hull_membership(d, to_rational(lambda), to_rational(mu));
}

}  // namespace grk
