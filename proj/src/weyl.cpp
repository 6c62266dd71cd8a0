#include "grk/weyl.h"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace grk {

namespace {

std::vector<int> matmul(const std::vector<int>& a, const std::vector<int>& b, int r) {
  std::vector<int> c(static_cast<std::size_t>(r) * r, 0);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      int x = a[i * r + k];
      if (x == 0) continue;
      for (int j = 0; j < r; ++j) c[i * r + j] += x * b[k * r + j];
    }
  return c;
}

void require_simple(const RootDatum& d) {
  if (!d.is_simple())
    throw ConfigError("affine operations need a simple derived group, got " + d.label());
}

}  // namespace

FiniteWeylElt FiniteWeylElt::identity(int rank) {
  FiniteWeylElt w;
  w.r_ = rank;
  w.m_.assign(static_cast<std::size_t>(rank) * rank, 0);
  for (int i = 0; i < rank; ++i) w.m_[i * rank + i] = 1;
  w.minv_ = w.m_;
  return w;
}

FiniteWeylElt FiniteWeylElt::simple(const RootDatum& d, int i) {
  if (i < 1 || i > d.rank()) throw DomainError("simple reflection index out of range");
  const int r = d.rank();
  FiniteWeylElt w = identity(r);
  const Weight& a = d.simple_root(i);
  for (int k = 0; k < r; ++k) w.m_[k * r + (i - 1)] -= a[k];
  w.minv_ = w.m_;
  return w;
}

FiniteWeylElt FiniteWeylElt::reflection(const RootDatum& d, const Root& a) {
  const int r = d.rank();
  FiniteWeylElt w = identity(r);
  for (int k = 0; k < r; ++k)
    for (int j = 0; j < r; ++j) w.m_[k * r + j] -= a.weight[k] * a.coroot[j];
  w.minv_ = w.m_;
  return w;
}

FiniteWeylElt FiniteWeylElt::from_word(const RootDatum& d, const std::vector<int>& word) {
  FiniteWeylElt w = identity(d.rank());
  for (int i : word) w = w * simple(d, i);
  return w;
}

bool FiniteWeylElt::is_identity() const {
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < r_; ++j)
      if (m_[i * r_ + j] != (i == j ? 1 : 0)) return false;
  return true;
}

Weight FiniteWeylElt::act(const Weight& lambda) const {
  if (static_cast<int>(lambda.size()) < r_) throw DatumMismatch("Weyl action: rank mismatch");
  Weight out = lambda;
  for (int k = 0; k < r_; ++k) {
    int s = 0;
    for (int j = 0; j < r_; ++j) s += m_[k * r_ + j] * lambda[j];
    out[k] = s;
  }
  return out;
}

Weight FiniteWeylElt::act_inverse(const Weight& lambda) const {
  if (static_cast<int>(lambda.size()) < r_) throw DatumMismatch("Weyl action: rank mismatch");
  Weight out = lambda;
  for (int k = 0; k < r_; ++k) {
    int s = 0;
    for (int j = 0; j < r_; ++j) s += minv_[k * r_ + j] * lambda[j];
    out[k] = s;
  }
  return out;
}

// The coweight action is the inverse transpose of the weight action.
Coweight FiniteWeylElt::act(const Coweight& beta) const {
  if (static_cast<int>(beta.size()) < r_) throw DatumMismatch("Weyl action: rank mismatch");
  Coweight out = beta;
  for (int k = 0; k < r_; ++k) {
    int s = 0;
    for (int j = 0; j < r_; ++j) s += minv_[j * r_ + k] * beta[j];
    out[k] = s;
  }
  return out;
}

Coweight FiniteWeylElt::act_inverse(const Coweight& beta) const {
  if (static_cast<int>(beta.size()) < r_) throw DatumMismatch("Weyl action: rank mismatch");
  Coweight out = beta;
  for (int k = 0; k < r_; ++k) {
    int s = 0;
    for (int j = 0; j < r_; ++j) s += m_[j * r_ + k] * beta[j];
    out[k] = s;
  }
  return out;
}

FiniteWeylElt FiniteWeylElt::inverse() const {
  FiniteWeylElt w = *this;
  std::swap(w.m_, w.minv_);
  return w;
}

FiniteWeylElt operator*(const FiniteWeylElt& a, const FiniteWeylElt& b) {
  if (a.r_ != b.r_) throw DatumMismatch("Weyl product: rank mismatch");
  FiniteWeylElt c;
  c.r_ = a.r_;
  c.m_ = matmul(a.m_, b.m_, a.r_);
  c.minv_ = matmul(b.minv_, a.minv_, a.r_);
  return c;
}

int length(const RootDatum& d, const FiniteWeylElt& w) {
  int n = 0;
  for (const auto& a : d.positive_roots())
    if (d.root_sign(w.act(a.weight)) < 0) ++n;
  return n;
}

std::vector<int> reduced_word(const RootDatum& d, const FiniteWeylElt& w) {
  std::vector<int> word;
  FiniteWeylElt cur = w;
  int len = length(d, cur);
  while (len > 0) {
    for (int i : d.nodes()) {
      FiniteWeylElt next = FiniteWeylElt::simple(d, i) * cur;
      int l = length(d, next);
      if (l < len) {
        word.push_back(i);
        cur = next;
        len = l;
        break;
      }
    }
  }
  return word;
}

std::vector<FiniteWeylElt> weyl_group_elements(const RootDatum& d, const std::vector<int>& J) {
  // BFS over right multiplication in increasing generator order: the first
  // word reaching an element is its ShortLex-least reduced word.
  std::vector<FiniteWeylElt> out{FiniteWeylElt::identity(d.rank())};
  std::set<FiniteWeylElt> seen{out.front()};
  std::vector<FiniteWeylElt> layer = out;
  while (!layer.empty()) {
    std::vector<FiniteWeylElt> next;
    for (const auto& w : layer)
      for (int j : J) {
        FiniteWeylElt v = w * FiniteWeylElt::simple(d, j);
        if (seen.insert(v).second) next.push_back(v);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::vector<FiniteWeylElt> weyl_group_elements(const RootDatum& d) {
  return weyl_group_elements(d, d.nodes());
}

FiniteWeylElt longest_element(const RootDatum& d, const std::vector<int>& J) {
  // Multiply by any simple reflection in J that increases length.
  FiniteWeylElt w = FiniteWeylElt::identity(d.rank());
  int len = 0;
  for (bool grew = true; grew;) {
    grew = false;
    for (int j : J) {
      FiniteWeylElt v = w * FiniteWeylElt::simple(d, j);
      int l = length(d, v);
      if (l > len) {
        w = v;
        len = l;
        grew = true;
      }
    }
  }
  return w;
}

FiniteWeylElt longest_element(const RootDatum& d) { return longest_element(d, d.nodes()); }

ExtAffWeylElt::ExtAffWeylElt(FiniteWeylElt u, Coweight gamma)
    : u_(std::move(u)), gamma_(std::move(gamma)) {
  if (static_cast<int>(gamma_.size()) < u_.rank())
    throw DatumMismatch("translation part shorter than Weyl rank");
}

ExtAffWeylElt ExtAffWeylElt::identity(const RootDatum& d) {
  return {FiniteWeylElt::identity(d.rank()), d.zero_coweight()};
}

ExtAffWeylElt ExtAffWeylElt::translation(const RootDatum& d, const Coweight& gamma) {
  if (static_cast<int>(gamma.size()) != d.total_rank()) throw DatumMismatch("coweight rank mismatch");
  return {FiniteWeylElt::identity(d.rank()), gamma};
}

ExtAffWeylElt ExtAffWeylElt::finite(const RootDatum& d, const FiniteWeylElt& u) {
  return {u, d.zero_coweight()};
}

ExtAffWeylElt ExtAffWeylElt::inverse() const {
  FiniteWeylElt ui = u_.inverse();
  return {ui, -u_.act(gamma_)};
}

ExtAffWeylElt operator*(const ExtAffWeylElt& a, const ExtAffWeylElt& b) {
  if (a.gamma_.size() != b.gamma_.size()) throw DatumMismatch("affine product: datum mismatch");
  return {a.u_ * b.u_, b.u_.act_inverse(a.gamma_) + b.gamma_};
}

ExtAffWeylElt simple_reflection(const RootDatum& d, int i) {
  if (i == 0) {
    require_simple(d);
    const Root& theta = d.highest_root(0);
    return {FiniteWeylElt::reflection(d, theta), -theta.coroot};
  }
  return ExtAffWeylElt::finite(d, FiniteWeylElt::simple(d, i));
}

ExtAffWeylElt from_affine_word(const RootDatum& d, const std::vector<int>& word) {
  ExtAffWeylElt w = ExtAffWeylElt::identity(d);
  for (int i : word) w = w * simple_reflection(d, i);
  return w;
}

ExtAffWeylElt from_affine_word(const RootDatum& d, const AffineWord& w) {
  return ExtAffWeylElt::translation(d, w.central) * from_affine_word(d, w.word);
}

int length(const RootDatum& d, const ExtAffWeylElt& w) {
  int n = 0;
  for (const auto& a : d.positive_roots()) {
    long v = pairing(w.translation_part(), a.weight);
    if (d.root_sign(w.finite_part().act(a.weight)) < 0) v += 1;
    n += static_cast<int>(v < 0 ? -v : v);
  }
  return n;
}

bool is_left_descent(const RootDatum& d, const ExtAffWeylElt& w, int i) {
  return length(d, simple_reflection(d, i) * w) < length(d, w);
}

AffineWord reduced_word_affine(const RootDatum& d, const ExtAffWeylElt& w) {
  AffineWord out;
  ExtAffWeylElt cur = w;
  int len = length(d, cur);
  const bool affine_ok = d.is_simple();
  while (len > 0) {
    bool found = false;
    for (int i = affine_ok ? 0 : 1; i <= d.rank(); ++i) {
      ExtAffWeylElt next = simple_reflection(d, i) * cur;
      int l = length(d, next);
      if (l < len) {
        out.word.push_back(i);
        cur = next;
        len = l;
        found = true;
        break;
      }
    }
    if (!found) require_simple(d);  // only a multi-factor datum can get stuck
  }
  // cur has length zero, hence is a central translation.
  out.central = cur.translation_part();
  return out;
}

bool in_affine_weyl(const RootDatum& d, const ExtAffWeylElt& w) {
  return d.in_coroot_lattice(w.translation_part());
}

bool is_minimal_coset_rep(const RootDatum& d, const ExtAffWeylElt& w) {
  int len = length(d, w);
  for (int i : d.nodes())
    if (length(d, w * simple_reflection(d, i)) < len) return false;
  return true;
}

int coxeter_order(const RootDatum& d, int i, int j) {
  ExtAffWeylElt p = simple_reflection(d, i) * simple_reflection(d, j);
  ExtAffWeylElt cur = p;
  for (int m = 1; m <= 12; ++m) {
    if (cur.is_identity()) return m;
    cur = cur * p;
  }
  return 0;
}

std::vector<std::vector<int>> all_reduced_words(const RootDatum& d, const ExtAffWeylElt& w) {
  std::map<ExtAffWeylElt, std::vector<std::vector<int>>> memo;
  std::function<const std::vector<std::vector<int>>&(const ExtAffWeylElt&)> rec =
      [&](const ExtAffWeylElt& x) -> const std::vector<std::vector<int>>& {
    auto it = memo.find(x);
    if (it != memo.end()) return it->second;
    std::vector<std::vector<int>> words;
    int len = length(d, x);
    if (len == 0) {
      words.push_back({});
    } else {
      for (int i = 0; i <= d.rank(); ++i) {
        if (i == 0 && !d.is_simple()) continue;
        ExtAffWeylElt y = simple_reflection(d, i) * x;
        if (length(d, y) >= len) continue;
        for (const auto& tail : rec(y)) {
          std::vector<int> word{i};
          word.insert(word.end(), tail.begin(), tail.end());
          words.push_back(std::move(word));
        }
      }
    }
    return memo.emplace(x, std::move(words)).first->second;
  };
  return rec(w);
}

std::vector<ExtAffWeylElt> affine_ball(const RootDatum& d, int max_length) {
  require_simple(d);
  std::vector<ExtAffWeylElt> out{ExtAffWeylElt::identity(d)};
  std::set<ExtAffWeylElt> seen{out.front()};
  std::vector<ExtAffWeylElt> layer = out;
  for (int l = 1; l <= max_length; ++l) {
    std::vector<ExtAffWeylElt> next;
    for (const auto& w : layer)
      for (int i = 0; i <= d.rank(); ++i) {
        ExtAffWeylElt v = simple_reflection(d, i) * w;
        if (length(d, v) == l && seen.insert(v).second) next.push_back(v);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

Coweight minus_two_rho_vee(const RootDatum& d) {
  Coweight s = d.zero_coweight();
  for (const auto& a : d.positive_roots()) s -= a.coroot;
  return s;
}

AffineOrders::AffineOrders(const RootDatum& d, SemiInfiniteConfig cfg) : d_(d), cfg_(cfg) {
  require_simple(d_);
}

std::pair<ExtAffWeylElt, ExtAffWeylElt> AffineOrders::align_central(const ExtAffWeylElt& w,
                                                                    const ExtAffWeylElt& v) const {
  Coweight cw = w.translation_part(), cv = v.translation_part();
  for (int k = 0; k < d_.rank(); ++k) cw[k] = cv[k] = 0;
  if (cw != cv)
    throw DomainError("elements lie in different central cosets; not comparable");
  ExtAffWeylElt shift = ExtAffWeylElt::translation(d_, -cw);
  return {w * shift, v * shift};
}

bool AffineOrders::bruhat_leq(const ExtAffWeylElt& w, const ExtAffWeylElt& v) const {
  auto [a, b] = align_central(w, v);
  auto key = std::make_pair(a, b);
  {
    std::shared_lock lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  bool ans = bruhat_uncached(a, b);
  std::unique_lock lock(mu_);
  memo_.emplace(std::move(key), ans);
  return ans;
}

// Lifting property: if s v < v then w <= v iff (s w < w ? s w <= s v : w <= s v).
bool AffineOrders::bruhat_uncached(ExtAffWeylElt w, ExtAffWeylElt v) const {
  int lw = length(d_, w), lv = length(d_, v);
  while (lv > 0) {
    if (lw > lv) return false;
    int s = -1;
    ExtAffWeylElt sv;
    for (int i = 0; i <= d_.rank(); ++i) {
      sv = simple_reflection(d_, i) * v;
      if (length(d_, sv) < lv) {
        s = i;
        break;
      }
    }
    ExtAffWeylElt sw = simple_reflection(d_, s) * w;
    int lsw = length(d_, sw);
    if (lsw < lw) {
      w = sw;
      lw = lsw;
    }
    v = sv;
    --lv;
  }
  return lw == 0;
}

SemiInfiniteTrace AffineOrders::semi_infinite_trace(const ExtAffWeylElt& w,
                                                    const ExtAffWeylElt& v) const {
  auto [a, b] = align_central(w, v);
  const int n0 = 2 * (std::max(length(d_, a), length(d_, b)) + 1);
  const Coweight step = minus_two_rho_vee(d_);
  SemiInfiniteTrace tr;
  for (int k = 0; k < cfg_.max_probes; ++k) {
    const int n = n0 + k;
    ExtAffWeylElt tb = ExtAffWeylElt::translation(d_, n * step);
    tr.answers.push_back(bruhat_leq(a * tb, b * tb));
    const int m = static_cast<int>(tr.answers.size());
    if (m >= cfg_.agree) {
      bool same = true;
      for (int j = m - cfg_.agree; j < m; ++j) same = same && tr.answers[j] == tr.answers.back();
      if (same) {
        tr.value = tr.answers.back();
        tr.first_n = n0 + m - cfg_.agree;
        return tr;
      }
    }
  }
  throw UnstableError("semi-infinite comparison did not stabilize within " +
                      std::to_string(cfg_.max_probes) + " probes");
}

bool AffineOrders::semi_infinite_leq(const ExtAffWeylElt& w, const ExtAffWeylElt& v) const {
  return semi_infinite_trace(w, v).value;
}

}  // namespace grk
