#pragma once

// Exact integer/rational linear algebra on vectors of dimension <= 8.
// Everything here is overflow-checked through __int128 intermediates;
// the combinatorics downstream never leaves desk scale.

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace adm {

using Int = long long;

inline constexpr int kMaxRank = 8;

namespace detail {

inline Int narrow(__int128 v) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
    throw std::overflow_error("integer overflow in exact arithmetic");
  return static_cast<Int>(v);
}

inline std::size_t hash_mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace detail

struct Vec {
  int n = 0;
  std::array<Int, kMaxRank> a{};

  static Vec zero(int n) {
    Vec v;
    v.n = n;
    return v;
  }
  static Vec unit(int n, int i) {
    Vec v = zero(n);
    v.a[static_cast<std::size_t>(i)] = 1;
    return v;
  }

  Int operator[](int i) const { return a[static_cast<std::size_t>(i)]; }
  Int& operator[](int i) { return a[static_cast<std::size_t>(i)]; }

  bool operator==(const Vec& o) const { return n == o.n && a == o.a; }
  bool operator!=(const Vec& o) const { return !(*this == o); }
  bool operator<(const Vec& o) const {
    if (n != o.n) return n < o.n;
    return a < o.a;
  }

  Vec operator+(const Vec& o) const {
    Vec r = *this;
    for (int i = 0; i < n; ++i) r[i] = detail::narrow(__int128(r[i]) + o[i]);
    return r;
  }
  Vec operator-(const Vec& o) const {
    Vec r = *this;
    for (int i = 0; i < n; ++i) r[i] = detail::narrow(__int128(r[i]) - o[i]);
    return r;
  }
  Vec operator-() const {
    Vec r = *this;
    for (int i = 0; i < n; ++i) r[i] = -r[i];
    return r;
  }
  Vec operator*(Int c) const {
    Vec r = *this;
    for (int i = 0; i < n; ++i) r[i] = detail::narrow(__int128(r[i]) * c);
    return r;
  }

  bool is_zero() const {
    for (int i = 0; i < n; ++i)
      if (a[static_cast<std::size_t>(i)] != 0) return false;
    return true;
  }
  bool all_nonneg() const {
    for (int i = 0; i < n; ++i)
      if (a[static_cast<std::size_t>(i)] < 0) return false;
    return true;
  }
  bool all_nonpos() const {
    for (int i = 0; i < n; ++i)
      if (a[static_cast<std::size_t>(i)] > 0) return false;
    return true;
  }
  Int sum() const {
    Int s = 0;
    for (int i = 0; i < n; ++i) s += a[static_cast<std::size_t>(i)];
    return s;
  }
};

inline Int dot(const Vec& x, const Vec& y) {
  __int128 s = 0;
  for (int i = 0; i < x.n; ++i) s += __int128(x[i]) * y[i];
  return detail::narrow(s);
}

// Square integer matrix acting on Vec by left multiplication.
struct Mat {
  int n = 0;
  std::array<Int, kMaxRank * kMaxRank> a{};

  static Mat identity(int n) {
    Mat m;
    m.n = n;
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  Int at(int i, int j) const { return a[static_cast<std::size_t>(i * n + j)]; }
  Int& at(int i, int j) { return a[static_cast<std::size_t>(i * n + j)]; }

  bool operator==(const Mat& o) const { return n == o.n && a == o.a; }
  bool operator!=(const Mat& o) const { return !(*this == o); }
  bool operator<(const Mat& o) const {
    if (n != o.n) return n < o.n;
    return a < o.a;
  }

  Mat mul(const Mat& o) const {
    Mat r;
    r.n = n;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        __int128 s = 0;
        for (int k = 0; k < n; ++k) s += __int128(at(i, k)) * o.at(k, j);
        r.at(i, j) = detail::narrow(s);
      }
    return r;
  }

  Vec apply(const Vec& v) const {
    Vec r = Vec::zero(n);
    for (int i = 0; i < n; ++i) {
      __int128 s = 0;
      for (int j = 0; j < n; ++j) s += __int128(at(i, j)) * v[j];
      r[i] = detail::narrow(s);
    }
    return r;
  }

  Mat transposed() const {
    Mat r;
    r.n = n;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  Vec row(int i) const {
    Vec r = Vec::zero(n);
    for (int j = 0; j < n; ++j) r[j] = at(i, j);
    return r;
  }
  Vec col(int j) const {
    Vec r = Vec::zero(n);
    for (int i = 0; i < n; ++i) r[i] = at(i, j);
    return r;
  }
};

// Normalized rational number, den > 0.
struct Frac {
  Int num = 0;
  Int den = 1;

  Frac() = default;
  Frac(Int n) : num(n), den(1) {}  // NOLINT: implicit by design
  Frac(Int n, Int d) {
    if (d == 0) throw std::domain_error("zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    Int g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
  }

  static Frac make(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 an = n < 0 ? -n : n;
    __int128 g = d;
    while (an != 0) {
      __int128 t = g % an;
      g = an;
      an = t;
    }
    if (g == 0) g = 1;
    return Frac(detail::narrow(n / g), detail::narrow(d / g));
  }

  Frac operator+(const Frac& o) const {
    return make(__int128(num) * o.den + __int128(o.num) * den, __int128(den) * o.den);
  }
  Frac operator-(const Frac& o) const {
    return make(__int128(num) * o.den - __int128(o.num) * den, __int128(den) * o.den);
  }
  Frac operator*(const Frac& o) const {
    return make(__int128(num) * o.num, __int128(den) * o.den);
  }
  Frac operator/(const Frac& o) const {
    if (o.num == 0) throw std::domain_error("division by zero");
    return make(__int128(num) * o.den, __int128(den) * o.num);
  }
  Frac operator-() const { return Frac(-num, den); }

  bool operator==(const Frac& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Frac& o) const { return !(*this == o); }
  bool operator<(const Frac& o) const { return __int128(num) * o.den < __int128(o.num) * den; }

  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }
  int sign() const { return num > 0 ? 1 : (num < 0 ? -1 : 0); }
};

// Rational point in coweight coordinates: num / den componentwise, den > 0.
struct RatVec {
  Vec num;
  Int den = 1;

  RatVec() = default;
  RatVec(Vec v, Int d) : num(v), den(d) {
    if (d <= 0) throw std::domain_error("nonpositive denominator");
  }

  RatVec operator-(const RatVec& o) const {
    Int g = std::gcd(den, o.den);
    Int d = detail::narrow(__int128(den) / g * o.den);
    Vec r = num * (d / den) - o.num * (d / o.den);
    return RatVec(r, d);
  }

  Frac at(int i) const { return Frac(num[i], den); }
};

// Solve sum_j x_j * cols[j] = rhs over the rationals. The columns are
// required to be linearly independent; returns nullopt when inconsistent.
inline std::optional<std::vector<Frac>> solve_columns(const std::vector<Vec>& cols,
                                                      const Vec& rhs_num, Int rhs_den = 1) {
  const int m = static_cast<int>(cols.size());
  const int n = m > 0 ? cols[0].n : rhs_num.n;
  std::vector<std::vector<Frac>> aug(static_cast<std::size_t>(n),
                                     std::vector<Frac>(static_cast<std::size_t>(m) + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) aug[i][static_cast<std::size_t>(j)] = Frac(cols[static_cast<std::size_t>(j)][i]);
    aug[i][static_cast<std::size_t>(m)] = Frac(rhs_num[i], rhs_den);
  }
  std::vector<int> pivot_row(static_cast<std::size_t>(m), -1);
  int row = 0;
  for (int j = 0; j < m; ++j) {
    int p = -1;
    for (int i = row; i < n; ++i)
      if (!aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) throw std::logic_error("solve_columns: dependent columns");
    std::swap(aug[static_cast<std::size_t>(p)], aug[static_cast<std::size_t>(row)]);
    Frac inv = Frac(1) / aug[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)];
    for (int k = j; k <= m; ++k)
      aug[static_cast<std::size_t>(row)][static_cast<std::size_t>(k)] =
          aug[static_cast<std::size_t>(row)][static_cast<std::size_t>(k)] * inv;
    for (int i = 0; i < n; ++i) {
      if (i == row) continue;
      Frac f = aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (f.is_zero()) continue;
      for (int k = j; k <= m; ++k)
        aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
            aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] -
            f * aug[static_cast<std::size_t>(row)][static_cast<std::size_t>(k)];
    }
    pivot_row[static_cast<std::size_t>(j)] = row;
    ++row;
  }
  for (int i = row; i < n; ++i)
    if (!aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)].is_zero()) return std::nullopt;
  std::vector<Frac> x(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j)
    x[static_cast<std::size_t>(j)] = aug[static_cast<std::size_t>(pivot_row[static_cast<std::size_t>(j)])]
                                        [static_cast<std::size_t>(m)];
  return x;
}

// Coefficients of rhs in the given lattice basis, if they exist and are integral.
inline std::optional<std::vector<Int>> solve_integer(const std::vector<Vec>& cols, const Vec& rhs) {
  auto sol = solve_columns(cols, rhs);
  if (!sol) return std::nullopt;
  std::vector<Int> out;
  out.reserve(sol->size());
  for (const Frac& f : *sol) {
    if (!f.is_integer()) return std::nullopt;
    out.push_back(f.num);
  }
  return out;
}

inline int rank_of(std::vector<Vec> vs) {
  if (vs.empty()) return 0;
  const int n = vs[0].n;
  int rank = 0;
  std::vector<std::vector<Frac>> rows;
  for (const Vec& v : vs) {
    std::vector<Frac> r(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = Frac(v[i]);
    for (const auto& pivot : rows) {
      int pj = -1;
      for (int j = 0; j < n; ++j)
        if (!pivot[static_cast<std::size_t>(j)].is_zero()) {
          pj = j;
          break;
        }
      Frac f = r[static_cast<std::size_t>(pj)] / pivot[static_cast<std::size_t>(pj)];
      if (f.is_zero()) continue;
      for (int j = 0; j < n; ++j)
        r[static_cast<std::size_t>(j)] = r[static_cast<std::size_t>(j)] - f * pivot[static_cast<std::size_t>(j)];
    }
    bool zero = true;
    for (int j = 0; j < n; ++j) zero = zero && r[static_cast<std::size_t>(j)].is_zero();
    if (!zero) {
      rows.push_back(std::move(r));
      ++rank;
    }
  }
  return rank;
}

}  // namespace adm

template <>
struct std::hash<adm::Vec> {
  std::size_t operator()(const adm::Vec& v) const noexcept {
    std::size_t h = static_cast<std::size_t>(v.n);
    for (int i = 0; i < v.n; ++i) h = adm::detail::hash_mix(h, static_cast<std::size_t>(v[i]));
    return h;
  }
};

template <>
struct std::hash<adm::Mat> {
  std::size_t operator()(const adm::Mat& m) const noexcept {
    std::size_t h = static_cast<std::size_t>(m.n);
    for (int i = 0; i < m.n * m.n; ++i)
      h = adm::detail::hash_mix(h, static_cast<std::size_t>(m.a[static_cast<std::size_t>(i)]));
    return h;
  }
};
