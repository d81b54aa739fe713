#pragma once

// Independent reference models for the four instances, written directly
// from the definitions with plain types. Tests compare the library against
// these through the textual element syntax only.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace oracle {

// Words over 'a','b',... (letter 'e' skipped), empty word is the identity.
struct Words {
  int rank = 2;

  using T = std::string;
  char letter(int i) const { return "abcdfghijklmnopqrstuvwxyz"[i]; }
  T identity() const { return ""; }
  T compose(const T& p, const T& q) const { return p + q; }
  std::optional<T> divide(const T& p, const T& q) const {
    if (q.compare(0, p.size(), p) != 0 || q.size() < p.size()) return std::nullopt;
    return q.substr(p.size());
  }
  std::vector<T> ball(int n) const {
    std::vector<T> out{""};
    std::vector<T> layer{""};
    for (int len = 1; len <= n; ++len) {
      std::vector<T> next;
      for (const auto& w : layer) {
        for (int i = 0; i < rank; ++i) next.push_back(w + letter(i));
      }
      out.insert(out.end(), next.begin(), next.end());
      layer = next;
    }
    return out;
  }
  std::string format(const T& w) const { return w.empty() ? "e" : w; }
};

// N^k with coordinatewise order.
struct Vectors {
  int rank = 2;

  using T = std::vector<int>;
  T identity() const { return T(rank, 0); }
  T compose(const T& p, const T& q) const {
    T r(rank);
    for (int i = 0; i < rank; ++i) r[i] = p[i] + q[i];
    return r;
  }
  std::optional<T> divide(const T& p, const T& q) const {
    T r(rank);
    for (int i = 0; i < rank; ++i) {
      if (q[i] < p[i]) return std::nullopt;
      r[i] = q[i] - p[i];
    }
    return r;
  }
  std::vector<T> ball(int n) const {
    std::vector<T> out;
    T v(rank, 0);
    // Odometer over [0,n]^rank, filtered by coordinate sum.
    while (true) {
      if (std::accumulate(v.begin(), v.end(), 0) <= n) out.push_back(v);
      int i = 0;
      while (i < rank && v[i] == n) v[i++] = 0;
      if (i == rank) break;
      ++v[i];
    }
    return out;
  }
  std::string format(const T& v) const {
    if (rank == 1) return std::to_string(v[0]);
    std::string s = "(";
    for (int i = 0; i < rank; ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
  }
};

// Positive integers under divisibility.
struct Divisors {
  using T = long;
  T identity() const { return 1; }
  T compose(T p, T q) const { return p * q; }
  std::optional<T> divide(T p, T q) const {
    if (q % p) return std::nullopt;
    return q / p;
  }
  std::vector<T> ball(int n) const {
    std::vector<T> out;
    for (long i = 1; i <= std::max(n, 1); ++i) out.push_back(i);
    return out;
  }
  std::string format(T p) const { return std::to_string(p); }
};

// {0} u [1, inf) inside Q, with fractions kept as reduced (num, den).
struct HalfLine {
  int denominator_bound = 4;

  using T = std::pair<long, long>;
  static T make(long n, long d) {
    long g = std::gcd(n, d);
    return {n / g, d / g};
  }
  static bool positive(const T& x) { return x.first == 0 || x.first >= x.second; }
  T identity() const { return {0, 1}; }
  T compose(const T& p, const T& q) const {
    return make(p.first * q.second + q.first * p.second, p.second * q.second);
  }
  std::optional<T> divide(const T& p, const T& q) const {
    T d = make(q.first * p.second - p.first * q.second, p.second * q.second);
    if (d.first < 0 || !positive(d)) return std::nullopt;
    return d;
  }
  std::vector<T> ball(int n) const {
    std::set<T, bool (*)(const T&, const T&)> s(+[](const T& a, const T& b) {
      return a.first * b.second < b.first * a.second;
    });
    s.insert({0, 1});
    for (long d = 1; d <= denominator_bound; ++d) {
      for (long k = d; k <= n * d; ++k) s.insert(make(k, d));
    }
    return {s.begin(), s.end()};
  }
  std::string format(const T& x) const {
    return x.second == 1 ? std::to_string(x.first) : std::to_string(x.first) + "/" + std::to_string(x.second);
  }
};

template <class O>
bool leq(const O& o, const typename O::T& p, const typename O::T& q) {
  return o.divide(p, q).has_value();
}

/// Outcome of the brute-force join search inside a finite universe.
template <class T>
struct BruteJoin {
  bool has_upper_bound = false;
  std::optional<T> least;
};

template <class O>
BruteJoin<typename O::T> brute_join(const O& o, const typename O::T& p, const typename O::T& q,
                                    const std::vector<typename O::T>& universe) {
  BruteJoin<typename O::T> out;
  std::vector<typename O::T> uppers;
  for (const auto& u : universe) {
    if (leq(o, p, u) && leq(o, q, u)) uppers.push_back(u);
  }
  out.has_upper_bound = !uppers.empty();
  for (const auto& j : uppers) {
    if (std::all_of(uppers.begin(), uppers.end(), [&](const auto& u) { return leq(o, j, u); })) {
      out.least = j;
      break;
    }
  }
  return out;
}

/// V(s,t) as the explicit partial map tu -> su on a universe.
template <class O>
std::map<typename O::T, typename O::T> monomial_map(const O& o, const typename O::T& s, const typename O::T& t,
                                                    const std::vector<typename O::T>& universe) {
  std::map<typename O::T, typename O::T> out;
  for (const auto& x : universe) {
    if (auto u = o.divide(t, x)) out[x] = o.compose(s, *u);
  }
  return out;
}

template <class O>
std::vector<std::set<typename O::T>> spectrum(const O& o, const std::vector<typename O::T>& ball) {
  std::vector<std::set<typename O::T>> out;
  const std::size_t n = ball.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<typename O::T> members;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) members.push_back(ball[i]);
    }
    auto in = [&](const typename O::T& x) { return std::find(members.begin(), members.end(), x) != members.end(); };
    bool hereditary = true, directed = true;
    for (const auto& t : members) {
      for (const auto& s : ball) {
        if (leq(o, s, t) && !in(s)) hereditary = false;
      }
    }
    for (const auto& a : members) {
      for (const auto& b : members) {
        bool bounded = std::any_of(members.begin(), members.end(),
                                   [&](const auto& u) { return leq(o, a, u) && leq(o, b, u); });
        if (!bounded) directed = false;
      }
    }
    if (hereditary && directed) out.emplace_back(members.begin(), members.end());
  }
  return out;
}

}  // namespace oracle
