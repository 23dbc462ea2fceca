#include "wco/multiindex.hpp"

#include <numeric>
#include <stdexcept>

namespace wco {

int Composition::weight() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

int WeakComposition::weight() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

namespace {

void enum_parts(int remaining, int slots, int min_part, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
  if (slots == 1) {
    if (remaining >= min_part) {
      cur.push_back(remaining);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (int v = min_part; v <= remaining - min_part * (slots - 1); ++v) {
    cur.push_back(v);
    enum_parts(remaining - v, slots - 1, min_part, cur, out);
    cur.pop_back();
  }
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("multinomial: value exceeds representable range");
  return r;
}

}  // namespace

std::vector<Composition> compositions(int i, int j) {
  std::vector<Composition> result;
  if (i < 1 || j < 1 || i < j) return result;
  std::vector<std::vector<int>> raw;
  std::vector<int> cur;
  enum_parts(i, j, 1, cur, raw);
  result.reserve(raw.size());
  for (auto& p : raw) result.push_back(Composition{std::move(p)});
  return result;
}

std::vector<WeakComposition> weak_compositions(int i, int j) {
  std::vector<WeakComposition> result;
  if (i < 0 || j < 1) return result;
  std::vector<std::vector<int>> raw;
  std::vector<int> cur;
  enum_parts(i, j, 0, cur, raw);
  result.reserve(raw.size());
  for (auto& p : raw) result.push_back(WeakComposition{std::move(p)});
  return result;
}

std::vector<CoordinateTuple> coordinate_tuples(int j, int N) {
  std::vector<CoordinateTuple> result;
  if (j < 1 || N < 1) return result;
  std::vector<int> cur(j, 1);
  while (true) {
    result.push_back(CoordinateTuple{cur});
    // odometer increment, last entry fastest
    int pos = j - 1;
    while (pos >= 0 && cur[pos] == N) {
      cur[pos] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++cur[pos];
  }
  return result;
}

std::int64_t factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  std::int64_t r = 1;
  for (int v = 2; v <= n; ++v) r = checked_mul(r, v);
  return r;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (int v = 1; v <= k; ++v) {
    r = checked_mul(r, n - k + v);
    r /= v;
  }
  return r;
}

std::int64_t multinomial(int n, const std::vector<int>& parts) {
  std::int64_t used = 0;
  std::int64_t r = 1;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial: negative part");
    r = checked_mul(r, binomial(static_cast<int>(used) + p, p));
    used += p;
    if (used > n) throw std::invalid_argument("multinomial: parts exceed n");
  }
  // remaining mass n - used goes to an implicit trailing part only when
  // the caller passed a partial tuple; the paper's usage has |k| = n or
  // treats C^n_k with |k| = i <= n as n!/k!/(n-i)!0!-free form n!/k!.
  if (used < n) {
    // n! / (k_1! ... k_j!) with no constraint that parts sum to n.
    for (std::int64_t v = used + 1; v <= n; ++v) r = checked_mul(r, v);
  }
  return r;
}

std::int64_t stirling2(int n, int j) {
  if (n < 0 || j < 0) return 0;
  if (n == 0 && j == 0) return 1;
  if (n == 0 || j == 0 || j > n) return 0;
  std::vector<std::vector<std::int64_t>> s(n + 1,
                                           std::vector<std::int64_t>(j + 1, 0));
  s[0][0] = 1;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= std::min(a, j); ++b)
      s[a][b] = checked_mul(b, s[a - 1][b]) + s[a - 1][b - 1];
  return s[n][j];
}

}  // namespace wco
