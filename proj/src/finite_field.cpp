#include "hyperarr/finite_field.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <thread>

#include "hyperarr/closure.hpp"
#include "hyperarr/poset.hpp"
#include "hyperarr/primefield.hpp"

namespace hyperarr {

std::vector<std::vector<Int>> integer_rows(const Arrangement& a) {
  std::vector<std::vector<Int>> rows;
  rows.reserve(a.n());
  for (const Hyperplane& h : a.hyperplanes) {
    Int l(1);
    for (const Rat& v : h.normal) l = lcm(l, v.get_den());
    l = lcm(l, h.offset.get_den());
    std::vector<Int> row(a.d + 1);
    for (int j = 0; j < a.d; ++j) row[j] = Int(h.normal[j] * l);
    row[a.d] = Int(h.offset * l);
    Int g(0);
    for (const Int& v : row) g = gcd(g, v);
    if (g > 1)
      for (Int& v : row) v /= g;
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

// Mod-p mirror of the rational closure context. Rows are in reduced row
// echelon form over F_p.
struct FpCtx {
  using System = std::vector<std::vector<int64_t>>;  // RREF rows, d+1 columns
  int d;
  int64_t p;
  std::vector<std::vector<int64_t>> rows;  // hyperplanes mod p

  int nrows() const { return static_cast<int>(rows.size()); }

  System ambient() const { return {}; }

  int dim(const System& s) const { return d - static_cast<int>(s.size()); }

  static int lead(const std::vector<int64_t>& row) {
    for (size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) return static_cast<int>(j);
    return -1;
  }

  // Reduce row against the RREF system in place; returns leading column or -1.
  int reduce(const System& s, std::vector<int64_t>& row) const {
    for (const auto& r : s) {
      int c = lead(r);
      if (row[c] == 0) continue;
      int64_t f = row[c];
      for (int j = c; j <= d; ++j) row[j] = (row[j] - f * r[j] % p % p + p * p) % p;
    }
    return lead(row);
  }

  std::optional<System> intersect(const System& s, int i) const {
    std::vector<int64_t> row = rows[i];
    int c = reduce(s, row);
    if (c < 0) return s;       // no new constraint (cannot happen via closure)
    if (c == d) return std::nullopt;  // 0 = nonzero: empty
    int64_t inv = mod_inv(row[c], p);
    for (int j = c; j <= d; ++j) row[j] = mod_mul(row[j], inv, p);
    System out = s;
    // Clear column c in existing rows, insert keeping pivot columns increasing.
    for (auto& r : out) {
      if (r[c] == 0) continue;
      int64_t f = r[c];
      for (int j = c; j <= d; ++j) r[j] = (r[j] - f * row[j] % p % p + p * p) % p;
    }
    auto pos = out.begin();
    while (pos != out.end() && lead(*pos) < c) ++pos;
    out.insert(pos, std::move(row));
    return out;
  }

  bool contains(const System& s, int i) const {
    std::vector<int64_t> row = rows[i];
    return reduce(s, row) < 0;
  }
};

std::vector<std::pair<int, uint64_t>> fp_signature(const Arrangement& a,
                                                   const std::vector<std::vector<Int>>& rows,
                                                   int64_t p) {
  FpCtx ctx;
  ctx.d = a.d;
  ctx.p = p;
  ctx.rows.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<int64_t> r(a.d + 1);
    for (int j = 0; j <= a.d; ++j) r[j] = mod_norm(row[j], p);
    ctx.rows.push_back(std::move(r));
  }
  // A degenerate normal collapses the hyperplane mod p; the signature cannot
  // match in that case, so report a mismatching sentinel cheaply.
  for (const auto& r : ctx.rows) {
    bool zero = true;
    for (int j = 0; j < a.d; ++j)
      if (r[j] != 0) {
        zero = false;
        break;
      }
    if (zero) return {{-1, 0}};
  }
  auto flats = closure_flats(ctx);
  std::vector<std::pair<int, uint64_t>> sig;
  sig.reserve(flats.size());
  for (const auto& f : flats) sig.emplace_back(a.d - f.dim, f.mask);
  std::sort(sig.begin(), sig.end());
  return sig;
}

}  // namespace

bool is_good_prime(const Arrangement& a, int64_t p) {
  if (!is_prime(p)) throw InvalidSpec("is_good_prime expects a prime modulus");
  auto rows = integer_rows(a);
  IntersectionPoset qposet = build_poset(a);
  return fp_signature(a, rows, p) == poset_signature(qposet);
}

long long count_complement_points(const Arrangement& a, int64_t p, long long max_points) {
  long long total = 1;
  for (int j = 0; j < a.d; ++j) {
    if (total > max_points / p)
      throw DimensionTooLarge("p^d exceeds the point budget");
    total *= p;
  }
  auto rows = integer_rows(a);
  int n = a.n(), d = a.d;
  std::vector<std::vector<int64_t>> m(n, std::vector<int64_t>(d + 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= d; ++j) m[i][j] = mod_norm(rows[i][j], p);

  // last_col[i]: the last coordinate with a nonzero coefficient; after that
  // coordinate is assigned the row is decided.
  std::vector<int> last_col(n, -1);
  long long count = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = d - 1; j >= 0; --j)
      if (m[i][j] != 0) {
        last_col[i] = j;
        break;
      }
    if (last_col[i] < 0) {
      // Normal vanishes mod p: the "hyperplane" is everything or nothing.
      if (m[i][d] == 0) return 0;  // covers all of F_p^d
      // else: empty mod p, never hit; drop it by giving it no influence
    }
  }

  // DFS over coordinates with per-depth active row lists and partial sums.
  std::vector<std::vector<int>> active(d + 1);
  for (int i = 0; i < n; ++i)
    if (last_col[i] >= 0) active[0].push_back(i);
  std::vector<int64_t> partial(n, 0);

  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == d) {
      ++count;  // every active row was decided at its last column
      return;
    }
    for (int64_t x = 0; x < p; ++x) {
      bool on_hyperplane = false;
      std::vector<int>& next = active[depth + 1];
      next.clear();
      for (int i : active[depth]) {
        int64_t v = (partial[i] + m[i][depth] * x) % p;
        if (depth == last_col[i]) {
          if (v == m[i][d]) {
            on_hyperplane = true;
            break;
          }
        } else {
          next.push_back(i);
        }
      }
      if (on_hyperplane) continue;
      for (int i : active[depth + 1]) partial[i] = (partial[i] + m[i][depth] * x) % p;
      self(self, depth + 1);
      for (int i : active[depth + 1]) partial[i] = (partial[i] - m[i][depth] * x % p + p) % p;
    }
  };
  if (d == 0) {
    count = 1;
    for (int i = 0; i < n; ++i)
      if (last_col[i] < 0 && m[i][d] == 0) count = 0;
  } else {
    rec(rec, 0);
  }
  return count;
}

std::vector<int64_t> smallest_good_primes(const Arrangement& a, int count, long long max_points) {
  auto rows = integer_rows(a);
  Int maxc(0);
  for (const auto& row : rows)
    for (const Int& v : row) maxc = std::max(maxc, Int(abs(v)));
  int64_t start = std::max<int64_t>(maxc.get_si(), a.d);
  IntersectionPoset qposet = build_poset(a);
  auto qsig = poset_signature(qposet);

  std::vector<int64_t> good;
  int64_t p = start;
  while (static_cast<int>(good.size()) < count) {
    p = next_prime_after(p);
    long long total = 1;
    bool fits = true;
    for (int j = 0; j < a.d; ++j) {
      if (total > max_points / p) {
        fits = false;
        break;
      }
      total *= p;
    }
    if (!fits) break;  // primes only grow; nothing further can fit
    if (fp_signature(a, rows, p) == qsig) good.push_back(p);
  }
  return good;
}

Poly chi_via_finite_field(const Arrangement& a, long long max_points, int threads) {
  int needed = a.d + 1;
  std::vector<int64_t> primes = smallest_good_primes(a, needed, max_points);
  if (static_cast<int>(primes.size()) < needed)
    throw BudgetExceeded("not enough good primes within the point budget");

  std::vector<long long> counts(primes.size(), 0);
  if (threads <= 1) {
    for (size_t i = 0; i < primes.size(); ++i)
      counts[i] = count_complement_points(a, primes[i], max_points);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    std::atomic<size_t> cursor{0};
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        try {
          for (size_t i = cursor.fetch_add(1); i < primes.size(); i = cursor.fetch_add(1))
            counts[i] = count_complement_points(a, primes[i], max_points);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  std::vector<std::pair<Rat, Rat>> pts;
  pts.reserve(primes.size());
  for (size_t i = 0; i < primes.size(); ++i)
    pts.emplace_back(Rat(static_cast<long>(primes[i])), Rat(static_cast<long>(counts[i])));
  return poly_interpolate(pts, a.d);
}

}  // namespace hyperarr
