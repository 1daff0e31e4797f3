#include "sepcodes/finite_field.hpp"

#include <algorithm>
#include <string>

namespace sepcodes {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<PrimePower> prime_power_decompose(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  std::uint32_t m = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) return std::nullopt;
  return PrimePower{static_cast<std::uint32_t>(p), m};
}

namespace {

using Poly = std::vector<std::uint32_t>;  // over GF(p), constant first

int deg(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    if (f[i] != 0) return i;
  }
  return -1;
}

// remainder of a mod b over GF(p); b monic
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  const int db = deg(b);
  for (int da = deg(a); da >= db; da = deg(a)) {
    const std::uint32_t c = a[da];
    for (int i = 0; i <= db; ++i) {
      std::uint32_t t = a[da - db + i] + p - (c * b[i]) % p;
      a[da - db + i] = t % p;
    }
  }
  return a;
}

bool divides(const Poly& d, const Poly& f, std::uint32_t p) {
  return deg(poly_mod(f, d, p)) < 0;
}

// exhaustive factor search: no monic divisor of degree 1..m/2
bool is_irreducible(const Poly& f, std::uint32_t p) {
  const int m = deg(f);
  for (int t = 1; 2 * t <= m; ++t) {
    // all monic polynomials of degree t
    std::vector<std::uint32_t> c(t, 0);
    while (true) {
      Poly d(c.begin(), c.end());
      d.push_back(1);
      if (divides(d, f, p)) return false;
      int i = 0;
      while (i < t && ++c[i] == p) c[i++] = 0;
      if (i == t) break;
    }
  }
  return true;
}

}  // namespace

std::vector<std::uint32_t> FiniteField::digits(Felem a) const {
  std::vector<std::uint32_t> d(spec_.m);
  for (std::uint32_t i = 0; i < spec_.m; ++i) {
    d[i] = a % spec_.p;
    a /= spec_.p;
  }
  return d;
}

Felem FiniteField::from_digits(const std::vector<std::uint32_t>& d) const {
  Felem a = 0;
  for (std::uint32_t i = spec_.m; i-- > 0;) a = a * spec_.p + d[i] % spec_.p;
  return a;
}

Felem FiniteField::add(Felem a, Felem b) const {
  if (spec_.m == 1) return (a + b) % spec_.p;
  Felem r = 0;
  Felem scale = 1;
  for (std::uint32_t i = 0; i < spec_.m; ++i) {
    r += ((a % spec_.p) + (b % spec_.p)) % spec_.p * scale;
    a /= spec_.p;
    b /= spec_.p;
    scale *= spec_.p;
  }
  return r;
}

Felem FiniteField::neg(Felem a) const {
  if (spec_.m == 1) return (spec_.p - a) % spec_.p;
  Felem r = 0;
  Felem scale = 1;
  for (std::uint32_t i = 0; i < spec_.m; ++i) {
    r += (spec_.p - (a % spec_.p)) % spec_.p * scale;
    a /= spec_.p;
    scale *= spec_.p;
  }
  return r;
}

Felem FiniteField::mul_raw(Felem a, Felem b) const {
  if (spec_.m == 1) {
    return static_cast<Felem>((static_cast<std::uint64_t>(a) * b) % spec_.p);
  }
  const auto da = digits(a);
  const auto db = digits(b);
  Poly prod(2 * spec_.m - 1, 0);
  for (std::uint32_t i = 0; i < spec_.m; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < spec_.m; ++j) {
      prod[i + j] = (prod[i + j] + da[i] * db[j]) % spec_.p;
    }
  }
  Poly rem = poly_mod(std::move(prod), spec_.reduction, spec_.p);
  rem.resize(spec_.m, 0);
  return from_digits(rem);
}

Felem FiniteField::mul(Felem a, Felem b) const {
  if (a == 0 || b == 0) return 0;
  const std::uint64_t n = spec_.q - 1;
  return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % n];
}

Felem FiniteField::inv(Felem a) const {
  if (a == 0) throw DivisionByZero("inv(0) in GF(" + std::to_string(spec_.q) + ")");
  const std::uint64_t n = spec_.q - 1;
  return exp_[(n - log_[a]) % n];
}

Felem FiniteField::pow(Felem x, std::uint64_t e) const {
  if (x == 0) return e == 0 ? 1 : 0;
  const std::uint64_t n = spec_.q - 1;
  return exp_[(static_cast<std::uint64_t>(log_[x]) * (e % n)) % n];
}

std::uint32_t FiniteField::log_of(Felem x) const {
  if (x == 0) throw DivisionByZero("log of 0");
  return log_[x];
}

std::uint64_t FiniteField::element_order(Felem x) const {
  if (x == 0) throw DivisionByZero("order of 0");
  const std::uint64_t n = spec_.q - 1;
  const std::uint64_t l = log_[x];
  // order = n / gcd(n, log)
  std::uint64_t a = n, b = l;
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return n / a;
}

Felem FiniteField::eval_poly(std::span<const Felem> f, Felem x) const {
  Felem r = 0;
  for (std::size_t i = f.size(); i-- > 0;) r = add(mul(r, x), f[i]);
  return r;
}

FiniteField construct_field(std::uint32_t q) {
  if (q < 2) throw NotPrimePower(std::to_string(q) + " is not a prime power");
  const auto pp = prime_power_decompose(q);
  if (!pp) throw NotPrimePower(std::to_string(q) + " is not a prime power");

  FiniteField field;
  field.spec_.p = pp->p;
  field.spec_.m = pp->m;
  field.spec_.q = q;

  if (pp->m == 1) {
    field.spec_.reduction = {0, 1};  // x - 0 placeholder, arithmetic mod p
  } else {
    // smallest monic irreducible of degree m, candidates ordered by the
    // base-p integer encoding of the coefficient vector (constant digit
    // least significant); for GF(8) this picks x^3+x+1
    bool found = false;
    std::uint64_t limit = 1;
    for (std::uint32_t i = 0; i < pp->m; ++i) limit *= pp->p;
    for (std::uint64_t idx = 0; idx < limit; ++idx) {
      Poly f(pp->m + 1, 0);
      std::uint64_t v = idx;
      for (std::uint32_t i = 0; i < pp->m; ++i) {
        f[i] = static_cast<std::uint32_t>(v % pp->p);
        v /= pp->p;
      }
      f[pp->m] = 1;
      if (is_irreducible(f, pp->p)) {
        field.spec_.reduction = f;
        found = true;
        break;
      }
    }
    if (!found) {
      throw NotPrimePower("no irreducible polynomial found for q = " +
                          std::to_string(q));  // unreachable for prime powers
    }
  }

  // find alpha: smallest-index element of multiplicative order q-1
  const std::uint64_t n = q - 1;
  std::vector<std::uint64_t> prime_factors;
  {
    std::uint64_t rest = n;
    for (std::uint64_t d = 2; d * d <= rest; ++d) {
      if (rest % d == 0) {
        prime_factors.push_back(d);
        while (rest % d == 0) rest /= d;
      }
    }
    if (rest > 1) prime_factors.push_back(rest);
  }
  auto pow_raw = [&field](Felem x, std::uint64_t e) {
    Felem r = 1;
    while (e > 0) {
      if (e & 1) r = field.mul_raw(r, x);
      x = field.mul_raw(x, x);
      e >>= 1;
    }
    return r;
  };
  Felem alpha = 1;  // GF(2): alpha = 1 has order 1 = q-1
  for (Felem cand = 2; cand < q; ++cand) {
    bool generates = true;
    for (const std::uint64_t r : prime_factors) {
      if (pow_raw(cand, n / r) == 1) {
        generates = false;
        break;
      }
    }
    if (generates) {
      alpha = cand;
      break;
    }
  }
  field.alpha_ = alpha;

  field.exp_.resize(n);
  field.log_.assign(q, 0);
  Felem x = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    field.exp_[i] = x;
    field.log_[x] = static_cast<std::uint32_t>(i);
    x = field.mul_raw(x, alpha);
  }
  return field;
}

std::vector<Felem> image_of_poly(const FiniteField& field,
                                 std::span<const Felem> f, EvalDomain domain) {
  if (poly_degree(f) < 0) throw BadParameters("image of the zero polynomial");
  std::vector<Felem> image;
  const Felem start = domain == EvalDomain::kNonzero ? 1 : 0;
  for (Felem x = start; x < field.q(); ++x) {
    image.push_back(field.eval_poly(f, x));
  }
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return image;
}

std::vector<Felem> subspace_basis(const FiniteField& field,
                                  std::span<const Felem> S) {
  std::vector<Felem> sorted(S.begin(), S.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  auto contains = [&sorted](Felem x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
  };
  if (sorted.empty() || !contains(0)) {
    throw NotASubspace("subspace must contain 0");
  }
  for (const Felem a : sorted) {
    for (const Felem b : sorted) {
      if (!contains(field.add(a, b))) {
        throw NotASubspace("set not closed under addition");
      }
    }
    for (Felem c = 0; c < field.p(); ++c) {
      if (!contains(field.mul(a, c))) {
        throw NotASubspace("set not closed under GF(p)-scaling");
      }
    }
  }

  // Gaussian elimination on base-p digit vectors, ascending element order.
  std::vector<Felem> basis;
  std::vector<std::vector<std::uint32_t>> rows;  // reduced rows, digit vectors
  const std::uint32_t p = field.p();
  const std::uint32_t m = field.m();
  auto to_digits = [&](Felem a) {
    std::vector<std::uint32_t> d(m);
    for (std::uint32_t i = 0; i < m; ++i) {
      d[i] = a % p;
      a /= p;
    }
    return d;
  };
  for (const Felem s : sorted) {
    auto v = to_digits(s);
    for (const auto& row : rows) {
      // eliminate at the row's pivot
      std::uint32_t pivot = 0;
      while (pivot < m && row[pivot] == 0) ++pivot;
      if (pivot == m || v[pivot] == 0) continue;
      // v -= v[pivot] * row (row normalized to pivot 1)
      const std::uint32_t c = v[pivot];
      for (std::uint32_t i = 0; i < m; ++i) {
        v[i] = (v[i] + p * c - c * row[i] % p) % p;
      }
    }
    bool nonzero = false;
    for (const auto d : v) nonzero |= d != 0;
    if (nonzero) {
      // normalize to pivot coefficient 1
      std::uint32_t pivot = 0;
      while (v[pivot] == 0) ++pivot;
      std::uint32_t inv = 1;
      for (std::uint32_t t = 1; t < p; ++t) {
        if (t * v[pivot] % p == 1) {
          inv = t;
          break;
        }
      }
      for (std::uint32_t i = 0; i < m; ++i) v[i] = v[i] * inv % p;
      rows.push_back(v);
      basis.push_back(s);
    }
  }
  return basis;
}

Felem cyclic_generator(const FiniteField& field, std::span<const Felem> S) {
  std::vector<Felem> sorted(S.begin(), S.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  auto contains = [&sorted](Felem x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
  };
  if (sorted.empty() || contains(0) || !contains(1)) {
    throw NotASubgroup("multiplicative subgroup must contain 1 and avoid 0");
  }
  for (const Felem a : sorted) {
    for (const Felem b : sorted) {
      if (!contains(field.mul(a, b))) {
        throw NotASubgroup("set not closed under multiplication");
      }
    }
  }
  const std::uint64_t order = sorted.size();
  for (const Felem g : sorted) {
    if (field.element_order(g) == order) return g;
  }
  throw NotASubgroup("no generator found");  // unreachable for true subgroups
}

std::vector<Felem> subspace_span(const FiniteField& field,
                                 std::span<const Felem> basis) {
  std::vector<Felem> span{0};
  for (const Felem b : basis) {
    std::vector<Felem> next;
    next.reserve(span.size() * field.p());
    for (std::uint32_t c = 0; c < field.p(); ++c) {
      const Felem cb = field.mul(b, c);
      for (const Felem s : span) next.push_back(field.add(s, cb));
    }
    span = std::move(next);
  }
  std::sort(span.begin(), span.end());
  span.erase(std::unique(span.begin(), span.end()), span.end());
  return span;
}

namespace {

std::vector<Felem> combine(const FiniteField& field, std::span<const Felem> A,
                           std::span<const Felem> B, bool multiplicative) {
  std::vector<Felem> out;
  out.reserve(A.size() * B.size());
  for (const Felem a : A) {
    for (const Felem b : B) {
      out.push_back(multiplicative ? field.mul(a, b) : field.add(a, b));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<Felem> sumset(const FiniteField& field, std::span<const Felem> A,
                          std::span<const Felem> B) {
  return combine(field, A, B, false);
}

std::vector<Felem> prodset(const FiniteField& field, std::span<const Felem> A,
                           std::span<const Felem> B) {
  return combine(field, A, B, true);
}

int poly_degree(std::span<const Felem> f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    if (f[i] != 0) return i;
  }
  return -1;
}

}  // namespace sepcodes
