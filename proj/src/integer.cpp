#include "sgmtopo/integer.hpp"

#include <algorithm>
#include <cctype>

#include "sgmtopo/errors.hpp"

namespace sgmtopo {

std::string to_string(const Integer& value) { return value.get_str(10); }

Integer parse_integer(std::string_view text) {
  std::string s(text);
  s.erase(0, s.find_first_not_of(" \t\n"));
  s.erase(s.find_last_not_of(" \t\n") + 1);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size() ||
      !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                   [](unsigned char c) { return std::isdigit(c) != 0; })) {
    throw InvalidInput("not an integer: '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer mod_floor(const Integer& a, const Integer& b) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

// Brent's variant of Pollard rho; n is composite and odd.
Integer pollard_brent(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1;
    constexpr unsigned long kBatch = 64;
    auto step = [&](const Integer& v) {
      Integer w = v * v + c;
      return mod_floor(w, n);
    };
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(kBatch, r - k); ++i) {
          y = step(y);
          q = mod_floor(q * abs(x - y), n);
        }
        g = gcd(q, n);
        k += kBatch;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = step(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Integer d = pollard_brent(n);
  factor_into(d, out);
  factor_into(Integer(n / d), out);
}

}  // namespace

std::map<Integer, unsigned> factorize(const Integer& n) {
  if (n == 0) throw InvalidInput("cannot factorize 0");
  std::map<Integer, unsigned> out;
  Integer rest = abs(n);
  for (unsigned long p = 2; p < 10000 && rest > 1; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      ++out[Integer(p)];
      rest /= p;
    }
  }
  factor_into(rest, out);
  return out;
}

bool fits_int64(const Integer& value, std::int64_t& out) {
  if (!value.fits_slong_p()) return false;
  out = value.get_si();
  return true;
}

}  // namespace sgmtopo
