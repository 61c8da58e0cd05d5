#include "cyclo.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace qgt {

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

unsigned long lcm_ul(unsigned long a, unsigned long b) {
  return a / std::gcd(a, b) * b;
}

namespace {

// Exact division of integer polynomials, used to build Phi_n from x^n - 1.
std::vector<Int> poly_divide_exact(std::vector<Int> num, const std::vector<Int>& den) {
  std::vector<Int> q(num.size() - den.size() + 1, Int(0));
  for (size_t i = q.size(); i-- > 0;) {
    Int c = num[i + den.size() - 1] / den.back();
    q[i] = c;
    if (c != 0)
      for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  return q;
}

std::map<unsigned long, std::vector<Int>> g_phi_cache;
std::mutex g_phi_mutex;

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(unsigned long n) {
  std::lock_guard<std::mutex> lock(g_phi_mutex);
  auto it = g_phi_cache.find(n);
  if (it != g_phi_cache.end()) return it->second;

  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed recursively
  // without the lock re-entrancy (we inline the recursion via a worklist).
  std::vector<unsigned long> todo{n};
  while (!todo.empty()) {
    unsigned long m = todo.back();
    if (g_phi_cache.count(m)) {
      todo.pop_back();
      continue;
    }
    bool ready = true;
    for (unsigned long d = 1; d * d <= m; ++d) {
      if (m % d) continue;
      for (unsigned long dd : {d, m / d}) {
        if (dd < m && !g_phi_cache.count(dd)) {
          todo.push_back(dd);
          ready = false;
        }
      }
    }
    if (!ready) continue;
    todo.pop_back();
    std::vector<Int> num(m + 1, Int(0));
    num[0] = -1;
    num[m] = 1;
    for (unsigned long d = 1; d <= m / 2; ++d)
      if (m % d == 0) num = poly_divide_exact(std::move(num), g_phi_cache[d]);
    g_phi_cache[m] = std::move(num);
  }
  return g_phi_cache[n];
}

namespace {

// Reduce a rational polynomial modulo Phi_n; result has degree < phi(n).
std::vector<Rat> reduce_mod_phi(std::vector<Rat> poly, unsigned long n) {
  const std::vector<Int>& phi = cyclotomic_polynomial(n);
  size_t deg = phi.size() - 1;
  if (poly.size() < deg) poly.resize(deg, Rat(0));
  for (size_t i = poly.size(); i-- > deg;) {
    Rat c = poly[i];
    if (c != 0) {
      for (size_t j = 0; j < deg; ++j) poly[i - deg + j] -= c * Rat(phi[j]);
      poly[i] = 0;
    }
  }
  poly.resize(deg);
  for (auto& r : poly) r.canonicalize();
  return poly;
}

unsigned long normalize_conductor(unsigned long n) {
  return (n % 4 == 2) ? n / 2 : n;
}

}  // namespace

Cyclo::Cyclo(long num, long den) : n_(1), c_(1) {
  if (den == 0) throw input_error("rational with zero denominator");
  c_[0] = Rat(num, den);
  c_[0].canonicalize();
}

void Cyclo::canon_() {
  for (auto& r : c_) r.canonicalize();
}

Cyclo Cyclo::from_poly_(unsigned long n, std::vector<Rat> poly) {
  Cyclo x;
  x.n_ = n;
  x.c_ = reduce_mod_phi(std::move(poly), n);
  return x;
}

Cyclo Cyclo::root_of_unity(unsigned long n, long k) {
  if (n == 0) throw input_error("root of unity needs positive order");
  long kk = k % static_cast<long>(n);
  if (kk < 0) kk += static_cast<long>(n);
  unsigned long g = std::gcd(n, static_cast<unsigned long>(kk == 0 ? n : kk));
  unsigned long m = n / g;
  unsigned long e = static_cast<unsigned long>(kk) / g;  // zeta_m^e, primitive
  bool negate = false;
  if (m % 4 == 2) {
    // zeta_{2m'} = -zeta_{m'}^{(m'+1)/2} for odd m'
    unsigned long mp = m / 2;
    unsigned long ep = (e * ((mp + 1) / 2)) % mp;
    negate = (e % 2 == 1);
    m = mp;
    e = ep;
  }
  std::vector<Rat> poly(e + 1, Rat(0));
  poly[e] = negate ? Rat(-1) : Rat(1);
  return from_poly_(m, std::move(poly));
}

bool Cyclo::is_zero() const {
  for (const auto& r : c_)
    if (r != 0) return false;
  return true;
}

bool Cyclo::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat Cyclo::rational_value() const {
  if (!is_rational()) throw input_error("value is not rational");
  return c_[0];
}

Cyclo Cyclo::promoted(unsigned long m) const {
  m = normalize_conductor(m);
  if (m == n_) return *this;
  if (m % n_ != 0) throw input_error("promotion target is not a multiple of conductor");
  unsigned long step = m / n_;
  std::vector<Rat> poly(m, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) poly[i * step] += c_[i];
  return from_poly_(m, std::move(poly));
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
  unsigned long m = normalize_conductor(lcm_ul(n_, o.n_));
  Cyclo a = promoted(m), b = o.promoted(m);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  a.canon_();
  return a;
}

Cyclo Cyclo::operator-(const Cyclo& o) const { return *this + (-o); }

Cyclo Cyclo::operator-() const {
  Cyclo a = *this;
  for (auto& r : a.c_) r = -r;
  return a;
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
  unsigned long m = normalize_conductor(lcm_ul(n_, o.n_));
  Cyclo a = promoted(m), b = o.promoted(m);
  std::vector<Rat> poly(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      poly[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return from_poly_(m, std::move(poly));
}

bool Cyclo::operator==(const Cyclo& o) const {
  unsigned long m = normalize_conductor(lcm_ul(n_, o.n_));
  Cyclo a = promoted(m), b = o.promoted(m);
  return a.c_ == b.c_;
}

Cyclo Cyclo::galois(unsigned long a) const {
  a %= n_;
  if (std::gcd(a, n_) != 1) throw input_error("galois exponent not coprime to conductor");
  std::vector<Rat> poly(n_, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) poly[(i * a) % n_] += c_[i];
  return from_poly_(n_, std::move(poly));
}

Cyclo Cyclo::conj() const {
  if (n_ == 1) return *this;
  return galois(n_ - 1);
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw input_error("division by zero");
  if (is_rational()) return Cyclo(Rat(1) / c_[0]);
  // Solve (this) * y = 1 in the power basis by Gaussian elimination on the
  // multiplication-by-this matrix.
  size_t d = c_.size();
  // columns: this * z^j reduced
  std::vector<std::vector<Rat>> m(d, std::vector<Rat>(d + 1, Rat(0)));
  for (size_t j = 0; j < d; ++j) {
    std::vector<Rat> poly(j + d, Rat(0));
    for (size_t i = 0; i < d; ++i) poly[i + j] = c_[i];
    auto col = reduce_mod_phi(std::move(poly), n_);
    for (size_t i = 0; i < d; ++i) m[i][j] = col[i];
  }
  m[0][d] = 1;
  // forward elimination with partial pivoting by first nonzero
  size_t row = 0;
  std::vector<size_t> pivot_col;
  for (size_t col = 0; col < d && row < d; ++col) {
    size_t pr = row;
    while (pr < d && m[pr][col] == 0) ++pr;
    if (pr == d) continue;
    std::swap(m[pr], m[row]);
    Rat inv = Rat(1) / m[row][col];
    for (size_t j = col; j <= d; ++j) m[row][j] *= inv;
    for (size_t i = 0; i < d; ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (size_t j = col; j <= d; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<Rat> y(d, Rat(0));
  for (size_t r = 0; r < pivot_col.size(); ++r) y[pivot_col[r]] = m[r][d];
  Cyclo out;
  out.n_ = n_;
  out.c_ = std::move(y);
  out.canon_();
  if (!((*this * out) == Cyclo(1L))) throw input_error("inverse self-check failed");
  return out;
}

std::complex<double> Cyclo::to_complex() const {
  std::complex<double> z = std::polar(1.0, 2.0 * M_PI / static_cast<double>(n_));
  std::complex<double> acc(0.0, 0.0), p(1.0, 0.0);
  for (const auto& r : c_) {
    acc += r.get_d() * p;
    p *= z;
  }
  return acc;
}

Cyclo Cyclo::sqrt_int(unsigned long N) {
  if (N == 0) return Cyclo(0L);
  // Split off the square part, then build the square root of the squarefree
  // remainder from prime Gauss sums.
  unsigned long square = 1, rest = 1, n = N;
  for (unsigned long p = 2; p * p <= n; ++p) {
    unsigned long e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (unsigned long i = 0; i + 1 < e; i += 2) square *= p;
    if (e % 2) rest *= p;
  }
  if (n > 1) rest *= n;

  Cyclo s(static_cast<long>(square));
  unsigned long r = rest;
  if (r % 2 == 0) {
    s *= Cyclo::root_of_unity(8, 1) + Cyclo::root_of_unity(8, -1);  // sqrt(2)
    r /= 2;
  }
  for (unsigned long p = 3; p <= r; p += 2) {
    if (r % p) continue;
    r /= p;
    // Quadratic Gauss sum: sum_k zeta_p^{k^2} equals sqrt(p) for p = 1 (4)
    // and i*sqrt(p) for p = 3 (4). We do not trust the sign: see the
    // self-check below.
    Cyclo g(0L);
    for (unsigned long k = 0; k < p; ++k) g += Cyclo::root_of_unity(p, static_cast<long>((k * k) % p));
    if (p % 4 == 3) g *= Cyclo::root_of_unity(4, -1);  // divide by i
    s *= g;
  }
  if (!((s * s) == Cyclo(static_cast<long>(N))))
    throw input_error("sqrt_int self-check failed");
  if (s.to_complex().real() < 0) s = -s;
  // The shadow only picks between +sqrt(N) and -sqrt(N), values at distance
  // 2*sqrt(N) >= 2 apart; re-verify the square regardless.
  if (!((s * s) == Cyclo(static_cast<long>(N))))
    throw input_error("sqrt_int sign-check failed");
  return s;
}

std::string Cyclo::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rat a = c_[i];
    if (!first)
      os << (a < 0 ? " - " : " + ");
    else if (a < 0)
      os << "-";
    first = false;
    Rat mag = abs(a);
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "z(" << n_ << "," << i << ")";
    }
  }
  return os.str();
}

namespace {

struct ScalarParser {
  const std::string& s;
  size_t pos = 0;

  explicit ScalarParser(const std::string& str) : s(str) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw input_error("scalar parse error at offset " + std::to_string(pos) + ": " + why);
  }

  long parse_integer() {
    skip_ws();
    bool neg = eat('-');
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected integer");
    long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      ++pos;
    }
    return neg ? -v : v;
  }

  Cyclo parse_atom() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input");
    if (eat('(')) {
      Cyclo e = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (s.compare(pos, 5, "sqrt(") == 0) {
      pos += 5;
      long n = parse_integer();
      if (n < 0) fail("sqrt of negative integer");
      if (!eat(')')) fail("expected ')' after sqrt");
      return Cyclo::sqrt_int(static_cast<unsigned long>(n));
    }
    if (s[pos] == 'z' && pos + 1 < s.size() && s[pos + 1] == '(') {
      pos += 2;
      long n = parse_integer();
      if (!eat(',')) fail("expected ',' in z(n,k)");
      long k = parse_integer();
      if (!eat(')')) fail("expected ')' in z(n,k)");
      if (n <= 0) fail("z(n,k) needs n >= 1");
      return Cyclo::root_of_unity(static_cast<unsigned long>(n), k);
    }
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      long num = parse_integer();
      skip_ws();
      if (pos < s.size() && s[pos] == '/') {
        // peek: allow p/q rationals but leave binary '/' for non-digit RHS
        size_t save = pos;
        ++pos;
        skip_ws();
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
          long den = parse_integer();
          if (den == 0) fail("zero denominator");
          return Cyclo(num, den);
        }
        pos = save;
      }
      return Cyclo(num);
    }
    fail("unrecognized token");
  }

  Cyclo parse_factor() {
    skip_ws();
    if (eat('-')) return -parse_factor();
    return parse_atom();
  }

  Cyclo parse_term() {
    Cyclo acc = parse_factor();
    for (;;) {
      skip_ws();
      if (eat('*')) {
        acc *= parse_factor();
      } else if (eat('/')) {
        acc *= parse_factor().inverse();
      } else {
        return acc;
      }
    }
  }

  Cyclo parse_expr() {
    Cyclo acc = parse_term();
    for (;;) {
      skip_ws();
      if (eat('+'))
        acc += parse_term();
      else if (eat('-'))
        acc = acc - parse_term();
      else
        return acc;
    }
  }
};

}  // namespace

Cyclo Cyclo::parse(const std::string& text) {
  ScalarParser p(text);
  Cyclo v = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return v;
}

}  // namespace qgt
