#include "sos/fq_poly.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "sos/arith.hpp"
#include "sos/error.hpp"

namespace sos {

namespace {

// Total order on reduced residues: by degree, then coefficients from the top.
bool rep_less(const FqField::Rep& a, const FqField::Rep& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  }
  return false;
}

}  // namespace

bool operator<(const FqPoly& a, const FqPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const auto& x = a.c_[static_cast<size_t>(i)];
    const auto& y = b.c_[static_cast<size_t>(i)];
    if (x != y) return rep_less(x, y);
  }
  return false;
}

FqPoly FqPoly::from_zpoly(const FqField& F, const ZPoly& p) {
  std::vector<Rep> c;
  for (const auto& v : p.coeffs()) c.push_back(F.from_integer(v));
  return FqPoly(std::move(c));
}

FqPoly FqPoly::monomial(const Rep& c, int deg) {
  std::vector<Rep> v(static_cast<size_t>(deg) + 1);
  v[static_cast<size_t>(deg)] = c;
  return FqPoly(std::move(v));
}

ZPoly FqPoly::to_zpoly() const {
  std::vector<Integer> c;
  for (const auto& r : c_) c.push_back(r.coeff(0));
  return ZPoly(std::move(c));
}

namespace fq {

FqPoly add(const FqField& F, const FqPoly& a, const FqPoly& b) {
  std::vector<FqField::Rep> r(std::max(a.coeffs().size(), b.coeffs().size()));
  for (size_t i = 0; i < r.size(); ++i) r[i] = F.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return FqPoly(std::move(r));
}

FqPoly sub(const FqField& F, const FqPoly& a, const FqPoly& b) {
  std::vector<FqField::Rep> r(std::max(a.coeffs().size(), b.coeffs().size()));
  for (size_t i = 0; i < r.size(); ++i) r[i] = F.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return FqPoly(std::move(r));
}

FqPoly mul(const FqField& F, const FqPoly& a, const FqPoly& b) {
  if (a.is_zero() || b.is_zero()) return FqPoly();
  std::vector<FqField::Rep> r(a.coeffs().size() + b.coeffs().size() - 1);
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs().size(); ++j) {
      r[i + j] = F.add(r[i + j], F.mul(a.coeffs()[i], b.coeffs()[j]));
    }
  }
  return FqPoly(std::move(r));
}

FqPoly scale(const FqField& F, const FqPoly& a, const FqField::Rep& s) {
  std::vector<FqField::Rep> r;
  for (const auto& c : a.coeffs()) r.push_back(F.mul(c, s));
  return FqPoly(std::move(r));
}

std::pair<FqPoly, FqPoly> divrem(const FqField& F, const FqPoly& a, const FqPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  const int db = b.degree();
  if (a.degree() < db) return {FqPoly(), a};
  std::vector<FqField::Rep> r = a.coeffs();
  std::vector<FqField::Rep> q(static_cast<size_t>(a.degree() - db) + 1);
  const FqField::Rep inv = F.inv(b.lead());
  for (int i = a.degree(); i >= db; --i) {
    if (r[static_cast<size_t>(i)].is_zero()) continue;
    FqField::Rep coef = F.mul(r[static_cast<size_t>(i)], inv);
    q[static_cast<size_t>(i - db)] = coef;
    for (int j = 0; j <= db; ++j) {
      auto& t = r[static_cast<size_t>(i - db + j)];
      t = F.sub(t, F.mul(coef, b.coeffs()[static_cast<size_t>(j)]));
    }
  }
  return {FqPoly(std::move(q)), FqPoly(std::move(r))};
}

FqPoly rem(const FqField& F, const FqPoly& a, const FqPoly& b) { return divrem(F, a, b).second; }

FqPoly monic(const FqField& F, const FqPoly& a) {
  if (a.is_zero()) return a;
  return scale(F, a, F.inv(a.lead()));
}

FqPoly gcd(const FqField& F, const FqPoly& a, const FqPoly& b) {
  FqPoly r0 = a, r1 = b;
  while (!r1.is_zero()) {
    FqPoly r2 = rem(F, r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  return monic(F, r0);
}

FqPoly powmod(const FqField& F, const FqPoly& base, const Integer& e, const FqPoly& modulus) {
  FqPoly result = rem(F, FqPoly::constant(F.one()), modulus);
  FqPoly b = rem(F, base, modulus);
  const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return result;
  for (size_t i = bits; i-- > 0;) {
    result = rem(F, mul(F, result, result), modulus);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(F, mul(F, result, b), modulus);
  }
  return result;
}

FqPoly pow(const FqField& F, const FqPoly& base, unsigned e) {
  FqPoly result = FqPoly::constant(F.one());
  for (unsigned i = 0; i < e; ++i) result = mul(F, result, base);
  return result;
}

FqPoly derivative(const FqField& F, const FqPoly& a) {
  std::vector<FqField::Rep> r;
  for (int i = 1; i <= a.degree(); ++i) r.push_back(F.mul(F.from_integer(i), a.coeff(i)));
  return FqPoly(std::move(r));
}

FqField::Rep eval(const FqField& F, const FqPoly& a, const FqField::Rep& at) {
  FqField::Rep acc;
  for (int i = a.degree(); i >= 0; --i) acc = F.add(F.mul(acc, at), a.coeff(i));
  return acc;
}

int multiplicity(const FqField& F, const FqPoly& a, const FqPoly& P) {
  if (a.is_zero()) throw ZeroElement();
  int m = 0;
  FqPoly cur = a;
  while (true) {
    auto [q, r] = divrem(F, cur, P);
    if (!r.is_zero()) return m;
    cur = std::move(q);
    ++m;
  }
}

std::string to_string(const FqField& F, const FqPoly& a, const std::string& var) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = a.degree(); i >= 0; --i) {
    const auto& c = a.coeff(i);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string cs = F.to_string(c);
    bool compound = c.degree() >= 1;
    if (i == 0) {
      os << cs;
    } else {
      if (c != F.one()) os << (compound ? "(" + cs + ")" : cs) << "*";
      os << var;
      if (i >= 2) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace fq

namespace {

using Factors = std::vector<std::pair<FqPoly, int>>;

// a^(1/p) in F_q is a^(q/p).
FqPoly pth_root(const FqField& F, const FqPoly& f) {
  const Integer& p = F.characteristic();
  const Integer e = F.order() / p;
  std::vector<FqField::Rep> c;
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p.get_ui())) c.push_back(F.pow(f.coeff(i), e));
  return FqPoly(std::move(c));
}

void squarefree(const FqField& F, const FqPoly& f, int mult, Factors& out) {
  if (f.degree() < 1) return;
  const Integer& p = F.characteristic();
  FqPoly d = fq::derivative(F, f);
  if (d.is_zero()) {
    squarefree(F, pth_root(F, f), mult * static_cast<int>(p.get_si()), out);
    return;
  }
  FqPoly c = fq::gcd(F, f, d);
  FqPoly w = fq::divrem(F, f, c).first;
  int i = 1;
  while (w.degree() >= 1) {
    FqPoly y = fq::gcd(F, w, c);
    FqPoly z = fq::divrem(F, w, y).first;
    if (z.degree() >= 1) out.emplace_back(fq::monic(F, z), i * mult);
    ++i;
    w = y;
    c = fq::divrem(F, c, y).first;
  }
  if (c.degree() >= 1) squarefree(F, pth_root(F, c), mult * static_cast<int>(p.get_si()), out);
}

// Distinct-degree factorization of a monic squarefree f: (product, degree) pairs.
std::vector<std::pair<FqPoly, int>> distinct_degree(const FqField& F, const FqPoly& f_in) {
  std::vector<std::pair<FqPoly, int>> out;
  FqPoly f = f_in;
  FqPoly h = FqPoly::x();
  int d = 0;
  while (f.degree() >= 2 * (d + 1)) {
    ++d;
    h = fq::powmod(F, h, F.order(), f);
    FqPoly g = fq::gcd(F, fq::sub(F, h, FqPoly::x()), f);
    if (g.degree() >= 1) {
      out.emplace_back(g, d);
      f = fq::divrem(F, f, g).first;
      h = fq::rem(F, h, f);
    }
  }
  if (f.degree() >= 1) out.emplace_back(f, f.degree());
  return out;
}

Integer random_below(const Integer& q, std::mt19937_64& rng) {
  if (q.fits_ulong_p()) return Integer(std::uniform_int_distribution<unsigned long>(0, q.get_ui() - 1)(rng));
  // 64 extra bits keep the bias of the final reduction negligible
  Integer r = 0;
  const auto limbs = mpz_sizeinbase(q.get_mpz_t(), 2) / 64 + 2;
  for (std::size_t i = 0; i < limbs; ++i) {
    r <<= 64;
    r += Integer(static_cast<unsigned long>(rng()));
  }
  return mod(r, q);
}

FqPoly random_poly(const FqField& F, int deg_below, std::mt19937_64& rng) {
  std::vector<FqField::Rep> c;
  for (int i = 0; i < deg_below; ++i) c.push_back(F.element(random_below(F.order(), rng)));
  return FqPoly(std::move(c));
}

void equal_degree(const FqField& F, const FqPoly& f, int d, std::mt19937_64& rng, std::vector<FqPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const bool char2 = F.characteristic() == 2;
  const Integer qd = sos::pow(F.order(), static_cast<unsigned long>(d));
  while (true) {
    FqPoly a = random_poly(F, f.degree(), rng);
    if (a.degree() < 1) continue;
    FqPoly g = fq::gcd(F, a, f);
    if (g.degree() < 1 || g.degree() == f.degree()) {
      FqPoly b;
      if (char2) {
        // Trace to F_2: a + a^2 + a^4 + ... + a^(2^(kd-1)).
        const long steps = static_cast<long>(F.degree()) * d;
        FqPoly t = fq::rem(F, a, f);
        b = t;
        for (long i = 1; i < steps; ++i) {
          t = fq::rem(F, fq::mul(F, t, t), f);
          b = fq::add(F, b, t);
        }
      } else {
        b = fq::sub(F, fq::powmod(F, a, (qd - 1) / 2, f), FqPoly::constant(F.one()));
      }
      g = fq::gcd(F, b, f);
    }
    if (g.degree() >= 1 && g.degree() < f.degree()) {
      equal_degree(F, g, d, rng, out);
      equal_degree(F, fq::divrem(F, f, g).first, d, rng, out);
      return;
    }
  }
}

std::uint64_t poly_seed(const FqField& F, const FqPoly& f) {
  std::uint64_t h = fnv1a(kFnvOffset, F.characteristic().get_str() + "|" + to_string(F.modulus()));
  for (const auto& c : f.coeffs()) h = fnv1a(h, to_string(c) + ";");
  return h;
}

}  // namespace

FqFactorization poly_factor_fq(const FqField& F, const FqPoly& f) {
  if (f.is_zero()) throw ZeroElement();
  FqFactorization result{f.lead(), {}};
  if (f.degree() == 0) return result;
  FqPoly m = fq::monic(F, f);
  Factors sqf;
  squarefree(F, m, 1, sqf);
  std::mt19937_64 rng(poly_seed(F, m));
  std::map<FqPoly, int> acc;
  for (const auto& [part, mult] : sqf) {
    for (const auto& [prod, d] : distinct_degree(F, part)) {
      std::vector<FqPoly> irr;
      equal_degree(F, prod, d, rng, irr);
      for (auto& g : irr) acc[fq::monic(F, g)] += mult;
    }
  }
  for (auto& [g, e] : acc) result.factors.emplace_back(g, e);
  return result;
}

bool is_irreducible_fq(const FqField& F, const FqPoly& f_in) {
  if (f_in.degree() < 1) return false;
  FqPoly f = fq::monic(F, f_in);
  const int n = f.degree();
  if (n == 1) return true;
  auto x_qpow = [&](int k) {
    FqPoly h = FqPoly::x();
    for (int i = 0; i < k; ++i) h = fq::powmod(F, h, F.order(), f);
    return h;
  };
  if (!fq::rem(F, fq::sub(F, x_qpow(n), FqPoly::x()), f).is_zero()) return false;
  for (const auto& [r, e] : factor_integer(n)) {
    (void)e;
    FqPoly g = fq::gcd(F, fq::sub(F, x_qpow(n / static_cast<int>(r.get_si())), FqPoly::x()), f);
    if (g.degree() != 0) return false;
  }
  return true;
}

std::vector<FqField::Rep> roots_fq(const FqField& F, const FqPoly& f) {
  std::vector<FqField::Rep> roots;
  for (const auto& [g, e] : poly_factor_fq(F, f).factors) {
    (void)e;
    if (g.degree() == 1) roots.push_back(F.neg(g.coeff(0)));
  }
  std::sort(roots.begin(), roots.end(),
            [&](const auto& a, const auto& b) { return F.index(a) < F.index(b); });
  return roots;
}

}  // namespace sos
