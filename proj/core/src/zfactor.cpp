#include "sos/zfactor.hpp"

#include <algorithm>
#include <numeric>

#include "sos/arith.hpp"
#include "sos/error.hpp"
#include "sos/fq_poly.hpp"
#include "sos/zmod_poly.hpp"

namespace sos {

namespace {

// Yun's algorithm over Q; parts are returned primitive.
std::vector<std::pair<ZPoly, int>> squarefree_q(const ZPoly& f) {
  std::vector<std::pair<ZPoly, int>> out;
  QPoly a = to_q(f);
  QPoly b = a.derivative();
  QPoly c = gcd(a, b);
  QPoly w = divrem(a, c).first;
  QPoly y = divrem(b, c).first;
  int i = 1;
  while (w.degree() >= 1) {
    QPoly z = y - w.derivative();
    QPoly g = gcd(w, z);
    if (g.degree() >= 1) out.emplace_back(primitive_part(g), i);
    w = divrem(w, g).first;
    y = divrem(z, g).first;
    ++i;
  }
  return out;
}

ZPoly symmetric(const ZPoly& a, const Integer& m) {
  std::vector<Integer> c;
  for (const auto& v : a.coeffs()) c.push_back(mod_symmetric(v, m));
  return ZPoly(std::move(c));
}

void combinations(size_t n, size_t k, size_t start, std::vector<size_t>& cur,
                  std::vector<std::vector<size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (size_t i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<ZPoly> factor_squarefree(const ZPoly& f_in) {
  ZPoly f = primitive_part(f_in);
  if (f.degree() <= 1) return {f};

  Integer p = 3;
  FqField Fp = FqField::prime(p);
  FqPoly fbar;
  for (;; p = next_prime(p + 1)) {
    if (f.lead() % p == 0) continue;
    Fp = FqField::prime(p);
    fbar = FqPoly::from_zpoly(Fp, f);
    if (fq::gcd(Fp, fbar, fq::derivative(Fp, fbar)).degree() == 0) break;
  }
  std::vector<ZPoly> modp;
  for (const auto& [g, e] : poly_factor_fq(Fp, fbar).factors) {
    (void)e;
    modp.push_back(g.to_zpoly());
  }
  if (modp.size() == 1) return {f};

  Integer norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  const Integer bound = 2 * abs(f.lead()) * pow(Integer(2), static_cast<unsigned long>(f.degree())) *
                        (isqrt(norm2) + 1);
  unsigned k = 1;
  Integer pk = p;
  while (pk <= bound) {
    pk *= p;
    ++k;
  }
  std::vector<ZPoly> lifted = zmod::hensel_lift(f, modp, p, k);

  std::vector<ZPoly> found;
  std::vector<size_t> alive(lifted.size());
  std::iota(alive.begin(), alive.end(), 0);
  size_t s = 1;
  while (2 * s <= alive.size()) {
    std::vector<std::vector<size_t>> subsets;
    std::vector<size_t> cur;
    combinations(alive.size(), s, 0, cur, subsets);
    bool hit = false;
    for (const auto& sub : subsets) {
      ZPoly g = ZPoly::constant(f.lead());
      for (size_t idx : sub) g = zmod::mul(g, lifted[alive[idx]], pk);
      g = primitive_part(symmetric(g, pk));
      if (divides(g, f)) {
        found.push_back(g);
        f = exact_div(f, g);
        std::vector<size_t> rest;
        for (size_t i = 0; i < alive.size(); ++i) {
          if (std::find(sub.begin(), sub.end(), i) == sub.end()) rest.push_back(alive[i]);
        }
        alive = std::move(rest);
        hit = true;
        break;
      }
    }
    if (!hit) ++s;
  }
  if (f.degree() >= 1) found.push_back(primitive_part(f));
  return found;
}

}  // namespace

ZFactorization poly_factor_z(const ZPoly& f) {
  if (f.is_zero()) throw ZeroElement();
  ZFactorization out;
  out.content = content(f);
  if (f.lead() < 0) out.content = -out.content;
  if (f.degree() == 0) return out;
  for (const auto& [part, mult] : squarefree_q(f)) {
    for (const auto& g : factor_squarefree(part)) out.factors.emplace_back(g, mult);
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return a.first.coeffs() < b.first.coeffs();
  });
  return out;
}

bool is_irreducible_z(const ZPoly& f) {
  if (f.degree() < 1) return false;
  auto fac = poly_factor_z(f);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

}  // namespace sos
