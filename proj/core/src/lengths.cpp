#include "sos/lengths.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sos/arith.hpp"
#include "sos/error.hpp"
#include "sos/global_square.hpp"

namespace sos {

namespace {

int checked(int local) {
  // u-invariant of a non-archimedean completion is 4
  if (local < 1 || local > 4) throw std::logic_error("local length out of range: " + std::to_string(local));
  return local;
}

int odd_valuation_length(const Integer& residue_order) {
  // <1,1> is isotropic over F_q iff q = 1 mod 4
  return mod(residue_order, 4) == 1 ? 2 : 3;
}

std::vector<Integer> odd_primes_dividing(const NFElem& a) {
  auto [b, c] = a.denominator_clear();
  const Integer nb = a.field().from_coords(std::vector<Rational>(b.begin(), b.end())).norm().get_num();
  std::set<Integer> ps;
  for (const Integer& n : {nb, Integer(c)})
    if (abs(n) > 1)
      for (const auto& [p, e] : factor_integer(n))
        if (p != 2) ps.insert(p);
  return {ps.begin(), ps.end()};
}

}  // namespace

std::string length_to_string(int length) {
  return length == kInfiniteLength ? "infinity" : std::to_string(length);
}

std::string place_name(const PrimeIdealNF& P) {
  return P.to_string(P.field().was_normalized() ? "theta" : "a");
}

std::string place_name(const RealEmbedding& rho) { return "real[" + std::to_string(rho.index) + "]"; }

int local_length_nondyadic(const NFElem& a, const PrimeIdealNF& P) {
  if (P.is_dyadic()) throw std::invalid_argument("local_length_nondyadic: dyadic prime");
  if (valuation(a, P) % 2 != 0) return checked(odd_valuation_length(P.residue_order()));
  return checked(is_local_square_nondyadic(a, P) ? 1 : 2);
}

int local_length_nondyadic(const FFElem& a, const PlaceFF& pl) {
  if (valuation_ff(a, pl) % 2 != 0) return checked(odd_valuation_length(pl.residue_order(a.field())));
  return checked(is_local_square_ff(a, pl) ? 1 : 2);
}

int local_length_dyadic(const NFElem& a, const DyadicCompletion& D) {
  if (is_local_square_dyadic(a, D)) return 1;
  if (sum_of_two_squares_dyadic(a, D)) return 2;
  // a sum of three squares unless (-1,-1) = -1 and -a is a square
  if (minus_one_minus_one_dyadic(D) == 1 || !is_local_square_dyadic(-a, D)) return 3;
  return checked(4);
}

int local_length_real(const NFElem& a, const RealEmbedding& rho) {
  return sign_at(a, rho) > 0 ? 1 : kInfiniteLength;
}

LengthResult length_nf(const NFElem& a, const LengthOptions& opts) {
  if (a.is_zero()) throw ZeroElement();
  const NumberField& K = a.field();
  LengthResult res;
  for (const auto& rho : K.real_embeddings()) {
    if (local_length_real(a, rho) == kInfiniteLength) {
      res.length = kInfiniteLength;
      res.certificate.real_witness = rho.index;
      res.certificate.entries.push_back({place_name(rho), 1, 1, kInfiniteLength});
      return res;
    }
  }
  auto sq = is_square_global(a);
  if (sq.is_square) {
    res.length = 1;
    res.certificate.root = sq.root;
    return res;
  }
  res.certificate.baseline_two = true;
  int best = 2;
  for (const auto& P : split_prime(K, 2)) {
    const int l = local_length_dyadic(a, dyadic_completion(P, opts.dyadic_precision));
    res.certificate.entries.push_back({place_name(P), P.e(), P.f_deg(), l});
    best = std::max(best, l);
    if (l == 4) {
      res.length = 4;
      return res;
    }
  }
  for (const Integer& p : odd_primes_dividing(a)) {
    for (const auto& P : split_prime(K, p)) {
      if (valuation(a, P) == 0) continue;
      const int l = local_length_nondyadic(a, P);
      res.certificate.entries.push_back({place_name(P), P.e(), P.f_deg(), l});
      best = std::max(best, l);
      if (l == 3) {
        res.length = 3;
        return res;
      }
    }
  }
  res.length = best;
  return res;
}

LengthResult length_ff(const FFElem& a) {
  if (a.is_zero()) throw ZeroElement();
  LengthResult res;
  if (is_square_global_ff(a)) {
    res.length = 1;
    return res;
  }
  res.certificate.baseline_two = true;
  int best = 2;
  for (const auto& pl : places_dividing(a)) {
    const int l = local_length_nondyadic(a, pl);
    res.certificate.entries.push_back({pl.to_string(a.field()), 1, pl.degree(), l});
    best = std::max(best, l);
    if (l == 3) break;
  }
  res.length = best;
  return res;
}

int pythagoras_number_nf(const NumberField& K) {
  if (is_minus_one_square(K)) return 2;
  for (const auto& P : split_prime(K, 2))
    if (P.degree() % 2 != 0) return 4;
  return 3;
}

int pythagoras_number_ff(const FunctionField& K) { return mod(K.q(), 4) == 1 ? 2 : 3; }

PythagorasResultNF pythagoras_element_nf(const NumberField& K, const PythagorasOptions& opts) {
  const int number = pythagoras_number_nf(K);
  const LengthOptions lopts{opts.dyadic_precision};
  auto verified = [&](const NFElem& x, std::vector<std::string> notes) {
    LengthResult v = length_nf(x, lopts);
    if (v.length != number)
      throw std::logic_error("Pythagoras element " + x.to_string() + " has length " + length_to_string(v.length) +
                             ", expected " + std::to_string(number));
    return PythagorasResultNF{number, x, std::move(v), std::move(notes)};
  };

  if (number == 4) return verified(K.from_rational(7), {});

  if (number == 2) {
    if (!is_square_global(K.theta()).is_square) return verified(K.theta(), {});
    PrimeStream ps(2);
    while (ps.current() <= opts.prime_scan_bound) {
      NFElem c = K.from_rational(Rational(ps.next()));
      if (!is_square_global(c).is_square) return verified(c, {});
    }
    throw SearchBoundExceeded("no nonsquare among theta and primes up to " + opts.prime_scan_bound.get_str());
  }

  // number == 3: a prime p = 3 mod 4 with a prime above it of odd e and odd f
  std::vector<std::string> notes;
  PrimeStream ps(3);
  for (Integer p = ps.next(); p <= opts.prime_scan_bound; p = ps.next()) {
    if (mod(p, 4) != 3) continue;
    std::vector<PrimeIdealNF> primes;
    try {
      primes = split_prime(K, p);
    } catch (const NotPMaximal&) {
      notes.push_back("skipped " + p.get_str() + ": Z[theta] not p-maximal");
      continue;
    }
    auto it = std::find_if(primes.begin(), primes.end(),
                           [](const PrimeIdealNF& P) { return P.e() % 2 == 1 && P.f_deg() % 2 == 1; });
    if (it != primes.end()) {
      notes.push_back("selected " + p.get_str() + " via " + place_name(*it) + " with e = " + std::to_string(it->e()) +
                      ", f = " + std::to_string(it->f_deg()));
      return verified(K.from_rational(Rational(p)), std::move(notes));
    }
    std::string why = "skipped " + p.get_str() + ":";
    for (const auto& P : primes) why += " " + place_name(P) + " e=" + std::to_string(P.e()) + " f=" + std::to_string(P.f_deg());
    notes.push_back(why);
  }

  // fallback: x = pi + k p^2 has v(x) = 1 at a prime with residue field of
  // order 3 mod 4; it is totally positive once k is large
  PrimeStream fs(3);
  for (Integer p = fs.next(); p <= opts.prime_scan_bound; p = fs.next()) {
    if (mod(p, 4) != 3) continue;
    std::vector<PrimeIdealNF> primes;
    try {
      primes = split_prime(K, p);
    } catch (const NotPMaximal&) {
      continue;
    }
    for (const auto& P : primes) {
      if (P.f_deg() % 2 == 0) continue;
      const NFElem p2 = K.from_rational(Rational(p * p));
      for (long k = 0; k <= opts.fallback_bound; ++k) {
        NFElem x = P.pi() + Rational(k) * p2;
        if (!is_totally_positive(x)) continue;
        notes.push_back("fallback element at " + place_name(P) + " with k = " + std::to_string(k));
        return verified(x, std::move(notes));
      }
    }
  }
  throw SearchBoundExceeded("no Pythagoras element found: scanned primes up to " + opts.prime_scan_bound.get_str() +
                            " and fallback multipliers up to " + std::to_string(opts.fallback_bound));
}

std::vector<FqPoly> monic_irreducibles(const FqField& F, int m, std::size_t limit) {
  std::vector<FqPoly> out;
  const Integer count = pow(F.order(), static_cast<unsigned long>(m));
  for (Integer i = 0; i < count; ++i) {
    std::vector<FqField::Rep> c;
    Integer t = i;
    for (int j = 0; j < m; ++j) {
      c.push_back(F.element(t % F.order()));
      t /= F.order();
    }
    c.push_back(F.one());
    FqPoly g(std::move(c));
    if (is_irreducible_fq(F, g)) {
      out.push_back(std::move(g));
      if (limit && out.size() >= limit) break;
    }
  }
  return out;
}

PythagorasResultFF pythagoras_element_ff(const FunctionField& K) {
  const int number = pythagoras_number_ff(K);
  const FqField& F = K.base();
  auto verified = [&](const FFElem& x) {
    LengthResult v = length_ff(x);
    if (v.length != number) throw std::logic_error("Pythagoras element " + x.to_string() + " has wrong length");
    return PythagorasResultFF{number, x, std::move(v)};
  };
  if (number == 2) {
    for (Integer i = 1; i < F.order(); ++i)
      if (!F.is_square(F.element(i))) return verified(K.constant(F.element(i)));
    throw std::logic_error("F_q has no nonsquare");
  }
  // degree-by-degree irreducibles; the first of odd degree has residue field of order 3 mod 4
  for (int m = 1;; ++m) {
    if (m % 2 == 0) continue;
    auto irr = monic_irreducibles(F, m, 1);
    if (!irr.empty()) return verified(K.from_poly(irr.front()));
  }
}

}  // namespace sos
