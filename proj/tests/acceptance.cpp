// Acceptance suite: one PASS/FAIL line per criterion, each within its time limit.
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <tuple>

#include "sos/arith.hpp"
#include "sos/global_square.hpp"
#include "sos/lengths.hpp"
#include "sos/oracles.hpp"
#include "sos/zmod_poly.hpp"
#include "test_util.hpp"

namespace {

using namespace sos;
using testing::field;
using testing::rat;

constexpr int kInf = kInfiniteLength;

// Seeds come from the criterion name so runs are reproducible everywhere.
std::uint64_t seed_of(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
  return h;
}

// Collects the first few mismatches of a criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (ok) return;
    ++failed_;
    if (failed_ <= 5) detail_ << (failed_ > 1 ? "; " : "") << what;
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    if (ok()) s << count_ << " checks";
    else s << failed_ << "/" << count_ << " checks failed: " << detail_.str();
    return s.str();
  }

 private:
  long count_ = 0, failed_ = 0;
  std::ostringstream detail_;
};

std::string str(int l) { return length_to_string(l); }

void c1(Check& ck) {
  auto Q = field({0, 1});
  ck.expect(length_nf(rat(Q, 7)).length == 4, "length(7) != 4");
  ck.expect(length_nf(rat(Q, 15)).length == 4, "length(15) != 4");
  ck.expect(pythagoras_number_nf(Q) == 4, "P(Q) != 4");
  auto r = pythagoras_element_nf(Q);
  ck.expect(r.element == rat(Q, 7) && r.verification.length == 4, "Pythagoras element of Q is not 7");
}

void c2(Check& ck) {
  auto Q = field({0, 1});
  for (long m = 1; m <= 500; ++m) {
    const int l = length_nf(rat(Q, m)).length, o = length_q_oracle(Rational(m));
    ck.expect(l == o, "m = " + std::to_string(m) + ": " + str(l) + " vs oracle " + str(o));
    ck.expect(length_nf(rat(Q, -m)).length == kInf && length_q_oracle(Rational(-m)) == kInf,
              "-" + std::to_string(m) + " not infinity");
  }
  for (long m = 1; m <= kEnumerationLimit; ++m)
    ck.expect(length_q_theorem(m) == length_q_enumerate(m), "theorem vs enumeration at " + std::to_string(m));
}

// each field has its own 5 s budget
void c3(Check& ck) {
  const std::vector<std::tuple<std::string, NumberField, int>> cases{{"Q(i)", field({1, 0, 1}), 2},
                                                                     {"Q(sqrt 5)", field({-1, -1, 1}), 3},
                                                                     {"Q(sqrt 2)", field({-2, 0, 1}), 3},
                                                                     {"Q(sqrt -7)", field({2, -1, 1}), 4}};
  for (const auto& [name, K, expected] : cases) {
    const auto t0 = std::chrono::steady_clock::now();
    const int p = pythagoras_number_nf(K);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ck.expect(p == expected, name + ": P = " + std::to_string(p));
    ck.expect(secs < 5, name + " took " + std::to_string(secs) + " s");
  }
}

void c4(Check& ck) {
  auto K = field({-1, -1, 1});
  auto r = pythagoras_element_nf(K);
  ck.expect(r.number == 3, "P(Q(sqrt 5)) != 3");
  ck.expect(length_nf(r.element).length == 3, "returned element " + r.element.to_string() + " has length != 3");
  const int l3 = length_nf(rat(K, 3)).length;
  ck.expect(l3 == 2, "length(3) = " + str(l3) + ", expected 2");
}

void c5(Check& ck) {
  const std::vector<std::pair<long, int>> expected{{7, 4}, {3, 3}, {2, 2}, {17, 1}};
  auto Q = field({0, 1});
  auto K = field({2, -1, 1});
  std::vector<std::pair<NumberField, PrimeIdealNF>> places{{Q, split_prime(Q, 2).at(0)}};
  auto two = split_prime(K, 2);
  ck.expect(two.size() == 2, "2 does not split in Q(sqrt -7)");
  for (const auto& P : two) places.emplace_back(K, P);
  for (const auto& [F, P] : places) {
    auto D = dyadic_completion(P);
    ck.expect(D.e() == 1 && D.f_deg() == 1, "completion is not Q_2");
    for (const auto& [a, l] : expected) {
      const int got = local_length_dyadic(rat(F, a), D);
      ck.expect(got == l, std::to_string(a) + " at " + place_name(P) + ": " + str(got));
    }
  }
  ck.expect(length_nf(rat(K, 7)).length == 4, "length(7) in Q(sqrt -7) != 4");
}

void c6(Check& ck) {
  auto F5 = FunctionField::rational(5);
  auto r5 = pythagoras_element_ff(F5);
  ck.expect(pythagoras_number_ff(F5) == 2 && r5.number == 2, "P(F_5(x)) != 2");
  ck.expect(r5.element.is_constant() && !is_square_global_ff(r5.element) && length_ff(r5.element).length == 2,
            "F_5(x) element is not a verified nonsquare constant");
  auto F3 = FunctionField::rational(3);
  auto r3 = pythagoras_element_ff(F3);
  ck.expect(pythagoras_number_ff(F3) == 3 && r3.number == 3, "P(F_3(x)) != 3");
  ck.expect(r3.element == F3.x() && length_ff(F3.x()).length == 3, "F_3(x) element is not x with length 3");
  auto F9 = FunctionField::rational(9);
  auto r9 = pythagoras_element_ff(F9);
  ck.expect(pythagoras_number_ff(F9) == 2 && r9.number == 2 && length_ff(r9.element).length == 2, "P(F_9(x)) != 2");
}

void c7(Check& ck) {
  auto K = FunctionField::rational(3);
  const FqField& F = K.base();
  auto compare = [&](const FFElem& a) {
    const int l = length_ff(a).length;
    const auto o = length_ff_oracle(a, 4);
    ck.expect((l <= 2) == (o != FFOracleLength::MoreThanTwo) && (l == 1) == (o == FFOracleLength::One),
              a.to_string() + ": length " + str(l) + ", oracle " + to_string(o));
  };
  for (int deg = 0; deg <= 4; ++deg) {
    long total = 1;
    for (int i = 0; i < deg; ++i) total *= 3;
    for (long idx = 0; idx < total; ++idx) {
      std::vector<FqField::Rep> c;
      for (long t = idx, i = 0; i < deg; ++i, t /= 3) c.push_back(F.element(Integer(t % 3)));
      c.push_back(F.one());
      compare(K.from_poly(FqPoly(std::move(c))));
    }
  }
  std::mt19937_64 rng(seed_of("function-field oracle equivalence"));
  for (int i = 0; i < 50; ++i) compare(testing::random_ffelem(K, rng, 4));
}

void c8(Check& ck) {
  std::mt19937_64 rng(seed_of("hilbert reciprocity"));
  for (auto K : {field({0, 1}), field({-1, -1, 1}), field({-2, 0, 1}), field({2, 0, 1})}) {
    for (int i = 0; i < 200; ++i) {
      long n = 0;
      while (n == 0) n = static_cast<long>(rng() % 20001) - 10000;
      Rational a(n, 1 + static_cast<long>(rng() % 1000));
      a.canonicalize();
      ck.expect(hilbert_product_check(a, K), "product != 1 for a = " + to_string(a) + " over " + to_string(K.polynomial()));
    }
  }
}

void c9(Check& ck) {
  auto Q = field({0, 1});
  auto K = field({2, -1, 1});
  std::vector<std::pair<NumberField, PrimeIdealNF>> places{{Q, split_prime(Q, 2).at(0)}};
  for (const auto& P : split_prime(K, 2)) places.emplace_back(K, P);
  for (const auto& [F, P] : places) {
    auto D = dyadic_completion(P);
    for (long a = -99; a <= 99; a += 2) {
      const NFElem x = rat(F, a);
      const int prod = sum_of_two_squares_dyadic(x, D) ? 1 : -1;
      const int brute = hilbert_dyadic_bruteforce(-F.one(), x, D);
      ck.expect(prod == brute, "(-1, " + std::to_string(a) + ") at " + place_name(P));
    }
  }
}

void c10(Check& ck) {
  const std::vector<NumberField> fields{field({0, 1}),        field({1, 0, 1}),     field({-1, -1, 1}),
                                        field({-2, 0, 1}),    field({2, -1, 1}),    field({-2, 0, 0, 1}),
                                        field({-1, -3, 0, 1}), field({-6, 0, 0, 0, 1}), field({1, 1, 0, 0, 1})};
  for (const auto& K : fields) {
    const std::string name = to_string(K.polynomial());
    std::mt19937_64 rng(seed_of("structural " + name));
    // sum of e f over the primes above p
    PrimeStream ps(2);
    for (int i = 0; i < 30; ++i) {
      Integer p = ps.next();
      if (!dedekind_is_pmaximal(K, p)) continue;
      int sum = 0;
      for (const auto& P : split_prime(K, p)) sum += P.e() * P.f_deg();
      ck.expect(sum == K.degree(), "sum ef != n at " + p.get_str() + " over " + name);
    }
    for (int i = 0; i < 8; ++i) {
      auto a = testing::random_elem(K, rng, 6, true), b = testing::random_elem(K, rng, 6, true);
      // valuation additivity at primes dividing the norms and at 2
      for (const Integer& p : {Integer(2), Integer(3), Integer(5), Integer(7)}) {
        if (!dedekind_is_pmaximal(K, p)) continue;
        for (const auto& P : split_prime(K, p))
          ck.expect(valuation(a * b, P) == valuation(a, P) + valuation(b, P), "valuation not additive over " + name);
      }
      // scaling invariance and certificate consistency
      auto r = length_nf(a);
      auto c = testing::random_elem(K, rng, 3, true);
      ck.expect(length_nf(a * c * c).length == r.length, "length not invariant under squares over " + name);
      if (r.length != kInf) {
        ck.expect((r.length == 1) == is_square_global(a).is_square, "square status mismatch over " + name);
        int m = 2;
        for (const auto& e : r.certificate.entries) {
          ck.expect(e.local_length >= 1 && e.local_length <= 4, "local length out of range at " + e.place);
          m = std::max(m, e.local_length);
        }
        if (r.length > 1) ck.expect(r.length == m, "length != max(2, local lengths) over " + name);
      }
    }
    // Hensel factor product at every precision escalation
    if (!dedekind_is_pmaximal(K, 2) || K.degree() > 10) continue;
    auto D = dyadic_completion(split_prime(K, 2).at(0));
    for (int step = 0; step < 4; ++step) {
      const Integer mod = D.modulus();
      ZPoly prod = ZPoly::constant(1);
      for (const auto& g : D.lifted_factors()) prod = zmod::mul(prod, g, mod);
      ck.expect(prod == zmod::reduce(K.polynomial(), mod),
                "Hensel product fails at N = " + std::to_string(D.precision()) + " over " + name);
      D = D.with_precision(2 * D.precision());
    }
  }
  for (int q : {3, 5, 7, 9}) {
    auto K = FunctionField::rational(q);
    std::mt19937_64 rng(seed_of("structural F_" + std::to_string(q)));
    for (int i = 0; i < 20; ++i) {
      auto a = testing::random_ffelem(K, rng, 4), c = testing::random_ffelem(K, rng, 3);
      auto r = length_ff(a);
      ck.expect(length_ff(a * c * c).length == r.length, "function-field length not invariant: " + a.to_string());
      for (const auto& e : r.certificate.entries)
        ck.expect(e.local_length >= 1 && e.local_length <= 4, "local length out of range at " + e.place);
    }
  }
}

struct Criterion {
  int id;
  std::string title;
  double limit_s;
  std::function<void(Check&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Q baseline: l(7) = l(15) = 4, P(Q) = 4, element 7", 1, c1},
      {2, "length over Q matches the oracle for |m| <= 500; theorem = enumeration to 10^4", 60, c2},
      {3, "P = 2 for Q(i), 3 for Q(sqrt 5) and Q(sqrt 2), 4 for Q(sqrt -7)", 20, c3},
      {4, "Q(sqrt 5): Pythagoras element has length 3, l(3) = 2", 10, c4},
      {5, "dyadic lengths 7, 3, 2, 17 -> 4, 3, 2, 1 over Q_2 and Q(sqrt -7)", 5, c5},
      {6, "F_5(x) -> 2, F_3(x) -> 3 with x, F_9(x) -> 2", 5, c6},
      {7, "F_3[x] monic degree <= 4 and 50 random fractions match the oracle", 60, c7},
      {8, "reciprocity for (-1, a): 200 random a over Q, Q(sqrt 5), Q(sqrt 2), Q(sqrt -2)", 120, c8},
      {9, "sum of two squares at 2 matches brute force, odd |a| <= 100", 120, c9},
      {10, "structural invariants on seeded random inputs", 120, c10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Check ck;
    const auto t0 = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.body(ck);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = error.empty() && ck.ok() && secs < c.limit_s;
    if (!pass) ++failed;
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id << "  " << c.title << "  ["
              << std::fixed << std::setprecision(2) << secs << " s, limit " << c.limit_s << " s; "
              << (error.empty() ? ck.summary() : "exception: " + error) << "]\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
