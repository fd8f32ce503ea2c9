// SPDX-License-Identifier: Apache-2.0

#include "scg/roots.hpp"

#include <algorithm>

#include "scg/charpoly.hpp"
#include "scg/error.hpp"

namespace scg {

namespace {

/// Divides by the positive content; the sign of the polynomial is kept.
IntPolynomial reduce_positive(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  Integer g = p.content();
  std::vector<Integer> out(p.coefficients().size());
  for (std::size_t i = 0; i < out.size(); ++i)
    mpz_divexact(out[i].get_mpz_t(), p.coefficients()[i].get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(out));
}

int count_variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

Rational power_of_two(int exponent) {
  Integer one = 1;
  Integer p;
  mpz_mul_2exp(p.get_mpz_t(), one.get_mpz_t(), static_cast<mp_bitcnt_t>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? Rational(Integer(1), p) : Rational(p);
}

}  // namespace

SturmSequence::SturmSequence(const IntPolynomial& p) {
  if (p.is_zero()) fail(ErrorKind::InvalidArgument, "Sturm sequence of the zero polynomial");
  chain_.push_back(squarefree_part(p));
  if (chain_.front().degree() <= 0) return;
  chain_.push_back(reduce_positive(chain_.front().derivative()));
  while (true) {
    const IntPolynomial& a = chain_[chain_.size() - 2];
    const IntPolynomial& b = chain_.back();
    if (b.degree() <= 0) break;
    IntPolynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // prem = lc(b)^delta * a mod b; the Sturm term is -(a mod b) up to a
    // positive factor, so flip once more when lc(b)^delta is negative.
    const int delta = a.degree() - b.degree() + 1;
    bool positive_scale = b.leading() > 0 || delta % 2 == 0;
    r = reduce_positive(r);
    chain_.push_back(positive_scale ? -r : r);
  }
}

int SturmSequence::variations(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const IntPolynomial& q : chain_) signs.push_back(q.sign_at(x));
  return count_variations(signs);
}

int SturmSequence::variations_at_positive_infinity() const {
  std::vector<int> signs;
  for (const IntPolynomial& q : chain_) signs.push_back(sgn(q.leading()));
  return count_variations(signs);
}

int SturmSequence::variations_at_negative_infinity() const {
  std::vector<int> signs;
  for (const IntPolynomial& q : chain_) {
    int s = sgn(q.leading());
    signs.push_back(q.degree() % 2 == 0 ? s : -s);
  }
  return count_variations(signs);
}

int SturmSequence::count(const Rational& a, const Rational& b) const {
  if (!(a < b)) fail(ErrorKind::InvalidArgument, "Sturm count needs a < b");
  return variations(a) - variations(b);
}

int SturmSequence::count_above(const Rational& a) const {
  return variations(a) - variations_at_positive_infinity();
}

int SturmSequence::count_all() const {
  return variations_at_negative_infinity() - variations_at_positive_infinity();
}

int sturm_root_count(const IntPolynomial& p, const Rational& a, const Rational& b) {
  return SturmSequence(p).count(a, b);
}

Integer root_bound(const IntPolynomial& p) {
  if (p.degree() <= 0) return 1;
  // Cauchy: |root| <= 1 + max |c_i / c_d|.
  Integer lead = abs(p.leading());
  Integer best = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Integer c = abs(p.coefficients()[static_cast<std::size_t>(i)]);
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), c.get_mpz_t(), lead.get_mpz_t());
    if (q > best) best = q;
  }
  return best + 2;
}

RootInterval::RootInterval(std::shared_ptr<const SturmSequence> sturm, IntPolynomial poly,
                           Rational lo, Rational hi)
    : sturm_(std::move(sturm)), poly_(std::move(poly)), lo_(std::move(lo)), hi_(std::move(hi)) {}

RootInterval RootInterval::verified_largest(const IntPolynomial& poly, const Rational& lo,
                                            const Rational& hi) {
  if (poly.is_zero() || !(lo < hi))
    fail(ErrorKind::Numeric, "invalid root interval");
  auto sturm = std::make_shared<const SturmSequence>(poly);
  if (sturm->count(lo, hi) != 1 || sturm->count_above(hi) != 0)
    fail(ErrorKind::Numeric, "interval (" + to_string(lo) + ", " + to_string(hi) +
                                 "] does not isolate the largest root");
  return RootInterval(std::move(sturm), poly, lo, hi);
}

void RootInterval::bisect() {
  Rational mid = midpoint();
  if (sturm_->count(lo_, mid) >= 1) hi_ = mid;
  else lo_ = mid;
}

void RootInterval::refine(const Rational& width) {
  if (width <= 0) fail(ErrorKind::InvalidArgument, "root width must be positive");
  while (this->width() > width) bisect();
}

RootInterval largest_root(const IntPolynomial& p, const Rational& width) {
  if (width <= 0) fail(ErrorKind::InvalidArgument, "root width must be positive");
  auto sturm = std::make_shared<const SturmSequence>(p);
  Integer bound = root_bound(p);
  Rational lo(-bound), hi(bound);
  if (sturm->count(lo, hi) == 0) fail(ErrorKind::InvalidArgument, "polynomial has no real root");
  // Shrink until exactly one distinct root remains, always keeping the top one.
  while (sturm->count(lo, hi) > 1) {
    Rational mid = (lo + hi) / 2;
    if (sturm->count(mid, hi) >= 1) lo = mid;
    else hi = mid;
  }
  RootInterval r(std::move(sturm), p, lo, hi);
  r.refine(width);
  return r;
}

std::vector<RootInterval> all_roots(const IntPolynomial& p, const Rational& width) {
  if (p.is_zero()) fail(ErrorKind::InvalidArgument, "roots of the zero polynomial");
  std::vector<RootInterval> out;
  const Integer bound = root_bound(p);
  auto factors = squarefree_decomposition(p);
  for (std::size_t m = 0; m < factors.size(); ++m) {
    const IntPolynomial& f = factors[m];
    if (f.degree() <= 0) continue;
    auto sturm = std::make_shared<const SturmSequence>(f);
    std::vector<std::pair<Rational, Rational>> pending{{Rational(-bound), Rational(bound)}};
    while (!pending.empty()) {
      auto [lo, hi] = pending.back();
      pending.pop_back();
      int c = sturm->count(lo, hi);
      if (c == 0) continue;
      if (c == 1) {
        RootInterval r(sturm, f, lo, hi);
        r.refine(width);
        for (std::size_t k = 0; k <= m; ++k) out.push_back(r);
        continue;
      }
      Rational mid = (lo + hi) / 2;
      pending.emplace_back(lo, mid);
      pending.emplace_back(mid, hi);
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) {
    return a.midpoint() > b.midpoint();
  });
  return out;
}

RootInterval index(const SignedCompleteGraph& g, const Rational& width) {
  if (width <= 0) fail(ErrorKind::InvalidArgument, "index width must be positive");
  IntPolynomial p = char_poly(g);
  auto sturm = std::make_shared<const SturmSequence>(p);
  // Every eigenvalue of an n-vertex signed graph lies in [-(n-1), n-1].
  Rational lo(-g.order()), hi(g.order());
  while (sturm->count(lo, hi) > 1) {
    Rational mid = (lo + hi) / 2;
    if (sturm->count(mid, hi) >= 1) lo = mid;
    else hi = mid;
  }
  RootInterval r(std::move(sturm), std::move(p), lo, hi);
  r.refine(width);
  return r;
}

const char* to_string(Comparison c) noexcept {
  switch (c) {
    case Comparison::Less: return "Less";
    case Comparison::Equal: return "Equal";
    case Comparison::Greater: return "Greater";
  }
  return "?";
}

Comparison compare_roots(const RootInterval& a_in, const RootInterval& b_in) {
  if (a_in.poly() == b_in.poly()) return Comparison::Equal;
  RootInterval a = a_in, b = b_in;
  const Rational threshold = power_of_two(-64);
  bool gcd_checked = false;
  while (true) {
    if (a.hi() <= b.lo()) return Comparison::Less;
    if (b.hi() <= a.lo()) return Comparison::Greater;
    if (!gcd_checked && a.width() < threshold && b.width() < threshold) {
      gcd_checked = true;
      IntPolynomial g = gcd(a.poly(), b.poly());
      if (g.degree() >= 1) {
        Rational lo = std::max(a.lo(), b.lo());
        Rational hi = std::min(a.hi(), b.hi());
        if (lo < hi && sturm_root_count(g, lo, hi) >= 1) return Comparison::Equal;
      }
    }
    if (a.width() >= b.width()) a.bisect();
    else b.bisect();
  }
}

Comparison compare_indices(const SignedCompleteGraph& a, const SignedCompleteGraph& b) {
  const Rational coarse(1, 16);
  return compare_roots(index(a, coarse), index(b, coarse));
}

Rational report_width() { return power_of_two(-40); }

}  // namespace scg
