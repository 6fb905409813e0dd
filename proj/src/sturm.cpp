#include "sphcodes/sturm.hpp"

#include <algorithm>

#include "sphcodes/errors.hpp"

namespace sphcodes {

namespace {

int sign_of(const Rational& x) { return sgn(x); }

int count_variations(const std::vector<int>& signs) {
  int variations = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / 2; }

// Absolute bound on the real roots of p (Cauchy).
Rational cauchy_bound(const Polynomial& p) {
  Rational m = 0;
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i + 1 < c.size(); ++i) m = std::max(m, Rational(abs(c[i] / c.back())));
  return m + 1;
}

// Some rational in (lo, hi) with p > 0, given that p changes sign inside.
std::optional<Rational> find_positive_point(const Polynomial& p, const Rational& lo, const Rational& hi) {
  const Polynomial q = square_free_part(p);
  const SturmSequence sturm(q);
  std::optional<Rational> best;
  Rational best_value = 0;
  auto consider = [&](const Rational& x) {
    if (x <= lo || x >= hi) return;
    Rational v = p(x);
    if (v > best_value) {
      best_value = v;
      best = x;
    }
  };
  for (RootInterval iv : isolate_roots(q, lo, hi)) {
    if (iv.hi >= hi && q(hi) == 0) continue;  // root at the closed end, no interior sign change
    // Shrink until neither endpoint is a root of q, or the root is pinned exactly.
    std::optional<Rational> exact;
    for (int guard = 0; guard < 4096 && !exact; ++guard) {
      if (q(iv.hi) == 0) {
        exact = iv.hi;
        break;
      }
      if (q(iv.lo) != 0) break;
      Rational mid = midpoint(iv.lo, iv.hi);
      if (q(mid) == 0) {
        exact = mid;
      } else if (sturm.count_roots(iv.lo, mid) == 1) {
        iv.hi = mid;
      } else {
        iv.lo = mid;
      }
    }
    if (exact) {
      Rational w = std::min(Rational(*exact - lo), Rational(hi - *exact)) / 2;
      while (sturm.count_roots(*exact - w, *exact + w) != 1 || q(*exact - w) == 0) w /= 2;
      consider(*exact - w);
      consider(*exact + w);
    } else {
      consider(iv.lo);
      consider(iv.hi);
    }
  }
  return best;
}

}  // namespace

SturmSequence::SturmSequence(const Polynomial& square_free) {
  if (square_free.is_zero()) throw DomainError("Sturm sequence of the zero polynomial");
  chain_.push_back(square_free);
  if (square_free.degree() == 0) return;
  chain_.push_back(square_free.derivative());
  while (chain_.back().degree() > 0) {
    Polynomial r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
    if (r.is_zero()) break;
    // Positive rescaling keeps every sign and tames coefficient growth.
    Rational scale = abs(r.leading());
    chain_.push_back(Rational(-1 / scale) * r);
  }
}

int SturmSequence::variations_at(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) signs.push_back(sign_of(p(x)));
  return count_variations(signs);
}

int SturmSequence::variations_at_plus_infinity() const {
  std::vector<int> signs;
  for (const auto& p : chain_) signs.push_back(sign_of(p.leading()));
  return count_variations(signs);
}

int SturmSequence::variations_at_minus_infinity() const {
  std::vector<int> signs;
  for (const auto& p : chain_) {
    int s = sign_of(p.leading());
    signs.push_back(p.degree() % 2 == 0 ? s : -s);
  }
  return count_variations(signs);
}

int SturmSequence::count_roots(const Rational& a, const Rational& b) const {
  if (b <= a) return 0;
  return variations_at(a) - variations_at(b);
}

int SturmSequence::count_roots_above(const Rational& a) const {
  return variations_at(a) - variations_at_plus_infinity();
}

std::vector<RootInterval> isolate_roots(const Polynomial& p, const Rational& a, const Rational& b,
                                        const Rational& max_width) {
  std::vector<RootInterval> out;
  if (p.degree() <= 0 || b <= a) return out;
  const Polynomial q = square_free_part(p);
  const SturmSequence sturm(q);
  std::vector<RootInterval> stack{{a, b}};
  while (!stack.empty()) {
    RootInterval iv = stack.back();
    stack.pop_back();
    int n = sturm.count_roots(iv.lo, iv.hi);
    if (n == 0) continue;
    if (n == 1) {
      while (max_width > 0 && iv.hi - iv.lo > max_width) {
        Rational mid = midpoint(iv.lo, iv.hi);
        if (sturm.count_roots(iv.lo, mid) == 1) iv.hi = mid;
        else iv.lo = mid;
      }
      out.push_back(iv);
      continue;
    }
    Rational mid = midpoint(iv.lo, iv.hi);
    stack.push_back({mid, iv.hi});
    stack.push_back({iv.lo, mid});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
  return out;
}

SignCertificate certify_nonpositive(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (hi < lo) throw DomainError("certify_nonpositive: empty interval");
  if (p.is_zero()) return {true, std::nullopt};
  if (p(lo) > 0) return {false, lo};
  if (p(hi) > 0) return {false, hi};
  if (lo == hi || p.degree() == 0) return {true, std::nullopt};

  const Polynomial odd = odd_multiplicity_part(p);
  if (odd.degree() > 0) {
    const SturmSequence sturm(odd);
    int interior = sturm.count_roots(lo, hi) - (odd(hi) == 0 ? 1 : 0);
    if (interior > 0) {
      auto witness = find_positive_point(p, lo, hi);
      if (!witness) throw InternalError("sign change detected but no positive point found");
      return {false, witness};
    }
  }
  // No sign change inside: one point where p != 0 decides the sign on (lo, hi).
  const int probes = p.degree() + 1;
  for (int i = 1; i <= probes; ++i) {
    Rational t(i, probes + 1);
    t.canonicalize();
    Rational x = lo + (hi - lo) * t;
    Rational v = p(x);
    if (v > 0) return {false, x};
    if (v < 0) return {true, std::nullopt};
  }
  throw InternalError("nonzero polynomial vanished at more points than its degree");
}

SignCertificate certify_nonpositive_above(const Polynomial& p, const Rational& lo) {
  if (p.is_zero()) return {true, std::nullopt};
  if (p(lo) > 0) return {false, lo};
  if (p.degree() == 0) return {true, std::nullopt};
  if (p.leading() > 0) {
    Rational step = std::max(Rational(1), Rational(abs(lo)));
    Rational x = lo + step;
    while (p(x) <= 0) x = lo + (x - lo) * 2;
    return {false, x};
  }
  const Polynomial odd = odd_multiplicity_part(p);
  if (odd.degree() > 0 && SturmSequence(odd).count_roots_above(lo) > 0) {
    Rational hi = std::max(Rational(lo + 1), Rational(cauchy_bound(p) + 1));
    auto witness = find_positive_point(p, lo, hi);
    if (!witness) throw InternalError("sign change detected but no positive point found");
    return {false, witness};
  }
  return {true, std::nullopt};
}

}  // namespace sphcodes
