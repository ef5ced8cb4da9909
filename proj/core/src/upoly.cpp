#include "nhpoly/upoly.hpp"

#include <algorithm>

#include "nhpoly/errors.hpp"

namespace nhpoly {

IntPoly ipoly_trim(IntPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int ipoly_degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

bool ipoly_is_zero(const IntPoly& p) { return p.empty(); }

const BigInt& ipoly_leading(const IntPoly& p) {
  if (p.empty()) throw InternalError("leading coefficient of zero polynomial");
  return p.back();
}

const BigInt& ipoly_trailing(const IntPoly& p) {
  for (const auto& c : p) {
    if (c != 0) return c;
  }
  throw InternalError("trailing coefficient of zero polynomial");
}

IntPoly ipoly_neg(const IntPoly& p) {
  IntPoly r = p;
  for (auto& c : r) c = -c;
  return r;
}

IntPoly ipoly_add(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return ipoly_trim(std::move(r));
}

IntPoly ipoly_sub(const IntPoly& a, const IntPoly& b) {
  return ipoly_add(a, ipoly_neg(b));
}

IntPoly ipoly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return ipoly_trim(std::move(r));
}

IntPoly ipoly_scale(const IntPoly& p, const BigInt& c) {
  if (c == 0) return {};
  IntPoly r = p;
  for (auto& x : r) x *= c;
  return r;
}

IntPoly ipoly_derivative(const IntPoly& p) {
  if (p.size() <= 1) return {};
  IntPoly r(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * BigInt(i);
  return ipoly_trim(std::move(r));
}

BigInt ipoly_content(const IntPoly& p) {
  BigInt g = 0;
  for (const auto& c : p) g = boost::multiprecision::gcd(g, c);
  return g < 0 ? BigInt(-g) : g;
}

IntPoly ipoly_primitive(const IntPoly& p) {
  BigInt g = ipoly_content(p);
  if (g == 0 || g == 1) return p;
  IntPoly r = p;
  for (auto& c : r) c /= g;
  return r;
}

Rational ipoly_eval(const IntPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

IntPoly ipoly_div_exact(const IntPoly& a, const IntPoly& b) {
  if (ipoly_is_zero(b)) throw InternalError("polynomial division by zero");
  IntPoly rem = a;
  IntPoly quot(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, BigInt(0));
  while (!rem.empty() && rem.size() >= b.size()) {
    const BigInt& lead = rem.back();
    if (lead % b.back() != 0) {
      throw InternalError("inexact polynomial division");
    }
    BigInt q = lead / b.back();
    std::size_t shift = rem.size() - b.size();
    quot[shift] = q;
    for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= q * b[i];
    rem = ipoly_trim(std::move(rem));
  }
  if (!rem.empty()) throw InternalError("inexact polynomial division");
  return ipoly_trim(std::move(quot));
}

namespace {

// lc(b)^(deg a - deg b + 1) * a = q*b + r
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
  const int db = ipoly_degree(b);
  const BigInt& lb = b.back();
  while (!a.empty() && ipoly_degree(a) >= db) {
    const int da = ipoly_degree(a);
    IntPoly scaled = ipoly_scale(a, lb);
    const BigInt qc = a.back();
    for (int i = 0; i <= db; ++i) scaled[da - db + i] -= qc * b[i];
    a = ipoly_trim(std::move(scaled));
  }
  return a;
}

}  // namespace

IntPoly ipoly_gcd(const IntPoly& a_in, const IntPoly& b_in) {
  IntPoly a = ipoly_primitive(ipoly_trim(a_in));
  IntPoly b = ipoly_primitive(ipoly_trim(b_in));
  if (ipoly_is_zero(a)) std::swap(a, b);
  while (!ipoly_is_zero(b)) {
    if (ipoly_degree(a) < ipoly_degree(b)) std::swap(a, b);
    IntPoly r = ipoly_primitive(pseudo_rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() < 0) a = ipoly_neg(a);
  return a;
}

IntPoly ipoly_squarefree_part(const IntPoly& p_in) {
  IntPoly p = ipoly_primitive(ipoly_trim(p_in));
  if (ipoly_degree(p) <= 1) {
    if (!p.empty() && p.back() < 0) p = ipoly_neg(p);
    return p;
  }
  IntPoly g = ipoly_gcd(p, ipoly_derivative(p));
  IntPoly s = ipoly_primitive(ipoly_div_exact(p, g));
  if (!s.empty() && s.back() < 0) s = ipoly_neg(s);
  return s;
}

namespace {

int rat_sign(const Rational& r) { return r.sign(); }

std::vector<IntPoly> sturm_chain(const IntPoly& p) {
  std::vector<IntPoly> chain;
  chain.push_back(p);
  IntPoly d = ipoly_derivative(p);
  if (!ipoly_is_zero(d)) chain.push_back(ipoly_primitive(d));
  while (chain.size() >= 2 && !ipoly_is_zero(chain.back())) {
    IntPoly r = pseudo_rem(chain[chain.size() - 2], chain.back());
    if (ipoly_is_zero(r)) break;
    r = ipoly_primitive(r);
    // Pseudo-division scales by lc(b)^delta; force the Sturm sign rule
    // (remainder negated) regardless of that scale's sign.
    const BigInt& lb = ipoly_leading(chain.back());
    const int delta = ipoly_degree(chain[chain.size() - 2]) -
                      ipoly_degree(chain.back()) + 1;
    const bool flip = (lb < 0) && (delta % 2 == 1);
    chain.push_back(flip ? r : ipoly_neg(r));
  }
  return chain;
}

int sign_variations(const std::vector<IntPoly>& chain, const Rational& x) {
  int vars = 0, prev = 0;
  for (const auto& p : chain) {
    int s = rat_sign(ipoly_eval(p, x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++vars;
    prev = s;
  }
  return vars;
}

// Number of distinct roots in (a, b]; requires squarefree input.
int roots_in(const std::vector<IntPoly>& chain, const Rational& a,
             const Rational& b) {
  return sign_variations(chain, a) - sign_variations(chain, b);
}

// Trial-division divisor enumeration. Returns nullopt if |v| cannot be
// fully factored within the step budget.
std::optional<std::vector<BigInt>> all_divisors(BigInt v) {
  if (v < 0) v = -v;
  if (v == 0) return std::nullopt;
  std::vector<std::pair<BigInt, unsigned>> factors;
  BigInt d = 2;
  long steps = 0;
  while (d * d <= v) {
    if (++steps > (1 << 20)) return std::nullopt;
    if (v % d == 0) {
      unsigned e = 0;
      while (v % d == 0) {
        v /= d;
        ++e;
      }
      factors.emplace_back(d, e);
    }
    ++d;
  }
  if (v > 1) factors.emplace_back(v, 1);
  std::vector<BigInt> divs{BigInt(1)};
  for (const auto& [prime, mult] : factors) {
    std::size_t sz = divs.size();
    BigInt pw = 1;
    for (unsigned e = 1; e <= mult; ++e) {
      pw *= prime;
      for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pw);
    }
  }
  return divs;
}

// Divide squarefree s by (den*t - num) for the known root num/den.
// Synthetic division over the rationals, then denominators cleared.
IntPoly deflate(const IntPoly& s, const BigInt& num, const BigInt& den) {
  std::vector<Rational> qq(s.size() - 1);
  Rational carry = 0;
  for (std::size_t i = s.size(); i-- > 1;) {
    Rational coeff = Rational(s[i]) + carry;
    qq[i - 1] = coeff / Rational(den);
    carry = qq[i - 1] * Rational(num);
  }
  BigInt lcm = 1;
  for (const auto& c : qq) {
    lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(c));
  }
  IntPoly out(qq.size());
  for (std::size_t i = 0; i < qq.size(); ++i) {
    out[i] = boost::multiprecision::numerator(qq[i]) *
             (lcm / boost::multiprecision::denominator(qq[i]));
  }
  return ipoly_primitive(ipoly_trim(std::move(out)));
}

// Halve an isolating interval, keeping the half with the sign change.
// Upgrades to exact if the midpoint happens to be the root.
void bisect_interval(IsolatedRoot& r, const IntPoly& witness) {
  if (r.exact) return;
  Rational mid = (r.lo + r.hi) / 2;
  Rational vm = ipoly_eval(witness, mid);
  if (vm == 0) {
    r.exact = true;
    r.value = mid;
    return;
  }
  Rational vl = ipoly_eval(witness, r.lo);
  if (rat_sign(vl) != rat_sign(vm)) {
    r.hi = mid;
  } else {
    r.lo = mid;
  }
}

// Shrink r's interval until the rational point x lies outside it.
// Pre: x is not the root of the interval.
void refine_against(IsolatedRoot& r, const IntPoly& witness, const Rational& x) {
  while (!r.exact && r.lo <= x && x <= r.hi) bisect_interval(r, witness);
}

}  // namespace

std::vector<Rational> rational_roots(const IntPoly& p_in) {
  IntPoly p = ipoly_trim(p_in);
  if (ipoly_is_zero(p)) {
    throw InternalError("rational roots of the zero polynomial");
  }
  std::vector<Rational> out;
  std::size_t v = 0;
  while (v < p.size() && p[v] == 0) ++v;
  if (v > 0) {
    out.push_back(Rational(0));
    p.erase(p.begin(), p.begin() + v);
  }
  IntPoly s = ipoly_squarefree_part(p);
  if (ipoly_degree(s) < 1) {
    return out;
  }
  if (ipoly_degree(s) == 1) {
    out.push_back(Rational(-s[0], s[1]));
    std::sort(out.begin(), out.end());
    return out;
  }
  auto dnum = all_divisors(ipoly_trailing(s));
  auto dden = all_divisors(ipoly_leading(s));
  if (!dnum || !dden) {
    throw InternalError("coefficient factorization exceeded the budget");
  }
  for (const auto& u : *dnum) {
    for (const auto& w : *dden) {
      for (int sgn : {1, -1}) {
        Rational cand(sgn * u, w);
        if (ipoly_eval(s, cand) == 0) {
          if (std::find(out.begin(), out.end(), cand) == out.end()) {
            out.push_back(cand);
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IsolatedRoot> isolate_positive_roots(const IntPoly& p_in,
                                                 const Rational& qmax) {
  IntPoly p = ipoly_trim(p_in);
  if (ipoly_is_zero(p)) {
    throw InternalError("cannot isolate roots of the zero polynomial");
  }
  if (qmax <= 0) return {};
  // Strip roots at 0.
  std::size_t v = 0;
  while (v < p.size() && p[v] == 0) ++v;
  p.erase(p.begin(), p.begin() + v);
  IntPoly s = ipoly_squarefree_part(p);

  std::vector<IsolatedRoot> out;
  if (ipoly_degree(s) <= 0) return out;

  bool unverified = false;
  if (ipoly_degree(s) == 1) {
    Rational root(-s[0], s[1]);
    if (root > 0 && root <= qmax) {
      IsolatedRoot r;
      r.exact = true;
      r.value = root;
      out.push_back(r);
    }
    return out;
  }

  // Rational roots via the rational-root theorem, then deflation.
  auto dnum = all_divisors(ipoly_trailing(s));
  auto dden = all_divisors(ipoly_leading(s));
  if (dnum && dden) {
    for (const auto& u : *dnum) {
      for (const auto& w : *dden) {
        Rational cand(u, w);
        if (cand <= 0 || cand > qmax) continue;
        while (ipoly_degree(s) >= 1 && ipoly_eval(s, cand) == 0) {
          IsolatedRoot r;
          r.exact = true;
          r.value = cand;
          out.push_back(r);
          s = deflate(s, boost::multiprecision::numerator(cand),
                      boost::multiprecision::denominator(cand));
          break;  // squarefree: each root appears once
        }
        if (ipoly_degree(s) < 1) break;
      }
      if (ipoly_degree(s) < 1) break;
    }
  } else {
    unverified = true;
  }

  // Sturm bisection for whatever is left.
  if (ipoly_degree(s) >= 1) {
    auto chain = sturm_chain(s);
    struct Task {
      Rational a, b;
      int count;
    };
    std::vector<Task> stack;
    // s(0) != 0 after stripping t^v; rational roots of the deflated part
    // were removed, so endpoints of bisection are only roots if the
    // rational search was skipped.
    Rational hi = qmax;
    int total = roots_in(chain, Rational(0), hi);
    if (total > 0) stack.push_back({Rational(0), hi, total});
    while (!stack.empty()) {
      Task t = stack.back();
      stack.pop_back();
      if (t.count == 1) {
        int sa = rat_sign(ipoly_eval(s, t.a));
        int sb = rat_sign(ipoly_eval(s, t.b));
        if (sb == 0) {
          IsolatedRoot r;
          r.exact = true;
          r.value = t.b;
          out.push_back(r);
          continue;
        }
        if (sa != 0 && sa != sb) {
          IsolatedRoot r;
          r.lo = t.a;
          r.hi = t.b;
          r.rationality_unverified = unverified;
          out.push_back(r);
          continue;
        }
      }
      Rational mid = (t.a + t.b) / 2;
      if (ipoly_eval(s, mid) == 0) {
        IsolatedRoot r;
        r.exact = true;
        r.value = mid;
        out.push_back(r);
        s = deflate(s, boost::multiprecision::numerator(mid),
                    boost::multiprecision::denominator(mid));
        chain = sturm_chain(s);
        int left = roots_in(chain, t.a, mid);
        int right = roots_in(chain, mid, t.b);
        if (left > 0) stack.push_back({t.a, mid, left});
        if (right > 0) stack.push_back({mid, t.b, right});
        continue;
      }
      int left = roots_in(chain, t.a, mid);
      int right = t.count - left;
      if (left > 0) stack.push_back({t.a, mid, left});
      if (right > 0) stack.push_back({mid, t.b, right});
    }
  }

  std::sort(out.begin(), out.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) {
    return a.upper() < b.upper() || (a.upper() == b.upper() && a.lower() < b.lower());
  });
  return out;
}

void RootSet::add_roots(const IntPoly& p, const Rational& qmax) {
  IntPoly s = ipoly_squarefree_part(ipoly_trim(p));
  for (auto& r : isolate_positive_roots(p, qmax)) insert(std::move(r), s);
}

void RootSet::insert(IsolatedRoot r, const IntPoly& witness) {
  // Keep interval lower bounds strictly positive (roots here are > 0).
  if (!r.exact) refine_against(r, witness, Rational(0));
  for (auto& e : entries_) {
    // Refine both intervals until they either coincide (same algebraic
    // number) or separate.
    for (;;) {
      if (e.root.exact && r.exact) {
        if (e.root.value == r.value) return;
        break;
      }
      if (e.root.upper() < r.lower() || r.upper() < e.root.lower()) break;
      if (e.root.exact && !r.exact) {
        if (ipoly_eval(witness, e.root.value) == 0 && r.lo < e.root.value &&
            e.root.value < r.hi) {
          return;  // same number
        }
        refine_against(r, witness, e.root.value);
        continue;
      }
      if (!e.root.exact && r.exact) {
        if (ipoly_eval(e.poly, r.value) == 0 && e.root.lo < r.value &&
            r.value < e.root.hi) {
          // The existing interval is this exact rational; upgrade it.
          e.root = r;
          e.poly.clear();
          return;
        }
        refine_against(e.root, e.poly, r.value);
        continue;
      }
      // Interval vs interval: a common root must divide the gcd.
      IntPoly g = ipoly_gcd(e.poly, witness);
      if (ipoly_degree(g) >= 1) {
        Rational lo = std::max(e.root.lo, r.lo);
        Rational hi = std::min(e.root.hi, r.hi);
        if (lo < hi) {
          auto common = sturm_chain(g);
          if (roots_in(common, lo, hi) > 0) return;  // same number
        }
      }
      bisect_interval(e.root, e.poly);
      bisect_interval(r, witness);
    }
  }
  Entry entry;
  entry.root = std::move(r);
  if (!entry.root.exact) entry.poly = witness;
  entries_.push_back(std::move(entry));
}

std::vector<IsolatedRoot> RootSet::sorted() const {
  std::vector<Entry> entries = entries_;
  // Separate all pairs so that ordering by interval bounds is total.
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      auto& a = entries[i];
      auto& b = entries[j];
      while (!(a.root.upper() < b.root.lower() ||
               b.root.upper() < a.root.lower())) {
        if (!a.root.exact) {
          bisect_interval(a.root, a.poly);
        } else if (!b.root.exact) {
          bisect_interval(b.root, b.poly);
        } else {
          break;  // distinct exact rationals are already separated
        }
      }
    }
  }
  std::vector<IsolatedRoot> out;
  out.reserve(entries.size());
  for (auto& e : entries) out.push_back(e.root);
  std::sort(out.begin(), out.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) {
    return a.upper() < b.upper() || (a.upper() == b.upper() && a.lower() < b.lower());
  });
  return out;
}

}  // namespace nhpoly
