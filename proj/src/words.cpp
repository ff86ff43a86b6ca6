#include "luroth/words.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace luroth {

namespace {

void require_digits(const std::vector<long>& ds) {
  for (long d : ds)
    if (d < 2) throw std::domain_error("word digit must be >= 2");
}

// Shrinks the period to its primitive block.
void minimise_period(std::vector<long>& period) {
  const size_t n = period.size();
  for (size_t p = 1; p <= n / 2; ++p) {
    if (n % p != 0) continue;
    bool repeats = true;
    for (size_t i = p; i < n && repeats; ++i) repeats = (period[i] == period[i - p]);
    if (repeats) {
      period.resize(p);
      return;
    }
  }
}

}  // namespace

LurothWord canonical_word(std::vector<long> preperiod, std::vector<long> period) {
  if (period.empty()) throw std::domain_error("word period must be nonempty");
  require_digits(preperiod);
  require_digits(period);
  minimise_period(period);
  // Absorb a preperiod tail that merely repeats the cycle: while the last
  // preperiod digit equals the last period digit, rotate the cycle right
  // and drop that digit. The digit sequence is unchanged.
  while (!preperiod.empty() && preperiod.back() == period.back()) {
    period.insert(period.begin(), period.back());
    period.pop_back();
    preperiod.pop_back();
  }
  return LurothWord{std::move(preperiod), std::move(period)};
}

Rat periodic_digit_value(long d) {
  if (d < 2) throw std::domain_error("digit must be >= 2");
  return Rat(mpz_class(d) - 1, mpz_class(d) * (d - 1) - 1);
}

Rat eval_word(const LurothWord& w) {
  if (w.period.empty()) throw std::domain_error("word period must be nonempty");
  require_digits(w.preperiod);
  require_digits(w.period);

  // One pass over a digit block: value of the finite sum plus the
  // contraction factor prod 1/(d(d-1)).
  auto block = [](const std::vector<long>& ds) {
    Rat value(0), scale(1);
    for (long d : ds) {
      value += scale / Rat(d);
      scale *= Rat(1, 1) / Rat(mpz_class(d) * (d - 1));
    }
    return std::pair<Rat, Rat>(value, scale);
  };

  auto [head, head_scale] = block(w.preperiod);
  auto [body, body_scale] = block(w.period);
  // Geometric tail: body + body*r + body*r^2 + ... with r = body_scale < 1.
  const Rat tail = body / (Rat(1) - body_scale);
  return head + head_scale * tail;
}

long digit_of(const Rat& x) {
  if (x.sign() <= 0 || x > Rat(1)) throw std::domain_error("digit_of: x must lie in (0,1]");
  // d is the least integer with 1/d < x, i.e. d = floor(1/x) + 1; the
  // matching bound x <= 1/(d-1) holds because d-1 = floor(1/x) <= 1/x.
  const mpz_class d = inv(x).floor() + 1;
  if (!d.fits_slong_p()) throw std::domain_error("digit_of: digit exceeds machine range");
  return d.get_si();
}

Rat luroth_map(const Rat& x) {
  const long d = digit_of(x);  // validates the domain
  return Rat(d - 1) * (Rat(d) * x - Rat(1));
}

LurothWord expand(const Rat& x) {
  if (x.sign() <= 0 || x > Rat(1)) throw std::domain_error("expand: x must lie in (0,1]");
  std::vector<long> digits;
  std::map<Rat, size_t> seen;  // orbit value -> index of first visit
  Rat t = x;
  while (true) {
    auto [it, fresh] = seen.emplace(t, digits.size());
    if (!fresh) {
      const size_t start = it->second;
      std::vector<long> pre(digits.begin(), digits.begin() + static_cast<long>(start));
      std::vector<long> per(digits.begin() + static_cast<long>(start), digits.end());
      return canonical_word(std::move(pre), std::move(per));
    }
    const long d = digit_of(t);
    digits.push_back(d);
    t = Rat(d - 1) * (Rat(d) * t - Rat(1));
  }
}

Rat chevron_left(long d, long N2) {
  if (d < 2 || N2 < 2) throw std::domain_error("chevron: digits must be >= 2");
  return Rat(1, d) + Rat(1, 1) / Rat(mpz_class(d) * (d - 1)) * periodic_digit_value(N2);
}

Rat chevron_right(long d, long N1) {
  if (d < 2 || N1 < 2) throw std::domain_error("chevron: digits must be >= 2");
  return Rat(1, d) + Rat(1, 1) / Rat(mpz_class(d) * (d - 1)) * periodic_digit_value(N1);
}

}  // namespace luroth
