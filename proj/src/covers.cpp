#include "luroth/covers.hpp"

#include <stdexcept>

namespace luroth {

IntervalUnion level_cover(const DigitSet& band, int n, std::size_t max_parts) {
  if (band.kind() != DigitSet::Kind::band || band.is_singleton())
    throw std::domain_error("level_cover: expects a band with N1 < N2");
  if (n < 0) throw std::domain_error("level_cover: level must be >= 0");
  const long N1 = band.lo(), N2 = band.hi();
  const long period = N2 - N1;

  struct Piece {
    Interval span;
    long phase;
  };
  auto canon = [&](long phase) {
    return Interval(chevron_left(N2, N2), chevron_right(N1 + phase, N1));
  };

  std::vector<Piece> level{{canon(0), 0}};
  for (int step = 0; step < n; ++step) {
    if (level.size() > max_parts / 2)
      throw std::length_error("level_cover: depth too large for the configured part ceiling");
    std::vector<Piece> next;
    next.reserve(level.size() * 2);
    for (const auto& piece : level) {
      const Interval c = canon(piece.phase);
      const long d = N1 + piece.phase;
      const Interval cl = canon(piece.phase + 1);
      const Interval cr(chevron_left(d, N2), chevron_right(d, N1));
      const Rat scale = piece.span.length() / c.length();
      auto m = [&](const Rat& t) { return piece.span.lo + (t - c.lo) * scale; };
      const long left_phase = (piece.phase + 1 < period) ? piece.phase + 1 : 0;
      next.push_back({Interval(piece.span.lo, m(cl.hi)), left_phase});
      next.push_back({Interval(m(cr.lo), piece.span.hi), 0});
    }
    level = std::move(next);
  }
  std::vector<Interval> parts;
  parts.reserve(level.size());
  for (auto& p : level) parts.push_back(std::move(p.span));
  return IntervalUnion::of(std::move(parts), max_parts);
}

GapCertificate certify_gap(const DigitSet& band_a, int depth_a, const DigitSet& band_b,
                           int depth_b, std::size_t max_parts) {
  GapCertificate cert;
  cert.N1a = band_a.lo();
  cert.N2a = band_a.hi();
  cert.N1b = band_b.lo();
  cert.N2b = band_b.hi();
  cert.depth_a = depth_a;
  cert.depth_b = depth_b;
  cert.max_parts = max_parts;
  cert.cover_a = level_cover(band_a, depth_a, max_parts);
  cert.cover_b = level_cover(band_b, depth_b, max_parts);
  cert.sum = minkowski(cert.cover_a, cert.cover_b, max_parts);
  cert.folded = mod1(cert.sum);
  cert.gaps = gaps_mod1(cert.folded);
  return cert;
}

MemberCertificate certify_member(const std::vector<std::pair<LurothWord, DigitSet>>& words,
                                 const Rat& target) {
  MemberCertificate cert;
  cert.target = target;
  cert.sum = Rat(0);
  bool all_ok = true;
  for (const auto& [word, alphabet] : words) {
    MemberCertificate::Summand s{word, alphabet, eval_word(word), true, 0};
    for (long d : word.preperiod)
      if (!alphabet.contains(d)) { s.digits_ok = false; s.offending_digit = d; break; }
    if (s.digits_ok)
      for (long d : word.period)
        if (!alphabet.contains(d)) { s.digits_ok = false; s.offending_digit = d; break; }
    all_ok = all_ok && s.digits_ok;
    cert.sum += s.value;
    cert.summands.push_back(std::move(s));
  }
  cert.verified = all_ok && cert.sum == target;
  return cert;
}

}  // namespace luroth
