#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace luroth {

/// Digit alphabet for a restricted expansion set: an explicit finite set,
/// a band {N1,...,N2}, or a ray {k, k+1, ...}. All digits are >= 2.
class DigitSet {
 public:
  enum class Kind { finite, band, ray };

  static DigitSet finite(std::vector<long> digits) {
    if (digits.empty()) throw std::domain_error("DigitSet: finite set must be nonempty");
    std::sort(digits.begin(), digits.end());
    digits.erase(std::unique(digits.begin(), digits.end()), digits.end());
    if (digits.front() < 2) throw std::domain_error("DigitSet: digits must be >= 2");
    DigitSet s;
    s.kind_ = Kind::finite;
    s.digits_ = std::move(digits);
    s.lo_ = s.digits_.front();
    s.hi_ = s.digits_.back();
    return s;
  }

  static DigitSet band(long n1, long n2) {
    if (n1 < 2 || n2 < n1) throw std::domain_error("DigitSet: band requires 2 <= N1 <= N2");
    DigitSet s;
    s.kind_ = Kind::band;
    s.lo_ = n1;
    s.hi_ = n2;
    return s;
  }

  static DigitSet ray(long k) {
    if (k < 2) throw std::domain_error("DigitSet: ray requires k >= 2");
    DigitSet s;
    s.kind_ = Kind::ray;
    s.lo_ = k;
    return s;
  }

  Kind kind() const { return kind_; }
  long lo() const { return lo_; }
  long hi() const {
    if (kind_ == Kind::ray) throw std::domain_error("DigitSet: ray has no upper digit");
    return hi_;
  }

  bool contains(long d) const {
    switch (kind_) {
      case Kind::finite:
        return std::binary_search(digits_.begin(), digits_.end(), d);
      case Kind::band:
        return lo_ <= d && d <= hi_;
      case Kind::ray:
        return d >= lo_;
    }
    return false;
  }

  bool is_singleton() const {
    return (kind_ == Kind::finite && digits_.size() == 1) || (kind_ == Kind::band && lo_ == hi_);
  }

  /// Finite sets and bands enumerate; rays throw.
  std::vector<long> enumerate() const {
    switch (kind_) {
      case Kind::finite:
        return digits_;
      case Kind::band: {
        std::vector<long> out;
        out.reserve(static_cast<size_t>(hi_ - lo_ + 1));
        for (long d = lo_; d <= hi_; ++d) out.push_back(d);
        return out;
      }
      case Kind::ray:
        throw std::domain_error("DigitSet: cannot enumerate a ray");
    }
    return {};
  }

  std::string str() const {
    switch (kind_) {
      case Kind::band:
        return "{" + std::to_string(lo_) + ".." + std::to_string(hi_) + "}";
      case Kind::ray:
        return "{" + std::to_string(lo_) + "..}";
      case Kind::finite: {
        std::string out = "{";
        for (size_t i = 0; i < digits_.size(); ++i) {
          if (i) out += ',';
          out += std::to_string(digits_[i]);
        }
        return out + "}";
      }
    }
    return "{}";
  }

 private:
  DigitSet() = default;
  Kind kind_ = Kind::band;
  std::vector<long> digits_;
  long lo_ = 2, hi_ = 2;
};

}  // namespace luroth
