#include "luroth/rational.hpp"

#include <cctype>

namespace luroth {

std::optional<Rat> Rat::parse(std::string_view s) {
  auto is_int = [](std::string_view t) {
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(s)) return std::nullopt;
    return Rat(mpz_class(std::string(s)));
  }
  const auto ns = s.substr(0, slash);
  const auto ds = s.substr(slash + 1);
  if (!is_int(ns) || !is_int(ds)) return std::nullopt;
  mpz_class den{std::string(ds)};
  if (den == 0) return std::nullopt;
  return Rat(mpz_class(std::string(ns)), den);
}

std::string Rat::str() const {
  std::string out = num().get_str();
  if (!is_integer()) {
    out += '/';
    out += den().get_str();
  }
  return out;
}

}  // namespace luroth
