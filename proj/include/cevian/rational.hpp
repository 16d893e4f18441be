#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace cevian {

using Int = mpz_class;
using Rat = mpq_class;

/// Parses "p", "-p" or "p/q" into an exact rational. Rejects q = 0.
inline std::optional<Rat> parse_rational(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::string str(s);
  const auto slash = str.find('/');
  try {
    if (slash == std::string::npos) {
      Int n(str);
      return Rat(n);
    }
    Int num(str.substr(0, slash));
    Int den(str.substr(slash + 1));
    if (den == 0) return std::nullopt;
    Rat r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

/// Serializes as "p" or "p/q", denominator always positive.
inline std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string to_string(const Int& n) { return n.get_str(); }

/// Clears denominators and common factors of a homogeneous rational triple.
/// Result: coprime integers, first nonzero entry positive. Triple must be
/// nonzero.
inline std::array<Int, 3> canonical_triple(Rat a, Rat b, Rat c) {
  a.canonicalize();
  b.canonicalize();
  c.canonicalize();
  Int l = lcm(lcm(a.get_den(), b.get_den()), c.get_den());
  std::array<Int, 3> t = {a.get_num() * (l / a.get_den()),
                          b.get_num() * (l / b.get_den()),
                          c.get_num() * (l / c.get_den())};
  Int g = gcd(gcd(t[0], t[1]), t[2]);
  if (g != 0) {
    for (auto& v : t) v /= g;
  }
  for (const auto& v : t) {
    if (v != 0) {
      if (v < 0)
        for (auto& w : t) w = -w;
      break;
    }
  }
  return t;
}

inline std::array<Int, 3> canonical_triple(const std::array<Rat, 3>& v) {
  return canonical_triple(v[0], v[1], v[2]);
}

/// FNV-1a, used for stable configuration fingerprints.
inline std::uint64_t fnv1a(std::string_view data, std::uint64_t h = 0xcbf29ce484222325ull) {
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace cevian
