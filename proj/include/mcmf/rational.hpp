#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcmf {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

// Parses "p", "-p" or "p/q" with a nonzero q.
inline Rat parse_rat(const std::string& text) {
  auto bad = [&] { throw InputError("bad rational literal: '" + text + "'"); };
  if (text.empty()) bad();
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rat(BigInt(text));
    }
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) bad();
    return Rat(num, den);
  } catch (const std::exception&) {
    bad();
  }
  return Rat();  // unreachable
}

inline std::string rat_str(const Rat& r) { return r.str(); }

inline BigInt floor_rat(const Rat& r) {
  BigInt num = numerator(r), den = denominator(r);  // den > 0
  BigInt q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

inline BigInt ceil_rat(const Rat& r) { return -floor_rat(-r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// A k-vector of exact rationals: one entry per commodity.
struct Vec {
  std::vector<Rat> e;

  Vec() = default;
  explicit Vec(std::size_t k) : e(k) {}
  Vec(std::initializer_list<Rat> init) : e(init) {}

  std::size_t dim() const { return e.size(); }
  Rat& operator[](std::size_t i) { return e[i]; }
  const Rat& operator[](std::size_t i) const { return e[i]; }

  Vec operator+(const Vec& o) const {
    Vec r(*this);
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
  }
  Vec operator-(const Vec& o) const {
    Vec r(*this);
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
    return r;
  }
  Vec operator-() const {
    Vec r(*this);
    for (auto& x : r.e) x = -x;
    return r;
  }
  Vec operator*(const Rat& s) const {
    Vec r(*this);
    for (auto& x : r.e) x *= s;
    return r;
  }
  bool operator==(const Vec& o) const { return e == o.e; }
  bool operator!=(const Vec& o) const { return e != o.e; }
  // Lexicographic; used for deterministic ordering, not the partial order.
  bool operator<(const Vec& o) const { return e < o.e; }

  bool is_zero() const {
    return std::all_of(e.begin(), e.end(), [](const Rat& x) { return x == 0; });
  }
  bool nonnegative() const {
    return std::all_of(e.begin(), e.end(), [](const Rat& x) { return x >= 0; });
  }
  // Elementwise partial order.
  bool leq(const Vec& o) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  bool integral() const {
    return std::all_of(e.begin(), e.end(), [](const Rat& x) { return is_integer(x); });
  }
};

inline Vec zero_vec(std::size_t k) { return Vec(k); }

inline std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) s += ",";
    s += rat_str(v[i]);
  }
  s += ")";
  return s;
}

inline Vec parse_vec(const std::string& text) {
  Vec v;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    std::string part = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    v.e.push_back(parse_rat(part));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return v;
}

}  // namespace mcmf
