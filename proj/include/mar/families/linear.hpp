#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mar/matroid.hpp"

namespace mar {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number with an arbitrary-precision numerator and
/// denominator. Always normalized: gcd(num, den) = 1 and den > 0.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}
  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw ContractError("rational with zero denominator");
    normalize();
  }

  /// Parses "p", "-p" or "p/q".
  static Rational parse(const std::string& text) {
    auto slash = text.find('/');
    try {
      if (slash == std::string::npos) return Rational(BigInt(text), 1);
      return Rational(BigInt(text.substr(0, slash)),
                      BigInt(text.substr(slash + 1)));
    } catch (const std::runtime_error&) {
      throw ContractError("malformed rational '" + text + "'");
    }
  }

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }
  bool is_integer() const noexcept { return den_ == 1; }

  Rational operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Rational operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  Rational operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
  }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw ContractError("rational division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
  }
  Rational operator-() const { return Rational(-num_, den_); }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }

  std::string to_string() const {
    std::string out = num_.str();
    if (den_ != 1) out += "/" + den_.str();
    return out;
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

/// The coefficient field of a linear representation: the rationals, or a
/// prime field GF(p).
struct Field {
  enum class Kind { rationals, prime };
  Kind kind = Kind::rationals;
  long long p = 0;

  static Field rationals() { return Field{Kind::rationals, 0}; }

  static Field gf(long long p) {
    if (p < 2) throw FamilyError("GF(p) needs p >= 2, got " + std::to_string(p));
    for (long long d = 2; d * d <= p; ++d)
      if (p % d == 0)
        throw FamilyError("GF(p) needs a prime p, got " + std::to_string(p) +
                          " = " + std::to_string(d) + " * " +
                          std::to_string(p / d));
    return Field{Kind::prime, p};
  }

  bool is_prime_field() const noexcept { return kind == Kind::prime; }

  std::string to_string() const {
    return is_prime_field() ? "gf" + std::to_string(p) : "rational";
  }
};

/// A list of column vectors over a common field. For GF(p) every entry must
/// be an integer; entries are reduced mod p.
struct VectorList {
  Field field;
  int dimension = 0;
  std::vector<std::vector<Rational>> vectors;

  void validate() const {
    if (dimension < 0) throw FamilyError("negative vector dimension");
    if (vectors.size() > static_cast<std::size_t>(kMaxGroundSize))
      throw FamilyError("vector list has " + std::to_string(vectors.size()) +
                        " vectors, more than the supported " +
                        std::to_string(kMaxGroundSize));
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (static_cast<int>(vectors[i].size()) != dimension)
        throw FamilyError("vector " + std::to_string(i) + " has " +
                          std::to_string(vectors[i].size()) +
                          " entries, expected " + std::to_string(dimension));
      if (field.is_prime_field())
        for (const Rational& x : vectors[i])
          if (!x.is_integer())
            throw FamilyError("vector " + std::to_string(i) +
                              " has a non-integer entry over " +
                              field.to_string());
    }
  }
};

namespace detail {

inline long long mod_reduce(const BigInt& v, long long p) {
  BigInt r = v % p;
  if (r < 0) r += p;
  return static_cast<long long>(r);
}

inline long long mod_inverse(long long a, long long p) {
  long long t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    long long q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  t %= p;
  if (t < 0) t += p;
  return t;
}

/// Row rank of a small matrix over GF(p) by Gaussian elimination.
inline int gf_rank(std::vector<std::vector<long long>> rows, long long p,
                   int cols) {
  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int pivot = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    long long inv = mod_inverse(rows[rank][c], p);
    for (int j = c; j < cols; ++j) rows[rank][j] = rows[rank][j] * inv % p;
    for (int i = rank + 1; i < static_cast<int>(rows.size()); ++i) {
      long long f = rows[i][c];
      if (f == 0) continue;
      for (int j = c; j < cols; ++j) {
        long long x = (rows[i][j] - f * rows[rank][j]) % p;
        rows[i][j] = x < 0 ? x + p : x;
      }
    }
    ++rank;
  }
  return rank;
}

/// Row rank of a small matrix of exact rationals.
inline int rat_rank(std::vector<std::vector<Rational>> rows, int cols) {
  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int pivot = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i)
      if (!rows[i][c].is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int i = rank + 1; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i][c].is_zero()) continue;
      Rational f = rows[i][c] / rows[rank][c];
      for (int j = c; j < cols; ++j)
        rows[i][j] = rows[i][j] - f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// Independence oracle for a validated vector list.
inline IndependenceOracle linear_oracle(const VectorList& v) {
  int dim = v.dimension;
  if (v.field.is_prime_field()) {
    long long p = v.field.p;
    int n = static_cast<int>(v.vectors.size());
    std::vector<std::vector<long long>> rows(n, std::vector<long long>(dim));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < dim; ++j)
        rows[i][j] = mod_reduce(v.vectors[i][j].num(), p);
    return [rows, p, dim](const Subset& s) {
      std::vector<std::vector<long long>> picked;
      picked.reserve(s.size());
      for (ElementId e : s) picked.push_back(rows[e]);
      return gf_rank(std::move(picked), p, dim) == static_cast<int>(s.size());
    };
  }
  std::vector<std::vector<Rational>> rows = v.vectors;
  return [rows, dim](const Subset& s) {
    std::vector<std::vector<Rational>> picked;
    picked.reserve(s.size());
    for (ElementId e : s) picked.push_back(rows[e]);
    return rat_rank(std::move(picked), dim) == static_cast<int>(s.size());
  };
}

}  // namespace detail

/// Linear matroid of a vector list: S is independent when its vectors are
/// linearly independent over the field. All arithmetic is exact.
inline Matroid linear_matroid(const VectorList& v) {
  v.validate();
  int n = static_cast<int>(v.vectors.size());
  std::string tag = "linear(" + v.field.to_string() + ",dim=" +
                    std::to_string(v.dimension) + ",n=" + std::to_string(n) +
                    ")";
  return Matroid(n, tag, detail::linear_oracle(v));
}

/// Cube matroid on the point set T^d: every tuple over T is taken as a
/// vector in F^d, so a set of tuples is independent when the tuples are
/// linearly independent, and the all-zero tuple is the unique loop.
/// Elements are ordered lexicographically by coordinates with T in its given
/// order and the leftmost coordinate most significant.
inline Matroid cube_matroid(const std::vector<Rational>& t_values, int d,
                            const Field& field) {
  int m = static_cast<int>(t_values.size());
  if (m < 2) throw FamilyError("cube matroid needs |T| >= 2");
  if (d < 2) throw FamilyError("cube matroid needs dimension d >= 2");
  bool has_zero = false;
  for (const Rational& x : t_values) has_zero = has_zero || x.is_zero();
  if (!has_zero) throw FamilyError("cube matroid needs 0 in T");
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      bool same = field.is_prime_field()
                      ? detail::mod_reduce(t_values[i].num(), field.p) ==
                            detail::mod_reduce(t_values[j].num(), field.p)
                      : t_values[i] == t_values[j];
      if (same) throw FamilyError("cube matroid needs distinct values in T");
    }
  long long total = 1;
  for (int i = 0; i < d; ++i) {
    total *= m;
    if (total > kMaxGroundSize)
      throw FamilyError("cube matroid ground set |T|^d exceeds " +
                        std::to_string(kMaxGroundSize) + " elements");
  }

  VectorList v;
  v.field = field;
  v.dimension = d;
  for (long long idx = 0; idx < total; ++idx) {
    std::vector<Rational> vec(d);
    long long rest = idx;
    for (int pos = d - 1; pos >= 0; --pos) {
      vec[pos] = t_values[rest % m];
      rest /= m;
    }
    v.vectors.push_back(std::move(vec));
  }
  v.validate();
  std::string tag = "cube(|T|=" + std::to_string(m) + ",d=" +
                    std::to_string(d) + "," + field.to_string() + ")";
  return Matroid(static_cast<int>(total), tag, detail::linear_oracle(v));
}

}  // namespace mar
