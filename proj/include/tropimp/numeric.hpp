#pragma once

// Exact arithmetic base layer: arbitrary-precision integers and rationals,
// plus small helpers on dense integer/rational vectors. Everything in this
// project computes over Z and Q; there is no floating point anywhere.

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace tropimp {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;
using IMat = std::vector<IVec>;
using QMat = std::vector<QVec>;

// Raised for malformed or inadmissible input (bad syntax, violated
// preconditions on user-supplied data). CLI exit code 1.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a computation cannot be completed (degenerate fiber,
// inconsistent degree, fan is not dual to a polytope, ...). CLI exit code 2.
struct computation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Int dot(const IVec& a, const IVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat dot(const QVec& a, const QVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat dot(const IVec& a, const QVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

inline IVec add(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IVec sub(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline IVec negate(const IVec& a) {
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline QVec qadd(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline QVec qsub(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline bool is_zero(const IVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

inline bool is_zero(const QVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

inline QVec to_qvec(const IVec& a) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i]);
  return r;
}

// Scales a rational vector by the lcm of its denominators; the result is the
// unique primitive-direction-preserving integer representative times content.
inline IVec clear_denominators(const QVec& a) {
  Int l = 1;
  for (const auto& x : a) l = boost::multiprecision::lcm(l, denominator(x));
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = numerator(a[i]) * (l / denominator(a[i]));
  return r;
}

inline std::string to_string(const IVec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += v[i].str();
  }
  return s;
}

inline std::string to_string(const QVec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += v[i].str();
  }
  return s;
}

}  // namespace tropimp
