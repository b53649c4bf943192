#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "tropimp/numeric.hpp"

namespace tth {

inline tropimp::IVec iv(std::initializer_list<long long> xs) {
  tropimp::IVec v;
  for (long long x : xs) v.push_back(tropimp::Int(x));
  return v;
}

inline tropimp::QVec qv(std::initializer_list<long long> xs) {
  tropimp::QVec v;
  for (long long x : xs) v.push_back(tropimp::Rat(x));
  return v;
}

inline tropimp::IMat im(std::initializer_list<std::initializer_list<long long>> rows) {
  tropimp::IMat m;
  for (auto& r : rows) m.push_back(iv(r));
  return m;
}

// Deterministic generator for property tests; raw engine output only, the
// distributions in <random> are not portable.
class Rng {
 public:
  explicit Rng(unsigned seed) : engine_(seed) {}
  long long below(long long n) { return static_cast<long long>(engine_() % n); }
  long long range(long long lo, long long hi) { return lo + below(hi - lo + 1); }

 private:
  std::mt19937 engine_;
};

inline std::vector<tropimp::IVec> random_points(Rng& rng, int dim, int count,
                                                long long lo, long long hi) {
  std::vector<tropimp::IVec> pts;
  for (int i = 0; i < count; ++i) {
    tropimp::IVec p(dim);
    for (int j = 0; j < dim; ++j) p[j] = tropimp::Int(rng.range(lo, hi));
    pts.push_back(std::move(p));
  }
  return pts;
}

}  // namespace tth
