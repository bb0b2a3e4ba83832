#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace admdp {

// Deterministic random source. Distribution transforms are implemented
// inline (not via std:: distributions) so that a (seed, call sequence)
// pair reproduces bit-identically across standard library versions.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next() { return gen_(); }

  // Uniform in [0,1).
  double uniform() { return (next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n).
  int uniform_int(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }

  bool bernoulli(double p) { return uniform() < p; }

  // Exponential with rate lambda (mean 1/lambda).
  double exponential(double lambda) {
    double u;
    do {
      u = uniform();
    } while (u <= 0.0);
    return -std::log(u) / lambda;
  }

  // Inverse-CDF sample from an explicit probability vector.
  int sample(const std::vector<double>& probs) {
    double u = uniform();
    double acc = 0.0;
    for (size_t i = 0; i < probs.size(); ++i) {
      acc += probs[i];
      if (u < acc) return static_cast<int>(i);
    }
    return static_cast<int>(probs.size()) - 1;
  }

 private:
  std::mt19937_64 gen_;
};

// splitmix64, used to derive independent stream seeds.
inline uint64_t mix_seed(uint64_t seed, uint64_t stream) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace admdp
