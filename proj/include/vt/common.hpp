#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace vt {

// Geometry and rate conventions shared across the pipeline.
constexpr int kNativeSize = 84;       // native MRI frame edge (pixels)
constexpr int kGridSize = 96;         // padded frame / heatmap edge
constexpr int kPadOffset = 6;         // (96 - 84) / 2
constexpr int kNumPoints = 95;        // tracked air-tissue boundary points
constexpr int kNumCoords = 2 * kNumPoints;
constexpr double kVideoRate = 83.33;  // frames per second
constexpr int kAudioRate = 16000;     // waveform sample rate
constexpr int kSamplesPerFrame = 192; // 16000 / 83.33, by convention

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

[[noreturn]] void fail(const std::string& msg, const char* file, int line);

#define VT_REQUIRE(cond, msg)                           \
  do {                                                  \
    if (!(cond)) ::vt::fail((msg), __FILE__, __LINE__); \
  } while (0)

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }

inline uint64_t mix_seed(uint64_t seed, uint64_t stream) {
  uint64_t z = seed ^ (stream + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic RNG (mt19937_64 core). Draws use explicit formulas instead
// of std distributions so streams do not depend on the standard library
// implementation.
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed) {
    mt_[0] = seed;
    for (int i = 1; i < kN; ++i)
      mt_[i] = 6364136223846793005ULL * (mt_[i - 1] ^ (mt_[i - 1] >> 62)) + i;
    idx_ = kN;
  }

  uint64_t next_u64() {
    if (idx_ >= kN) generate();
    uint64_t x = mt_[idx_++];
    x ^= (x >> 29) & 0x5555555555555555ULL;
    x ^= (x << 17) & 0x71d67fffeda60000ULL;
    x ^= (x << 37) & 0xfff7eee000000000ULL;
    x ^= x >> 43;
    return x;
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Inclusive bounds.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next_u64() % static_cast<uint64_t>(hi - lo + 1));
  }

  // Box-Muller; the paired value is cached.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * M_PI * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

  // Derives an independent stream from the construction seed, e.g. one per
  // epoch or per worker.
  Rng split(uint64_t stream) const { return Rng(mix_seed(seed_, stream)); }

  uint64_t seed() const { return seed_; }

 private:
  static constexpr int kN = 312;

  void generate() {
    constexpr uint64_t kLo = 0x7fffffffULL, kHi = ~kLo;
    for (int i = 0; i < kN; ++i) {
      uint64_t x = (mt_[i] & kHi) | (mt_[(i + 1) % kN] & kLo);
      mt_[i] = mt_[(i + 156) % kN] ^ (x >> 1);
      if (x & 1) mt_[i] ^= 0xb5026f5aa96619e9ULL;
    }
    idx_ = 0;
  }

  uint64_t seed_;
  uint64_t mt_[kN];
  int idx_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace vt
