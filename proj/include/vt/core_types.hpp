#pragma once

#include <array>
#include <string>
#include <vector>

#include "vt/common.hpp"

namespace vt {

// One grayscale midsagittal MRI frame, row-major, intensities in [0, 1].
// Native frames are 84x84; padded frames are 96x96 with the native content
// centered (6 px zero border).
struct Frame {
  int height = 0;
  int width = 0;
  bool padded = false;
  std::vector<float> pixels;

  float at(int y, int x) const { return pixels[static_cast<size_t>(y) * width + x]; }
  float& at(int y, int x) { return pixels[static_cast<size_t>(y) * width + x]; }
  size_t size() const { return pixels.size(); }
};

Frame make_frame(int height, int width, float fill = 0.0f);

// 95 articulator points in padded-frame pixel units.
// Convention: x = column, y = row, origin at the top-left; pixel centers sit
// at integer coordinates.
struct KeypointSet {
  std::array<Vec2, kNumPoints> pts{};

  Vec2& operator[](int i) { return pts[i]; }
  const Vec2& operator[](int i) const { return pts[i]; }
};

struct Trajectory {
  std::string clip_id;
  double frame_rate = kVideoRate;
  std::vector<KeypointSet> frames;

  int length() const { return static_cast<int>(frames.size()); }
};

enum class HeatmapKind { kLogits, kProbabilities, kGaussianTarget };

// 95 per-point score grids over the 96x96 padded frame, row-major per grid.
struct HeatmapStack {
  HeatmapKind kind = HeatmapKind::kLogits;
  std::vector<float> data;  // kNumPoints * kGridSize * kGridSize

  HeatmapStack() = default;
  explicit HeatmapStack(HeatmapKind k)
      : kind(k), data(static_cast<size_t>(kNumPoints) * kGridSize * kGridSize, 0.0f) {}

  float* grid(int i) { return data.data() + static_cast<size_t>(i) * kGridSize * kGridSize; }
  const float* grid(int i) const {
    return data.data() + static_cast<size_t>(i) * kGridSize * kGridSize;
  }
  static constexpr int grid_size() { return kGridSize * kGridSize; }
};

// Per-point loss weights: speech importance times movement std (pixels).
struct ArticulatorWeights {
  std::array<double, kNumPoints> importance{};
  std::array<double, kNumPoints> movement_std{};

  double combined(int i) const { return importance[i] * movement_std[i]; }
  static ArticulatorWeights uniform();
};

struct AudioClip {
  int sample_rate = kAudioRate;
  std::vector<float> samples;  // mono, [-1, 1]

  double duration_s() const {
    return static_cast<double>(samples.size()) / sample_rate;
  }
};

// F0 per video frame (Hz); unvoiced frames are 0.
struct PitchContour {
  std::vector<float> f0;

  int length() const { return static_cast<int>(f0.size()); }
};

struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> warnings;

  bool ok() const { return violations.empty(); }
};

// Checks the paired video/audio invariants: frame shapes and ranges, point
// ranges, sample rate, and the 192-samples-per-frame length contract.
ValidationReport validate_pair(const std::vector<Frame>& frames, const AudioClip& audio);

// 84x84 -> 96x96, native content at rows/cols [6, 90), zero border.
Frame pad_frame(const Frame& f);

// 96x96 -> 84x84 center crop; inverse of pad_frame.
Frame crop_frame(const Frame& f);

// Keypoints annotated on the native frame move with the padding offset.
KeypointSet shift_keypoints(const KeypointSet& pts, double dx, double dy);

// Per-frame min-max normalization to [0, 1]; constant frames become zeros.
void normalize_frame_intensity(Frame& f);

bool keypoints_in_bounds(const KeypointSet& pts);

ValidationReport validate_pitch(const PitchContour& pitch);

}  // namespace vt
