#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "guideglass/geometry.hpp"

namespace guideglass {

/// Depth value marking an invalid or out-of-range sample.
inline constexpr double kNoReturn = 0.0;

bool is_valid_depth(double z);

/// One image row of depth samples (meters), one per pixel column.
struct DepthScanLine
{
  std::vector<double> depths;
  int row{0};

  std::size_t size() const { return depths.size(); }
};

struct WayfindingConfig
{
  double width_m{0.6};   // traversable threshold w
  double epsilon{0.04};  // depth tolerance band half-width
  double delta{1.5};     // minimum admissible depth
  int run_of{5};         // consecutive samples per group

  void validate() const;
};

/// A maximal traversable run of the scan line and the direction through its centre.
struct Candidate
{
  double alpha{0.0};    // radians, positive = right
  double width_m{0.0};  // metric width at the run's minimum depth
  int u_start{0};       // first column of the run (inclusive)
  int u_end{0};         // last column of the run (inclusive)
  double z_ref{0.0};    // minimum depth inside the run
};

struct CandidateSet
{
  std::vector<Candidate> candidates;  // ordered by u_start

  bool empty() const { return candidates.empty(); }
  std::size_t size() const { return candidates.size(); }
};

/// Number of pixel steps the adaptive window spans when anchored at depth z:
/// ceil(f * w / z). The window covers columns [start, start + span] inclusive,
/// so its outer sample centres are at least w meters apart at the anchor depth.
int window_span_px(double z, const WayfindingConfig & cfg, const CameraIntrinsics & k);

/// True when the window anchored at start_col fits inside the line.
/// An invalid anchor never fits.
bool window_fits(const DepthScanLine & line, int start_col, const WayfindingConfig & cfg,
                 const CameraIntrinsics & k);

/// Traversability indicator for the window anchored at start_col: every group of
/// run_of consecutive samples between the anchor n and the boundary m must lie in
/// [z_n - epsilon, z_n + epsilon] and beyond delta. An invalid anchor yields false.
/// Throws std::out_of_range if start_col is outside the line, and
/// std::invalid_argument if the window does not fit.
bool window_traversable(const DepthScanLine & line, int start_col, const WayfindingConfig & cfg,
                        const CameraIntrinsics & k);

/// Evaluates the indicator for every start column at once (false where the
/// window does not fit). Uses range-min/max tables, O(n log n).
std::vector<bool> traversable_starts(const DepthScanLine & line, const WayfindingConfig & cfg,
                                     const CameraIntrinsics & k);

/// Slides the adaptive window over the whole line, merges overlapping or touching
/// traversable windows into maximal runs, and emits one Candidate per run.
CandidateSet extract_candidates(const DepthScanLine & line, const WayfindingConfig & cfg,
                                const CameraIntrinsics & k);

/// Per-column mask: true where some candidate run covers the column.
std::vector<bool> traversability_mask(const CandidateSet & set, std::size_t width);

/// Millimetre CSV row (NO_RETURN = 0). Throws std::invalid_argument on bad input.
DepthScanLine parse_scanline_csv(std::string_view row, int row_index = 0);
std::string format_scanline_csv(const DepthScanLine & line);

}  // namespace guideglass
