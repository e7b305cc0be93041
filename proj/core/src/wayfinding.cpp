#include "guideglass/wayfinding.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace guideglass {

namespace {

double sanitize(double z) { return is_valid_depth(z) ? z : kNoReturn; }

bool sample_passes(double z, double lo, double hi, double delta)
{
  return is_valid_depth(z) && z > delta && z >= lo && z <= hi;
}

// Range min/max over a fixed array in O(1) per query after O(n log n) setup.
class RangeExtrema
{
public:
  explicit RangeExtrema(const std::vector<double> & values)
  {
    const std::size_t n = values.size();
    levels_ = n == 0 ? 0 : static_cast<std::size_t>(std::bit_width(n));
    mins_.assign(levels_, {});
    maxs_.assign(levels_, {});
    if (n == 0) {
      return;
    }
    mins_[0].resize(n);
    maxs_[0].resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      mins_[0][i] = maxs_[0][i] = sanitize(values[i]);
    }
    for (std::size_t lvl = 1; lvl < levels_; ++lvl) {
      const std::size_t half = std::size_t{1} << (lvl - 1);
      const std::size_t count = n - (std::size_t{1} << lvl) + 1;
      mins_[lvl].resize(count);
      maxs_[lvl].resize(count);
      for (std::size_t i = 0; i < count; ++i) {
        mins_[lvl][i] = std::min(mins_[lvl - 1][i], mins_[lvl - 1][i + half]);
        maxs_[lvl][i] = std::max(maxs_[lvl - 1][i], maxs_[lvl - 1][i + half]);
      }
    }
  }

  // Inclusive range [first, last].
  std::pair<double, double> query(std::size_t first, std::size_t last) const
  {
    const std::size_t len = last - first + 1;
    const std::size_t lvl = static_cast<std::size_t>(std::bit_width(len)) - 1;
    const std::size_t second = last + 1 - (std::size_t{1} << lvl);
    return {std::min(mins_[lvl][first], mins_[lvl][second]),
            std::max(maxs_[lvl][first], maxs_[lvl][second])};
  }

private:
  std::size_t levels_{0};
  std::vector<std::vector<double>> mins_;
  std::vector<std::vector<double>> maxs_;
};

std::string_view trim(std::string_view s)
{
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

bool is_valid_depth(double z) { return std::isfinite(z) && z > 0.0; }

void WayfindingConfig::validate() const
{
  if (!(width_m > 0.0)) {
    throw std::invalid_argument("wayfinding: traversable width must be positive");
  }
  if (!(epsilon >= 0.0)) {
    throw std::invalid_argument("wayfinding: epsilon must be non-negative");
  }
  if (!(delta > 0.0)) {
    throw std::invalid_argument("wayfinding: delta must be positive");
  }
  if (run_of < 1) {
    throw std::invalid_argument("wayfinding: run_of must be at least 1");
  }
}

int window_span_px(double z, const WayfindingConfig & cfg, const CameraIntrinsics & k)
{
  const double d = window_width_px(z, cfg.width_m, k);
  // Far beyond any sensor width; keeps the cast defined for tiny depths.
  constexpr double kCap = 1 << 28;
  return static_cast<int>(std::ceil(std::min(d, kCap)));
}

bool window_fits(const DepthScanLine & line, int start_col, const WayfindingConfig & cfg,
                 const CameraIntrinsics & k)
{
  if (start_col < 0 || static_cast<std::size_t>(start_col) >= line.size()) {
    return false;
  }
  const double anchor = line.depths[static_cast<std::size_t>(start_col)];
  if (!is_valid_depth(anchor)) {
    return false;
  }
  const long long last = static_cast<long long>(start_col) + window_span_px(anchor, cfg, k);
  return last < static_cast<long long>(line.size());
}

bool window_traversable(const DepthScanLine & line, int start_col, const WayfindingConfig & cfg,
                        const CameraIntrinsics & k)
{
  if (start_col < 0 || static_cast<std::size_t>(start_col) >= line.size()) {
    throw std::out_of_range("window_traversable: start column outside the scan line");
  }
  const double anchor = line.depths[static_cast<std::size_t>(start_col)];
  if (!is_valid_depth(anchor)) {
    return false;
  }
  if (!window_fits(line, start_col, cfg, k)) {
    throw std::invalid_argument("window_traversable: window extends past the scan line");
  }
  const int span = window_span_px(anchor, cfg, k);
  if (span + 1 < cfg.run_of) {
    // No complete group of run_of samples exists to certify the window.
    return false;
  }
  const double lo = anchor - cfg.epsilon;
  const double hi = anchor + cfg.epsilon;
  // With at least run_of samples, "every run_of-group passes" is the same as
  // "every sample passes".
  for (int c = start_col; c <= start_col + span; ++c) {
    if (!sample_passes(line.depths[static_cast<std::size_t>(c)], lo, hi, cfg.delta)) {
      return false;
    }
  }
  return true;
}

std::vector<bool> traversable_starts(const DepthScanLine & line, const WayfindingConfig & cfg,
                                     const CameraIntrinsics & k)
{
  const std::size_t n = line.size();
  std::vector<bool> starts(n, false);
  if (n == 0) {
    return starts;
  }
  const RangeExtrema extrema(line.depths);
  for (std::size_t s = 0; s < n; ++s) {
    const double anchor = line.depths[s];
    if (!is_valid_depth(anchor)) {
      continue;
    }
    const int span = window_span_px(anchor, cfg, k);
    if (s + static_cast<std::size_t>(span) >= n || span + 1 < cfg.run_of) {
      continue;
    }
    const auto [lo_val, hi_val] = extrema.query(s, s + static_cast<std::size_t>(span));
    starts[s] = lo_val > cfg.delta && lo_val >= anchor - cfg.epsilon && hi_val <= anchor + cfg.epsilon;
  }
  return starts;
}

CandidateSet extract_candidates(const DepthScanLine & line, const WayfindingConfig & cfg,
                                const CameraIntrinsics & k)
{
  CandidateSet out;
  const std::vector<bool> starts = traversable_starts(line, cfg, k);
  const std::size_t n = line.size();

  auto emit = [&](std::size_t first, std::size_t last) {
    double z_ref = std::numeric_limits<double>::infinity();
    for (std::size_t c = first; c <= last; ++c) {
      z_ref = std::min(z_ref, line.depths[c]);
    }
    Candidate cand;
    cand.u_start = static_cast<int>(first);
    cand.u_end = static_cast<int>(last);
    cand.alpha = steering_angle(static_cast<double>(first), static_cast<double>(last), k);
    cand.z_ref = z_ref;
    cand.width_m = z_ref * static_cast<double>(last - first) / k.f;
    out.candidates.push_back(cand);
  };

  bool open = false;
  std::size_t run_first = 0;
  std::size_t run_last = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (!starts[s]) {
      continue;
    }
    const std::size_t last = s + static_cast<std::size_t>(window_span_px(line.depths[s], cfg, k));
    if (open && s <= run_last + 1) {
      run_last = std::max(run_last, last);
      continue;
    }
    if (open) {
      emit(run_first, run_last);
    }
    open = true;
    run_first = s;
    run_last = last;
  }
  if (open) {
    emit(run_first, run_last);
  }
  return out;
}

std::vector<bool> traversability_mask(const CandidateSet & set, std::size_t width)
{
  std::vector<bool> mask(width, false);
  for (const auto & c : set.candidates) {
    for (int u = std::max(c.u_start, 0); u <= c.u_end && static_cast<std::size_t>(u) < width; ++u) {
      mask[static_cast<std::size_t>(u)] = true;
    }
  }
  return mask;
}

DepthScanLine parse_scanline_csv(std::string_view row, int row_index)
{
  DepthScanLine line;
  line.row = row_index;
  row = trim(row);
  if (row.empty()) {
    throw std::invalid_argument("scan line: empty row");
  }
  while (true) {
    const std::size_t comma = row.find(',');
    const std::string_view field = trim(row.substr(0, comma));
    long long mm = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), mm);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
      throw std::invalid_argument("scan line: '" + std::string(field) + "' is not an integer millimetre value");
    }
    if (mm < 0) {
      throw std::invalid_argument("scan line: negative depth");
    }
    line.depths.push_back(mm == 0 ? kNoReturn : static_cast<double>(mm) / 1000.0);
    if (comma == std::string_view::npos) {
      break;
    }
    row.remove_prefix(comma + 1);
  }
  return line;
}

std::string format_scanline_csv(const DepthScanLine & line)
{
  std::string out;
  out.reserve(line.size() * 5);
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (i != 0) {
      out.push_back(',');
    }
    const double z = line.depths[i];
    const long long mm = is_valid_depth(z) ? std::llround(z * 1000.0) : 0;
    out += std::to_string(mm);
  }
  return out;
}

}  // namespace guideglass
