// Copyright 2026 The nvps Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nvps/figures_of_merit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <unsupported/Eigen/LevenbergMarquardt>
#include <unsupported/Eigen/NumericalDiff>

#include "nvps/errors.hpp"
#include "nvps/units.hpp"

namespace nvps {

namespace {

// y(x) = b - a / (1 + ((x - x0) / (w / 2))^2), in normalised units.
struct LorentzianDip : Eigen::DenseFunctor<double> {
  LorentzianDip(const std::vector<double>& x, const std::vector<double>& y)
      : Eigen::DenseFunctor<double>(4, static_cast<int>(x.size())), x_(x), y_(y) {}

  int operator()(const InputType& p, ValueType& r) const {
    for (std::size_t i = 0; i < x_.size(); ++i) {
      const double u = (x_[i] - p(2)) / (0.5 * p(3));
      r(static_cast<Eigen::Index>(i)) = p(0) - p(1) / (1.0 + u * u) - y_[i];
    }
    return 0;
  }

  const std::vector<double>& x_;
  const std::vector<double>& y_;
};

// Linear-interpolated half-maximum crossings around index m.
std::optional<std::pair<double, double>> half_max_crossings(const OdmrCurve& c, std::size_t m,
                                                            double half) {
  std::size_t l = m, r = m;
  while (l > 0 && c.pl[l] < half) --l;
  while (r + 1 < c.pl.size() && c.pl[r] < half) ++r;
  if (c.pl[l] < half || c.pl[r] < half) return std::nullopt;
  auto cross = [&](std::size_t a, std::size_t b) {
    const double t = (half - c.pl[a]) / (c.pl[b] - c.pl[a]);
    return c.frequency[a] + t * (c.frequency[b] - c.frequency[a]);
  };
  return std::make_pair(cross(l, l + 1), cross(r, r - 1));
}

Dip analyse_dip(const OdmrCurve& c, std::size_t lo, std::size_t hi, double baseline) {
  const auto m = static_cast<std::size_t>(
      std::min_element(c.pl.begin() + static_cast<long>(lo), c.pl.begin() + static_cast<long>(hi) + 1) -
      c.pl.begin());
  Dip dip;
  dip.min_pl = c.pl[m];
  dip.depth = baseline - dip.min_pl;
  dip.center = c.frequency[m];

  const auto crossings = half_max_crossings(c, m, baseline - 0.5 * dip.depth);
  double width = crossings ? crossings->second - crossings->first : 0.0;
  if (crossings) dip.center = 0.5 * (crossings->first + crossings->second);
  dip.fwhm = width;

  // Fit window: +-1.5 estimated widths around the minimum, inside [lo, hi]
  // widened by the same amount.
  const double step = c.frequency[1] - c.frequency[0];
  const double half_window = 1.5 * std::max(width, 4.0 * step);
  std::vector<double> x, y;
  for (std::size_t i = 0; i < c.frequency.size(); ++i) {
    if (std::abs(c.frequency[i] - c.frequency[m]) <= half_window) {
      x.push_back((c.frequency[i] - c.frequency[m]) / step);
      y.push_back(c.pl[i] / baseline);
    }
  }
  if (x.size() >= 6) {
    LorentzianDip f(x, y);
    Eigen::NumericalDiff<LorentzianDip> nd(f);
    Eigen::LevenbergMarquardt<Eigen::NumericalDiff<LorentzianDip>> lm(nd);
    Eigen::VectorXd p(4);
    p << 1.0, dip.depth / baseline, (dip.center - c.frequency[m]) / step,
        std::max(width, 2.0 * step) / step;
    const auto status = lm.minimize(p);
    const bool ok = status != Eigen::LevenbergMarquardtSpace::ImproperInputParameters &&
                    p.allFinite() && p(1) > 0.0 && std::abs(p(3)) > 0.0 &&
                    std::abs(p(2)) * step <= half_window;
    if (ok) {
      dip.center = c.frequency[m] + p(2) * step;
      dip.fwhm = std::abs(p(3)) * step;
      dip.fitted = true;
    }
  }
  if (!(dip.fwhm > 0.0)) throw NoResonanceError("dip near " + std::to_string(c.frequency[m] * 1e-9) +
                                                " GHz is not resolved on the grid");
  return dip;
}

}  // namespace

double odmr_baseline(const OdmrCurve& curve, double margin) {
  curve.validate();
  if (!(margin > 0.0 && margin < 0.5)) throw UsageError("baseline margin must lie in (0, 0.5)");
  const std::size_t n = curve.pl.size();
  const auto edge = std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(margin * static_cast<double>(n))));
  double sum = 0.0;
  for (std::size_t i = 0; i < edge; ++i) sum += curve.pl[i] + curve.pl[n - 1 - i];
  return sum / static_cast<double>(2 * edge);
}

std::vector<Dip> find_dips(const OdmrCurve& curve, double baseline, const FomOptions& options) {
  curve.validate();
  const double min_pl = *std::min_element(curve.pl.begin(), curve.pl.end());
  const double depth = baseline - min_pl;
  if (!(depth > 1e-9 * baseline)) throw NoResonanceError("ODMR curve shows no dip below its baseline");
  const double level = baseline - options.dip_threshold * depth;
  std::vector<Dip> dips;
  std::size_t i = 0;
  const std::size_t n = curve.pl.size();
  while (i < n) {
    if (curve.pl[i] >= level) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < n && curve.pl[j + 1] < level) ++j;
    dips.push_back(analyse_dip(curve, i, j, baseline));
    i = j + 1;
  }
  if (dips.empty()) throw NoResonanceError("ODMR curve shows no resolvable dip");
  return dips;
}

double dc_sensitivity(double fwhm, double contrast, double pl_rate) {
  if (!(contrast > 0.0)) throw UndefinedSensitivityError("sensitivity undefined for zero contrast");
  if (!(pl_rate > 0.0)) throw UndefinedSensitivityError("sensitivity undefined for zero PL");
  return 4.0 * units::kPlanck * fwhm /
         (3.0 * std::sqrt(3.0) * units::kLandeG * units::kBohrMagneton * contrast * std::sqrt(pl_rate));
}

FiguresOfMerit odmr_figures_of_merit(const OdmrCurve& curve, const OdmrCurve* reference,
                                     const FomOptions& options) {
  FiguresOfMerit f;
  f.baseline = odmr_baseline(curve, options.baseline_margin);
  f.min_pl = *std::min_element(curve.pl.begin(), curve.pl.end());
  f.depth = f.baseline - f.min_pl;
  f.contrast = f.depth / f.baseline;
  f.dips = find_dips(curve, f.baseline, options);
  const auto deepest = std::max_element(f.dips.begin(), f.dips.end(),
                                        [](const Dip& a, const Dip& b) { return a.depth < b.depth; });
  f.fwhm = deepest->fwhm;
  f.sensitivity = dc_sensitivity(f.fwhm, f.contrast, f.baseline);
  if (reference) {
    const FiguresOfMerit r = odmr_figures_of_merit(*reference, nullptr, options);
    f.enhancement = Enhancements{f.baseline / r.baseline, f.depth / r.depth, f.contrast / r.contrast,
                                 r.sensitivity / f.sensitivity};
  }
  return f;
}

}  // namespace nvps
