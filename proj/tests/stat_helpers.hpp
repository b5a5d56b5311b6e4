#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace seqcoin::testing {

// chi2.ppf(0.999, df) for df = 1..120, frozen from an external
// high-precision evaluation.
inline double chi2_quantile_999(int df) {
  static const double kTable[] = {
      10.827566, 13.815511, 16.266236, 18.466827, 20.515006, 22.457744,
      24.321886, 26.124482, 27.877165, 29.588298, 31.264134, 32.909490,
      34.528179, 36.123274, 37.697298, 39.252355, 40.790217, 42.312396,
      43.820196, 45.314747, 46.797038, 48.267942, 49.728232, 51.178598,
      52.619656, 54.051962, 55.476020, 56.892285, 58.301173, 59.703064,
      61.098306, 62.487219, 63.870099, 65.247217, 66.618829, 67.985168,
      69.346452, 70.702887, 72.054663, 73.401958, 74.744938, 76.083763,
      77.418578, 78.749524, 80.076732, 81.400326, 82.720423, 84.037134,
      85.350565, 86.660815, 87.967980, 89.272151, 90.573412, 91.871847,
      93.167533, 94.460545, 95.750954, 97.038829, 98.324234, 99.607233,
      100.887885, 102.166248, 103.442377, 104.716325, 105.988143, 107.257880,
      108.525582, 109.791296, 111.055066, 112.316932, 113.576936, 114.835117,
      116.091513, 117.346161, 118.599095, 119.850350, 121.099959, 122.347954,
      123.594366, 124.839224, 126.082558, 127.324397, 128.564766, 129.803693,
      131.041204, 132.277323, 133.512074, 134.745481, 135.977567, 137.208354,
      138.437864, 139.666117, 140.893134, 142.118935, 143.343540, 144.566966,
      145.789233, 147.010358, 148.230359, 149.449253, 150.667056, 151.883784,
      153.099453, 154.314080, 155.527677, 156.740261, 157.951845, 159.162444,
      160.372071, 161.580740, 162.788463, 163.995253, 165.201123, 166.406085,
      167.610151, 168.813332, 170.015640, 171.217086, 172.417682, 173.617436};
  if (df < 1 || df > 120) throw std::out_of_range("chi2 table covers df in [1,120]");
  return kTable[df - 1];
}

inline double binomial_log_pmf(std::uint64_t n, std::uint64_t x, double p) {
  double nd = static_cast<double>(n), xd = static_cast<double>(x);
  return std::lgamma(nd + 1) - std::lgamma(xd + 1) - std::lgamma(nd - xd + 1) +
         xd * std::log(p) + (nd - xd) * std::log1p(-p);
}

struct Chi2Result {
  double statistic = 0;
  int df = 0;
  double quantile_999 = 0;
  bool pass = false;
};

// Goodness-of-fit of an observed head-count histogram against
// Binomial(n, p). Cells with expected count below `min_expected` are
// merged into the adjacent tail.
inline Chi2Result binomial_chi2(const std::vector<std::uint64_t>& observed,
                                std::uint64_t n, double p, double min_expected = 8.0) {
  std::uint64_t draws = 0;
  for (std::uint64_t c : observed) draws += c;

  std::vector<double> expected(n + 1);
  for (std::uint64_t x = 0; x <= n; ++x) {
    expected[x] = static_cast<double>(draws) * std::exp(binomial_log_pmf(n, x, p));
  }

  // Merge sparse tails.
  std::vector<double> exp_cells;
  std::vector<double> obs_cells;
  double exp_acc = 0, obs_acc = 0;
  for (std::uint64_t x = 0; x <= n; ++x) {
    exp_acc += expected[x];
    obs_acc += static_cast<double>(observed[x]);
    if (exp_acc >= min_expected) {
      exp_cells.push_back(exp_acc);
      obs_cells.push_back(obs_acc);
      exp_acc = obs_acc = 0;
    }
  }
  if (exp_acc > 0 || obs_acc > 0) {
    if (exp_cells.empty()) {
      exp_cells.push_back(exp_acc);
      obs_cells.push_back(obs_acc);
    } else {
      exp_cells.back() += exp_acc;
      obs_cells.back() += obs_acc;
    }
  }

  Chi2Result result;
  for (std::size_t c = 0; c < exp_cells.size(); ++c) {
    double diff = obs_cells[c] - exp_cells[c];
    result.statistic += diff * diff / exp_cells[c];
  }
  result.df = static_cast<int>(exp_cells.size()) - 1;
  result.quantile_999 = chi2_quantile_999(result.df);
  result.pass = result.statistic < result.quantile_999;
  return result;
}

}  // namespace seqcoin::testing
