#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "vpdg/diagnostics.hpp"

namespace vpdg {

namespace {

// Vertex of the parabola through three (possibly unevenly spaced) samples.
void refine(double t0, double y0, double t1, double y1, double t2, double y2, double& tp, double& yp) {
  const double d01 = (y1 - y0) / (t1 - t0);
  const double d12 = (y2 - y1) / (t2 - t1);
  const double a = (d12 - d01) / (t2 - t0);
  if (!(a < 0.0)) {
    tp = t1;
    yp = y1;
    return;
  }
  const double b = d01 - a * (t0 + t1);
  tp = std::clamp(-b / (2.0 * a), t0, t2);
  yp = y1 + (tp - t1) * (d01 + a * (tp - t0));
}

}  // namespace

void find_peaks(const std::vector<double>& t, const std::vector<double>& y, const PeakOptions& opt,
                std::vector<double>& times, std::vector<double>& values) {
  if (t.size() != y.size()) throw std::invalid_argument("time and value series differ in length");
  times.clear();
  values.clear();
  const std::size_t n = y.size();
  std::vector<std::size_t> idx;
  if (opt.include_initial && n >= 2 && y[0] > y[1]) idx.push_back(0);
  for (std::size_t i = 1; i + 1 < n; ++i)
    if (y[i] > y[i - 1] && y[i] >= y[i + 1]) idx.push_back(i);

  for (std::size_t c = 0; c < idx.size(); ++c) {
    const std::size_t i = idx[c];
    if (opt.window > 0.0) {
      // Dominance is judged against the other local maxima, so a weak peak on a decaying tail survives.
      bool dominant = true;
      for (std::size_t d = c; d-- > 0 && t[i] - t[idx[d]] <= opt.window;)
        if (y[idx[d]] > y[i]) dominant = false;
      for (std::size_t d = c + 1; d < idx.size() && t[idx[d]] - t[i] <= opt.window; ++d)
        if (y[idx[d]] > y[i]) dominant = false;
      if (!dominant) continue;
    }
    double tp = t[i], yp = y[i];
    if (i > 0) refine(t[i - 1], y[i - 1], t[i], y[i], t[i + 1], y[i + 1], tp, yp);
    times.push_back(tp);
    values.push_back(yp);
  }
}

PeakFit peak_fit(const std::vector<double>& t, const std::vector<double>& y, const PeakOptions& opt) {
  PeakFit fit;
  find_peaks(t, y, opt, fit.peak_times, fit.peak_values);
  const int total = static_cast<int>(fit.peak_times.size());
  const int first = std::max(opt.first, 1);
  const int last = opt.last > 0 ? opt.last : total;
  if (last > total || last - first < 1) {
    fit.message = "not enough peaks: found " + std::to_string(total) + ", need " + std::to_string(std::max(last, first + 1));
    return fit;
  }
  const int m = last - first + 1;
  double st = 0.0, sy = 0.0;
  for (int k = first - 1; k < last; ++k) {
    if (!(fit.peak_values[k] > 0.0)) {
      fit.message = "non-positive peak value in fit range";
      return fit;
    }
    st += fit.peak_times[k];
    sy += std::log(fit.peak_values[k]);
  }
  const double tm = st / m, ym = sy / m;
  double num = 0.0, den = 0.0;
  for (int k = first - 1; k < last; ++k) {
    const double dt = fit.peak_times[k] - tm;
    num += dt * (std::log(fit.peak_values[k]) - ym);
    den += dt * dt;
  }
  fit.rate = num / den;
  fit.period = (fit.peak_times[last - 1] - fit.peak_times[first - 1]) / (m - 1);
  fit.frequency = std::numbers::pi / fit.period;
  fit.ok = true;
  return fit;
}

double autocorrelation_period(const std::vector<double>& t, const std::vector<double>& y, double max_lag,
                              double threshold) {
  if (t.size() != y.size()) throw std::invalid_argument("time and value series differ in length");
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (t.size() < 3 || !(max_lag > 0.0)) return nan;

  // Resample onto a uniform grid no coarser than the mean input spacing.
  const double span = t.back() - t.front();
  const double h = std::min(span / static_cast<double>(t.size() - 1), max_lag / 200.0);
  const std::size_t n = static_cast<std::size_t>(span / h) + 1;
  std::vector<double> u(n);
  double mean = 0.0;
  for (std::size_t k = 0, s = 0; k < n; ++k) {
    const double tk = t.front() + static_cast<double>(k) * h;
    while (s + 2 < t.size() && t[s + 1] < tk) ++s;
    const double w = std::clamp((tk - t[s]) / (t[s + 1] - t[s]), 0.0, 1.0);
    u[k] = (1.0 - w) * y[s] + w * y[s + 1];
    mean += u[k];
  }
  mean /= static_cast<double>(n);
  for (double& x : u) x -= mean;

  const std::size_t lags = std::min(n - 1, static_cast<std::size_t>(max_lag / h) + 1);
  std::vector<double> ac(lags + 1);
  for (std::size_t l = 0; l <= lags; ++l) {
    double acc = 0.0;
    for (std::size_t k = 0; k + l < n; ++k) acc += u[k] * u[k + l];
    ac[l] = acc / static_cast<double>(n - l);
  }
  const double var = ac[0];
  if (!(var > 0.0)) return nan;
  for (double& a : ac) a /= var;

  // Skip the central lobe: sample jitter puts spurious maxima on it.
  std::size_t start = 1;
  while (start < lags && ac[start] > 0.0) ++start;
  for (std::size_t l = start; l < lags; ++l)
    if (ac[l] > threshold && ac[l] > ac[l - 1] && ac[l] >= ac[l + 1]) {
      double tp, yp;
      refine((l - 1) * h, ac[l - 1], l * h, ac[l], (l + 1) * h, ac[l + 1], tp, yp);
      return tp;
    }
  return nan;
}

}  // namespace vpdg
