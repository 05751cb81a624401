// Copyright 2026 The psl authors
//
// Licensed under the Apache License, Version 2.0 http://www.apache.org/licenses/LICENSE-2.0
//
// This code is provided *as is* basis, without warranties or conditions of any kind.

#include "psl/dsp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "psl/common.hpp"

namespace psl {

int MelConfig::win_samples() const {
  return int(std::lround(win_ms * 1e-3 * sample_rate_hz));
}

int MelConfig::hop_samples() const {
  return int(std::lround(hop_ms * 1e-3 * sample_rate_hz));
}

int MelConfig::fft_size() const {
  int n = 1;
  while (n < win_samples()) n <<= 1;
  return n;
}

void MelConfig::validate() const {
  if (n_mels < 1) throw ConfigError("features.n_mels must be >= 1");
  if (sample_rate_hz <= 0) throw ConfigError("features.sample_rate_hz must be > 0");
  if (!(hop_ms > 0.0) || win_ms < hop_ms)
    throw ConfigError("features.win_ms/hop_ms must satisfy win_ms >= hop_ms > 0");
  if (win_samples() < 1) throw ConfigError("features.win_ms too small for the sample rate");
  if (!(fmin_hz >= 0.0) || !(fmin_hz < fmax_hz) || fmax_hz > sample_rate_hz / 2.0 + 1e-9)
    throw ConfigError("features frequency bounds must satisfy 0 <= fmin < fmax <= sample_rate/2");
  if (!(log_floor > 0.0)) throw ConfigError("features.log_floor must be > 0");
}

uint64_t MelConfig::hash() const {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "mel|%d|%.9g|%.9g|%d|%.9g|%.9g|%.17g", n_mels, win_ms,
                hop_ms, sample_rate_hz, fmin_hz, fmax_hz, log_floor);
  return fnv1a64(std::string_view(buf));
}

double hz_to_mel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }

double mel_to_hz(double mel) { return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0); }

std::vector<double> mel_filterbank(const MelConfig& cfg) {
  cfg.validate();
  const int n_bins = cfg.n_bins();
  const double bin_hz = double(cfg.sample_rate_hz) / cfg.fft_size();

  // n_mels + 2 break frequencies, equally spaced on the mel scale.
  const double mel_lo = hz_to_mel(cfg.fmin_hz);
  const double mel_hi = hz_to_mel(cfg.fmax_hz);
  std::vector<double> breaks(size_t(cfg.n_mels) + 2);
  for (size_t m = 0; m < breaks.size(); ++m)
    breaks[m] = mel_to_hz(mel_lo + (mel_hi - mel_lo) * double(m) / double(cfg.n_mels + 1));

  std::vector<double> fb(size_t(cfg.n_mels) * n_bins, 0.0);
  for (int m = 0; m < cfg.n_mels; ++m) {
    const double left = breaks[size_t(m)];
    const double center = breaks[size_t(m) + 1];
    const double right = breaks[size_t(m) + 2];
    bool any = false;
    for (int k = 0; k < n_bins; ++k) {
      const double f = k * bin_hz;
      const double rising = (f - left) / (center - left);
      const double falling = (right - f) / (right - center);
      const double w = std::max(0.0, std::min(rising, falling));
      if (w > 0.0) any = true;
      fb[size_t(m) * n_bins + size_t(k)] = w;
    }
    if (!any)
      throw ConfigError("mel filter " + std::to_string(m) +
                        " touches no FFT bin; lower n_mels or raise the FFT resolution");
  }
  return fb;
}

int frame_count(size_t n_samples, int win, int hop) {
  if (n_samples < size_t(win)) return 1;
  return int((n_samples - size_t(win)) / size_t(hop)) + 1;
}

void fft_radix2(std::vector<std::complex<double>>& buf) {
  const size_t n = buf.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("fft_radix2: size must be a power of two");
  // Bit-reversal permutation.
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(buf[i], buf[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    const double ang = -2.0 * M_PI / double(len);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = buf[i + k];
        const std::complex<double> v = buf[i + k + len / 2] * w;
        buf[i + k] = u + v;
        buf[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

namespace {

FeatureSegment mel_spectrogram(const Waveform& wave, const MelConfig& cfg, bool take_log) {
  cfg.validate();
  if (wave.samples.empty()) throw std::invalid_argument("log_mel: empty waveform");
  if (wave.sample_rate_hz != cfg.sample_rate_hz)
    throw std::invalid_argument("log_mel: waveform sample rate " +
                                std::to_string(wave.sample_rate_hz) +
                                " does not match config " + std::to_string(cfg.sample_rate_hz));
  for (double s : wave.samples) {
    if (!std::isfinite(s)) throw std::invalid_argument("log_mel: non-finite sample");
  }

  const int win = cfg.win_samples();
  const int hop = cfg.hop_samples();
  const int n_fft = cfg.fft_size();
  const int n_bins = cfg.n_bins();
  const int t_frames = frame_count(wave.samples.size(), win, hop);

  std::vector<double> hann(size_t(win));
  for (int i = 0; i < win; ++i)
    hann[size_t(i)] = win > 1 ? 0.5 - 0.5 * std::cos(2.0 * M_PI * i / (win - 1)) : 1.0;

  const std::vector<double> fb = mel_filterbank(cfg);

  FeatureSegment out;
  out.n_frames = t_frames;
  out.n_mels = cfg.n_mels;
  out.data.assign(size_t(t_frames) * cfg.n_mels, 0.0);

  std::vector<std::complex<double>> buf(size_t(n_fft));
  std::vector<double> power(size_t(n_bins));
  for (int t = 0; t < t_frames; ++t) {
    const size_t start = size_t(t) * size_t(hop);
    for (int i = 0; i < win; ++i) {
      const size_t idx = start + size_t(i);
      const double s = idx < wave.samples.size() ? wave.samples[idx] : 0.0;
      buf[size_t(i)] = s * hann[size_t(i)];
    }
    for (int i = win; i < n_fft; ++i) buf[size_t(i)] = 0.0;
    fft_radix2(buf);
    for (int k = 0; k < n_bins; ++k) power[size_t(k)] = std::norm(buf[size_t(k)]);
    for (int m = 0; m < cfg.n_mels; ++m) {
      double acc = 0.0;
      const double* row = &fb[size_t(m) * n_bins];
      for (int k = 0; k < n_bins; ++k) acc += row[size_t(k)] * power[size_t(k)];
      out.at(t, m) = take_log ? std::log(acc + cfg.log_floor) : acc;
    }
  }
  return out;
}

}  // namespace

FeatureSegment log_mel(const Waveform& wave, const MelConfig& cfg) {
  return mel_spectrogram(wave, cfg, true);
}

FeatureSegment mel_power(const Waveform& wave, const MelConfig& cfg) {
  return mel_spectrogram(wave, cfg, false);
}

FeatureSegment log_of_power(const FeatureSegment& power, double log_floor) {
  FeatureSegment out = power;
  for (double& v : out.data) v = std::log(v + log_floor);
  return out;
}

Waveform pad_or_trim(const Waveform& wave, double target_seconds) {
  if (!(target_seconds > 0.0)) throw std::invalid_argument("pad_or_trim: target must be > 0");
  Waveform out;
  out.sample_rate_hz = wave.sample_rate_hz;
  const size_t target = size_t(std::llround(target_seconds * wave.sample_rate_hz));
  out.samples.assign(target, 0.0);
  const size_t n = std::min(target, wave.samples.size());
  std::copy(wave.samples.begin(), wave.samples.begin() + std::ptrdiff_t(n), out.samples.begin());
  return out;
}

}  // namespace psl
