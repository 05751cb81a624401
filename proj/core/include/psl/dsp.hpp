// Copyright 2026 The psl authors
//
// Licensed under the Apache License, Version 2.0 http://www.apache.org/licenses/LICENSE-2.0
//
// This code is provided *as is* basis, without warranties or conditions of any kind.

#ifndef PSL_DSP_HPP
#define PSL_DSP_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace psl {

struct Waveform {
  std::vector<double> samples;  // amplitudes in [-1, 1]
  int sample_rate_hz = 0;

  double duration_s() const {
    return sample_rate_hz > 0 ? double(samples.size()) / sample_rate_hz : 0.0;
  }
};

// Log-mel front end: 64 filters from a 32 ms window with a 10 ms hop by
// default. FFT size is the next power of two >= the window; Hann window;
// power spectrum; natural log with an additive floor.
struct MelConfig {
  int n_mels = 64;
  double win_ms = 32.0;
  double hop_ms = 10.0;
  int sample_rate_hz = 16000;
  double fmin_hz = 0.0;
  double fmax_hz = 8000.0;
  double log_floor = 1e-10;

  int win_samples() const;
  int hop_samples() const;
  int fft_size() const;  // next power of two >= win_samples()
  int n_bins() const { return fft_size() / 2 + 1; }

  void validate() const;  // throws ConfigError on any violated invariant
  uint64_t hash() const;
};

struct FeatureOrigin {
  std::string clip_id;
  int seg_index = 0;
  double start_s = 0.0;
  double end_s = 0.0;
};

// (n_frames x n_mels) matrix, row-major.
struct FeatureSegment {
  int n_frames = 0;
  int n_mels = 0;
  std::vector<double> data;
  FeatureOrigin origin;

  double at(int t, int m) const { return data[size_t(t) * n_mels + size_t(m)]; }
  double& at(int t, int m) { return data[size_t(t) * n_mels + size_t(m)]; }
};

double hz_to_mel(double hz);
double mel_to_hz(double mel);

// Triangular mel filterbank, (n_mels x n_bins) row-major. Throws ConfigError
// if the config is invalid or a filter is too narrow to touch any FFT bin.
std::vector<double> mel_filterbank(const MelConfig& cfg);

// Frames for a signal of n_samples: floor((N - win) / hop) + 1 when
// N >= win, else a single zero-padded frame.
int frame_count(size_t n_samples, int win, int hop);

// Log-mel spectrogram. Requires wave.sample_rate_hz == cfg.sample_rate_hz
// (no implicit resampling) and a nonempty, finite waveform.
FeatureSegment log_mel(const Waveform& wave, const MelConfig& cfg);

// Linear mel power (same framing, no log). Gain scales it exactly by g^2 and
// polarity inversion leaves it untouched, which the training fast path uses.
FeatureSegment mel_power(const Waveform& wave, const MelConfig& cfg);

// Applies the natural log with the configured floor to a power matrix.
FeatureSegment log_of_power(const FeatureSegment& power, double log_floor);

// Right-pads with zeros or truncates so the output holds exactly
// round(target_seconds * sample_rate) samples.
Waveform pad_or_trim(const Waveform& wave, double target_seconds);

// In-place iterative radix-2 FFT; buf.size() must be a power of two.
void fft_radix2(std::vector<std::complex<double>>& buf);

}  // namespace psl

#endif  // PSL_DSP_HPP
