// Copyright 2026 The psl authors
//
// Licensed under the Apache License, Version 2.0 http://www.apache.org/licenses/LICENSE-2.0
//
// This code is provided *as is* basis, without warranties or conditions of any kind.

#ifndef PSL_WAV_HPP
#define PSL_WAV_HPP

#include <filesystem>

#include "psl/dsp.hpp"

namespace psl {

// RIFF/WAVE, PCM16 mono, little-endian. The only audio format this project
// reads or writes; the corpus generator emits it.

// Samples are clamped to [-1, 1] and quantized with round(x * 32767).
void write_wav_pcm16(const std::filesystem::path& path, const Waveform& wave);

// Returns samples as pcm / 32768.0. Throws std::runtime_error on missing
// files or on any format other than PCM16 mono.
Waveform read_wav_pcm16(const std::filesystem::path& path);

}  // namespace psl

#endif  // PSL_WAV_HPP
