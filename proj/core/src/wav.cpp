// Copyright 2026 The psl authors
//
// Licensed under the Apache License, Version 2.0 http://www.apache.org/licenses/LICENSE-2.0
//
// This code is provided *as is* basis, without warranties or conditions of any kind.

#include "psl/wav.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

static_assert(std::endian::native == std::endian::little,
              "WAV and checkpoint I/O assume a little-endian host");

namespace psl {

namespace {

void put_u32(std::string& out, uint32_t v) { out.append(reinterpret_cast<const char*>(&v), 4); }
void put_u16(std::string& out, uint16_t v) { out.append(reinterpret_cast<const char*>(&v), 2); }

uint32_t get_u32(const char* p) {
  uint32_t v;
  std::memcpy(&v, p, 4);
  return v;
}

uint16_t get_u16(const char* p) {
  uint16_t v;
  std::memcpy(&v, p, 2);
  return v;
}

}  // namespace

void write_wav_pcm16(const std::filesystem::path& path, const Waveform& wave) {
  if (wave.sample_rate_hz <= 0) throw std::runtime_error("write_wav: invalid sample rate");
  const uint32_t n = uint32_t(wave.samples.size());
  const uint32_t data_bytes = n * 2;
  const uint32_t sr = uint32_t(wave.sample_rate_hz);

  std::string out;
  out.reserve(44 + data_bytes);
  out += "RIFF";
  put_u32(out, 36 + data_bytes);
  out += "WAVE";
  out += "fmt ";
  put_u32(out, 16);
  put_u16(out, 1);   // PCM
  put_u16(out, 1);   // mono
  put_u32(out, sr);
  put_u32(out, sr * 2);  // byte rate
  put_u16(out, 2);   // block align
  put_u16(out, 16);  // bits per sample
  out += "data";
  put_u32(out, data_bytes);
  for (double s : wave.samples) {
    const double clamped = std::clamp(s, -1.0, 1.0);
    const int16_t v = int16_t(std::lrint(clamped * 32767.0));
    out.append(reinterpret_cast<const char*>(&v), 2);
  }

  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("write_wav: cannot open " + path.string());
  f.write(out.data(), std::streamsize(out.size()));
  if (!f) throw std::runtime_error("write_wav: short write to " + path.string());
}

Waveform read_wav_pcm16(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("read_wav: cannot open " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  if (bytes.size() < 12 || bytes.compare(0, 4, "RIFF") != 0 || bytes.compare(8, 4, "WAVE") != 0)
    throw std::runtime_error("read_wav: not a RIFF/WAVE file: " + path.string());

  Waveform wave;
  bool have_fmt = false;
  size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const std::string id = bytes.substr(pos, 4);
    const uint32_t size = get_u32(bytes.data() + pos + 4);
    const size_t body = pos + 8;
    if (body + size > bytes.size())
      throw std::runtime_error("read_wav: truncated chunk in " + path.string());
    if (id == "fmt ") {
      if (size < 16) throw std::runtime_error("read_wav: malformed fmt chunk");
      const uint16_t format = get_u16(bytes.data() + body);
      const uint16_t channels = get_u16(bytes.data() + body + 2);
      const uint32_t sr = get_u32(bytes.data() + body + 4);
      const uint16_t bits = get_u16(bytes.data() + body + 14);
      if (format != 1 || channels != 1 || bits != 16)
        throw std::runtime_error("read_wav: only PCM16 mono is supported: " + path.string());
      wave.sample_rate_hz = int(sr);
      have_fmt = true;
    } else if (id == "data") {
      if (!have_fmt) throw std::runtime_error("read_wav: data chunk before fmt");
      const size_t count = size / 2;
      wave.samples.resize(count);
      for (size_t i = 0; i < count; ++i) {
        int16_t v;
        std::memcpy(&v, bytes.data() + body + i * 2, 2);
        wave.samples[i] = double(v) / 32768.0;
      }
      return wave;
    }
    pos = body + size + (size & 1);  // chunks are word-aligned
  }
  throw std::runtime_error("read_wav: no data chunk in " + path.string());
}

}  // namespace psl
