// Copyright 2026 The psl authors
//
// Licensed under the Apache License, Version 2.0 http://www.apache.org/licenses/LICENSE-2.0
//
// This code is provided *as is* basis, without warranties or conditions of any kind.

#ifndef PSL_MANIFEST_HPP
#define PSL_MANIFEST_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace psl {

// Ground-truth event with exact on/offset. Kept for evaluation and
// analysis; training only ever sees the clip-level weak labels.
struct StrongEvent {
  int class_id = 0;
  double onset_s = 0.0;
  double offset_s = 0.0;
  double gain = 1.0;
};

struct ClipRecord {
  std::string clip_id;
  std::string audio_path;  // relative to the manifest's directory unless absolute
  double duration_s = 0.0;
  std::string split;  // "train" | "valid" | "eval"
  std::vector<int> weak_labels;           // sparse, sorted class ids (possibly corrupted)
  std::vector<int> original_weak_labels;  // pre-corruption truth, same encoding
  std::vector<StrongEvent> strong_events;

  bool has_label(int class_id) const;
};

struct Manifest {
  int n_classes = 0;
  std::filesystem::path base_dir;  // directory the manifest was loaded from
  std::vector<ClipRecord> clips;

  std::filesystem::path resolve_audio(const ClipRecord& clip) const;
  Manifest filter_split(const std::string& split) const;
  // Multi-hot dense vector of length n_classes from a sparse id list.
  std::vector<double> dense_labels(const std::vector<int>& sparse) const;
};

// One JSON object per line, UTF-8. Fields per row, in order: clip_id,
// audio_path, duration_s, split, weak_labels, original_weak_labels,
// strong_events.
void save_manifest(const std::filesystem::path& path, const Manifest& manifest);
Manifest load_manifest(const std::filesystem::path& path, int n_classes);

// Event class schema. synth_kind is one of tone, chord, noise_band, chirp,
// am_tone; the parameters drive the corpus synthesizer.
struct SynthParams {
  double f0_hz = 0.0;
  double f1_hz = 0.0;
  double mod_rate_hz = 0.0;
};

struct EventClass {
  int class_id = 0;
  std::string name;
  std::string synth_kind;
  SynthParams synth_params;
};

void save_class_schema(const std::filesystem::path& path, const std::vector<EventClass>& classes);
std::vector<EventClass> load_class_schema(const std::filesystem::path& path);

}  // namespace psl

#endif  // PSL_MANIFEST_HPP
