// Copyright 2026 The psl authors
//
// Licensed under the Apache License, Version 2.0 http://www.apache.org/licenses/LICENSE-2.0
//
// This code is provided *as is* basis, without warranties or conditions of any kind.

#include "psl/manifest.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "psl/common.hpp"

namespace psl {

using ordered_json = nlohmann::ordered_json;

bool ClipRecord::has_label(int class_id) const {
  return std::binary_search(weak_labels.begin(), weak_labels.end(), class_id);
}

std::filesystem::path Manifest::resolve_audio(const ClipRecord& clip) const {
  std::filesystem::path p(clip.audio_path);
  return p.is_absolute() ? p : base_dir / p;
}

Manifest Manifest::filter_split(const std::string& split) const {
  Manifest out;
  out.n_classes = n_classes;
  out.base_dir = base_dir;
  for (const auto& c : clips) {
    if (c.split == split) out.clips.push_back(c);
  }
  return out;
}

std::vector<double> Manifest::dense_labels(const std::vector<int>& sparse) const {
  std::vector<double> dense(size_t(n_classes), 0.0);
  for (int c : sparse) {
    if (c < 0 || c >= n_classes)
      throw std::runtime_error("label id " + std::to_string(c) + " outside class range");
    dense[size_t(c)] = 1.0;
  }
  return dense;
}

void save_manifest(const std::filesystem::path& path, const Manifest& manifest) {
  std::string out;
  for (const auto& clip : manifest.clips) {
    ordered_json row;
    row["clip_id"] = clip.clip_id;
    row["audio_path"] = clip.audio_path;
    row["duration_s"] = clip.duration_s;
    row["split"] = clip.split;
    row["weak_labels"] = clip.weak_labels;
    row["original_weak_labels"] = clip.original_weak_labels;
    ordered_json events = ordered_json::array();
    for (const auto& e : clip.strong_events) {
      ordered_json ev;
      ev["class_id"] = e.class_id;
      ev["onset_s"] = e.onset_s;
      ev["offset_s"] = e.offset_s;
      ev["gain"] = e.gain;
      events.push_back(std::move(ev));
    }
    row["strong_events"] = std::move(events);
    out += row.dump();
    out += '\n';
  }
  atomic_write_file(path, out);
}

Manifest load_manifest(const std::filesystem::path& path, int n_classes) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open manifest: " + path.string());
  Manifest m;
  m.n_classes = n_classes;
  m.base_dir = path.parent_path();
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    ordered_json row;
    try {
      row = ordered_json::parse(line);
    } catch (const std::exception& e) {
      throw std::runtime_error("manifest parse error at " + path.string() + ":" +
                               std::to_string(lineno) + ": " + e.what());
    }
    ClipRecord clip;
    clip.clip_id = row.at("clip_id").get<std::string>();
    clip.audio_path = row.at("audio_path").get<std::string>();
    clip.duration_s = row.at("duration_s").get<double>();
    clip.split = row.at("split").get<std::string>();
    clip.weak_labels = row.at("weak_labels").get<std::vector<int>>();
    clip.original_weak_labels = row.at("original_weak_labels").get<std::vector<int>>();
    for (const auto& ev : row.at("strong_events")) {
      StrongEvent e;
      e.class_id = ev.at("class_id").get<int>();
      e.onset_s = ev.at("onset_s").get<double>();
      e.offset_s = ev.at("offset_s").get<double>();
      e.gain = ev.at("gain").get<double>();
      clip.strong_events.push_back(e);
    }
    m.clips.push_back(std::move(clip));
  }
  return m;
}

void save_class_schema(const std::filesystem::path& path,
                       const std::vector<EventClass>& classes) {
  std::string out;
  for (const auto& c : classes) {
    ordered_json row;
    row["class_id"] = c.class_id;
    row["name"] = c.name;
    row["synth_kind"] = c.synth_kind;
    ordered_json params;
    params["f0_hz"] = c.synth_params.f0_hz;
    params["f1_hz"] = c.synth_params.f1_hz;
    params["mod_rate_hz"] = c.synth_params.mod_rate_hz;
    row["synth_params"] = std::move(params);
    out += row.dump();
    out += '\n';
  }
  atomic_write_file(path, out);
}

std::vector<EventClass> load_class_schema(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open class schema: " + path.string());
  std::vector<EventClass> classes;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ordered_json row = ordered_json::parse(line);
    EventClass c;
    c.class_id = row.at("class_id").get<int>();
    c.name = row.at("name").get<std::string>();
    c.synth_kind = row.at("synth_kind").get<std::string>();
    const auto& p = row.at("synth_params");
    c.synth_params.f0_hz = p.at("f0_hz").get<double>();
    c.synth_params.f1_hz = p.at("f1_hz").get<double>();
    c.synth_params.mod_rate_hz = p.at("mod_rate_hz").get<double>();
    classes.push_back(std::move(c));
  }
  return classes;
}

}  // namespace psl
