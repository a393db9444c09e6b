#pragma once

#include <memory>
#include <string>

#include "ftskit/text.hh"

namespace fixtures {

inline std::string models_dir() { return FTSKIT_MODELS_DIR; }

/// The guarded cruise-control model shipped under models/.
inline std::shared_ptr<const ftskit::Iofts> cruise() {
  static const auto m = std::make_shared<const ftskit::Iofts>(
      ftskit::load_model_from_file(models_dir() + "/cruise.iofts"));
  return m;
}

/// The feature-free faulty implementation shipped under models/.
inline std::shared_ptr<const ftskit::Iofts> faulty() {
  static const auto m = std::make_shared<const ftskit::Iofts>(
      ftskit::load_model_from_file(models_dir() + "/faulty.iofts"));
  return m;
}

inline ftskit::Formula phi(const std::string& text, const ftskit::Iofts& m) {
  return ftskit::parse_formula(text, m.features);
}

inline const ftskit::ProductConfig& product(const ftskit::Iofts& m, const std::string& name) {
  for (const auto& p : m.products) {
    if (p.name == name) return p;
  }
  throw ftskit::Error("fixture has no product named " + name);
}

inline ftskit::Trace trace(const std::string& text, const ftskit::Iofts& m) {
  return ftskit::parse_trace(text, m);
}

}  // namespace fixtures
