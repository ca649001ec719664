#pragma once

// Deliberate law-breaking switches. Each one perturbs a single operation so
// the law suites (and the coherence engine) can prove they would notice.

#include <string>

#include "hka/errors.hpp"

namespace hka {

enum class Mutant {
  None,
  InterchangeRaw,         // skip interchange normalization in 0-composition
  AdomComplement,         // antidomain complements against the wrong unit
  StarNoUnit,             // star forgets the reflexive part
  CodSwap,                // top-dimension codomain answers the domain
  UnwhiskeredCompletion,  // completion built without whiskering
};

inline Mutant parse_mutant(const std::string& name) {
  if (name.empty() || name == "none") return Mutant::None;
  if (name == "interchange-raw" || name == "drop-interchange") {
    return Mutant::InterchangeRaw;
  }
  if (name == "adom-complement") return Mutant::AdomComplement;
  if (name == "star-no-unit") return Mutant::StarNoUnit;
  if (name == "cod-swap") return Mutant::CodSwap;
  if (name == "completion-unwhiskered") return Mutant::UnwhiskeredCompletion;
  throw ParseError("unknown mutant: " + name);
}

}  // namespace hka
