#pragma once

#include <string>
#include <vector>

namespace hka {

struct LawFailure {
  std::string which;  // sub-law identifier
  std::vector<std::string> inputs;
  std::string lhs;
  std::string rhs;
};

struct LawReport {
  std::string law;
  std::vector<int> dims;
  std::string mode = "sampled";  // "exhaustive" | "sampled"
  long samples = 0;              // judged tuples
  long skipped = 0;              // clipped or rejected tuples
  std::vector<LawFailure> failures;

  bool passed() const { return failures.empty(); }
};

}  // namespace hka
