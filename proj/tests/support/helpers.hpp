// Copyright 2026 The dholk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dholk/kernel.hpp"
#include "dholk/tptp.hpp"

namespace dholk::testsupport {

#ifndef DHOLK_CORPUS_DIR
#define DHOLK_CORPUS_DIR "tests/corpus"
#endif
#ifndef DHOLK_GOLDEN_DIR
#define DHOLK_GOLDEN_DIR "tests/golden"
#endif

inline std::string corpus_path(const std::string& name) {
  return std::string(DHOLK_CORPUS_DIR) + "/" + name;
}

inline std::string golden_path(const std::string& name) {
  return std::string(DHOLK_GOLDEN_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline const std::vector<std::string>& corpus_files() {
  static const std::vector<std::string> v{
      "category_theory.p",      "dependent_implication.p", "undecidable.p",
      "non_injectivity.p",      "isomorphisms.p",
  };
  return v;
}

// Parses and elaborates a corpus file, accepting every obligation.
inline kernel::CheckReport elaborate_corpus(const std::string& name) {
  tptp::ParseResult pr = tptp::parse_dhol(slurp(corpus_path(name)));
  kernel::AcceptAllOracle accept;
  return kernel::check_problem(pr.theory, pr.context, pr.conjecture, accept);
}

} // namespace dholk::testsupport
