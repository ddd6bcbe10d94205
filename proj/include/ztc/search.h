// Copyright 2026 The ztc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Finite-model search for test-case witnesses.
//
// Every declared variable gets a small list of candidate values computed
// from its type alone (plus two shortcuts: unused variables get a singleton
// and `v = literal` pins `v`). The Cartesian product of those lists is then
// filtered one atomic predicate at a time; the first element surviving the
// last predicate is the witness.

#ifndef ZTC_SEARCH_H_
#define ZTC_SEARCH_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ztc/eval.h"
#include "ztc/typecheck.h"
#include "ztc/value.h"

namespace ztc {

struct SearchConfig {
  // Size of the finite sets for basic types, INT and NAT. Must be >= 1.
  int fss = 3;
  // Cap on explored model elements and on any single candidate list.
  int64_t max = 10'000;
  // Pad a short literal list with the default interval up to FSS values.
  bool pad_numeric = false;

  // Throws std::invalid_argument when fss < 1 or max < 1.
  void Validate() const;
};

struct NumericSeed {
  std::vector<int64_t> nat;
  std::vector<int64_t> integer;
};

// [0 .. FSS-1]
std::vector<int64_t> DefaultNatSeed(int fss);
// [-(FSS div 2 + (FSS mod 2 - 1)) .. FSS div 2]
std::vector<int64_t> DefaultIntSeed(int fss);

// The first FSS distinct integer literals of the spec, in textual order
// across predicates (NAT only keeps nonnegative ones); the defaults above
// when there are none.
NumericSeed ComputeNumericSeed(const TypedSpec& spec, const SearchConfig& cfg);

struct CandidateList {
  std::vector<Value> values;  // canonical order
  bool truncated = false;     // the full list would exceed cfg.max
};

CandidateList BuildCandidates(std::string_view var, const TypedSpec& spec,
                              const SearchConfig& cfg);

struct FiniteModel {
  std::vector<std::string> vars;  // declaration order
  std::vector<CandidateList> candidates;
  Universe universe;  // basic-type constants used by the candidates

  // Product of the list lengths, saturated at UINT64_MAX.
  uint64_t Size() const;
};

FiniteModel BuildFiniteModel(const TypedSpec& spec, const SearchConfig& cfg);

struct SearchResult {
  enum class Status { kWitness, kExhausted, kCapped };

  Status status = Status::kExhausted;
  Env witness;
  // Elements of the initial model that were enumerated; never above max.
  int64_t explored = 0;
  // Surviving element count after each predicate, in order.
  std::vector<int64_t> survivors;
  // Variables whose candidate lists were cut at max.
  std::vector<std::string> truncated;
  Universe universe;
};

std::string_view StatusName(SearchResult::Status s);

SearchResult Search(const TypedSpec& spec, const SearchConfig& cfg);

}  // namespace ztc

#endif  // ZTC_SEARCH_H_
