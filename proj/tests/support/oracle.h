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

// Independent reference implementations used to check the search engine:
// candidate lists built by bitmask enumeration, a brute-force walk over the
// whole product, and a generator of small random specs.

#ifndef ZTC_TESTS_SUPPORT_ORACLE_H_
#define ZTC_TESTS_SUPPORT_ORACLE_H_

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ztc/search.h"
#include "ztc/typecheck.h"
#include "ztc/value.h"

namespace ztc::testing {

// First `fss` distinct integer literals in textual order, else the default
// interval. Only covers the types produced by RandomSpecText.
std::vector<int64_t> OracleSeed(const TypedSpec& spec, int fss, bool nat);

// Candidate list of every declared variable, applying the two shortcuts
// (unused variable, `v = literal`).
std::vector<std::vector<Value>> OracleCandidates(const TypedSpec& spec, int fss);

// First element of the product, in declaration-major order, on which
// CheckSpec succeeds.
std::optional<Env> BruteForce(const TypedSpec& spec,
                              const std::vector<std::vector<Value>>& lists);

uint64_t ProductSize(const std::vector<std::vector<Value>>& lists);

// A .ztc file with one spec over at most three variables drawn from an
// enumeration, NAT, INT, `C pfun NAT` and `P C`.
std::string RandomSpecText(std::mt19937& rng);

// Bindings that differ from `env` in exactly one variable and still respect
// every declared carrier: other candidates of the model, neighbouring
// integers, other constants, one pair dropped or one image shifted.
std::vector<Env> Mutations(const TypedSpec& spec, const Env& env, const FiniteModel& model);

// A random finite set of integers in [lo, hi] with at most `max_size` members.
Value RandomIntSet(std::mt19937& rng, int max_size, int64_t lo, int64_t hi);

}  // namespace ztc::testing

#endif  // ZTC_TESTS_SUPPORT_ORACLE_H_
