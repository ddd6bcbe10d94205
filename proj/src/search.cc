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

#include "ztc/search.h"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>

#include "ztc/error.h"

namespace ztc {

void SearchConfig::Validate() const {
  if (fss < 1) throw std::invalid_argument("FSS must be strictly positive");
  if (max < 1) throw std::invalid_argument("MAX must be strictly positive");
}

std::vector<int64_t> DefaultNatSeed(int fss) {
  std::vector<int64_t> out;
  for (int i = 0; i < fss; ++i) out.push_back(i);
  return out;
}

std::vector<int64_t> DefaultIntSeed(int fss) {
  const int64_t lo = -(fss / 2 + (fss % 2 - 1));
  const int64_t hi = fss / 2;
  std::vector<int64_t> out;
  for (int64_t i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

namespace {

void CollectLiterals(const Expr& e, std::vector<int64_t>& out) {
  if (e.kind == Expr::Kind::kIntLit) out.push_back(e.value);
  for (const Expr& op : e.operands) CollectLiterals(op, out);
}

std::vector<int64_t> FirstDistinct(const std::vector<int64_t>& literals,
                                   int fss, bool nonnegative_only) {
  std::vector<int64_t> out;
  for (int64_t v : literals) {
    if (static_cast<int>(out.size()) == fss) break;
    if (nonnegative_only && v < 0) continue;
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

void Pad(std::vector<int64_t>& seed, const std::vector<int64_t>& defaults,
         int fss) {
  for (int64_t v : defaults) {
    if (static_cast<int>(seed.size()) >= fss) return;
    if (std::find(seed.begin(), seed.end(), v) == seed.end()) seed.push_back(v);
  }
}

}  // namespace

NumericSeed ComputeNumericSeed(const TypedSpec& spec, const SearchConfig& cfg) {
  cfg.Validate();
  std::vector<int64_t> literals;
  for (const Pred& p : spec.spec.preds) {
    CollectLiterals(p.lhs, literals);
    CollectLiterals(p.rhs, literals);
  }
  NumericSeed seed;
  seed.nat = FirstDistinct(literals, cfg.fss, /*nonnegative_only=*/true);
  seed.integer = FirstDistinct(literals, cfg.fss, /*nonnegative_only=*/false);
  if (seed.nat.empty()) {
    seed.nat = DefaultNatSeed(cfg.fss);
  } else if (cfg.pad_numeric) {
    Pad(seed.nat, DefaultNatSeed(cfg.fss), cfg.fss);
  }
  if (seed.integer.empty()) {
    seed.integer = DefaultIntSeed(cfg.fss);
  } else if (cfg.pad_numeric) {
    Pad(seed.integer, DefaultIntSeed(cfg.fss), cfg.fss);
  }
  return seed;
}

namespace {

bool IsClosedLiteral(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kIntLit:
    case Expr::Kind::kEnumLit:
    case Expr::Kind::kBasicLit:
    case Expr::Kind::kEmptySet:
      return true;
    case Expr::Kind::kTuple:
    case Expr::Kind::kSetExt:
      return std::all_of(e.operands.begin(), e.operands.end(), IsClosedLiteral);
    default:
      return false;
  }
}

void SortCanonical(std::vector<Value>& v) {
  std::sort(v.begin(), v.end(),
            [](const Value& a, const Value& b) { return CanonicalOrder(a, b) < 0; });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Enumerates candidate values of a declared type, stopping after `limit`.
class Generator {
 public:
  Generator(const NumericSeed& seed, const SearchConfig& cfg)
      : seed_(seed), cfg_(cfg) {}

  CandidateList Generate(const TypeExpr& t) {
    truncated_ = false;
    CandidateList out;
    out.values = Gen(t);
    out.truncated = truncated_;
    return out;
  }

  // Basic constants handed out so far, by type.
  const Universe& universe() const { return universe_; }

  std::vector<Value> BasicConstants(const std::string& type) {
    std::vector<Value> out;
    for (int i = 1; i <= cfg_.fss; ++i) {
      out.push_back(Value::Basic(type, type + std::to_string(i)));
    }
    universe_.basic[type] = out;
    return out;
  }

 private:
  bool Full(size_t n) {
    if (static_cast<int64_t>(n) < cfg_.max) return false;
    truncated_ = true;
    return true;
  }

  std::vector<Value> Gen(const TypeExpr& t) {
    std::vector<Value> out;
    switch (t.kind) {
      case TypeExpr::Kind::kInt:
        for (int64_t v : seed_.integer) out.push_back(Value::Int(v));
        break;
      case TypeExpr::Kind::kNat:
        for (int64_t v : seed_.nat) out.push_back(Value::Int(v));
        break;
      case TypeExpr::Kind::kBasic:
        out = BasicConstants(t.name);
        break;
      case TypeExpr::Kind::kFree:
        for (size_t i = 0; i < t.constants.size(); ++i) {
          out.push_back(Value::Enum(t.name, t.constants[i], static_cast<int>(i)));
        }
        break;
      case TypeExpr::Kind::kProduct: {
        const std::vector<Value> left = Gen(t.left());
        const std::vector<Value> right = Gen(t.right());
        for (const Value& a : left) {
          for (const Value& b : right) {
            if (Full(out.size())) break;
            out.push_back(Value::Tuple(a, b));
          }
        }
        break;
      }
      case TypeExpr::Kind::kPower:
        out = Subsets(Gen(t.elem()));
        break;
      case TypeExpr::Kind::kSynonym:
        out = GenSynonym(t);
        break;
    }
    SortCanonical(out);
    return out;
  }

  std::vector<Value> GenSynonym(const TypeExpr& t) {
    switch (t.synonym) {
      case SynonymKind::kRel:
        return Subsets(Gen(TypeExpr::Product(t.left(), t.right())));
      case SynonymKind::kFinset:
        return Subsets(Gen(t.elem()));
      case SynonymKind::kPfun:
      case SynonymKind::kFfun: {
        const std::vector<Value> dom = Gen(t.left());
        const std::vector<Value> codom = Gen(t.right());
        std::vector<Value> out;
        for (const std::vector<Value>& d : Combinations(dom)) {
          Maps(d, codom, out);
          if (Full(out.size())) break;
        }
        return out;
      }
      case SynonymKind::kFun: {
        std::vector<Value> out;
        Maps(Gen(t.left()), Gen(t.right()), out);
        return out;
      }
      case SynonymKind::kSeq: {
        const std::vector<Value> elems = Gen(t.elem());
        std::vector<Value> out;
        for (int n = 0; n <= cfg_.fss; ++n) {
          std::vector<Value> dom;
          for (int i = 1; i <= n; ++i) dom.push_back(Value::Int(i));
          Maps(dom, elems, out);
          if (Full(out.size())) break;
        }
        return out;
      }
    }
    return {};
  }

  // Subsets of `elems` with at most FSS members, by size then index order.
  std::vector<std::vector<Value>> Combinations(const std::vector<Value>& elems) {
    std::vector<std::vector<Value>> out;
    const size_t n = elems.size();
    const size_t kmax = std::min(n, static_cast<size_t>(cfg_.fss));
    for (size_t k = 0; k <= kmax; ++k) {
      std::vector<size_t> idx(k);
      for (size_t i = 0; i < k; ++i) idx[i] = i;
      while (true) {
        if (Full(out.size())) return out;
        std::vector<Value> pick;
        for (size_t i : idx) pick.push_back(elems[i]);
        out.push_back(std::move(pick));
        // Next k-combination in lexicographic order.
        size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
    return out;
  }

  std::vector<Value> Subsets(const std::vector<Value>& elems) {
    std::vector<Value> out;
    for (std::vector<Value>& pick : Combinations(elems)) {
      out.push_back(Value::Set(std::move(pick)));
    }
    return out;
  }

  // Appends every map from `dom` into `codom` (all of `dom` mapped).
  void Maps(const std::vector<Value>& dom, const std::vector<Value>& codom,
            std::vector<Value>& out) {
    if (codom.empty() && !dom.empty()) return;
    std::vector<size_t> pick(dom.size(), 0);
    while (true) {
      if (Full(out.size())) return;
      std::vector<Value> pairs;
      pairs.reserve(dom.size());
      for (size_t i = 0; i < dom.size(); ++i) {
        pairs.push_back(Value::Tuple(dom[i], codom[pick[i]]));
      }
      out.push_back(Value::Set(std::move(pairs)));
      size_t i = dom.size();
      while (i > 0 && ++pick[i - 1] == codom.size()) {
        pick[i - 1] = 0;
        --i;
      }
      if (i == 0) return;
    }
  }

  const NumericSeed& seed_;
  const SearchConfig& cfg_;
  Universe universe_;
  bool truncated_ = false;
};

bool Used(const TypedSpec& spec, std::string_view var) {
  for (const Pred& p : spec.spec.preds) {
    if (MentionsVar(p, var)) return true;
  }
  return false;
}

std::optional<Value> PinnedValue(const TypedSpec& spec, std::string_view var) {
  for (const Pred& p : spec.spec.preds) {
    if (p.kind != Pred::Kind::kEqual) continue;
    const Expr* lit = nullptr;
    if (p.lhs.kind == Expr::Kind::kVar && p.lhs.name == var) lit = &p.rhs;
    if (p.rhs.kind == Expr::Kind::kVar && p.rhs.name == var) lit = &p.lhs;
    if (lit == nullptr || !IsClosedLiteral(*lit)) continue;
    return EvalExpr(*lit, Env{});
  }
  return std::nullopt;
}

CandidateList CandidatesFor(const Decl& d, const TypedSpec& spec,
                            const SearchConfig& cfg, Generator& gen) {
  if (std::optional<Value> pinned = PinnedValue(spec, d.name)) {
    // A literal outside the carrier leaves nothing to try.
    if (!SatisfiesCarrier(*pinned, d.type)) return CandidateList{};
    return CandidateList{{*pinned}, false};
  }
  CandidateList all = gen.Generate(d.type);
  if (!Used(spec, d.name) && !all.values.empty()) {
    all.values.resize(1);
    all.truncated = false;
  }
  (void)cfg;
  return all;
}

}  // namespace

CandidateList BuildCandidates(std::string_view var, const TypedSpec& spec,
                              const SearchConfig& cfg) {
  const Decl* d = spec.spec.FindDecl(var);
  if (d == nullptr) {
    throw std::invalid_argument("undeclared variable " + std::string(var));
  }
  const NumericSeed seed = ComputeNumericSeed(spec, cfg);
  Generator gen(seed, cfg);
  return CandidatesFor(*d, spec, cfg, gen);
}

uint64_t FiniteModel::Size() const {
  uint64_t size = 1;
  for (const CandidateList& c : candidates) {
    const uint64_t n = c.values.size();
    if (n == 0) return 0;
    if (size > std::numeric_limits<uint64_t>::max() / n) {
      size = std::numeric_limits<uint64_t>::max();
    } else {
      size *= n;
    }
  }
  return size;
}

FiniteModel BuildFiniteModel(const TypedSpec& spec, const SearchConfig& cfg) {
  const NumericSeed seed = ComputeNumericSeed(spec, cfg);
  Generator gen(seed, cfg);
  FiniteModel model;
  for (const Decl& d : spec.spec.decls) {
    model.vars.push_back(d.name);
    model.candidates.push_back(CandidatesFor(d, spec, cfg, gen));
  }
  model.universe = gen.universe();
  return model;
}

std::string_view StatusName(SearchResult::Status s) {
  switch (s) {
    case SearchResult::Status::kWitness:
      return "witness";
    case SearchResult::Status::kExhausted:
      return "exhausted";
    case SearchResult::Status::kCapped:
      return "capped";
  }
  return "?";
}

namespace {

// Decodes a linear index into a binding; the first variable is the most
// significant digit, so increasing indices follow declaration order.
Env Element(const FiniteModel& model, uint64_t index) {
  Env env;
  for (size_t i = model.vars.size(); i-- > 0;) {
    const auto& values = model.candidates[i].values;
    env.emplace(model.vars[i], values[index % values.size()]);
    index /= values.size();
  }
  return env;
}

bool Holds(const Pred& p, const Env& env) {
  try {
    return EvalPred(p, env);
  } catch (const EvalError&) {
    return false;
  }
}

}  // namespace

SearchResult Search(const TypedSpec& spec, const SearchConfig& cfg) {
  cfg.Validate();
  const FiniteModel model = BuildFiniteModel(spec, cfg);
  SearchResult result;
  result.universe = model.universe;
  for (size_t i = 0; i < model.vars.size(); ++i) {
    if (model.candidates[i].truncated) result.truncated.push_back(model.vars[i]);
  }
  const uint64_t size = model.Size();
  if (size == 0) {
    result.status = SearchResult::Status::kExhausted;
    return result;
  }
  const uint64_t budget = std::min<uint64_t>(size, static_cast<uint64_t>(cfg.max));
  const auto& preds = spec.spec.preds;

  std::vector<uint64_t> surviving;
  if (preds.empty()) {
    result.explored = 1;
    surviving.push_back(0);
  } else {
    for (uint64_t i = 0; i < budget; ++i) {
      ++result.explored;
      if (Holds(preds[0], Element(model, i))) surviving.push_back(i);
    }
    result.survivors.push_back(static_cast<int64_t>(surviving.size()));
    for (size_t k = 1; k < preds.size() && !surviving.empty(); ++k) {
      std::vector<uint64_t> next;
      for (uint64_t i : surviving) {
        if (Holds(preds[k], Element(model, i))) next.push_back(i);
      }
      surviving = std::move(next);
      result.survivors.push_back(static_cast<int64_t>(surviving.size()));
    }
  }
  if (!surviving.empty()) {
    result.status = SearchResult::Status::kWitness;
    result.witness = Element(model, surviving.front());
  } else {
    result.status = budget < size ? SearchResult::Status::kCapped
                                  : SearchResult::Status::kExhausted;
  }
  return result;
}

}  // namespace ztc
