// Copyright 2026 The Conga Authors
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

#include "conga/solvers/conga.h"

#include <algorithm>
#include <atomic>
#include <limits>
#include <set>
#include <thread>

#include "conga/game/evaluation.h"
#include "conga/solvers/br_table.h"

namespace conga {
namespace {

constexpr std::int64_t kCounterCap = std::numeric_limits<std::int64_t>::max() / 2;

struct Choice {
  std::uint64_t index;  // in the player's initial strategy space
  PlayerStrategy values;
};

class Search {
 public:
  Search(const Game& game, const CongaOptions& options,
         const SolveControl& control, std::vector<bool> first_allowed,
         std::atomic<bool>* shared_stop)
      : game_(game),
        options_(options),
        control_(control),
        n_(game.num_players()),
        first_allowed_(std::move(first_allowed)),
        shared_stop_(shared_stop),
        cnt_(n_, 0),
        initial_cnt_(n_, 1),
        counting_(n_, true),
        prefix_(n_, 0) {
    for (int i = 0; i < n_; ++i) {
      tables_.emplace_back(n_ - 1, options_.table_capacity);
      std::int64_t c = 1;
      for (int j = i + 1; j < n_; ++j) {
        const auto s = game.strategies(PlayerId{j}).size();
        c = s > static_cast<std::uint64_t>(kCounterCap / c)
                ? kCounterCap
                : c * static_cast<std::int64_t>(s);
      }
      initial_cnt_[i] = c;
    }
  }

  CongaResult Run() {
    Enum(game_.domains(), 0);
    result_.pne.assign(pne_.begin(), pne_.end());
    return std::move(result_);
  }

 private:
  bool Stopped() const {
    return stop_ || (shared_stop_ != nullptr && shared_stop_->load());
  }

  void Stop() {
    stop_ = true;
    if (shared_stop_ != nullptr) shared_stop_->store(true);
  }

  std::vector<Choice> Choices(const csp::Domains& a, int level) const {
    const PlayerId p{level};
    const auto vars = game_.vars_of(p);
    std::vector<std::vector<Value>> values;
    for (VarId v : vars) values.push_back(a[v.index].Values());
    std::vector<Choice> out;
    std::vector<std::size_t> idx(vars.size(), 0);
    PlayerStrategy st(vars.size());
    while (true) {
      for (std::size_t k = 0; k < vars.size(); ++k) st[k] = values[k][idx[k]];
      const std::uint64_t index = game_.strategies(p).IndexOf(st);
      if (level != 0 || first_allowed_.empty() || first_allowed_[index]) {
        out.push_back({index, st});
      }
      int k = static_cast<int>(vars.size()) - 1;
      while (k >= 0 && ++idx[k] == values[k].size()) {
        idx[k] = 0;
        --k;
      }
      if (k < 0) break;
    }
    return out;
  }

  void Enum(csp::Domains a, int level) {
    if (Stopped()) return;
    if (game_.hard().Propagate(a) == csp::PropagationStatus::kWipeout) return;
    if (level == n_) {
      if (game_.has_hard_constraints() && !game_.hard().IsSatisfiable(a)) {
        return;
      }
      StrategyProfile t;
      for (VarId v : game_.controlled()) t.values.push_back(a[v.index].min());
      Submit(t, prefix_);
      return;
    }

    tables_[level].Reset();
    cnt_[level] = initial_cnt_[level];
    counting_[level] = !(level == 0 && first_level_evicting_);
    const std::vector<Choice> choices = Choices(a, level);
    const auto vars = game_.vars_of(PlayerId{level});
    for (std::size_t k = 0; k < choices.size(); ++k) {
      if (level == 0) epoch_ = choices[k].index + 1;
      csp::Domains b = a;
      for (std::size_t v = 0; v < vars.size(); ++v) {
        b[vars[v].index].Assign(choices[k].values[v]);
      }
      prefix_[level] = choices[k].index;
      Enum(std::move(b), level + 1);
      if (Stopped()) return;
      if (options_.use_counters && counting_[level] && cnt_[level] <= 0) {
        CheckEndOfTable(level, std::span<const Choice>(choices).subspan(k + 1));
        return;
      }
    }
  }

  void Submit(const StrategyProfile& t, const std::vector<std::uint64_t>& idx) {
    if ((result_.stats.candidates & 63) == 0 && control_.Expired()) {
      result_.timed_out = true;
      Stop();
      return;
    }
    ++result_.stats.candidates;
    CheckNash(t, idx);
  }

  void Record(int k, const BrTable::Entry& entry) {
    BrTable& table = tables_[k];
    auto res = table.Insert(entry);
    if (res == BrTable::InsertResult::kFull) {
      counting_[k] = false;
      if (k == 0) {
        first_level_evicting_ = true;
        table.EvictOldest();
        res = table.Insert(entry);
      }
    }
    if (res == BrTable::InsertResult::kInserted && counting_[k]) --cnt_[k];
  }

  void CheckNash(const StrategyProfile& t,
                 const std::vector<std::uint64_t>& idx) {
    std::vector<std::uint64_t> context(n_ - 1);
    for (int k = n_ - 1; k >= 0; --k) {
      for (int j = 0, c = 0; j < n_; ++j) {
        if (j != k) context[c++] = idx[j];
      }
      const BrTable::Entry* hit =
          options_.use_tables ? tables_[k].Find(context) : nullptr;
      BrTable::Entry fresh;
      if (hit != nullptr) {
        if (k >= 1 && hit->epoch != epoch_) ++result_.trace.cross_branch_hits;
      } else {
        ++result_.stats.deviation_calls;
        const PlayerId p{k};
        const auto br = BestResponses(game_, t, p);
        fresh.context = context;
        fresh.all = br.empty();
        for (const auto& st : br) {
          fresh.best.push_back(game_.strategies(p).IndexOf(st));
        }
        fresh.epoch = epoch_;
        if (options_.use_tables || options_.use_counters) Record(k, fresh);
      }
      const BrTable::Entry& d = hit != nullptr ? *hit : fresh;
      if (options_.record_trace) {
        DeviationCheck check{t, k, hit != nullptr, d.all, {}};
        for (auto b : d.best) {
          check.best.push_back(game_.strategies(PlayerId{k}).At(b));
        }
        result_.trace.checks.push_back(std::move(check));
      }
      if (!d.all && !std::binary_search(d.best.begin(), d.best.end(), idx[k])) {
        return;
      }
    }
    if (pne_.insert(t).second) {
      ++result_.stats.pne_found;
      if (control_.stop_after_first) {
        result_.stopped_early = true;
        Stop();
      }
    }
  }

  // Every stored context of this level's player that agrees with the
  // current prefix is re-checked with each of its best responses among the
  // strategies the loop did not reach.
  void CheckEndOfTable(int level, std::span<const Choice> remaining) {
    std::vector<std::uint64_t> rest;
    for (const auto& c : remaining) rest.push_back(c.index);
    std::sort(rest.begin(), rest.end());
    std::set<std::uint64_t> used;
    std::vector<std::vector<std::uint64_t>> tuples;
    std::set<std::vector<std::uint64_t>> seen;
    tables_[level].ForEach([&](const BrTable::Entry& e) {
      for (int j = 0; j < level; ++j) {
        if (e.context[j] != prefix_[j]) return;
      }
      auto add = [&](std::uint64_t v) {
        std::vector<std::uint64_t> t(e.context.begin(), e.context.end());
        t.insert(t.begin() + level, v);
        if (seen.insert(t).second) tuples.push_back(std::move(t));
        used.insert(v);
      };
      if (e.all) {
        for (auto v : rest) add(v);
      } else {
        for (auto v : e.best) {
          if (std::binary_search(rest.begin(), rest.end(), v)) add(v);
        }
      }
    });

    if (options_.record_trace) {
      SkipRecord skip;
      skip.level = level;
      for (int j = 0; j < level; ++j) {
        skip.prefix.push_back(game_.strategies(PlayerId{j}).At(prefix_[j]));
      }
      for (const auto& c : remaining) {
        skip.unexplored.push_back(c.values);
        if (!used.count(c.index)) skip.skipped.push_back(c.values);
      }
      result_.trace.skips.push_back(std::move(skip));
    }

    for (const auto& idx : tuples) {
      if (Stopped()) return;
      const StrategyProfile t = game_.ProfileFromIndices(idx);
      if (game_.has_hard_constraints() && !CheckHard(game_, t)) continue;
      if (options_.record_trace) result_.trace.resubmitted.push_back(t);
      Submit(t, idx);
    }
  }

  const Game& game_;
  const CongaOptions& options_;
  const SolveControl& control_;
  const int n_;
  std::vector<bool> first_allowed_;  // empty: every strategy
  std::atomic<bool>* shared_stop_;

  std::vector<BrTable> tables_;
  std::vector<std::int64_t> cnt_;
  std::vector<std::int64_t> initial_cnt_;
  std::vector<bool> counting_;
  bool first_level_evicting_ = false;
  std::vector<std::uint64_t> prefix_;
  std::uint64_t epoch_ = 0;
  bool stop_ = false;

  std::set<StrategyProfile> pne_;
  CongaResult result_;
};

}  // namespace

CongaResult SolveConga(const Game& game, const CongaOptions& options,
                       const SolveControl& control) {
  const std::uint64_t first = game.strategies(PlayerId{0}).size();
  const int threads = static_cast<int>(
      std::min<std::uint64_t>(std::max(options.threads, 1), first));
  if (threads <= 1) {
    return Search(game, options, control, {}, nullptr).Run();
  }

  std::atomic<bool> stop{false};
  std::vector<CongaResult> parts(threads);
  std::vector<std::thread> workers;
  for (int w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      std::vector<bool> allowed(first, false);
      for (std::uint64_t k = w; k < first; k += threads) allowed[k] = true;
      parts[w] = Search(game, options, control, std::move(allowed),
                        control.stop_after_first ? &stop : nullptr)
                     .Run();
    });
  }
  for (auto& t : workers) t.join();

  CongaResult merged;
  std::set<StrategyProfile> pne;
  for (auto& part : parts) {
    pne.insert(part.pne.begin(), part.pne.end());
    merged.stats.candidates += part.stats.candidates;
    merged.stats.deviation_calls += part.stats.deviation_calls;
    merged.timed_out |= part.timed_out;
    merged.stopped_early |= part.stopped_early;
    auto& tr = merged.trace;
    tr.checks.insert(tr.checks.end(), part.trace.checks.begin(),
                     part.trace.checks.end());
    tr.skips.insert(tr.skips.end(), part.trace.skips.begin(),
                    part.trace.skips.end());
    tr.resubmitted.insert(tr.resubmitted.end(), part.trace.resubmitted.begin(),
                          part.trace.resubmitted.end());
    tr.cross_branch_hits += part.trace.cross_branch_hits;
  }
  merged.pne.assign(pne.begin(), pne.end());
  merged.stats.pne_found = merged.pne.size();
  return merged;
}

}  // namespace conga
