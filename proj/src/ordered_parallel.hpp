#pragma once

#include <exception>
#include <thread>
#include <vector>

#include "eccaudit/corpus.hpp"

namespace eccaudit::detail {

// Pulls the corpus in batches, runs `work` on each item (across `jobs`
// threads when jobs > 1) and hands results to `emit` strictly in corpus order.
template <typename Result, typename Work, typename Emit>
void ordered_parallel(GraphStream& corpus, unsigned jobs, Work&& work, Emit&& emit) {
  const std::size_t batch = jobs <= 1 ? 1 : std::size_t{64} * jobs;
  std::vector<CorpusItem> items;
  std::vector<Result> results;
  for (;;) {
    items.clear();
    while (items.size() < batch) {
      auto item = corpus.next();
      if (!item) break;
      items.push_back(std::move(*item));
    }
    if (items.empty()) return;
    results.assign(items.size(), Result{});

    if (jobs <= 1 || items.size() == 1) {
      for (std::size_t i = 0; i < items.size(); ++i) results[i] = work(items[i]);
    } else {
      std::vector<std::exception_ptr> errors(jobs);
      std::vector<std::thread> workers;
      workers.reserve(jobs);
      for (unsigned t = 0; t < jobs; ++t) {
        workers.emplace_back([&, t] {
          try {
            for (std::size_t i = t; i < items.size(); i += jobs) results[i] = work(items[i]);
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      }
      for (auto& w : workers) w.join();
      for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
      }
    }
    for (auto& r : results) emit(r);
  }
}

}  // namespace eccaudit::detail
