#pragma once

#include <algorithm>
#include <thread>
#include <vector>

#include "presmin/errors.hpp"

namespace presmin::detail {

/// Runs fn(i) for i in [begin, end) on up to hardware_concurrency threads.
/// Each index is handled exactly once; fn must only write state owned by i.
template <typename Fn>
void parallel_for(Natural begin, Natural end, Fn fn) {
  if (begin >= end) return;
  const Natural count = end - begin;
  const Natural workers =
      std::min<Natural>(count, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1 || count < 64) {
    for (Natural i = begin; i < end; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> threads;
  threads.reserve(workers);
  for (Natural w = 0; w < workers; ++w) {
    threads.emplace_back([=, &fn] {
      for (Natural i = begin + w; i < end; i += workers) fn(i);
    });
  }
}

}  // namespace presmin::detail
