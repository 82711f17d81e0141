#pragma once

// Index-parallel sweep kernels. Every kernel has a serial reference path and an
// OpenMP path; results are merged by index, so output never depends on the
// schedule or the thread count.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace prand {

enum class Exec { serial, parallel };

int max_threads();

namespace detail {

/// Records the exception thrown at the lowest index, so rethrow is deterministic.
class FirstError {
 public:
  void capture(std::size_t index, std::exception_ptr e) {
    std::lock_guard lock(mu_);
    if (!error_ || index < index_) {
      error_ = std::move(e);
      index_ = index;
    }
  }
  void rethrow_if_any() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::mutex mu_;
  std::exception_ptr error_;
  std::size_t index_ = std::numeric_limits<std::size_t>::max();
};

}  // namespace detail

/// Calls fn(i) for every i in [0, n).
template <class Fn>
void for_each_index(std::size_t n, Exec exec, Fn&& fn) {
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  detail::FirstError err;
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      err.capture(static_cast<std::size_t>(i), std::current_exception());
    }
  }
  err.rethrow_if_any();
}

/// out[i] = fn(i).
template <class T, class Fn>
std::vector<T> map_indices(std::size_t n, Exec exec, Fn&& fn) {
  std::vector<T> out(n);
  for_each_index(n, exec, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

/// Violations found by a sweep: exact count plus witnesses at the lowest indices.
struct ViolationSet {
  std::size_t count = 0;
  std::vector<std::pair<std::size_t, std::string>> first;  // sorted by index
};

/// fn(i) returns a witness string when index i violates the property.
template <class Fn>
ViolationSet collect_violations(std::size_t n, Exec exec, std::size_t keep, Fn&& fn) {
  ViolationSet result;
  std::mutex mu;
  auto record = [&](std::size_t i, std::string w) {
    std::lock_guard lock(mu);
    ++result.count;
    result.first.emplace_back(i, std::move(w));
    if (result.first.size() > 4 * keep + 16) {
      std::sort(result.first.begin(), result.first.end());
      result.first.resize(keep);
    }
  };
  for_each_index(n, exec, [&](std::size_t i) {
    std::optional<std::string> w = fn(i);
    if (w) record(i, std::move(*w));
  });
  std::sort(result.first.begin(), result.first.end());
  if (result.first.size() > keep) result.first.resize(keep);
  return result;
}

}  // namespace prand
