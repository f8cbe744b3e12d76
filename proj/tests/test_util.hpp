#pragma once

#include <optional>
#include <utility>

#include <partcalc/error.hpp>

namespace testutil {

// Runs `fn` and reports the error code it threw, if any.
template <class Fn>
std::optional<partcalc::errc> thrown(Fn&& fn) {
  try {
    std::forward<Fn>(fn)();
  } catch (const partcalc::error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace testutil
