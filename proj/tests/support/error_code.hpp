#pragma once

#include <gtest/gtest.h>

#include "puiseux/error.hpp"

namespace testing_support {

/// The code of the puiseux::Error thrown by fn, or kInternal (with a test
/// failure) when nothing is thrown.
template <class Fn>
puiseux::ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const puiseux::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return puiseux::ErrorCode::kInternal;
}

}  // namespace testing_support
