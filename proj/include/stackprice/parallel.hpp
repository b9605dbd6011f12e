#pragma once

namespace stackprice {

/// Worker count for the OpenMP kernels. `threads == 1` runs the serial
/// reference path with no OpenMP region at all.
struct Parallelism {
  int threads = 1;

  bool serial() const { return threads <= 1; }
};

}  // namespace stackprice
