#pragma once

#include "quantoid/set_function.hpp"

// Small named set functions on the ground set {1, ..., n}.
namespace quantoid::catalog {

/// U_{k,n}: I -> min(|I|, k).
SetFunction uniform_matroid(int k, int n);
/// I -> |I|.
SetFunction free_matroid(int n);
SetFunction zero(int n);
/// Entropy function of the Bell state: (0; 1, 1; 0).
SetFunction bell();
/// Entropy function of the three-party GHZ state: 1 on proper nonempty sets.
SetFunction ghz(int n = 3);

}  // namespace quantoid::catalog
