#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include "quantoid/debug.hpp"

int main(int argc, char** argv) {
  // Unit tests always run with the internal cross-checks enabled.
  quantoid::set_debug_checks(true);
  doctest::Context context(argc, argv);
  return context.run();
}
