#include "nframe/tolerance.hpp"

#include <cstdlib>
#include <string>

namespace nframe {

namespace {

Tolerances read_env() {
  Tolerances t;
  if (const char* s = std::getenv("NFRAME_TOL")) {
    try {
      const double v = std::stod(s);
      if (v > 0) {
        t.identity = v;
        t.inequality = v;
      }
    } catch (...) {
      // unparseable override is ignored, defaults stay in force
    }
  }
  return t;
}

}  // namespace

const Tolerances& tol() {
  static const Tolerances t = read_env();
  return t;
}

}  // namespace nframe
