#include "wmb/chi.hpp"

#include <cstdio>

namespace wmb {

std::string ChiSpec::describe() const {
  if (zero) return "zero";
  char buf[64];
  if (shift_n > 0)
    std::snprintf(buf, sizeof buf, "gaussian N=%d", shift_n);
  else
    std::snprintf(buf, sizeof buf, "gaussian A=%.17g", scale_a);
  return buf;
}

ChiSpec ChiSpec::parse(const std::string& text) {
  if (text == "zero") return zero_fn();
  int n = 0;
  double a = 0.0;
  if (std::sscanf(text.c_str(), "gaussian N=%d", &n) == 1) return gaussian_n(n);
  if (std::sscanf(text.c_str(), "gaussian A=%lg", &a) == 1) return gaussian(a);
  throw ConfigError("ChiSpec: cannot parse '" + text + "'");
}

}  // namespace wmb
