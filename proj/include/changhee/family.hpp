#pragma once

/**
 * Stable names of the supported sequence families. These strings are the
 * CLI vocabulary and the fixture header vocabulary; they never change.
 */

#include <stdexcept>
#include <string>

namespace changhee {

enum class Family {
  bernoulli,
  euler,
  daehee,
  changhee1,
  changhee2,
  norlund2,
};

inline const char* family_name(Family f) {
  switch (f) {
    case Family::bernoulli: return "bernoulli";
    case Family::euler: return "euler";
    case Family::daehee: return "daehee";
    case Family::changhee1: return "changhee1";
    case Family::changhee2: return "changhee2";
    case Family::norlund2: return "norlund2";
  }
  throw std::invalid_argument("family_name: bad enum value");
}

inline Family family_from_string(const std::string& s) {
  if (s == "bernoulli") return Family::bernoulli;
  if (s == "euler") return Family::euler;
  if (s == "daehee") return Family::daehee;
  if (s == "changhee1") return Family::changhee1;
  if (s == "changhee2") return Family::changhee2;
  if (s == "norlund2") return Family::norlund2;
  throw std::invalid_argument("unknown family '" + s + "'");
}

inline constexpr Family kAllFamilies[] = {
    Family::bernoulli, Family::euler,     Family::daehee,
    Family::changhee1, Family::changhee2, Family::norlund2,
};

}  // namespace changhee
