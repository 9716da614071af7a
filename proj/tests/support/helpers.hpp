#pragma once

#include <string>
#include <vector>

#include "mfcat/poly/groebner.hpp"

namespace helpers {

inline std::vector<mfcat::Polynomial> polys(const mfcat::Ring& r, const std::vector<std::string>& texts) {
  std::vector<mfcat::Polynomial> out;
  for (const auto& t : texts) out.push_back(mfcat::Polynomial::parse(r, t));
  return out;
}

inline mfcat::PolyVector vec(const mfcat::Ring& r, const std::vector<std::string>& texts) { return polys(r, texts); }

inline std::vector<std::string> strings(const std::vector<mfcat::Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace helpers
