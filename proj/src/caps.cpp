#include "braidlab/caps.hpp"

#include <cstdlib>
#include <sstream>
#include <string>

#include "braidlab/errors.hpp"

namespace braidlab {

Caps Caps::fromEnv() {
  Caps caps;
  const char* raw = std::getenv("BRAIDLAB_CAPS");
  if (raw == nullptr) return caps;
  std::stringstream ss(raw);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw Error("MalformedInput", "BRAIDLAB_CAPS entry '" + item + "' is not key=value");
    std::string key = item.substr(0, eq);
    long value = 0;
    try {
      value = std::stol(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw Error("MalformedInput", "BRAIDLAB_CAPS value for '" + key + "' is not an integer");
    }
    if (value <= 0)
      throw Error("MalformedInput", "BRAIDLAB_CAPS value for '" + key + "' must be positive");
    if (key == "group")
      caps.groupElements = value;
    else if (key == "module")
      caps.moduleDim = value;
    else if (key == "materialize")
      caps.materialize = value;
    else if (key == "tuple")
      caps.tupleSpace = value;
    else
      throw Error("MalformedInput", "unknown BRAIDLAB_CAPS key '" + key + "'");
  }
  return caps;
}

}  // namespace braidlab
