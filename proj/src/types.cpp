#include "paprsim/types.hpp"

namespace paprsim {

std::string method_name(Method m) {
  switch (m) {
    case Method::none: return "none";
    case Method::clip: return "clip";
    case Method::slm: return "slm";
    case Method::pts: return "pts";
  }
  return "none";
}

Method method_from_name(const std::string& name) {
  if (name == "none") return Method::none;
  if (name == "clip") return Method::clip;
  if (name == "slm") return Method::slm;
  if (name == "pts") return Method::pts;
  throw config_error("unknown method '" + name + "' (expected none|clip|slm|pts)");
}

}  // namespace paprsim
