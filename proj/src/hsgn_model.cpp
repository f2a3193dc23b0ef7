#include "sgn/hsgn_model.hpp"

#include <sstream>

namespace sgn::hsgn::detail {

void throw_nonpositive_depth(double h) {
  std::ostringstream msg;
  msg << "depth must be positive, got h = " << h;
  throw Error(ErrorCode::NonpositiveDepth, msg.str());
}

}  // namespace sgn::hsgn::detail
