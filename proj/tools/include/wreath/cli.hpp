#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wreath {

/// Runs one wreathwalk command line. Returns 0 on success, 1 on validation
/// failures or exceeded caps, 2 on usage errors.
int dispatch(int argc, const char* const* argv);
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wreath
