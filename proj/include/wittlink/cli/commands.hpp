#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wittlink::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // a verify property failed
inline constexpr int kExitParse = 2;
inline constexpr int kExitDegenerate = 3;

/// Entry point of the wittlink tool; args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace wittlink::cli
