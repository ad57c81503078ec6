#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cktweb {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInconsistent = 1;  // an audit finding: two classifiers or a table disagree
inline constexpr int kExitInputError = 2;

inline constexpr const char* kNoWebMessage = "tensor is equivalent to C₃₃·R₃⊙R₃ + f·g; no web defined";

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cktweb
