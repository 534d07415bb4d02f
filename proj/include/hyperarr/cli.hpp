#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperarr {

// Exit codes: 0 success, 1 budget exceeded or internal cross-check failure,
// 2 parse/usage errors.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace hyperarr
