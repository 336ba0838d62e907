#pragma once
#include <ostream>
#include <string>
#include <vector>

namespace lch {

// args excludes the program name. Returns 0 ok, 1 failed check, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lch
