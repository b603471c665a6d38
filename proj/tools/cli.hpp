#pragma once

#include <ostream>

namespace lingua::cli {

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace lingua::cli
