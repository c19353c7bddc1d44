#pragma once

#include <ostream>

namespace climate_stress::cli {

/// Entry point of the `stress` command. Usage errors exit with 2.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace climate_stress::cli
