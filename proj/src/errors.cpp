#include "hessring/errors.hpp"

#include <cstdlib>

namespace hessring {

bool guards_overridden() { return std::getenv("HESSRING_GUARD_OVERRIDE") != nullptr; }

}  // namespace hessring
