#include "btzotto/version.hpp"

namespace btzotto {

std::string_view version() noexcept { return BTZOTTO_VERSION_STRING; }

}  // namespace btzotto
