#pragma once

#include <string_view>

namespace btzotto {

/// Library version, "major.minor.patch".
[[nodiscard]] std::string_view version() noexcept;

}  // namespace btzotto
