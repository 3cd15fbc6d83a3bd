#pragma once

#include <functional>
#include <string>

namespace catsim {

using WarningSink = std::function<void(const std::string&)>;

/// Report a non-fatal numerical warning (truncation safety and similar).
/// The default sink writes to stderr; tools may install a quieter one.
void warn(const std::string& message);

/// Replace the warning sink and return the previous one. An empty sink
/// silences warnings. Sink calls are serialized.
WarningSink set_warning_sink(WarningSink sink);

} // namespace catsim
