#ifndef WPH_VERSION_HPP
#define WPH_VERSION_HPP

namespace wph {

inline constexpr const char* kToolName = "wph";
inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace wph

#endif
