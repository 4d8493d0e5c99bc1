#ifndef FSC_VERSION_HPP
#define FSC_VERSION_HPP

namespace fsc {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace fsc

#endif
