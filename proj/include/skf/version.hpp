#ifndef SKF_VERSION_HPP
#define SKF_VERSION_HPP

namespace skf {

inline constexpr const char* version_string = "skfloc 1.0.0";

}

#endif
