#ifndef KMANB_VERSION_HPP
#define KMANB_VERSION_HPP

namespace kmanb {
inline constexpr const char* version = "0.1.0";
}

#endif
