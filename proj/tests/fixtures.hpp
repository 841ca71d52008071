#pragma once

#include "mixr/colouring.hpp"

namespace fixtures {

inline const mixr::WordPair kK14Pair{2, "*001*1010100*", "*1010000*101*"};
inline const mixr::WordPair kQ3Pair{3, "*00001*001*1110100110010*", "*0100110010111*100*10000*"};

}  // namespace fixtures
