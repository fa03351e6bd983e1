#pragma once

namespace chroma::cli {
inline int run(int, char**) { return 0; }
}
