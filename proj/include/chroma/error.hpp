#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chroma {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// malformed input bytes; carries the offending byte offset where known
struct parse_error : error {
    std::size_t offset;
    explicit parse_error(const std::string& msg, std::size_t off = 0)
        : error(msg), offset(off) {}
};

// an operation's stated precondition does not hold for this input
struct precondition_error : error {
    using error::error;
};

// input exceeds a configured exactness bound; never silently approximated
struct scale_refusal : error {
    using error::error;
};

// a proof-step invariant failed at runtime: always an implementation bug,
// never a valid outcome
struct internal_error : error {
    using error::error;
};

#define CHROMA_ASSERT(cond, msg)                                   \
    do {                                                           \
        if (!(cond)) throw ::chroma::internal_error(msg);          \
    } while (0)

}  // namespace chroma
