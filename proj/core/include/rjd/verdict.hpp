// verdict.hpp - outcome of a check: first witness wins
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rjd {

// a configured bound or budget was exceeded
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Verdict {
    bool ok = true;
    std::string witness;
    std::size_t checked = 0;

    void fail(std::string w) {
        if (ok) witness = std::move(w);
        ok = false;
    }
    Verdict& operator&=(const Verdict& o) {
        if (!o.ok) fail(o.witness);
        checked += o.checked;
        return *this;
    }
    explicit operator bool() const { return ok; }
};

}  // namespace rjd
