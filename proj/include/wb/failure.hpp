#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace wb {

// A validator verdict. On failure `code` is one of the documented error
// codes and `witness` the offending index tuple.
struct Verdict {
    bool pass = true;
    std::string code;
    std::vector<int> witness;
    std::string detail;

    static Verdict ok() { return {}; }
    static Verdict fail(std::string code, std::vector<int> witness, std::string detail = {}) {
        return {false, std::move(code), std::move(witness), std::move(detail)};
    }
    explicit operator bool() const { return pass; }
};

// Thrown by constructors/operations that refuse their input.
struct Failure : std::runtime_error {
    Failure(std::string c, std::vector<int> w, const std::string& msg)
        : std::runtime_error(c + ": " + msg), code(std::move(c)), witness(std::move(w)) {}
    std::string code;
    std::vector<int> witness;
    Verdict verdict() const { return Verdict::fail(code, witness, what()); }
};

}  // namespace wb
