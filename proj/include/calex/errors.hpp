#ifndef CALEX_ERRORS_HPP
#define CALEX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace calex {

// Exit codes used by the CLI: 0 success, 2 parse error, 3 refused
// precondition, 4 internal verification failure.
enum ExitCode : int {
    EXIT_OK = 0,
    EXIT_PARSE = 2,
    EXIT_REFUSED = 3,
    EXIT_INTERNAL = 4,
};

class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what, int code)
        : std::runtime_error(what), kind_(std::move(kind)), code_(code) {}
    const std::string& kind() const { return kind_; }
    int exit_code() const { return code_; }

private:
    std::string kind_;
    int code_;
};

struct ParseError : Error {
    int line, column;
    ParseError(const std::string& what, int line_ = 0, int column_ = 0)
        : Error("ParseError",
                what + (line_ ? " (line " + std::to_string(line_) + ", column " +
                                    std::to_string(column_) + ")"
                              : std::string()),
                EXIT_PARSE),
          line(line_), column(column_) {}
};

struct NotRootsOfUnity : Error {
    explicit NotRootsOfUnity(const std::string& what)
        : Error("NotRootsOfUnity", what, EXIT_REFUSED) {}
};

struct NotMonic : Error {
    explicit NotMonic(const std::string& what) : Error("NotMonic", what, EXIT_REFUSED) {}
};

struct MapIllDefined : Error {
    explicit MapIllDefined(const std::string& what)
        : Error("MapIllDefined", what, EXIT_REFUSED) {}
};

struct NoCentralPower : Error {
    explicit NoCentralPower(const std::string& what)
        : Error("NoCentralPower", what, EXIT_REFUSED) {}
};

struct NotInvolution : Error {
    explicit NotInvolution(const std::string& what)
        : Error("NotInvolution", what, EXIT_REFUSED) {}
};

struct UnknownBuiltin : Error {
    explicit UnknownBuiltin(const std::string& what)
        : Error("UnknownBuiltin", what, EXIT_REFUSED) {}
};

struct PreconditionFailed : Error {
    explicit PreconditionFailed(const std::string& what)
        : Error("PreconditionFailed", what, EXIT_REFUSED) {}
};

// A theorem-backed refusal, not a failure.
struct NotRealizable : Error {
    explicit NotRealizable(const std::string& what)
        : Error("NotRealizable", what, EXIT_REFUSED) {}
};

// Raised when a pipeline's own roundtrip check disagrees with its target.
// Always a bug, never a valid outcome.
struct VerificationFailed : Error {
    explicit VerificationFailed(const std::string& what)
        : Error("VerificationFailed", what, EXIT_INTERNAL) {}
};

}  // namespace calex

#endif
