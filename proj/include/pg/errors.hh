#ifndef PG_ERRORS_HH
#define PG_ERRORS_HH

#include <stdexcept>
#include <string>

namespace pg {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Grammar text that does not conform to the file format. Positions are 1-based.
struct ParseError : Error {
    ParseError(int line, int column, const std::string& message)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line(line),
          column(column) {}

    int line;
    int column;
};

// A word or grammar refers to symbols outside the expected alphabet, or two
// operands disagree on their alphabets.
struct AlphabetError : Error {
    using Error::Error;
};

// An operation's grammar-class precondition is violated.
struct ClassError : Error {
    using Error::Error;
};

// A definitive verdict was required but the decision procedure returned Unknown.
struct IndefiniteError : Error {
    using Error::Error;
};

}  // namespace pg

#endif
