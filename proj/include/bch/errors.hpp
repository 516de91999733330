#ifndef BCH_ERRORS_HPP
#define BCH_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bch {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BadDegree : Error {
    using Error::Error;
};

struct NonPrimitivePolynomial : Error {
    using Error::Error;
};

struct FieldMismatch : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

struct LengthMismatch : Error {
    using Error::Error;
};

struct InvalidT : Error {
    using Error::Error;
};

struct MessageTooLong : Error {
    using Error::Error;
};

struct InvalidParallelism : Error {
    using Error::Error;
};

struct PositionOutOfRange : Error {
    using Error::Error;
};

struct GroupMismatch : Error {
    using Error::Error;
};

struct WidthMismatch : Error {
    using Error::Error;
};

struct TruncatedInput : Error {
    TruncatedInput(std::uint64_t block, const std::string& what)
        : Error(what), block_index(block)
    {
    }
    std::uint64_t block_index;
};

struct ConfigError : Error {
    using Error::Error;
};

} // namespace bch

#endif
