#pragma once

#include <stdexcept>
#include <string>

namespace ttp {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define TTP_ERROR(Name)                      \
    class Name : public Error {              \
    public:                                  \
        using Error::Error;                  \
    };

TTP_ERROR(ParseError)
TTP_ERROR(ShapeError)
TTP_ERROR(DomainError)
TTP_ERROR(UnsupportedError)
TTP_ERROR(LedgerError)
TTP_ERROR(ValidationError)
TTP_ERROR(DegenerateError)
TTP_ERROR(LimitError)

#undef TTP_ERROR

// carries the offending cell or triple (0-based)
class MetricError : public Error {
public:
    MetricError(const std::string& what, int i, int j, int k = -1);
    int i, j, k;
};

}  // namespace ttp
