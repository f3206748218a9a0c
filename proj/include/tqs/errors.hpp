#ifndef TQS_ERRORS_HPP
#define TQS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tqs {

// Every error the engine raises derives from Error so callers (the batch
// runner in particular) can record it per query and carry on.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ZeroConstantTerm : public Error {
public:
    ZeroConstantTerm() : Error("power series has zero constant term") {}
};

class ConductorOverflow : public Error {
public:
    explicit ConductorOverflow(unsigned long n)
        : Error("cyclotomic conductor " + std::to_string(n) + " exceeds the supported cap") {}
};

// Base class for the resource caps (order_cap, aut_cap). The CLI maps it to exit code 3.
class CapExceeded : public Error {
public:
    using Error::Error;
};

class OrderCapExceeded : public CapExceeded {
public:
    explicit OrderCapExceeded(std::size_t cap)
        : CapExceeded("group order exceeds order cap " + std::to_string(cap)) {}
};

class AutCapExceeded : public CapExceeded {
public:
    explicit AutCapExceeded(const std::string& what) : CapExceeded(what) {}
};

class NonInvertibleGenerator : public Error {
public:
    explicit NonInvertibleGenerator(std::size_t index)
        : Error("generator " + std::to_string(index) + " is not invertible") {}
};

class NotNormal : public Error {
public:
    NotNormal() : Error("subgroup is not normal") {}
};

class NonIntegralMultiplicity : public Error {
public:
    explicit NonIntegralMultiplicity(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& location, const std::string& what)
        : Error(location.empty() ? what : location + ": " + what), location_(location) {}
    const std::string& location() const noexcept { return location_; }

private:
    std::string location_;
};

} // namespace tqs

#endif
