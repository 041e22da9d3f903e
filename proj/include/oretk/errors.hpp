#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oretk {

/// Base class of every error thrown by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CapExceeded : public Error {
public:
    using Error::Error;
};

class DegreeMismatch : public Error {
public:
    using Error::Error;
};

class ElementNotInGroup : public Error {
public:
    using Error::Error;
};

class NotNormal : public Error {
public:
    using Error::Error;
};

class NoSuitablePrime : public Error {
public:
    using Error::Error;
};

class LiftOutOfRange : public Error {
public:
    using Error::Error;
};

class InvalidLattice : public Error {
public:
    using Error::Error;
};

class NotDistributive : public Error {
public:
    using Error::Error;
};

class WitnessVerificationFailed : public Error {
public:
    using Error::Error;
};

class NotPositive : public Error {
public:
    using Error::Error;
};

class ZeroOperand : public Error {
public:
    using Error::Error;
};

class GroupMismatch : public Error {
public:
    using Error::Error;
};

class NotBiprojection : public Error {
public:
    using Error::Error;
};

class NonIntegralDims : public Error {
public:
    using Error::Error;
};

class NoChain : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// Structured fusion-ring axiom failure: which axiom and at which indices.
class AxiomViolation : public Error {
public:
    AxiomViolation(std::string kind, std::vector<int> indices, const std::string& message)
        : Error(message), kind_(std::move(kind)), indices_(std::move(indices)) {}

    const std::string& kind() const { return kind_; }
    const std::vector<int>& indices() const { return indices_; }

private:
    std::string kind_;
    std::vector<int> indices_;
};

}  // namespace oretk
