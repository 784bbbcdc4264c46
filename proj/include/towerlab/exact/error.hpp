#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace towerlab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Violated precondition: wrong shape, wrong space, bad parameter.
class ContractError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public ContractError {
public:
    using ContractError::ContractError;
};

class DegreeOverflow : public Error {
public:
    using Error::Error;
};

class NoSolution : public Error {
public:
    NoSolution() : Error("no solution") {}
};

}  // namespace towerlab
