#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace telegraph {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid user-facing parameters (mesh, scheme, problem selection, config).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Mesh spacing makes one of the basis normalizers vanish.
class DegenerateMeshError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class OutOfDomainError : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class UnknownProblemError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class MissingExactSolutionError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class AlignmentError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

/// Numerical breakdown of a linear solve.
class NumericalError : public Error {
public:
    using Error::Error;
};

class ZeroPivotError : public NumericalError {
public:
    ZeroPivotError(std::size_t row, double pivot)
        : NumericalError("zero pivot at row " + std::to_string(row) +
                         " (|pivot| = " + std::to_string(pivot) + ")"),
          row_(row) {}

    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

class SingularMatrixError : public NumericalError {
public:
    explicit SingularMatrixError(std::size_t column)
        : NumericalError("singular matrix: no usable pivot in column " + std::to_string(column)),
          column_(column) {}

    std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

/// Expression syntax error. `offset` is the byte offset into the source.
class ParseError : public ConfigError {
public:
    ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
        : ConfigError(format(offset, expected, found)),
          offset_(offset),
          expected_(std::move(expected)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    static std::string format(std::size_t offset, const std::vector<std::string>& expected,
                              const std::string& found) {
        std::string msg = "syntax error at offset " + std::to_string(offset) + ": expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
            msg += expected[i];
        }
        msg += ", found " + found;
        return msg;
    }

    std::size_t offset_;
    std::vector<std::string> expected_;
};

class UnknownFunctionError : public ConfigError {
public:
    explicit UnknownFunctionError(std::string name)
        : ConfigError("unknown function '" + name + "'"), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

/// Expression evaluation hit a singularity or domain violation.
class EvalError : public NumericalError {
public:
    EvalError(std::string op, std::vector<double> operands)
        : NumericalError(format(op, operands)), op_(std::move(op)), operands_(std::move(operands)) {}

    const std::string& op() const noexcept { return op_; }
    const std::vector<double>& operands() const noexcept { return operands_; }

private:
    static std::string format(const std::string& op, const std::vector<double>& operands);

    std::string op_;
    std::vector<double> operands_;
};

}  // namespace telegraph
