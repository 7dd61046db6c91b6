#pragma once

#include <stdexcept>
#include <string>

namespace varsamp {

/// Base class for every error this library raises on contract violations.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// field_core
class CompositeModulus : public Error { public: using Error::Error; };
class EvenModulus : public Error { public: using Error::Error; };
class MixedFields : public Error { public: using Error::Error; };
class DivisionByZero : public Error { public: using Error::Error; };

// poly
class DimensionMismatch : public Error { public: using Error::Error; };
class ZeroPolynomial : public Error { public: using Error::Error; };

// rootfind
class BothZero : public Error { public: using Error::Error; };
class SplitStall : public Error { public: using Error::Error; };

// elim
class NotZeroDimensional : public Error { public: using Error::Error; };
class EliminationBudgetExceeded : public Error { public: using Error::Error; };
class TooManyPolys : public Error { public: using Error::Error; };

// geometry
class BadDimensions : public Error { public: using Error::Error; };
class TooLarge : public Error { public: using Error::Error; };

// sampler
class ConfigRejected : public Error { public: using Error::Error; };
class VarietyLikelyEmpty : public Error { public: using Error::Error; };
class BudgetExhausted : public Error { public: using Error::Error; };

// verify
class EmptySample : public Error { public: using Error::Error; };

// cli / system files
class UndeclaredVariable : public Error { public: using Error::Error; };

class ParseError : public Error {
public:
    ParseError(std::string message, int line, int column)
        : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) +
                ": " + std::move(message)),
          line_(line),
          column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

} // namespace varsamp
