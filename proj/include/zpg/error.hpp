#pragma once
#include <stdexcept>
#include <string>

namespace zpg {

// Base class for every failure the library reports deliberately.  Callers that
// need to distinguish outcomes catch the concrete type; the CLI maps the broad
// categories onto exit codes.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A file or JSON document does not have the expected shape.
struct SchemaError : Error { using Error::Error; };
// A well-formed document carries mathematically inconsistent content.
struct SemanticError : Error { using Error::Error; };

// permgroup
struct NotAGroup : Error { using Error::Error; };
struct ClosureTooLarge : Error { using Error::Error; };

// exactarith
struct NotCoprime : Error { using Error::Error; };
struct NotSquarefree : Error { using Error::Error; };

// galg
struct DomainMismatch : Error { using Error::Error; };
struct NotIdempotent : Error { using Error::Error; };
struct NotAFullOrbit : Error { using Error::Error; };

// chartab
struct OrthogonalityFailure : SemanticError { using SemanticError::SemanticError; };
struct DegreeSumFailure : SemanticError { using SemanticError::SemanticError; };
struct NoSuitablePrime : Error { using Error::Error; };
struct PrimeDividesOrder : Error { using Error::Error; };
struct IndicatorNotIntegral : SemanticError { using SemanticError::SemanticError; };

// ktheory
struct SchurUnknown : Error { using Error::Error; };
struct NoIntegralSolution : Error { using Error::Error; };
struct NonIntegralCartanEntry : Error { using Error::Error; };
struct TriangleMismatch : Error { using Error::Error; };
struct UnknownLabel : Error { using Error::Error; };

// lifting
struct NotApproxIdempotent : Error { using Error::Error; };
struct BudgetExhausted : Error { using Error::Error; };
struct NotAPartition : Error { using Error::Error; };
struct NotStandardTableau : Error { using Error::Error; };

} // namespace zpg
