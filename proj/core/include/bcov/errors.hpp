#pragma once

#include <stdexcept>
#include <string>

namespace bcov {

// Exit-code classes used by the CLI: 2 = validation/axiom failure,
// 3 = obstruction/miniversality failure, 4 = usage error.
enum class ErrorClass { Validation = 2, Obstruction = 3, Usage = 4 };

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), cls_(cls), kind_(std::move(kind)) {}
    ErrorClass error_class() const { return cls_; }
    const std::string& kind() const { return kind_; }

private:
    ErrorClass cls_;
    std::string kind_;
};

struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error(ErrorClass::Usage, "ParseError", w) {}
};

// Violated load-time axiom; carries the axiom name and a witness tuple.
struct AxiomError : Error {
    AxiomError(const std::string& axiom, const std::string& witness)
        : Error(ErrorClass::Validation, "AxiomError", axiom + " [witness: " + witness + "]"),
          axiom_name(axiom), witness(witness) {}
    std::string axiom_name;
    std::string witness;
};

struct ModelMismatch : Error {
    explicit ModelMismatch(const std::string& w) : Error(ErrorClass::Usage, "ModelMismatch", w) {}
};

struct TruncationMismatch : Error {
    explicit TruncationMismatch(const std::string& w)
        : Error(ErrorClass::Usage, "TruncationMismatch", w) {}
};

struct SingularInnerProduct : Error {
    explicit SingularInnerProduct(const std::string& w)
        : Error(ErrorClass::Validation, "SingularInnerProduct", w) {}
};

struct KahlerAxiomError : Error {
    explicit KahlerAxiomError(const std::string& w)
        : Error(ErrorClass::Validation, "KahlerAxiomError", w) {}
};

struct TooFewLegs : Error {
    explicit TooFewLegs(const std::string& w) : Error(ErrorClass::Usage, "TooFewLegs", w) {}
};

struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& w) : Error(ErrorClass::Usage, "ShapeMismatch", w) {}
};

struct ObstructionError : Error {
    ObstructionError(int order, const std::string& witness)
        : Error(ErrorClass::Obstruction, "ObstructionError",
                "order " + std::to_string(order) + ", witness class " + witness),
          order(order) {}
    int order;
};

struct MiniversalityFailure : Error {
    explicit MiniversalityFailure(const std::string& w)
        : Error(ErrorClass::Obstruction, "MiniversalityFailure", w) {}
};

struct NonIntegrableGradient : Error {
    explicit NonIntegrableGradient(const std::string& w)
        : Error(ErrorClass::Validation, "NonIntegrableGradient", w) {}
};

struct DegenerateMetric : Error {
    explicit DegenerateMetric(const std::string& w)
        : Error(ErrorClass::Validation, "DegenerateMetric", w) {}
};

struct MissingBidegree : Error {
    explicit MissingBidegree(const std::string& w)
        : Error(ErrorClass::Usage, "MissingBidegree", w) {}
};

struct UnknownModel : Error {
    explicit UnknownModel(const std::string& w) : Error(ErrorClass::Usage, "UnknownModel", w) {}
};

struct ParamError : Error {
    explicit ParamError(const std::string& w) : Error(ErrorClass::Usage, "ParamError", w) {}
};

}  // namespace bcov
