#pragma once

#include <stdexcept>
#include <string>

namespace braidcalc {

enum class Err {
  ShapeMismatch,
  NotIdempotent,
  NotInvertible,
  BadParams,
  NotAlgebraMorphism,
  NotCrossed,
  AntipodeNotInverted,
  NotInCategoryO,
  NotQuasitriangular,
  NotModuleAlgebra,
  NotComoduleCoalgebra,
  NotProjection,
  NotBialgebraInCategory,
  NoAntipode,
  MissingBlock,
  NotPermutation,
  DegreeTooLarge,
  NotBialgebraMorphism,
  NoSolution,
  NonUniqueSolution,
  NotGenerated,
  NotTruncatedMorphism,
  FactorizationObstruction,
  ParseError,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg);
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] void fail(Err code, const std::string& msg);

}  // namespace braidcalc
