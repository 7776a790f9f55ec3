#pragma once

#include <stdexcept>
#include <string>

namespace toric {

enum class Err {
  InvalidInput,
  NotRational,
  NotDivisible,
  NotPolynomial,
  NotSaturated,
  DependentGenerators,
  NonPrimitiveRay,
  NotSimplicial,
  BadIntersection,
  NotStarClosed,
  NotSimple,
  NotFullDimensional,
  RankTooHigh,
  NotComplete,
  NotPolygon,
};

const char* err_name(Err e);

class ToricError : public std::runtime_error {
public:
  ToricError(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}
  Err code() const { return code_; }

private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) {
  throw ToricError(code, msg);
}

}  // namespace toric
