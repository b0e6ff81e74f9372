#pragma once

#include <stdexcept>
#include <string>

namespace lipext {

// Base class for all workbench errors.  Subclasses carry witness data so
// callers (and tests) can inspect exactly which axiom or hypothesis failed.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct MetricError : Error {
  enum class Kind { Asymmetry, NegativeDistance, ZeroOffDiagonal, TriangleViolation };
  Kind kind;
  // Witness indices: (i,j) for the first three kinds, (i,j,k) for a triangle
  // violation d(i,k) > d(i,j) + d(j,k).
  int i = -1, j = -1, k = -1;
  MetricError(Kind kind_, const std::string& msg, int i_, int j_, int k_ = -1)
      : Error(msg), kind(kind_), i(i_), j(j_), k(k_) {}
};

struct FamilyError : Error {
  enum class Kind { AnchorInSet, OverlappingSets, EmptySet, ZeroCrossDistance };
  Kind kind;
  int set_a = -1, set_b = -1;  // family positions involved
  int point = -1;              // offending point index, when meaningful
  FamilyError(Kind kind_, const std::string& msg, int a = -1, int b = -1, int p = -1)
      : Error(msg), kind(kind_), set_a(a), set_b(b), point(p) {}
};

struct FunctionError : Error {
  enum class Kind { EmptyDomain, DomainMismatch };
  Kind kind;
  FunctionError(Kind kind_, const std::string& msg) : Error(msg), kind(kind_) {}
};

struct GlueError : Error {
  enum class Kind { SetsTooClose, HypothesisViolation, DisjointUiViolation, EmptyFamily };
  Kind kind;
  int index = -1;   // which hypothesis / which set
  int point = -1;   // ambient point witnessing a disjointness failure
  GlueError(Kind kind_, const std::string& msg, int index_ = -1, int point_ = -1)
      : Error(msg), kind(kind_), index(index_), point(point_) {}
};

struct GridError : Error {
  enum class Kind { MissingVertex, QueryOutsideBox };
  Kind kind;
  GridError(Kind kind_, const std::string& msg) : Error(msg), kind(kind_) {}
};

struct ConeError : Error {
  enum class Kind { RetractedPointOutsideDomain, BadPartition };
  Kind kind;
  ConeError(Kind kind_, const std::string& msg) : Error(msg), kind(kind_) {}
};

struct NetBallError : Error {
  enum class Kind { EmptyIntersection };
  Kind kind;
  NetBallError(Kind kind_, const std::string& msg) : Error(msg), kind(kind_) {}
};

struct FreeSpaceError : Error {
  enum class Kind { NonzeroMass, NotMaterializable, TooLarge, BasePointNotInS };
  Kind kind;
  FreeSpaceError(Kind kind_, const std::string& msg) : Error(msg), kind(kind_) {}
};

struct ConstructionError : Error {
  enum class Kind { NoAdmissiblePoint, UnboundedSet, WindowTooSmall, MeshTooCoarse, TooLarge };
  Kind kind;
  ConstructionError(Kind kind_, const std::string& msg) : Error(msg), kind(kind_) {}
};

struct IoError : Error {
  enum class Kind { ParseError, NoPriorRun, FileError };
  Kind kind;
  IoError(Kind kind_, const std::string& msg) : Error(msg), kind(kind_) {}
};

struct SizeError : Error {
  explicit SizeError(const std::string& msg) : Error(msg) {}
};

struct LpError : Error {
  enum class Kind { Infeasible, Unbounded, IterationLimit };
  Kind kind;
  LpError(Kind kind_, const std::string& msg) : Error(msg), kind(kind_) {}
};

}  // namespace lipext
