#pragma once

#include <stdexcept>
#include <string>

#include "qdiag/common.hpp"

namespace qdiag {

/// Base of every error the library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(SourceLocation loc, std::string expected, const std::string& found);
  SourceLocation location() const { return loc_; }
  const std::string& expected() const { return expected_; }

 private:
  SourceLocation loc_;
  std::string expected_;
};

/// Constructs outside the supported grammar that we recognise on purpose.
enum class Feature {
  Or,
  GroupBy,
  Aggregate,
  OuterJoin,
  Union,
  Distinct,
  Having,
  OrderBy,
  Limit,
  Arithmetic,
  TopLevelStar,
};

std::string_view to_string(Feature f);

class UnsupportedFeature : public Error {
 public:
  UnsupportedFeature(Feature feature, SourceLocation loc);
  Feature feature() const { return feature_; }
  SourceLocation location() const { return loc_; }

 private:
  Feature feature_;
  SourceLocation loc_;
};

class UnknownAlias : public Error {
 public:
  UnknownAlias(std::string ref, SourceLocation loc);
  const std::string& ref() const { return ref_; }
  SourceLocation location() const { return loc_; }

 private:
  std::string ref_;
  SourceLocation loc_;
};

class AmbiguousColumn : public Error {
 public:
  AmbiguousColumn(std::string attribute, SourceLocation loc);
  const std::string& attribute() const { return attribute_; }
  SourceLocation location() const { return loc_; }

 private:
  std::string attribute_;
  SourceLocation loc_;
};

/// IN / ANY / ALL subquery whose select list is not exactly one column.
class MalformedSubquery : public Error {
 public:
  MalformedSubquery(std::string what, SourceLocation loc);
  SourceLocation location() const { return loc_; }

 private:
  SourceLocation loc_;
};

/// A diagram from which no logic tree can be recovered. `stage` names the
/// recovery step that failed.
class InvalidDiagram : public Error {
 public:
  InvalidDiagram(std::string stage, const std::string& detail);
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

}  // namespace qdiag
