#pragma once

#include <stdexcept>
#include <string>

namespace stepqa {

// Base class for all library exceptions.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class IoError : public Error {
public:
  explicit IoError(const std::string& msg) : Error(msg) {}
};

// Raised by the dataset loaders: carries the offending record id and the
// missing/ill-typed field name so failures are actionable.
class SchemaError : public Error {
public:
  SchemaError(std::string record_id, std::string field, const std::string& msg)
      : Error(msg), record_id_(std::move(record_id)), field_(std::move(field)) {}

  const std::string& record_id() const { return record_id_; }
  const std::string& field() const { return field_; }

private:
  std::string record_id_;
  std::string field_;
};

class UnknownScaleError : public Error {
public:
  explicit UnknownScaleError(const std::string& surface)
      : Error("unknown scale: \"" + surface + "\"") {}
};

class UnknownQuestionTypeError : public Error {
public:
  explicit UnknownQuestionTypeError(const std::string& surface)
      : Error("unknown question type: \"" + surface + "\"") {}
};

class MissingTableError : public Error {
public:
  explicit MissingTableError(const std::string& instance_id)
      : Error("instance " + instance_id + " has no table") {}
};

// Errors from converting operator-sequence programs to infix equations.
class ProgramError : public Error {
public:
  enum class Kind { unsupported_operator, dangling_step_ref, malformed };

  ProgramError(Kind kind, const std::string& msg) : Error(msg), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

}  // namespace stepqa
