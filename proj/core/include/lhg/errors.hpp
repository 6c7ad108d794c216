#pragma once

#include <stdexcept>
#include <string>

namespace lhg {

enum class Err {
  // graph construction / codecs
  IndexOutOfRange,
  LoopRejected,
  OrderTooLarge,
  MalformedHeader,
  TrailingBits,
  InvalidCharacter,
  // groups
  UnknownDescriptor,
  NotLatinSquare,
  NotAssociative,
  NoIdentity,
  UnboundGenerator,
  // families
  DegenerateParameter,
  EdgeCollision,
  NotAPermutation,
  AsymmetricConnectionSet,
  IdentityInConnectionSet,
  NotAGpGraph,
  // hypergraph
  IsolatedVertex,
  NotIndependent,
  // verifier
  NotRegular,
  PreconditionViolated,
  InternalProofViolation,
  // harness
  ResumeMismatch,
  CorpusEntryMissing,
  BudgetExceeded,
  ParseError,
  IoError,
};

const char* to_string(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  Err kind() const { return kind_; }

 private:
  Err kind_;
};

[[noreturn]] inline void raise(Err kind, const std::string& what) { throw Error(kind, what); }

}  // namespace lhg
