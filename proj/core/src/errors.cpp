#include "lhg/errors.hpp"

namespace lhg {

const char* to_string(Err e) {
  switch (e) {
    case Err::IndexOutOfRange: return "IndexOutOfRange";
    case Err::LoopRejected: return "LoopRejected";
    case Err::OrderTooLarge: return "OrderTooLarge";
    case Err::MalformedHeader: return "MalformedHeader";
    case Err::TrailingBits: return "TrailingBits";
    case Err::InvalidCharacter: return "InvalidCharacter";
    case Err::UnknownDescriptor: return "UnknownDescriptor";
    case Err::NotLatinSquare: return "NotLatinSquare";
    case Err::NotAssociative: return "NotAssociative";
    case Err::NoIdentity: return "NoIdentity";
    case Err::UnboundGenerator: return "UnboundGenerator";
    case Err::DegenerateParameter: return "DegenerateParameter";
    case Err::EdgeCollision: return "EdgeCollision";
    case Err::NotAPermutation: return "NotAPermutation";
    case Err::AsymmetricConnectionSet: return "AsymmetricConnectionSet";
    case Err::IdentityInConnectionSet: return "IdentityInConnectionSet";
    case Err::NotAGpGraph: return "NotAGpGraph";
    case Err::IsolatedVertex: return "IsolatedVertex";
    case Err::NotIndependent: return "NotIndependent";
    case Err::NotRegular: return "NotRegular";
    case Err::PreconditionViolated: return "PreconditionViolated";
    case Err::InternalProofViolation: return "InternalProofViolation";
    case Err::ResumeMismatch: return "ResumeMismatch";
    case Err::CorpusEntryMissing: return "CorpusEntryMissing";
    case Err::BudgetExceeded: return "BudgetExceeded";
    case Err::ParseError: return "ParseError";
    case Err::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace lhg
