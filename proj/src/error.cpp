#include "bicat/error.hpp"

namespace bicat {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidPermutation: return "InvalidPermutation";
    case Errc::NotConnected: return "NotConnected";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NotAPath: return "NotAPath";
    case Errc::NoStraightShortestPath: return "NoStraightShortestPath";
    case Errc::IsolatedVertex: return "IsolatedVertex";
    case Errc::ObservationViolated: return "ObservationViolated";
    case Errc::ReplacementBreaksPath: return "ReplacementBreaksPath";
    case Errc::OrderingNotStraight: return "OrderingNotStraight";
    case Errc::InternalProofViolation: return "InternalProofViolation";
    case Errc::NotATree: return "NotATree";
    case Errc::ExceedsKMax: return "ExceedsKMax";
    case Errc::FallbackExhausted: return "FallbackExhausted";
  }
  return "Unknown";
}

}  // namespace bicat
